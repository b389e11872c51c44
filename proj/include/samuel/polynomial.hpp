#pragma once

#include <algorithm>
#include <memory>
#include <regex>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "samuel/errors.hpp"
#include "samuel/field.hpp"
#include "samuel/monomial.hpp"

namespace samuel {

/// Variable names plus the coefficient field.
struct RingSpec {
  std::vector<std::string> variables;
  FieldConfig field;

  void validate() const {
    if (variables.empty() || variables.size() > kMaxVariables) {
      fail(ErrorCode::InvalidInput, "a ring needs between 1 and " + std::to_string(kMaxVariables) + " variables");
    }
    static const std::regex name_re("[A-Za-z][A-Za-z0-9_]*");
    std::unordered_set<std::string> seen;
    for (const auto& v : variables) {
      if (!std::regex_match(v, name_re)) fail(ErrorCode::InvalidInput, "bad variable name '" + v + "'");
      if (!seen.insert(v).second) fail(ErrorCode::InvalidInput, "duplicate variable '" + v + "'");
    }
  }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// A polynomial ring k[x_1..x_n] bound to a concrete field policy.
template <CoefficientField F>
class Ring {
 public:
  Ring(RingSpec spec, F field) : spec_(std::move(spec)), field_(std::move(field)) {
    if (!(spec_.field == field_.config())) fail(ErrorCode::MixedFields, "ring spec and field policy disagree");
  }

  static std::shared_ptr<const Ring> make(std::vector<std::string> variables, F field = F{}) {
    RingSpec spec{std::move(variables), field.config()};
    spec.validate();
    return std::make_shared<const Ring>(std::move(spec), std::move(field));
  }

  const RingSpec& spec() const { return spec_; }
  const F& field() const { return field_; }
  std::size_t nvars() const { return spec_.variables.size(); }
  const std::vector<std::string>& variables() const { return spec_.variables; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(spec_.variables.begin(), spec_.variables.end(), name);
    if (it == spec_.variables.end()) return std::nullopt;
    return static_cast<std::size_t>(it - spec_.variables.begin());
  }

  MonomialOrder degrevlex() const { return MonomialOrder::degrevlex(nvars()); }

  /// k[t, x_1..x_n] with a fresh variable in front; exponents shift by one.
  std::shared_ptr<const Ring> with_leading_variable() const {
    if (nvars() + 1 > kMonomialSlots) fail(ErrorCode::ResourceLimit, "no slot left for an auxiliary variable");
    std::string name = "t";
    while (index_of(name)) name += "_";
    RingSpec spec = spec_;
    spec.variables.insert(spec.variables.begin(), name);
    return std::make_shared<const Ring>(std::move(spec), field_);
  }

  friend bool operator==(const Ring& a, const Ring& b) { return a.spec_ == b.spec_; }

 private:
  RingSpec spec_;
  F field_;
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <CoefficientField F>
struct Term {
  Monomial monomial;
  typename F::value_type coeff;
};

/// Multivariate polynomial in canonical form: terms strictly descending under
/// the polynomial's order, no zero coefficients, no repeated monomials.
template <CoefficientField F>
class Polynomial {
 public:
  using value_type = typename F::value_type;
  using term_type = Term<F>;

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : Polynomial(ring, ring->degrevlex()) {}
  Polynomial(RingPtr<F> ring, MonomialOrder order) : ring_(std::move(ring)), order_(order) {}

  /// Builds a canonical polynomial from arbitrary terms (sorted and merged here).
  static Polynomial from_terms(RingPtr<F> ring, MonomialOrder order, std::vector<term_type> terms) {
    Polynomial p(std::move(ring), order);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  /// Wraps terms already in canonical form for `order`.
  static Polynomial from_sorted(RingPtr<F> ring, MonomialOrder order, std::vector<term_type> terms) {
    Polynomial p(std::move(ring), order);
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial constant(RingPtr<F> ring, const value_type& c) {
    Polynomial p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({Monomial{}, c});
    return p;
  }

  static Polynomial variable(RingPtr<F> ring, std::size_t i) {
    if (i >= ring->nvars()) fail(ErrorCode::InvalidInput, "variable index out of range");
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(i), ring->field().one()});
    return p;
  }

  static Polynomial monomial(RingPtr<F> ring, const Monomial& m, const value_type& c) {
    Polynomial p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const MonomialOrder& order() const { return order_; }
  const std::vector<term_type>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  /// Coefficient of the monomial 1.
  value_type constant_coefficient() const {
    for (const auto& t : terms_) {
      if (t.monomial.is_one()) return t.coeff;
    }
    return field().zero();
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  unsigned lowest_degree() const {
    unsigned d = ~0u;
    for (const auto& t : terms_) d = std::min(d, t.monomial.degree());
    return terms_.empty() ? 0 : d;
  }

  /// The order-maximal term under `ord`.
  const term_type& leading_term() const {
    if (terms_.empty()) fail(ErrorCode::ZeroPolynomial, "leading term of the zero polynomial");
    return terms_.front();
  }

  term_type leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) fail(ErrorCode::ZeroPolynomial, "leading term of the zero polynomial");
    if (ord == order_) return terms_.front();
    const term_type* best = &terms_.front();
    for (const auto& t : terms_) {
      if (ord.greater(t.monomial, best->monomial)) best = &t;
    }
    return *best;
  }

  /// Same polynomial re-sorted for another order.
  Polynomial with_order(const MonomialOrder& ord) const {
    if (ord == order_) return *this;
    Polynomial p(ring_, ord);
    p.terms_ = terms_;
    std::sort(p.terms_.begin(), p.terms_.end(),
              [&](const term_type& a, const term_type& b) { return ord.greater(a.monomial, b.monomial); });
    return p;
  }

  /// Drops every term of total degree >= n.
  Polynomial truncated(unsigned n) const {
    Polynomial p(ring_, order_);
    for (const auto& t : terms_) {
      if (t.monomial.degree() < n) p.terms_.push_back(t);
    }
    return p;
  }

  Polynomial scaled(const value_type& c) const {
    Polynomial p(ring_, order_);
    if (field().is_zero(c)) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.monomial, field().mul(t.coeff, c)});
    return p;
  }

  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return scaled(field().inv(terms_.front().coeff));
  }

  Polynomial times_monomial(const Monomial& m, const value_type& c) const {
    Polynomial p(ring_, order_);
    if (field().is_zero(c)) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, field().mul(t.coeff, c)});
    return p;
  }

  Polynomial operator-() const { return scaled(field().neg(field().one())); }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) { return f.combine(g, false); }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f.combine(g, true); }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    f.check_ring(g);
    if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_, f.order_);
    const F& k = f.field();
    std::vector<term_type> out;
    out.reserve(f.size() * g.size());
    for (const auto& a : f.terms_) {
      for (const auto& b : g.terms_) out.push_back({a.monomial * b.monomial, k.mul(a.coeff, b.coeff)});
    }
    return from_terms(f.ring_, f.order_, std::move(out));
  }

  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  /// f^n by repeated squaring; f^0 = 1.
  Polynomial pow(unsigned n) const {
    Polynomial result = constant(ring_, field().one()).with_order(order_);
    Polynomial base = *this;
    while (n) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    if (!(*f.ring_ == *g.ring_)) return false;
    const Polynomial& h = g.order_ == f.order_ ? g : g.with_order(f.order_);
    if (f.terms_.size() != h.terms_.size()) return false;
    for (std::size_t i = 0; i < f.terms_.size(); ++i) {
      if (!(f.terms_[i].monomial == h.terms_[i].monomial) || !(f.terms_[i].coeff == h.terms_[i].coeff)) return false;
    }
    return true;
  }

  /// Canonical-form check used by property tests.
  bool is_canonical() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (field().is_zero(terms_[i].coeff)) return false;
      if (i && !order_.greater(terms_[i - 1].monomial, terms_[i].monomial)) return false;
    }
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      std::string c = field().to_string(terms_[i].coeff);
      const bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (i == 0) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const std::string mono = monomial_string(terms_[i].monomial);
      if (mono.empty()) {
        out += c;
      } else if (c == "1") {
        out += mono;
      } else {
        out += c + "*" + mono;
      }
    }
    return out;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (!m[i]) continue;
      if (!s.empty()) s += "*";
      s += ring_->variables()[i];
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

 private:
  void check_ring(const Polynomial& g) const {
    if (!ring_ || !g.ring_) fail(ErrorCode::InvalidInput, "polynomial without a ring");
    if (ring_ != g.ring_ && !(*ring_ == *g.ring_)) fail(ErrorCode::MixedRings, "operands live in different rings");
  }

  Polynomial combine(const Polynomial& g0, bool subtract) const {
    check_ring(g0);
    const Polynomial& g = g0.order_ == order_ ? g0 : g0.with_order(order_);
    const F& k = field();
    Polynomial out(ring_, order_);
    out.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      int c;
      if (i == terms_.size()) {
        c = -1;
      } else if (j == g.terms_.size()) {
        c = 1;
      } else {
        c = order_.compare(terms_[i].monomial, g.terms_[j].monomial);
      }
      if (c > 0) {
        out.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = g.terms_[j++];
        out.terms_.push_back({t.monomial, subtract ? k.neg(t.coeff) : t.coeff});
      } else {
        auto v = subtract ? k.sub(terms_[i].coeff, g.terms_[j].coeff) : k.add(terms_[i].coeff, g.terms_[j].coeff);
        if (!k.is_zero(v)) out.terms_.push_back({terms_[i].monomial, std::move(v)});
        ++i, ++j;
      }
    }
    return out;
  }

  void canonicalize() {
    const F& k = field();
    std::sort(terms_.begin(), terms_.end(),
              [&](const term_type& a, const term_type& b) { return order_.greater(a.monomial, b.monomial); });
    std::vector<term_type> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().monomial == t.monomial) {
        merged.back().coeff = k.add(merged.back().coeff, t.coeff);
      } else {
        if (!merged.empty() && k.is_zero(merged.back().coeff)) merged.pop_back();
        merged.push_back(std::move(t));
      }
    }
    if (!merged.empty() && k.is_zero(merged.back().coeff)) merged.pop_back();
    terms_ = std::move(merged);
  }

  RingPtr<F> ring_;
  MonomialOrder order_;
  std::vector<term_type> terms_;
};

/// Leading term under an explicit order.
template <CoefficientField F>
Term<F> leading_term(const Polynomial<F>& f, const MonomialOrder& ord) {
  return f.leading_term(ord);
}

/// Embeds f into k[t, x_1..x_n] (see Ring::with_leading_variable).
template <CoefficientField F>
Polynomial<F> lift_to(const RingPtr<F>& bigger, const Polynomial<F>& f, const MonomialOrder& ord) {
  std::vector<Term<F>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.monomial.shifted(1), t.coeff});
  return Polynomial<F>::from_terms(bigger, ord, std::move(terms));
}

/// Inverse of lift_to for t-free polynomials.
template <CoefficientField F>
Polynomial<F> drop_leading_variable(const RingPtr<F>& smaller, const Polynomial<F>& f) {
  std::vector<Term<F>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (t.monomial[0]) fail(ErrorCode::InvalidInput, "polynomial still involves the auxiliary variable");
    Monomial m;
    for (std::size_t i = 1; i < kMonomialSlots; ++i) {
      if (t.monomial[i]) m.set(i - 1, t.monomial[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial<F>::from_terms(smaller, smaller->degrevlex(), std::move(terms));
}

}  // namespace samuel
