#pragma once

// Ideals of a polynomial ring: generator lists with cached reduced bases and
// the usual arithmetic (sum, product, power, intersection, colon, saturation).

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

#include "samuel/groebner.hpp"
#include "samuel/parse.hpp"

namespace samuel {

template <CoefficientField F>
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (g.ring() != ring_ && !(*g.ring() == *ring_)) fail(ErrorCode::MixedRings, "generator from another ring");
      if (!g.is_zero()) gens_.push_back(g.with_order(ring_->degrevlex()));
    }
  }

  static Ideal zero(RingPtr<F> ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr<F> ring) {
    auto one = Polynomial<F>::constant(ring, ring->field().one());
    return Ideal(ring, {one});
  }
  /// The ideal of all variables.
  static Ideal maximal(RingPtr<F> ring) {
    std::vector<Polynomial<F>> gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial<F>::variable(ring, i));
    return Ideal(ring, std::move(gens));
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  std::size_t size() const { return gens_.size(); }

  unsigned max_generator_degree() const {
    unsigned d = 0;
    for (const auto& g : gens_) d = std::max(d, g.total_degree());
    return d;
  }

  /// Reduced basis for `ord`, computed once per order.
  const GroebnerBasis<F>& groebner(const MonomialOrder& ord, const GroebnerOptions& options = {}) const {
    const std::string key = ord.to_string() + "/" + std::to_string(options.truncate_at);
    {
      std::lock_guard lock(cache_->mutex);
      auto it = cache_->bases.find(key);
      if (it != cache_->bases.end()) return *it->second;
    }
    auto gb = std::make_shared<const GroebnerBasis<F>>(buchberger(ring_, gens_, ord, options));
    std::lock_guard lock(cache_->mutex);
    return *cache_->bases.emplace(key, std::move(gb)).first->second;
  }

  const GroebnerBasis<F>& groebner() const { return groebner(ring_->degrevlex()); }

  bool contains(const Polynomial<F>& f) const { return groebner().reduces_to_zero(f); }

  bool contains(const Ideal& other) const {
    check_ring(other);
    for (const auto& g : other.gens_) {
      if (!contains(g)) return false;
    }
    return true;
  }

  bool is_unit() const { return groebner().is_unit_ideal(); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    a.check_ring(b);
    return a.groebner() == b.groebner();
  }

  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    a.check_ring(b);
    auto gens = a.gens_;
    gens.insert(gens.end(), b.gens_.begin(), b.gens_.end());
    return Ideal(a.ring_, std::move(gens));
  }

  Ideal operator+(const std::vector<Polynomial<F>>& extra) const {
    auto gens = gens_;
    gens.insert(gens.end(), extra.begin(), extra.end());
    return Ideal(ring_, std::move(gens));
  }

  friend Ideal operator*(const Ideal& a, const Ideal& b) {
    a.check_ring(b);
    std::vector<Polynomial<F>> gens;
    gens.reserve(a.size() * b.size());
    for (const auto& f : a.gens_) {
      for (const auto& g : b.gens_) gens.push_back(f * g);
    }
    return Ideal(a.ring_, dedupe(std::move(gens)));
  }

  /// I^n generated by the degree-n monomials in the generators of I.
  Ideal power(unsigned n) const {
    if (n == 0) return unit(ring_);
    if (gens_.empty()) return *this;
    std::vector<Polynomial<F>> out;
    std::vector<std::size_t> idx(n, 0);
    // Nondecreasing index tuples enumerate each product once.
    std::vector<Polynomial<F>> prefix(n + 1);
    prefix[0] = Polynomial<F>::constant(ring_, ring_->field().one());
    std::size_t depth = 0;
    for (;;) {
      while (depth < n) {
        prefix[depth + 1] = prefix[depth] * gens_[idx[depth]];
        if (depth + 1 < n) idx[depth + 1] = idx[depth];
        ++depth;
      }
      out.push_back(prefix[n]);
      std::size_t k = n;
      while (k > 0 && idx[k - 1] + 1 == gens_.size()) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < n; ++j) idx[j] = idx[k - 1];
      depth = k - 1;
    }
    return Ideal(ring_, dedupe(std::move(out)));
  }

  /// Generators of I restricted by reducing each modulo the others and
  /// dropping those that vanish.
  Ideal interreduced() const {
    std::vector<Polynomial<F>> kept = gens_;
    for (std::size_t i = kept.size(); i-- > 0;) {
      std::vector<Polynomial<F>> others;
      for (std::size_t j = 0; j < kept.size(); ++j) {
        if (j != i) others.push_back(kept[j]);
      }
      if (others.empty()) break;
      if (Ideal(ring_, others).contains(kept[i])) kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return Ideal(ring_, std::move(kept));
  }

  /// I ∩ J by eliminating t from t*I + (1 - t)*J.
  friend Ideal intersect(const Ideal& a, const Ideal& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return zero(a.ring_);
    auto big = a.ring_->with_leading_variable();
    const auto ord = MonomialOrder::elimination(big->nvars(), 1);
    const auto t = Polynomial<F>::variable(big, 0).with_order(ord);
    const auto one_minus_t = (Polynomial<F>::constant(big, big->field().one()) - Polynomial<F>::variable(big, 0)).with_order(ord);
    std::vector<Polynomial<F>> gens;
    for (const auto& f : a.gens_) gens.push_back(t * lift_to(big, f, ord));
    for (const auto& g : b.gens_) gens.push_back(one_minus_t * lift_to(big, g, ord));
    const auto gb = buchberger(big, gens, ord);
    std::vector<Polynomial<F>> out;
    for (const auto& e : gb.elements()) {
      if (e.leading_term().monomial[0] == 0) out.push_back(drop_leading_variable(a.ring_, e));
    }
    return Ideal(a.ring_, std::move(out));
  }

  /// (I : f) = (I ∩ (f)) / f.
  Ideal colon(const Polynomial<F>& f) const {
    if (f.is_zero()) fail(ErrorCode::ZeroDivisorRequest, "colon by the zero polynomial");
    const Ideal inter = intersect(*this, Ideal(ring_, {f}));
    std::vector<Polynomial<F>> out;
    for (const auto& g : inter.gens_) out.push_back(divide_exact(g, f));
    return Ideal(ring_, std::move(out));
  }

  Ideal colon(const Ideal& j) const {
    check_ring(j);
    if (j.is_zero()) return unit(ring_);
    Ideal acc = colon(j.gens_.front());
    for (std::size_t i = 1; i < j.gens_.size(); ++i) acc = intersect(acc, colon(j.gens_[i]));
    return acc;
  }

  /// (I : J^∞), iterating colons until the reduced basis is stable.
  Ideal saturate(const Ideal& j, unsigned max_iterations = 64) const {
    if (j.is_zero()) fail(ErrorCode::InvalidInput, "saturation by the zero ideal");
    Ideal cur = *this;
    for (unsigned it = 0; it < max_iterations; ++it) {
      Ideal next = j.size() == 1 ? cur.colon(j.gens_.front()) : cur.colon(j);
      if (next == cur) return reduced_generators(cur);
      cur = std::move(next);
    }
    fail(ErrorCode::ResourceLimit, "saturation did not stabilize within " + std::to_string(max_iterations) + " steps");
  }

  Ideal saturate(const Polynomial<F>& f, unsigned max_iterations = 64) const {
    return saturate(Ideal(ring_, {f}), max_iterations);
  }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& g : gens_) out.push_back(g.to_string());
    return out;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const GroebnerBasis<F>>> bases;
  };

  void check_ring(const Ideal& other) const {
    if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) fail(ErrorCode::MixedRings, "ideals live in different rings");
  }

  static Ideal reduced_generators(const Ideal& i) { return Ideal(i.ring_, i.groebner().elements()); }

  /// Drops generators that are scalar multiples of earlier ones.
  static std::vector<Polynomial<F>> dedupe(std::vector<Polynomial<F>> gens) {
    std::vector<Polynomial<F>> out;
    std::unordered_set<std::string> seen;
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (!seen.insert(g.monic().to_string()).second) continue;
      out.push_back(std::move(g));
    }
    return out;
  }

  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// q with g = q*f; throws InvalidInput when f does not divide g.
template <CoefficientField F>
Polynomial<F> divide_exact(const Polynomial<F>& g, const Polynomial<F>& f) {
  if (f.is_zero()) fail(ErrorCode::DivisionByZero, "division by the zero polynomial");
  const auto ord = g.ring()->degrevlex();
  Polynomial<F> rest = g.with_order(ord);
  const Polynomial<F> div = f.with_order(ord);
  const auto& lt = div.leading_term();
  const F& k = g.field();
  std::vector<Term<F>> quotient;
  while (!rest.is_zero()) {
    const auto& r = rest.leading_term();
    if (!lt.monomial.divides(r.monomial)) fail(ErrorCode::InvalidInput, "inexact polynomial division");
    const Monomial m = r.monomial / lt.monomial;
    const auto c = k.div(r.coeff, lt.coeff);
    quotient.push_back({m, c});
    rest -= div.times_monomial(m, c);
  }
  return Polynomial<F>::from_sorted(g.ring(), ord, std::move(quotient));
}

template <CoefficientField F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  return a + b;
}

template <CoefficientField F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b) {
  return a * b;
}

template <CoefficientField F>
bool member(const Polynomial<F>& f, const Ideal<F>& i) {
  return i.contains(f);
}

template <CoefficientField F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b) {
  return a == b;
}

template <CoefficientField F>
Ideal<F> parse_ideal(const RingPtr<F>& ring, const std::vector<std::string>& texts) {
  return Ideal<F>(ring, parse_polys(ring, texts));
}

}  // namespace samuel
