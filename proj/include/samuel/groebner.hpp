#pragma once

// Buchberger's algorithm with the Gebauer-Moeller installation of the
// product and chain criteria.
//
// The same engine runs in two regimes:
//   * global: an ordinary monomial order, no truncation;
//   * truncated: the local degree order with every term of total degree
//     >= `truncate_at` discarded, i.e. a standard basis of J + m^N computed in
//     the finite algebra k[x]/m^N. Every polynomial there is a finite vector,
//     so reduction terminates even though the order is not a well-order.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <queue>
#include <set>
#include <type_traits>
#include <vector>

#include "samuel/errors.hpp"
#include "samuel/polynomial.hpp"

namespace samuel {

struct GroebnerOptions {
  /// S-pairs that may be reduced before giving up with ResourceLimit.
  std::size_t max_pairs = 200000;
  /// Drop all terms of degree >= truncate_at (0: no truncation). Requires the
  /// local order.
  unsigned truncate_at = 0;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_skipped = 0;
};

namespace detail {

template <CoefficientField F>
using TermVec = std::vector<Term<F>>;

/// Coefficient slots for every monomial of degree < N in n variables,
/// laid out by degree and, within a degree, by descending local order.
/// Slot order therefore agrees with the local order, so the reducer can
/// walk slot indices instead of comparing monomials.
template <CoefficientField F>
class DenseWorkspace {
 public:
  using V = typename F::value_type;

  /// Slots above which the heap reducer is used instead.
  static constexpr std::size_t kMaxSlots = std::is_trivially_copyable_v<V> ? std::size_t{1} << 21 : std::size_t{1} << 18;

  static std::size_t slot_count(std::size_t n, unsigned degree_bound) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), degree_bound + n - 1, n);
    return c.fits_ulong_p() ? c.get_ui() : ~std::size_t{0};
  }

  DenseWorkspace(const F& field, std::size_t n, unsigned degree_bound)
      : n_(n), bound_(degree_bound), count_(n + 1, std::vector<std::size_t>(degree_bound + 1, 0)) {
    for (unsigned d = 0; d <= bound_; ++d) count_[0][d] = d == 0 ? 1 : 0;
    for (std::size_t k = 1; k <= n_; ++k) {
      for (unsigned d = 0; d <= bound_; ++d) count_[k][d] = count_[k - 1][d] + (d ? count_[k][d - 1] : 0);
    }
    // cum_[k][r][e]: monomials of degree r in variables 0..k whose exponent of
    // variable k is below e, i.e. those preceding it in the slot order.
    cum_.assign(n_, std::vector<std::vector<std::size_t>>(bound_, std::vector<std::size_t>(bound_ + 1, 0)));
    for (std::size_t k = 1; k < n_; ++k) {
      for (unsigned r = 0; r < bound_; ++r) {
        for (unsigned e = 1; e <= r + 1 && e <= bound_; ++e) cum_[k][r][e] = cum_[k][r][e - 1] + count_[k][r - (e - 1)];
      }
    }
    offset_.assign(bound_ + 1, 0);
    for (unsigned d = 0; d < bound_; ++d) offset_[d + 1] = offset_[d] + count_[n_][d];
    coeff_.assign(offset_[bound_], field.zero());
    touched_flag_.assign(offset_[bound_], 0);
  }

  std::size_t index(const Monomial& m) const {
    unsigned rem = m.degree();
    std::size_t r = offset_[rem];
    for (std::size_t k = n_; k-- > 1;) {
      const unsigned e = m[k];
      r += cum_[k][rem][e];
      rem -= e;
    }
    return r;
  }

  Monomial monomial(std::size_t idx) const {
    const unsigned d = static_cast<unsigned>(std::upper_bound(offset_.begin(), offset_.end(), idx) - offset_.begin() - 1);
    std::size_t r = idx - offset_[d];
    unsigned rem = d;
    Monomial m;
    for (std::size_t k = n_; k-- > 1;) {
      unsigned e = 0;
      while (r >= count_[k][rem - e]) r -= count_[k][rem - e], ++e;
      m.set(k, e);
      rem -= e;
    }
    m.set(0, rem);
    return m;
  }

  std::size_t n() const { return n_; }
  unsigned bound() const { return bound_; }

  std::vector<V>& coeff() { return coeff_; }
  /// Marks a slot as live; true when it was not live before.
  bool touch(std::size_t idx) {
    if (touched_flag_[idx]) return false;
    touched_flag_[idx] = 1;
    touched_.push_back(idx);
    return true;
  }

  void clear(const F& field) {
    for (auto idx : touched_) {
      touched_flag_[idx] = 0;
      coeff_[idx] = field.zero();
    }
    touched_.clear();
  }

 private:
  std::size_t n_;
  unsigned bound_;
  std::vector<std::vector<std::size_t>> count_;
  std::vector<std::vector<std::vector<std::size_t>>> cum_;
  std::vector<std::size_t> offset_;
  std::vector<V> coeff_;
  std::vector<std::uint8_t> touched_flag_;
  std::vector<std::size_t> touched_;
};

template <CoefficientField F>
class Reducer {
 public:
  using V = typename F::value_type;

  Reducer(const F& field, const MonomialOrder& order, unsigned truncate_at, DenseWorkspace<F>* dense = nullptr)
      : field_(field), order_(order), truncate_at_(truncate_at), dense_(dense) {}

  struct Stream {
    const TermVec<F>* poly;
    Monomial mult;
    V coef;
    std::size_t pos;
  };

  /// Divisor lookup table: leading monomials of the reducers.
  struct Divisors {
    std::vector<const TermVec<F>*> polys;
    std::vector<Monomial> leads;
    std::vector<std::uint32_t> masks;

    void add(const TermVec<F>* p) {
      polys.push_back(p);
      leads.push_back(p->front().monomial);
      masks.push_back(p->front().monomial.support_mask());
    }

    const TermVec<F>* find(const Monomial& m) const {
      const std::uint32_t mask = m.support_mask();
      for (std::size_t i = 0; i < leads.size(); ++i) {
        if ((masks[i] & ~mask) == 0 && leads[i].divides(m)) return polys[i];
      }
      return nullptr;
    }
  };

  /// Reduces sum(streams) by `divisors`. With full == false only leading
  /// terms are reduced and the first irreducible term ends reduction.
  TermVec<F> run(std::vector<Stream> streams, const Divisors& divisors, bool full) {
    if (dense_) return run_dense(streams, divisors, full);
    streams_ = std::move(streams);
    heap_ = Heap(EntryLess{&order_});
    for (std::uint32_t s = 0; s < streams_.size(); ++s) push_current(s);
    TermVec<F> out;
    bool reducing = true;
    while (!heap_.empty()) {
      const Monomial m = heap_.top().monomial;
      V c = field_.zero();
      while (!heap_.empty() && heap_.top().monomial == m) {
        const std::uint32_t s = heap_.top().stream;
        heap_.pop();
        const Stream& st = streams_[s];
        c = field_.add(c, field_.mul(st.coef, (*st.poly)[st.pos].coeff));
        ++streams_[s].pos;
        push_current(s);
      }
      if (field_.is_zero(c)) continue;
      if (reducing) {
        if (const TermVec<F>* g = divisors.find(m)) {
          const Term<F>& lt = g->front();
          if (g->size() > 1) {
            streams_.push_back({g, m / lt.monomial, field_.neg(field_.div(c, lt.coeff)), 1});
            push_current(static_cast<std::uint32_t>(streams_.size() - 1));
          }
          continue;
        }
        if (!full) reducing = false;
      }
      out.push_back({m, std::move(c)});
    }
    return out;
  }

 private:
  /// Same contract as run() for the truncated local order: terms live in
  /// workspace slots and an integer heap yields them in order.
  TermVec<F> run_dense(const std::vector<Stream>& streams, const Divisors& divisors, bool full) {
    DenseWorkspace<F>& ws = *dense_;
    auto& coeff = ws.coeff();
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> pending;
    auto add = [&](const Monomial& m, const V& c) {
      const std::size_t idx = ws.index(m);
      if (ws.touch(idx)) {
        coeff[idx] = c;
        pending.push(idx);
      } else {
        coeff[idx] = field_.add(coeff[idx], c);
      }
    };
    for (const auto& st : streams) {
      for (std::size_t pos = st.pos; pos < st.poly->size(); ++pos) {
        const Term<F>& term = (*st.poly)[pos];
        if (st.mult.degree() + term.monomial.degree() >= truncate_at_) break;
        add(st.mult * term.monomial, field_.mul(st.coef, term.coeff));
      }
    }
    TermVec<F> out;
    bool reducing = true;
    while (!pending.empty()) {
      const std::size_t idx = pending.top();
      pending.pop();
      if (field_.is_zero(coeff[idx])) continue;
      const Monomial m = ws.monomial(idx);
      if (reducing) {
        if (const TermVec<F>* g = divisors.find(m)) {
          const Term<F>& lt = g->front();
          const Monomial mult = m / lt.monomial;
          const V q = field_.neg(field_.div(coeff[idx], lt.coeff));
          for (std::size_t pos = 1; pos < g->size(); ++pos) {
            const Term<F>& term = (*g)[pos];
            if (mult.degree() + term.monomial.degree() >= truncate_at_) break;
            add(mult * term.monomial, field_.mul(q, term.coeff));
          }
          coeff[idx] = field_.zero();
          continue;
        }
        if (!full) reducing = false;
      }
      out.push_back({m, coeff[idx]});
    }
    ws.clear(field_);
    return out;
  }

  struct Entry {
    Monomial monomial;
    std::uint32_t stream;
  };
  struct EntryLess {
    const MonomialOrder* order;
    bool operator()(const Entry& a, const Entry& b) const {
      const int c = order->compare(a.monomial, b.monomial);
      if (c != 0) return c < 0;
      return a.stream > b.stream;
    }
  };

  void push_current(std::uint32_t s) {
    const Stream& st = streams_[s];
    if (st.pos >= st.poly->size()) return;
    Monomial m = st.mult * (*st.poly)[st.pos].monomial;
    // Along a stream the local order visits nondecreasing degrees, so the
    // first term past the cutoff ends the stream.
    if (truncate_at_ && m.degree() >= truncate_at_) return;
    heap_.push({m, s});
  }

  const F& field_;
  const MonomialOrder& order_;
  unsigned truncate_at_;
  DenseWorkspace<F>* dense_;
  std::vector<Stream> streams_;
  using Heap = std::priority_queue<Entry, std::vector<Entry>, EntryLess>;
  Heap heap_{EntryLess{&order_}};
};

template <CoefficientField F>
class GroebnerEngine {
 public:
  using V = typename F::value_type;
  using Poly = TermVec<F>;

  GroebnerEngine(F field, MonomialOrder order, GroebnerOptions options)
      : field_(std::move(field)), order_(order), options_(options), pairs_(PairLess{&order_}) {
    if (options_.truncate_at && order_.is_global()) {
      fail(ErrorCode::InvalidInput, "truncated computations need the local order");
    }
    if (options_.truncate_at &&
        DenseWorkspace<F>::slot_count(order_.nvars(), options_.truncate_at) <= DenseWorkspace<F>::kMaxSlots) {
      dense_ = std::make_unique<DenseWorkspace<F>>(field_, order_.nvars(), options_.truncate_at);
    }
  }

  /// Full reduced basis of the ideal generated by `gens` (terms sorted for
  /// the engine's order).
  std::vector<Poly> run(std::vector<Poly> gens) {
    std::vector<Poly> prepared;
    for (auto& g : gens) {
      Poly t = truncate(std::move(g));
      if (!t.empty()) prepared.push_back(std::move(t));
    }
    std::sort(prepared.begin(), prepared.end(), [&](const Poly& a, const Poly& b) { return poly_less(a, b); });
    for (auto& g : prepared) {
      Poly r = reduce_full(g);
      if (!r.empty()) install(make_monic(std::move(r)));
    }
    while (!pairs_.empty()) {
      const Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (++stats_.pairs_reduced > options_.max_pairs) {
        fail(ErrorCode::ResourceLimit, "Buchberger pair budget of " + std::to_string(options_.max_pairs) + " exceeded");
      }
      Poly r = reduce_spair(p);
      if (r.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      install(make_monic(std::move(r)));
    }
    return interreduce();
  }

  const GroebnerStats& stats() const { return stats_; }

  /// Normal form of f by an already reduced basis.
  static Poly normal_form(const F& field, const MonomialOrder& order, unsigned truncate_at,
                          const std::vector<Poly>& basis, const Poly& f) {
    if (f.empty()) return {};
    typename Reducer<F>::Divisors div;
    for (const auto& g : basis) div.add(&g);
    Reducer<F> red(field, order, truncate_at);
    return red.run({{&f, Monomial{}, field.one(), 0}}, div, true);
  }

 private:
  struct Pair {
    std::uint32_t i, j;
    Monomial lcm;
  };
  struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      const int c = order->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  Poly truncate(Poly p) const {
    if (!options_.truncate_at) return p;
    std::erase_if(p, [&](const Term<F>& t) { return t.monomial.degree() >= options_.truncate_at; });
    return p;
  }

  bool poly_less(const Poly& a, const Poly& b) const {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
      const int c = order_.compare(a[k].monomial, b[k].monomial);
      if (c != 0) return c < 0;
    }
    return a.size() < b.size();
  }

  Poly make_monic(Poly p) const {
    if (p.empty() || field_.is_one(p.front().coeff)) return p;
    const V inv = field_.inv(p.front().coeff);
    for (auto& t : p) t.coeff = field_.mul(t.coeff, inv);
    return p;
  }

  typename Reducer<F>::Divisors active_divisors() const {
    typename Reducer<F>::Divisors div;
    for (auto idx : active_) div.add(&basis_[idx]);
    return div;
  }

  Poly reduce_full(const Poly& f) {
    Reducer<F> red(field_, order_, options_.truncate_at, dense_.get());
    return red.run({{&f, Monomial{}, field_.one(), 0}}, divisors_, true);
  }

  Poly reduce_spair(const Pair& p) {
    const Poly& f = basis_[p.i];
    const Poly& g = basis_[p.j];
    Reducer<F> red(field_, order_, options_.truncate_at, dense_.get());
    std::vector<typename Reducer<F>::Stream> streams;
    if (f.size() > 1) streams.push_back({&f, p.lcm / f.front().monomial, field_.one(), 1});
    if (g.size() > 1) streams.push_back({&g, p.lcm / g.front().monomial, field_.neg(field_.one()), 1});
    return red.run(std::move(streams), divisors_, true);
  }

  bool skip_by_truncation(const Monomial& lcm) const {
    return options_.truncate_at && lcm.degree() >= options_.truncate_at;
  }

  void install(Poly h) {
    const auto t = static_cast<std::uint32_t>(basis_.size());
    const Monomial lt = h.front().monomial;
    basis_.push_back(std::move(h));
    lead_.push_back(lt);

    // Candidate pairs with the new element, chain and product criteria.
    std::vector<Pair> fresh;
    fresh.reserve(active_.size());
    for (auto i : active_) fresh.push_back({i, t, lcm(lead_[i], lt)});
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) {
          keep[a] = false;
          break;
        }
      }
    }
    // Among equal lcms keep one; a class containing a coprime pair is dropped.
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      bool class_coprime = coprime(lead_[fresh[a].i], lt);
      for (std::size_t b = a + 1; b < fresh.size(); ++b) {
        if (keep[b] && fresh[b].lcm == fresh[a].lcm) {
          class_coprime = class_coprime || coprime(lead_[fresh[b].i], lt);
          keep[b] = false;
        }
      }
      if (class_coprime) keep[a] = false;
    }
    // Old pairs made redundant by the new leading monomial.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      if (lt.divides(it->lcm) && !(lcm(lead_[it->i], lt) == it->lcm) && !(lcm(lead_[it->j], lt) == it->lcm)) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      if (skip_by_truncation(fresh[a].lcm)) {
        ++stats_.pairs_skipped;
        continue;
      }
      pairs_.insert(fresh[a]);
    }
    std::erase_if(active_, [&](std::uint32_t i) { return lt.divides(lead_[i]); });
    active_.push_back(t);
    divisors_ = active_divisors();
  }

  std::vector<Poly> interreduce() {
    std::vector<Poly> result;
    std::vector<std::uint32_t> order_idx = active_;
    std::sort(order_idx.begin(), order_idx.end(),
              [&](std::uint32_t a, std::uint32_t b) { return order_.compare(lead_[a], lead_[b]) < 0; });
    for (auto idx : order_idx) {
      const Poly& g = basis_[idx];
      Poly tail(g.begin() + 1, g.end());
      // In the truncated local case a tail term may be divisible by the
      // element's own leading monomial, so the element joins its reducers.
      typename Reducer<F>::Divisors others;
      for (auto o : order_idx) others.add(&basis_[o]);
      Reducer<F> red(field_, order_, options_.truncate_at, dense_.get());
      Poly reduced_tail = tail.empty() ? Poly{} : red.run({{&tail, Monomial{}, field_.one(), 0}}, others, true);
      Poly out;
      out.reserve(reduced_tail.size() + 1);
      out.push_back(g.front());
      for (auto& t : reduced_tail) out.push_back(std::move(t));
      result.push_back(std::move(out));
    }
    return result;
  }

  F field_;
  MonomialOrder order_;
  GroebnerOptions options_;
  std::vector<Poly> basis_;
  std::vector<Monomial> lead_;
  std::vector<std::uint32_t> active_;
  typename Reducer<F>::Divisors divisors_;
  std::set<Pair, PairLess> pairs_;
  GroebnerStats stats_;
  std::unique_ptr<DenseWorkspace<F>> dense_;
};

template <CoefficientField F>
TermVec<F> terms_in_order(const Polynomial<F>& p, const MonomialOrder& ord) {
  return p.order() == ord ? p.terms() : p.with_order(ord).terms();
}

}  // namespace detail

/// Reduced Groebner basis: monic elements, no leading monomial divides
/// another, no tail term divisible by a leading monomial. Sorted by leading
/// monomial, ascending.
template <CoefficientField F>
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr<F> ring, MonomialOrder order, std::vector<detail::TermVec<F>> elems, unsigned truncate_at = 0)
      : ring_(std::move(ring)), order_(order), truncate_at_(truncate_at), raw_(std::move(elems)) {
    for (const auto& e : raw_) staircase_.push_back(e.front().monomial);
  }

  const RingPtr<F>& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  unsigned truncate_at() const { return truncate_at_; }
  std::size_t size() const { return raw_.size(); }
  const std::vector<Monomial>& staircase() const { return staircase_; }
  const std::vector<detail::TermVec<F>>& raw() const { return raw_; }

  std::vector<Polynomial<F>> elements() const {
    std::vector<Polynomial<F>> out;
    out.reserve(raw_.size());
    for (const auto& e : raw_) out.push_back(Polynomial<F>::from_sorted(ring_, order_, e));
    return out;
  }

  bool is_unit_ideal() const { return raw_.size() == 1 && raw_.front().front().monomial.is_one(); }

  /// Remainder of complete division; supported on standard monomials only.
  Polynomial<F> normal_form(const Polynomial<F>& f) const {
    if (f.ring() != ring_ && !(*f.ring() == *ring_)) fail(ErrorCode::MixedRings, "normal form across rings");
    auto terms = detail::terms_in_order(f, order_);
    if (truncate_at_) {
      std::erase_if(terms, [&](const Term<F>& t) { return t.monomial.degree() >= truncate_at_; });
    }
    auto r = detail::GroebnerEngine<F>::normal_form(ring_->field(), order_, truncate_at_, raw_, terms);
    return Polynomial<F>::from_sorted(ring_, order_, std::move(r));
  }

  bool reduces_to_zero(const Polynomial<F>& f) const { return normal_form(f).is_zero(); }

  /// True when some leading monomial divides m.
  bool in_staircase(const Monomial& m) const {
    for (const auto& s : staircase_) {
      if (s.divides(m)) return true;
    }
    return false;
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (!(a.order_ == b.order_) || a.raw_.size() != b.raw_.size()) return false;
    for (std::size_t i = 0; i < a.raw_.size(); ++i) {
      const auto& x = a.raw_[i];
      const auto& y = b.raw_[i];
      if (x.size() != y.size()) return false;
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (!(x[k].monomial == y[k].monomial) || !(x[k].coeff == y[k].coeff)) return false;
      }
    }
    return true;
  }

 private:
  RingPtr<F> ring_;
  MonomialOrder order_;
  unsigned truncate_at_ = 0;
  std::vector<detail::TermVec<F>> raw_;
  std::vector<Monomial> staircase_;
};

template <CoefficientField F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens, const MonomialOrder& ord,
                            const GroebnerOptions& options = {}, GroebnerStats* stats = nullptr) {
  std::vector<detail::TermVec<F>> input;
  input.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.ring() != ring && !(*g.ring() == *ring)) fail(ErrorCode::MixedRings, "generator from another ring");
    if (!g.is_zero()) input.push_back(detail::terms_in_order(g, ord));
  }
  detail::GroebnerEngine<F> engine(ring->field(), ord, options);
  auto basis = engine.run(std::move(input));
  if (stats) *stats = engine.stats();
  return GroebnerBasis<F>(ring, ord, std::move(basis), options.truncate_at);
}

template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& g) {
  return g.normal_form(f);
}

}  // namespace samuel
