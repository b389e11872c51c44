#pragma once

// Slice computation of e1, d-sequences, unmixed components and
// superficial elements. Ideal comparisons are made at the origin.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "samuel/hilbert.hpp"

namespace samuel {

struct SliceResult {
  long long e1 = 0;
  std::size_t h0_length = 0;
  /// The value equals e1 only when the slicing element is superficial.
  bool conditional = true;
};

/// e1 = -ℓ(H^0_m(A/(a))) for d = 2 and a superficial nonzerodivisor a.
template <CoefficientField F>
SliceResult e1_via_slice(const QuotientRing<F>& a, const Polynomial<F>& elem, const LocalOptions& options = {}) {
  if (a.dim != 2) fail(ErrorCode::InvalidInput, "the slice method needs d = 2");
  const auto len = sat_quotient_length(a.defining + std::vector{elem}, options);
  return {-static_cast<long long>(len), len, true};
}

template <CoefficientField F>
struct DSequenceResult {
  bool holds = true;
  /// First failing pair (1-based i <= j) when holds is false.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// ((a_1..a_(i-1)) : a_i a_j) = ((a_1..a_(i-1)) : a_j) in A for 1 <= i <= j <= s.
template <CoefficientField F>
DSequenceResult<F> is_d_sequence(const QuotientRing<F>& a, const std::vector<Polynomial<F>>& elems) {
  for (const auto& e : elems) {
    if (a.defining.contains(e)) fail(ErrorCode::InvalidInput, "sequence element is zero in A");
  }
  DSequenceResult<F> out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const Ideal<F> base = a.defining + std::vector<Polynomial<F>>(elems.begin(), elems.begin() + static_cast<std::ptrdiff_t>(i));
    for (std::size_t j = i; j < elems.size(); ++j) {
      const Ideal<F> lhs = base.colon(elems[i] * elems[j]);
      const Ideal<F> rhs = base.colon(elems[j]);
      if (!locally_contains(rhs, lhs)) {
        out.holds = false;
        out.witness = std::make_pair(i + 1, j + 1);
        return out;
      }
    }
  }
  return out;
}

/// Checks every ordering of the sequence.
template <CoefficientField F>
DSequenceResult<F> is_d_sequence_any_order(const QuotientRing<F>& a, std::vector<Polynomial<F>> elems) {
  std::vector<std::size_t> perm(elems.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    std::vector<Polynomial<F>> seq;
    for (auto p : perm) seq.push_back(elems[p]);
    auto r = is_d_sequence(a, seq);
    if (!r.holds) return r;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {};
}

/// U(a) = (a) : b^∞ in A, returned as an ideal of R containing the defining ideal.
template <CoefficientField F>
Ideal<F> unmixed_component(const QuotientRing<F>& a, const Polynomial<F>& elem, const Polynomial<F>& b) {
  const Ideal<F> base = a.defining + std::vector{elem};
  Ideal<F> u = base.saturate(b);
  if (!u.contains(base)) fail(ErrorCode::InvalidInput, "unmixed component does not contain (a)");
  return u;
}

/// ℓ(U(a)/(a)) at the origin.
template <CoefficientField F>
std::size_t unmixed_quotient_length(const QuotientRing<F>& a, const Polynomial<F>& elem, const Polynomial<F>& b,
                                    const LocalOptions& options = {}) {
  const Ideal<F> base = a.defining + std::vector{elem};
  return sat_quotient_length(base, unmixed_component(a, elem, b), options);
}

struct SuperficialResult {
  bool superficial = true;
  /// Smallest n in the window where the criterion fails.
  std::optional<unsigned> counterexample;
  /// A true answer only covers the checked window.
  bool heuristic = true;
};

/// (a + Q^(n+1)) : x = (a + Q^n) + (a : x) at the origin for n in [lo, hi].
/// The right side is always contained in the left, so colengths decide:
/// ℓ(R/(J : x)) = ℓ(R/J) - ℓ(R/(J + (x))) for J = a + Q^(n+1).
template <CoefficientField F>
SuperficialResult is_superficial(const QuotientRing<F>& a, const ParameterIdeal<F>& q, const Polynomial<F>& x, unsigned lo = 2,
                                 unsigned hi = 6, const LocalOptions& options = {}) {
  const Ideal<F> qi = q.ideal(a.ring);
  if (!locally_contains(a.defining + qi, x)) fail(ErrorCode::InvalidInput, "element is not in Q");
  const Ideal<F> ann = a.defining.colon(x);
  SuperficialResult out;
  for (unsigned n = lo; n <= hi; ++n) {
    const Ideal<F> j = a.defining + qi.power(n + 1);
    const auto lj = local_colength(j, options);
    const auto ljx = local_colength(j + std::vector{x}, options, lj.stable_at);
    const long long lhs = static_cast<long long>(lj.length) - static_cast<long long>(ljx.length);
    const auto rhs = local_colength(a.defining + qi.power(n) + ann, options);
    if (lhs != static_cast<long long>(rhs.length)) {
      out.superficial = false;
      out.counterexample = n;
      out.heuristic = false;
      return out;
    }
  }
  return out;
}

}  // namespace samuel
