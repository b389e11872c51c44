#pragma once

// Lengths at the origin. D(N) = dim_k R/(J + m^N) is read off a standard
// basis of J computed modulo m^N in the local degree order; its standard
// monomials are the same in number as those of a DegRevLex basis of J + m^N.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "samuel/ideal.hpp"

namespace samuel {

struct LocalOptions {
  unsigned n0 = 4;
  unsigned n_max = 64;
  /// Extra levels past stabilization that must also agree.
  unsigned verify_steps = 0;
  GroebnerOptions groebner{};
};

struct LocalLength {
  std::size_t length = 0;
  /// Least N with D(N) = D(N+1).
  unsigned stable_at = 0;
};

/// Number of standard monomials of each degree k < n for the given
/// staircase (monomials outside the ideal it generates).
inline std::vector<std::size_t> standard_histogram(const std::vector<Monomial>& staircase, std::size_t nvars, unsigned n) {
  std::vector<std::size_t> hist(n, 0);
  if (n == 0) return hist;
  Monomial m;
  auto divisible = [&](const Monomial& x) {
    for (const auto& s : staircase) {
      if (s.divides(x)) return true;
    }
    return false;
  };
  auto rec = [&](auto& self, std::size_t i, unsigned deg) -> void {
    if (i == nvars) {
      ++hist[deg];
      return;
    }
    for (unsigned e = 0; deg + e < n; ++e) {
      m.set(i, e);
      if (e > 0 && divisible(m)) break;
      self(self, i + 1, deg + e);
    }
    m.set(i, 0);
  };
  if (!divisible(m)) rec(rec, 0, 0);
  return hist;
}

/// Standard basis of J + m^n in the local order (terms of degree >= n dropped).
template <CoefficientField F>
const GroebnerBasis<F>& truncated_basis(const Ideal<F>& j, unsigned n, const GroebnerOptions& options = {}) {
  GroebnerOptions o = options;
  o.truncate_at = n;
  return j.groebner(MonomialOrder::local(j.ring()->nvars()), o);
}

template <CoefficientField F>
std::vector<std::size_t> local_histogram(const Ideal<F>& j, unsigned n, const GroebnerOptions& options = {}) {
  return standard_histogram(truncated_basis(j, n, options).staircase(), j.ring()->nvars(), n);
}

/// D(n) = dim_k R/(J + m^n).
template <CoefficientField F>
std::size_t truncated_dimension(const Ideal<F>& j, unsigned n, const GroebnerOptions& options = {}) {
  const auto h = local_histogram(j, n, options);
  return std::accumulate(h.begin(), h.end(), std::size_t{0});
}

/// Stabilized D(N). D(N) = D(N+1) exactly when R/(J + m^(N+1)) has no
/// standard monomial of degree N, and then m^N lies in J locally.
/// `hint` is a level where a related ideal stabilized.
template <CoefficientField F>
LocalLength local_colength(const Ideal<F>& j, const LocalOptions& options = {}, unsigned hint = 0) {
  const unsigned cap = options.n_max + 1;
  unsigned level = std::max(options.n0 + 1, hint + 2);
  level = std::min(level, cap);
  for (;;) {
    const auto h = local_histogram(j, level, options.groebner);
    for (unsigned k = 0; k < level; ++k) {
      if (h[k] != 0) continue;
      LocalLength out{std::accumulate(h.begin(), h.begin() + k, std::size_t{0}), k};
      if (options.verify_steps) {
        const auto more = local_histogram(j, k + options.verify_steps + 1, options.groebner);
        for (unsigned s = k; s < more.size(); ++s) {
          if (more[s] != 0) fail(ErrorCode::NotLocallyFinite, "D(N) moved after apparent stabilization");
        }
      }
      return out;
    }
    if (level >= cap) break;
    level = std::min(cap, level + std::max(2u, level / 5));
  }
  fail(ErrorCode::NotLocallyFinite,
       "D(N) did not stabilize for N <= " + std::to_string(options.n_max) + "; the ideal is not m-primary at the origin or the cutoff is too small");
}

/// ℓ((J : m^∞)/J) at the origin, as the eventual value of
/// D_J(N) - D_sat(N). Agreement over three consecutive N beyond the
/// generator degrees is taken as stabilization.
template <CoefficientField F>
std::size_t sat_quotient_length(const Ideal<F>& j, const LocalOptions& options = {}) {
  const Ideal<F> sat = j.saturate(Ideal<F>::maximal(j.ring()));
  return sat_quotient_length(j, sat, options);
}

template <CoefficientField F>
std::size_t sat_quotient_length(const Ideal<F>& j, const Ideal<F>& sat, const LocalOptions& options = {}) {
  const unsigned start = std::max(sat.max_generator_degree(), j.max_generator_degree()) + 1;
  const unsigned cap = options.n_max + 1;
  unsigned level = std::min(cap, std::max(options.n0, start) + 3);
  for (;;) {
    const auto hj = local_histogram(j, level, options.groebner);
    const auto hs = local_histogram(sat, level, options.groebner);
    // diff(N) = sum_{k<N} (hj[k] - hs[k]); stable at N when hj = hs at N, N+1.
    long long diff = 0;
    for (unsigned n = 0; n + 2 <= level; ++n) {
      if (n >= start && hj[n] == hs[n] && hj[n + 1] == hs[n + 1]) {
        if (diff < 0) fail(ErrorCode::InvalidInput, "saturation is smaller than the ideal");
        return static_cast<std::size_t>(diff);
      }
      diff += static_cast<long long>(hj[n]) - static_cast<long long>(hs[n]);
    }
    if (level >= cap) break;
    level = std::min(cap, level + std::max(2u, level / 3));
  }
  fail(ErrorCode::NotFinite, "D_J(N) - D_sat(N) did not stabilize for N <= " + std::to_string(options.n_max));
}

/// An ideal equal to J at the origin, generated by the truncated standard
/// basis of J one level past stabilization. Requires J m-primary there.
template <CoefficientField F>
Ideal<F> local_generators(const Ideal<F>& j, const LocalLength& len, const LocalOptions& options = {}) {
  return Ideal<F>(j.ring(), truncated_basis(j, len.stable_at + 1, options.groebner).elements());
}

/// K ⊆ L locally with L m-primary: equality iff the colengths agree.
template <CoefficientField F>
bool locally_equal_nested(const Ideal<F>& smaller, const Ideal<F>& larger, const LocalOptions& options = {}) {
  const auto l = local_colength(larger, options);
  const auto s = local_colength(smaller, options, l.stable_at);
  return s.length == l.length;
}

/// g ∈ J R_m: some element of (J : g) is a unit at the origin.
template <CoefficientField F>
bool locally_contains(const Ideal<F>& j, const Polynomial<F>& g) {
  if (j.contains(g)) return true;
  const Ideal<F> c = j.colon(g);
  for (const auto& h : c.generators()) {
    if (!h.field().is_zero(h.constant_coefficient())) return true;
  }
  return false;
}

template <CoefficientField F>
bool locally_contains(const Ideal<F>& j, const Ideal<F>& k) {
  for (const auto& g : k.generators()) {
    if (!locally_contains(j, g)) return false;
  }
  return true;
}

}  // namespace samuel
