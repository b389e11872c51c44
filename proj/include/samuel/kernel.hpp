#pragma once

// Lengths of T_n = {(α_0..α_n) in C^(n+1) : a α_i + b α_(i-1) = 0, 0 <= i <= n+1}
// and the resulting Hilbert coefficients of a two-generated parameter ideal.

#include <string>

#include "samuel/artin.hpp"
#include "samuel/hilbert.hpp"

namespace samuel {

template <CoefficientField F>
struct ActionPair {
  Matrix<F> a;
  Matrix<F> b;

  static ActionPair make(const ArtinAlgebra<F>& c, const Polynomial<F>& a, const Polynomial<F>& b) {
    return {c.action(a), c.action(b)};
  }
};

/// Block matrix with opA on the diagonal and opB on the subdiagonal;
/// (n+2) block rows, (n+1) block columns.
template <CoefficientField F>
Matrix<F> kernel_block_matrix(const ActionPair<F>& act, unsigned n) {
  const std::size_t c = act.a.rows();
  Matrix<F> m(act.a.field(), (n + 2) * c, (n + 1) * c);
  for (unsigned blk = 0; blk <= n + 1; ++blk) {
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (blk <= n) m(blk * c + i, blk * c + j) = act.a(i, j);
        if (blk >= 1) m(blk * c + i, (blk - 1) * c + j) = act.b(i, j);
      }
    }
  }
  return m;
}

template <CoefficientField F>
std::size_t tn_length(const ActionPair<F>& act, unsigned n) {
  return nullity(kernel_block_matrix(act, n));
}

/// ℓ((0) :_C (a, b)).
template <CoefficientField F>
std::size_t joint_annihilator_length(const ActionPair<F>& act) {
  const std::size_t c = act.a.rows();
  Matrix<F> m(act.a.field(), 2 * c, c);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = act.a(i, j);
      m(c + i, j) = act.b(i, j);
    }
  }
  return nullity(m);
}

/// ℓ((0) :_C f) = ℓ(C/fC).
template <CoefficientField F>
std::size_t annihilator_length(const ArtinAlgebra<F>& c, const Polynomial<F>& f) {
  return nullity(c.action(f));
}

struct KernelResult {
  long long e1 = 0;
  long long e2 = 0;
  /// -ℓ(C) <= e1 <= -ℓ((0) :_C Q).
  long long lower = 0;
  long long upper = 0;
  HilbertReport report;
  std::map<unsigned, std::size_t> tn;
};

/// Fits H(n) = e0 binom(n+2, 2) + ℓ(T_n) on n = n_lo..n_hi.
template <CoefficientField F>
KernelResult e1_e2_via_kernel(const ArtinAlgebra<F>& c, const ActionPair<F>& act, long long e0, unsigned n_lo = 0,
                              unsigned n_hi = 7, unsigned threads = 1) {
  if (n_hi < n_lo) fail(ErrorCode::InvalidInput, "empty window");
  KernelResult out;
  auto lens = parallel_map(n_hi - n_lo + 1, threads, [&](std::size_t k) { return tn_length(act, n_lo + static_cast<unsigned>(k)); });
  Samples samples;
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    const std::size_t t = lens[n - n_lo];
    out.tn[n] = t;
    samples[n] = e0 * binomial(n + 2, 2).get_si() + static_cast<long long>(t);
  }
  out.report = extract_coeffs(samples, 2);
  if (out.report.e(0) != e0) fail(ErrorCode::BoundViolation, "fitted multiplicity differs from the supplied e0");
  out.e1 = out.report.e(1);
  out.e2 = out.report.e(2);
  out.lower = -static_cast<long long>(c.dim());
  out.upper = -static_cast<long long>(joint_annihilator_length(act));
  if (out.e1 < out.lower || out.e1 > out.upper) {
    fail(ErrorCode::BoundViolation, "e1 = " + std::to_string(out.e1) + " outside [" + std::to_string(out.lower) + ", " +
                                        std::to_string(out.upper) + "]");
  }
  return out;
}

}  // namespace samuel
