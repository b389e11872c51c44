#pragma once

// Graded pieces I^(n+1)/Q^n I of the Sally module and its rank.

#include <map>

#include "samuel/hilbert.hpp"

namespace samuel {

struct SallyReport {
  std::map<unsigned, long long> lengths;
  long long rank = 0;
  long long e0_i = 0;
  long long e1_i = 0;
  long long e1_q = 0;
  long long colength_i = 0;
};

/// ℓ(I^(n+1)/Q^n I) = ℓ(A/Q^n I) - ℓ(A/I^(n+1)) for n = 1..n_max.
template <CoefficientField F>
std::map<unsigned, long long> sally_lengths(const QuotientRing<F>& a, const Ideal<F>& i, const ParameterIdeal<F>& q, unsigned n_max,
                                            const SampleOptions& options = {}) {
  if (!is_reduction(a, q, i, 8, options.local)) fail(ErrorCode::InvalidInput, "Q is not a reduction of I");
  PowerChain<F> chain_i(a.defining, i, options.local);
  PowerChain<F> chain_q(a.defining, q.ideal(a.ring), options.local);
  std::vector<long long> vals;
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto& small = chain_i.colength(n + 1);
    const auto big = local_colength(chain_q.times(i, n), options.local, small.stable_at);
    vals.push_back(static_cast<long long>(big.length) - static_cast<long long>(small.length));
  }
  std::map<unsigned, long long> out;
  for (unsigned n = 1; n <= n_max; ++n) out[n] = vals[n - 1];
  return out;
}

/// e1_I - e0_I - e1_Q + ℓ(A/I).
template <CoefficientField F>
SallyReport sally_rank(const QuotientRing<F>& a, const Ideal<F>& i, const ParameterIdeal<F>& q, unsigned n_max,
                       const SampleOptions& options = {}) {
  if (!is_reduction(a, q, i, 8, options.local)) fail(ErrorCode::InvalidInput, "Q is not a reduction of I");
  SallyReport out;
  const auto ri = hilbert_report(a, i, n_max, options);
  const auto rq = hilbert_report(a, q, n_max, options);
  out.e0_i = ri.e(0);
  out.e1_i = ri.e(1);
  out.e1_q = rq.e(1);
  out.colength_i = ri.samples.at(0);
  out.rank = out.e1_i - out.e0_i - out.e1_q + out.colength_i;
  return out;
}

}  // namespace samuel
