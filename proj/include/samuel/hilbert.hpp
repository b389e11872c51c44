#pragma once

// Hilbert-Samuel functions of ideals in A = R/a, coefficient extraction in
// the binomial basis, reductions and their random sampling.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "samuel/local.hpp"
#include "samuel/matrix.hpp"
#include "samuel/parallel.hpp"

namespace samuel {

template <CoefficientField F>
struct QuotientRing {
  RingPtr<F> ring;
  Ideal<F> defining;
  unsigned dim = 0;

  static QuotientRing make(RingPtr<F> ring, Ideal<F> defining, unsigned dim) {
    if (dim == 0) fail(ErrorCode::InvalidInput, "declared dimension must be positive");
    for (const auto& g : defining.groebner().elements()) {
      if (!g.field().is_zero(g.constant_coefficient())) {
        fail(ErrorCode::InvalidInput, "defining ideal is not contained in the maximal ideal");
      }
    }
    return {std::move(ring), std::move(defining), dim};
  }

  Ideal<F> with(const Ideal<F>& i) const { return defining + i; }
};

template <CoefficientField F>
struct ParameterIdeal {
  std::vector<Polynomial<F>> lifts;
  std::string label;

  Ideal<F> ideal(const RingPtr<F>& ring) const { return Ideal<F>(ring, lifts); }

  /// Checks that there are d lifts and that they generate an m-primary ideal of A.
  static ParameterIdeal make(const QuotientRing<F>& a, std::vector<Polynomial<F>> lifts, std::string label = {},
                             const LocalOptions& options = {}) {
    if (lifts.size() != a.dim) {
      fail(ErrorCode::InvalidInput, "a parameter ideal needs " + std::to_string(a.dim) + " generators");
    }
    ParameterIdeal q{std::move(lifts), std::move(label)};
    local_colength(a.defining + q.lifts, options);
    return q;
  }
};

using Samples = std::map<unsigned, long long>;

struct HilbertReport {
  Samples samples;
  unsigned dim = 0;
  /// (e0, e1, ..., ed).
  std::vector<long long> coeffs;
  unsigned window_lo = 0;
  unsigned window_hi = 0;
  /// Least n from which the fitted polynomial matches every later sample.
  unsigned polynomial_from = 0;
  /// Stabilization level of each sample.
  std::map<unsigned, unsigned> levels;

  long long e(std::size_t i) const { return coeffs.at(i); }
};

/// binom(n, k) for n >= 0.
inline mpz_class binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

/// sum_i (-1)^i e_i binom(n + d - i, d - i).
inline mpz_class hilbert_polynomial_value(const std::vector<long long>& coeffs, long long n) {
  const long long d = static_cast<long long>(coeffs.size()) - 1;
  mpz_class total = 0;
  for (long long i = 0; i <= d; ++i) {
    mpz_class term = binomial(n + d - i, d - i) * static_cast<long>(coeffs[static_cast<std::size_t>(i)]);
    if (i % 2) total -= term;
    else total += term;
  }
  return total;
}

inline HilbertReport extract_coeffs(const Samples& samples, unsigned d) {
  if (samples.empty()) fail(ErrorCode::NoPolynomialTail, "no samples");
  const unsigned lo = samples.begin()->first;
  const unsigned hi = samples.rbegin()->first;
  if (samples.size() != hi - lo + 1) fail(ErrorCode::InvalidInput, "samples must be consecutive");
  if (samples.size() < 2 * (d + 1)) {
    fail(ErrorCode::NoPolynomialTail, "need at least " + std::to_string(2 * (d + 1)) + " consecutive samples");
  }
  std::vector<mpz_class> v;
  for (const auto& [n, h] : samples) v.emplace_back(static_cast<long>(h));

  // Window starting at index s vanishes when the (d+1)-st difference of
  // v[s..s+d+1] is zero.
  auto window_vanishes = [&](std::size_t s) {
    mpz_class acc = 0;
    for (unsigned j = 0; j <= d + 1; ++j) {
      mpz_class term = binomial(d + 1, j) * v[s + j];
      if ((d + 1 - j) % 2) acc -= term;
      else acc += term;
    }
    return acc == 0;
  };
  const std::size_t last = v.size() - (d + 2);
  std::optional<std::size_t> start;
  for (std::size_t s = last + 1; s-- > 0;) {
    if (!window_vanishes(s)) break;
    start = s;
  }
  if (!start) fail(ErrorCode::NoPolynomialTail, "the last " + std::to_string(d + 2) + " samples are not polynomial of degree " + std::to_string(d));

  const RationalField qq;
  Matrix<RationalField> m(qq, d + 1, d + 1);
  std::vector<mpq_class> rhs;
  for (unsigned r = 0; r <= d; ++r) {
    const long long n = static_cast<long long>(hi) - d + r;
    for (unsigned i = 0; i <= d; ++i) {
      mpq_class b{binomial(n + d - i, d - i)};
      m(r, i) = i % 2 ? mpq_class(-b) : b;
    }
    rhs.emplace_back(v[static_cast<std::size_t>(n - lo)]);
  }
  const auto sol = solve(m, rhs);
  HilbertReport rep;
  rep.samples = samples;
  rep.dim = d;
  for (const auto& x : sol) {
    if (x.get_den() != 1) fail(ErrorCode::NonIntegerCoefficient, "fitted coefficient " + x.get_str() + " is not an integer");
    if (!x.get_num().fits_slong_p()) fail(ErrorCode::ResourceLimit, "coefficient out of range");
    rep.coeffs.push_back(x.get_num().get_si());
  }
  if (rep.coeffs.front() < 1) {
    fail(ErrorCode::InvalidInput, "multiplicity " + std::to_string(rep.coeffs.front()) + " < 1: declared dimension too large");
  }
  rep.window_lo = lo + static_cast<unsigned>(*start);
  rep.window_hi = hi;
  unsigned from = hi + 1;
  for (unsigned n = hi + 1; n-- > lo;) {
    if (hilbert_polynomial_value(rep.coeffs, n) != v[n - lo]) break;
    from = n;
  }
  rep.polynomial_from = from;
  return rep;
}

/// The ideals a + I^k of R for k = 1, 2, ..., equal at the origin to the
/// true ones. Small powers are formed directly; past that,
/// a + I^(k+1) = a + I * G_k where G_k is the local standard basis of
/// a + I^k (Nakayama absorbs the truncation).
template <CoefficientField F>
class PowerChain {
 public:
  PowerChain(Ideal<F> defining, Ideal<F> i, LocalOptions options = {})
      : defining_(std::move(defining)), i_(std::move(i)), options_(options) {}

  const Ideal<F>& power(unsigned k) {
    if (k == 0) fail(ErrorCode::InvalidInput, "power chain starts at 1");
    while (ideals_.size() < k) extend();
    return ideals_[k - 1];
  }

  const LocalLength& colength(unsigned k) {
    power(k);
    while (lengths_.size() < k) {
      // Stabilization levels of consecutive powers grow about linearly.
      unsigned hint = lengths_.empty() ? 0 : lengths_.back().stable_at;
      if (lengths_.size() >= 2) hint = std::max(hint, 2 * hint - std::min(hint, lengths_[lengths_.size() - 2].stable_at));
      lengths_.push_back(local_colength(ideals_[lengths_.size()], options_, hint));
    }
    return lengths_[k - 1];
  }

  /// a + X * I^k at the origin (k = 0 gives a + X).
  Ideal<F> times(const Ideal<F>& x, unsigned k) {
    if (k == 0) return defining_ + x;
    return defining_ + x * generators(k);
  }

  const Ideal<F>& defining() const { return defining_; }
  const Ideal<F>& base() const { return i_; }

 private:
  static constexpr std::size_t kDirectLimit = 120;

  /// Generators of an ideal equal to a + I^k at the origin, as small as is cheap.
  Ideal<F> generators(unsigned k) {
    if (direct_count(k) <= kDirectLimit) return i_.power(k);
    return local_generators(power(k), colength(k), options_);
  }

  std::size_t direct_count(unsigned k) const {
    const auto c = binomial(static_cast<long long>(i_.size() + k - 1), k);
    return c.fits_ulong_p() ? c.get_ui() : ~std::size_t{0};
  }

  void extend() {
    const unsigned k = static_cast<unsigned>(ideals_.size()) + 1;
    if (k == 1 || direct_count(k) <= kDirectLimit) {
      ideals_.push_back(defining_ + i_.power(k));
    } else {
      ideals_.push_back(defining_ + i_ * generators(k - 1));
    }
  }

  Ideal<F> defining_;
  Ideal<F> i_;
  LocalOptions options_;
  std::deque<Ideal<F>> ideals_;
  std::deque<LocalLength> lengths_;
};

struct SampleOptions {
  LocalOptions local{};
  unsigned threads = 1;
};

/// n -> ℓ(A/I^(n+1)) for n = n_lo..n_max; `levels` receives the
/// stabilization level of each value.
template <CoefficientField F>
Samples hilbert_samuel(const QuotientRing<F>& a, const Ideal<F>& i, unsigned n_max, const SampleOptions& options = {},
                       std::map<unsigned, unsigned>* levels = nullptr, unsigned n_lo = 0) {
  PowerChain<F> chain(a.defining, i, options.local);
  Samples out;
  for (unsigned n = n_lo; n <= n_max; ++n) {
    const auto& len = chain.colength(n + 1);
    out[n] = static_cast<long long>(len.length);
    if (levels) (*levels)[n] = len.stable_at;
  }
  return out;
}

template <CoefficientField F>
Samples hs_function(const QuotientRing<F>& a, const ParameterIdeal<F>& q, unsigned n_max, const SampleOptions& options = {},
                    std::map<unsigned, unsigned>* levels = nullptr) {
  if (n_max < a.dim + 1) fail(ErrorCode::InvalidInput, "n_max must be at least d + 1");
  return hilbert_samuel(a, q.ideal(a.ring), n_max, options, levels);
}

template <CoefficientField F>
HilbertReport hilbert_report(const QuotientRing<F>& a, const Ideal<F>& i, unsigned n_max, const SampleOptions& options = {}) {
  std::map<unsigned, unsigned> levels;
  auto samples = hilbert_samuel(a, i, n_max, options, &levels);
  auto rep = extract_coeffs(samples, a.dim);
  rep.levels = std::move(levels);
  return rep;
}

template <CoefficientField F>
HilbertReport hilbert_report(const QuotientRing<F>& a, const ParameterIdeal<F>& q, unsigned n_max,
                             const SampleOptions& options = {}) {
  return hilbert_report(a, q.ideal(a.ring), n_max, options);
}

inline unsigned default_n_max(unsigned d) { return d + 6; }

/// Least n <= n_cap with a + I^(n+1) = a + Q I^n at the origin.
template <CoefficientField F>
std::optional<unsigned> is_reduction(const QuotientRing<F>& a, const ParameterIdeal<F>& q, const Ideal<F>& i,
                                     unsigned n_cap = 8, const LocalOptions& options = {}) {
  const Ideal<F> qi = q.ideal(a.ring);
  if (!locally_contains(a.defining + i, qi)) fail(ErrorCode::InvalidInput, "Q is not contained in I");
  PowerChain<F> chain(a.defining, i, options);
  for (unsigned n = 0; n <= n_cap; ++n) {
    const auto& big = chain.colength(n + 1);
    const auto small = local_colength(chain.times(qi, n), options, big.stable_at);
    if (small.length == big.length) return n;
  }
  return std::nullopt;
}

/// Seeded coefficients mapped into the field: residues in [0, p) or
/// integers in [-999, 999].
template <CoefficientField F>
typename F::value_type random_coefficient(const F& field, std::mt19937_64& rng) {
  const auto cfg = field.config();
  if (cfg.kind == FieldKind::PrimeField) return field.from_int(static_cast<long long>(rng() % cfg.characteristic));
  return field.from_int(static_cast<long long>(rng() % 1999) - 999);
}

template <CoefficientField F>
struct SamplingResult {
  std::vector<ParameterIdeal<F>> reductions;
  std::vector<unsigned> certificates;
  std::size_t attempts = 0;
  std::vector<std::string> warnings;
};

template <CoefficientField F>
std::vector<std::string> genericity_warnings(const F& field) {
  const auto cfg = field.config();
  if (cfg.kind != FieldKind::PrimeField) return {};
  return {"random choices over the finite field F_" + std::to_string(cfg.characteristic) +
          "; genericity is assumed, not guaranteed"};
}

/// `count` reductions of I generated by dim random linear combinations of
/// the generators of I; up to 10*count candidates are tried.
template <CoefficientField F>
SamplingResult<F> sample_reductions(const QuotientRing<F>& a, const Ideal<F>& i, std::size_t count, std::uint64_t seed,
                                    unsigned n_cap = 8, const SampleOptions& options = {}) {
  if (i.is_zero()) fail(ErrorCode::InvalidInput, "cannot sample reductions of the zero ideal");
  const F& k = a.ring->field();
  std::mt19937_64 rng(seed);
  const std::size_t budget = 10 * count;
  std::vector<std::vector<Polynomial<F>>> candidates;
  for (std::size_t c = 0; c < budget; ++c) {
    std::vector<Polynomial<F>> lifts;
    for (unsigned r = 0; r < a.dim; ++r) {
      Polynomial<F> sum(a.ring);
      for (const auto& g : i.generators()) sum += g.scaled(random_coefficient(k, rng));
      lifts.push_back(std::move(sum));
    }
    candidates.push_back(std::move(lifts));
  }
  SamplingResult<F> out;
  out.warnings = genericity_warnings(k);
  auto check = [&](std::size_t c) -> std::optional<unsigned> {
    for (const auto& l : candidates[c]) {
      if (l.is_zero()) return std::nullopt;
    }
    try {
      ParameterIdeal<F> q{candidates[c], {}};
      return is_reduction(a, q, i, n_cap, options.local);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotLocallyFinite) return std::nullopt;
      throw;
    }
  };
  std::size_t next = 0;
  while (out.reductions.size() < count && next < budget) {
    const std::size_t batch = std::min(budget - next, count - out.reductions.size());
    auto verdicts = parallel_map(batch, options.threads, [&](std::size_t b) { return check(next + b); });
    for (std::size_t b = 0; b < batch; ++b) {
      ++out.attempts;
      if (!verdicts[b] || out.reductions.size() >= count) continue;
      out.reductions.push_back({candidates[next + b], "sample " + std::to_string(out.reductions.size() + 1)});
      out.certificates.push_back(*verdicts[b]);
    }
    next += batch;
  }
  if (out.reductions.size() < count) {
    fail(ErrorCode::SamplingExhausted, "found " + std::to_string(out.reductions.size()) + " of " + std::to_string(count) +
                                           " reductions in " + std::to_string(budget) + " attempts");
  }
  if (out.attempts > count) {
    out.warnings.push_back(std::to_string(out.attempts - count) + " sampled candidates were rejected");
  }
  return out;
}

template <CoefficientField F>
struct LambdaEntry {
  ParameterIdeal<F> q;
  HilbertReport report;
};

template <CoefficientField F>
struct LambdaResult {
  std::vector<LambdaEntry<F>> entries;
  std::set<long long> e1_values;
  std::vector<std::string> warnings;
};

/// Empirical subset of the e1 values over reductions of I: named ideals
/// first, then `count` sampled ones.
template <CoefficientField F>
LambdaResult<F> lambda_map(const QuotientRing<F>& a, const Ideal<F>& i, std::size_t count, std::uint64_t seed, unsigned n_max,
                           const std::vector<ParameterIdeal<F>>& named = {}, const SampleOptions& options = {}) {
  LambdaResult<F> out;
  std::vector<ParameterIdeal<F>> all = named;
  if (count > 0) {
    auto sampled = sample_reductions(a, i, count, seed, 8, options);
    out.warnings = sampled.warnings;
    all.insert(all.end(), sampled.reductions.begin(), sampled.reductions.end());
  }
  SampleOptions inner = options;
  inner.threads = 1;
  auto reports = parallel_map(all.size(), options.threads, [&](std::size_t k) { return hilbert_report(a, all[k], n_max, inner); });
  for (std::size_t k = 0; k < all.size(); ++k) {
    out.e1_values.insert(reports[k].e(1));
    out.entries.push_back({all[k], std::move(reports[k])});
  }
  return out;
}

/// Hilbert function of the maximal ideal of k + J inside B:
/// H(n) = ℓ_B(B/J^(n+1)) - (ℓ_B(B/J) - 1) for n >= 1 and H(0) = 1.
template <CoefficientField F>
HilbertReport k_plus_J_hilbert(const QuotientRing<F>& b, const Ideal<F>& j, unsigned n_max, const SampleOptions& options = {}) {
  const auto base = local_colength(b.defining + j, options.local);
  const long long offset = static_cast<long long>(base.length) - 1;
  std::map<unsigned, unsigned> levels;
  auto tail = hilbert_samuel(b, j, n_max, options, &levels, 1);
  for (auto& [n, h] : tail) h -= offset;
  auto rep = extract_coeffs(tail, b.dim);
  rep.samples[0] = 1;
  rep.levels = std::move(levels);
  rep.levels[0] = base.stable_at;
  rep.window_lo = std::max(rep.window_lo, 1u);
  if (hilbert_polynomial_value(rep.coeffs, 0) == 1) rep.polynomial_from = std::min(rep.polynomial_from, 0u);
  return rep;
}

/// ℓ_A(A/Q^(n+1)) for A = k + J and Q = qA with q ⊆ J:
/// Q^(n+1) = q^(n+1)J + span_k{products of n+1 lifts}, so
/// H(n) = ℓ_B(B/q^(n+1)J) - (ℓ_B(B/J) - 1) - dim of that span modulo q^(n+1)J.
template <CoefficientField F>
HilbertReport k_plus_J_parameter_hilbert(const QuotientRing<F>& b, const Ideal<F>& j, const ParameterIdeal<F>& q, unsigned n_max,
                                         const SampleOptions& options = {}) {
  const auto base = local_colength(b.defining + j, options.local);
  const long long offset = static_cast<long long>(base.length) - 1;
  const Ideal<F> qi = q.ideal(b.ring);
  const F& k = b.ring->field();
  auto one = [&](std::size_t n) -> std::pair<long long, unsigned> {
    const Ideal<F> power = qi.power(static_cast<unsigned>(n + 1));
    const Ideal<F> sub = b.defining + power * j;
    const auto len = local_colength(sub, options.local);
    const auto& basis = truncated_basis(sub, len.stable_at + 1, options.local.groebner);
    std::map<std::vector<unsigned>, std::size_t> column;
    std::vector<std::vector<Term<F>>> rows;
    for (const auto& g : power.generators()) {
      auto nf = basis.normal_form(g);
      std::vector<Term<F>> row(nf.terms().begin(), nf.terms().end());
      for (const auto& t : row) {
        std::vector<unsigned> key;
        for (std::size_t v = 0; v < b.ring->nvars(); ++v) key.push_back(t.monomial[v]);
        column.emplace(key, column.size());
      }
      rows.push_back(std::move(row));
    }
    Matrix<F> m(k, rows.size(), column.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (const auto& t : rows[r]) {
        std::vector<unsigned> key;
        for (std::size_t v = 0; v < b.ring->nvars(); ++v) key.push_back(t.monomial[v]);
        m(r, column.at(key)) = t.coeff;
      }
    }
    return {static_cast<long long>(len.length) - offset - static_cast<long long>(rank(m)), len.stable_at};
  };
  auto vals = parallel_map(n_max + 1, options.threads, one);
  Samples samples;
  std::map<unsigned, unsigned> levels;
  for (unsigned n = 0; n <= n_max; ++n) {
    samples[n] = vals[n].first;
    levels[n] = vals[n].second;
  }
  auto rep = extract_coeffs(samples, b.dim);
  rep.levels = std::move(levels);
  return rep;
}

}  // namespace samuel
