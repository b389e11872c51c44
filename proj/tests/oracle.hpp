#pragma once

// Brute-force reference computations over F_32003. Nothing here calls the
// library's Groebner or linear algebra code; polynomials are plain maps from
// exponent vectors to residues.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "samuel/samuel.hpp"

namespace oracle {

constexpr std::uint64_t P = 32003;

using Exps = std::vector<unsigned>;
using Poly = std::map<Exps, std::uint64_t>;

inline std::uint64_t reduce(long long v) {
  const long long r = v % static_cast<long long>(P);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(P) : r);
}

inline std::uint64_t inv(std::uint64_t a) {
  std::uint64_t r = 1, e = P - 2;
  while (e) {
    if (e & 1) r = r * a % P;
    a = a * a % P;
    e >>= 1;
  }
  return r;
}

inline Poly from(const samuel::Polynomial<samuel::PrimeField>& f) {
  const std::size_t n = f.ring()->nvars();
  Poly out;
  for (const auto& t : f.terms()) {
    Exps e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = t.monomial[i];
    out[e] = t.coeff;
  }
  return out;
}

inline std::vector<Poly> from(const std::vector<samuel::Polynomial<samuel::PrimeField>>& fs) {
  std::vector<Poly> out;
  for (const auto& f : fs) out.push_back(from(f));
  return out;
}

inline Poly mul(const Poly& f, const Poly& g) {
  Poly out;
  for (const auto& [a, x] : f) {
    for (const auto& [b, y] : g) {
      Exps e(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
      auto& c = out[e];
      c = (c + x * y) % P;
      if (c == 0) out.erase(e);
    }
  }
  return out;
}

/// Every product of k generators (with repetition).
inline std::vector<Poly> power(const std::vector<Poly>& gens, unsigned k, std::size_t nvars) {
  std::vector<Poly> cur = {Poly{{Exps(nvars, 0), 1}}};
  for (unsigned step = 0; step < k; ++step) {
    std::set<Poly> next;
    for (const auto& p : cur) {
      for (const auto& g : gens) next.insert(mul(p, g));
    }
    cur.assign(next.begin(), next.end());
  }
  return cur;
}

inline unsigned degree(const Exps& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

/// All exponent vectors of total degree < n.
inline std::vector<Exps> monomials_below(std::size_t nvars, unsigned n) {
  std::vector<Exps> out;
  Exps e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == nvars) {
      out.push_back(e);
      return;
    }
    for (unsigned x = 0; x <= left; ++x) {
      e[i] = x;
      self(self, i + 1, left - x);
    }
    e[i] = 0;
  };
  if (n > 0) rec(rec, 0, n - 1);
  return out;
}

/// dim_k k[x]/(J + m^n): monomials of degree < n minus the rank of all
/// monomial multiples of the generators, truncated at degree n.
inline std::size_t truncated_dimension(const std::vector<Poly>& gens, std::size_t nvars, unsigned n) {
  const auto monos = monomials_below(nvars, n);
  std::map<Exps, std::size_t> col;
  for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;
  const std::size_t ncols = monos.size();
  std::vector<std::vector<std::uint64_t>> pivots(ncols);
  std::size_t rank = 0;
  std::vector<std::uint64_t> row(ncols);
  for (const auto& g : gens) {
    unsigned low = ~0u;
    for (const auto& [e, c] : g) low = std::min(low, degree(e));
    for (const auto& m : monos) {
      if (rank == ncols) return 0;
      if (degree(m) + low >= n) continue;
      std::fill(row.begin(), row.end(), 0);
      for (const auto& [e, c] : g) {
        Exps s(nvars);
        for (std::size_t i = 0; i < nvars; ++i) s[i] = e[i] + m[i];
        if (degree(s) < n) row[col.at(s)] = c;
      }
      for (std::size_t c = 0; c < ncols; ++c) {
        if (row[c] == 0) continue;
        if (pivots[c].empty()) {
          const std::uint64_t s = inv(row[c]);
          for (auto& x : row) x = x * s % P;
          pivots[c] = row;
          ++rank;
          break;
        }
        const std::uint64_t f = row[c];
        const auto& pr = pivots[c];
        for (std::size_t j = c; j < ncols; ++j) {
          if (pr[j]) row[j] = (row[j] + (P - f) * pr[j]) % P;
        }
      }
    }
  }
  return ncols - rank;
}

/// Length of k[x]_m / J, or nullopt when D(N) has not settled by n_max.
inline std::optional<std::size_t> local_colength(const std::vector<Poly>& gens, std::size_t nvars, unsigned n_max = 16) {
  std::size_t prev = truncated_dimension(gens, nvars, 1);
  for (unsigned n = 2; n <= n_max; ++n) {
    const std::size_t cur = truncated_dimension(gens, nvars, n);
    if (cur == prev) return cur;
    prev = cur;
  }
  return std::nullopt;
}

/// n -> length of R/(a + I^(n+1)) at the origin.
inline std::optional<std::size_t> hilbert_function(const std::vector<Poly>& defining, const std::vector<Poly>& i, std::size_t nvars,
                                                   unsigned n, unsigned n_max = 16) {
  auto gens = defining;
  for (auto& p : power(i, n + 1, nvars)) gens.push_back(std::move(p));
  return local_colength(gens, nvars, n_max);
}

/// Rank of an integer matrix mod P.
inline std::size_t rank(std::vector<std::vector<std::uint64_t>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const std::uint64_t s = inv(m[r][c]);
    for (auto& x : m[r]) x = x * s % P;
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const std::uint64_t f = m[i][c];
      if (!f) continue;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + (P - f) * m[r][j]) % P;
    }
    ++r;
  }
  return r;
}

/// dim T_n for C = k[X,Y]/(X^l, Y^l) with a = x, b = y, built on the
/// monomial basis x^i y^j directly.
inline std::size_t biquadratic_tn(unsigned l, unsigned n) {
  const std::size_t c = l * l;
  auto idx = [&](unsigned i, unsigned j) { return i * l + j; };
  // Rows: equations (i = 0..n+1) x basis coordinate; columns: (alpha_k, basis).
  std::vector<std::vector<std::uint64_t>> m((n + 2) * c, std::vector<std::uint64_t>((n + 1) * c, 0));
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned i = 0; i < l; ++i) {
      for (unsigned j = 0; j < l; ++j) {
        const std::size_t from = k * c + idx(i, j);
        if (i + 1 < l) m[k * c + idx(i + 1, j)][from] = 1;        // x alpha_k in equation k
        if (j + 1 < l) m[(k + 1) * c + idx(i, j + 1)][from] = 1;  // y alpha_k in equation k+1
      }
    }
  }
  return (n + 1) * c - rank(std::move(m));
}

}  // namespace oracle
