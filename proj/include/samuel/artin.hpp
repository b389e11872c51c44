#pragma once

// Finite-dimensional local algebras C = R/c presented by an ideal that is
// m-primary at the origin.

#include <unordered_map>
#include <vector>

#include "samuel/local.hpp"
#include "samuel/matrix.hpp"

namespace samuel {

template <CoefficientField F>
class ArtinAlgebra {
 public:
  static ArtinAlgebra make(const Ideal<F>& c, const LocalOptions& options = {}) {
    ArtinAlgebra a;
    a.ring_ = c.ring();
    a.ideal_ = c;
    const auto len = local_colength(c, options);
    a.level_ = len.stable_at + 1;
    a.basis_gb_ = truncated_basis(c, a.level_, options.groebner);
    a.enumerate_basis();
    if (a.basis_.size() != len.length) fail(ErrorCode::InvalidInput, "standard monomial count disagrees with the colength");
    for (std::size_t v = 0; v < a.ring_->nvars(); ++v) a.mult_.push_back(a.action(Polynomial<F>::variable(a.ring_, v)));
    return a;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const Ideal<F>& ideal() const { return ideal_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  /// Multiplication by variable v.
  const Matrix<F>& mult(std::size_t v) const { return mult_.at(v); }
  const std::vector<Matrix<F>>& mult_ops() const { return mult_; }
  unsigned level() const { return level_; }

  /// Coordinates of the class of f in the monomial basis.
  std::vector<typename F::value_type> coordinates(const Polynomial<F>& f) const {
    const F& k = ring_->field();
    std::vector<typename F::value_type> out(dim(), k.zero());
    const auto nf = basis_gb_.normal_form(f);
    for (const auto& t : nf.terms()) out[index_.at(t.monomial)] = t.coeff;
    return out;
  }

  Polynomial<F> basis_element(std::size_t i) const {
    return Polynomial<F>::monomial(ring_, basis_.at(i), ring_->field().one());
  }

  /// Matrix of multiplication by f; column j holds f * basis[j].
  Matrix<F> action(const Polynomial<F>& f) const {
    Matrix<F> m(ring_->field(), dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      const auto col = coordinates(f * basis_element(j));
      for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
    }
    return m;
  }

  std::string basis_string() const {
    std::string out;
    Polynomial<F> helper(ring_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (i) out += ", ";
      const auto s = helper.monomial_string(basis_[i]);
      out += s.empty() ? "1" : s;
    }
    return out;
  }

 private:
  void enumerate_basis() {
    const auto& stairs = basis_gb_.staircase();
    const std::size_t n = ring_->nvars();
    Monomial m;
    auto divisible = [&](const Monomial& x) {
      for (const auto& s : stairs) {
        if (s.divides(x)) return true;
      }
      return false;
    };
    auto rec = [&](auto& self, std::size_t i, unsigned deg) -> void {
      if (i == n) {
        basis_.push_back(m);
        return;
      }
      for (unsigned e = 0; deg + e < level_; ++e) {
        m.set(i, e);
        if (e > 0 && divisible(m)) break;
        self(self, i + 1, deg + e);
      }
      m.set(i, 0);
    };
    if (!divisible(m)) rec(rec, 0, 0);
    const MonomialOrder ord = MonomialOrder::local(n);
    std::sort(basis_.begin(), basis_.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  }

  RingPtr<F> ring_;
  Ideal<F> ideal_;
  unsigned level_ = 0;
  GroebnerBasis<F> basis_gb_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<Matrix<F>> mult_;
};

}  // namespace samuel
