#pragma once

// Exact coefficient fields. The heavy machinery is templated on a field
// policy (PrimeField or RationalField); FieldElement is the runtime value
// type used at API boundaries where the field is only known at run time.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "samuel/errors.hpp"

namespace samuel {

enum class FieldKind { Rationals, PrimeField };

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct FieldConfig {
  FieldKind kind = FieldKind::PrimeField;
  std::uint32_t characteristic = 32003;

  static FieldConfig rationals() { return {FieldKind::Rationals, 0}; }

  static FieldConfig prime(std::uint64_t p) {
    if (p <= 2 || p >= (1ULL << 31) || !is_prime(p)) {
      fail(ErrorCode::InvalidInput, "field characteristic must be a prime with 2 < p < 2^31, got " +
                                        std::to_string(p));
    }
    return {FieldKind::PrimeField, static_cast<std::uint32_t>(p)};
  }

  /// Accepts "qq" or "fp:P".
  static FieldConfig parse(const std::string& text) {
    if (text == "qq" || text == "QQ") return rationals();
    if (text.rfind("fp:", 0) == 0) {
      const std::string digits = text.substr(3);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 12) {
        fail(ErrorCode::InvalidInput, "bad field characteristic '" + digits + "'");
      }
      return prime(std::stoull(digits));
    }
    fail(ErrorCode::InvalidInput, "unknown field '" + text + "' (expected qq or fp:P)");
  }

  std::string to_string() const {
    return kind == FieldKind::Rationals ? "qq" : "fp:" + std::to_string(characteristic);
  }

  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;
};

/// Z/pZ with residues stored in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p = 32003) : p_(FieldConfig::prime(p).characteristic) {}

  FieldConfig config() const { return {FieldKind::PrimeField, p_}; }
  std::uint32_t characteristic() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }
  /// Maps a rational a/b into the field; b must be invertible.
  value_type from_rational(const mpq_class& q) const {
    mpz_class n = q.get_num() % p_;
    mpz_class d = q.get_den() % p_;
    if (n < 0) n += p_;
    return div(static_cast<value_type>(n.get_ui()), static_cast<value_type>(d.get_ui()));
  }

  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type inv(value_type a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in " + config().to_string());
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p_;
    return static_cast<value_type>(t);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  /// Symmetric representative in (-p/2, p/2].
  long long to_signed(value_type a) const {
    return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
  }
  std::string to_string(value_type a) const { return std::to_string(to_signed(a)); }

  /// Integer value if the residue is "small", used to report integer results.
  std::optional<long long> to_integer(value_type a) const { return to_signed(a); }

  friend bool operator==(const PrimeField& x, const PrimeField& y) { return x.p_ == y.p_; }

 private:
  std::uint32_t p_;
};

/// The rational numbers, arbitrary precision, always canonical.
class RationalField {
 public:
  using value_type = mpq_class;

  FieldConfig config() const { return FieldConfig::rationals(); }
  std::uint32_t characteristic() const { return 0; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
  value_type from_rational(const mpq_class& q) const { return q; }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in qq");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const {
    if (sgn(b) == 0) fail(ErrorCode::DivisionByZero, "division by zero in qq");
    return a / b;
  }

  std::string to_string(const value_type& a) const { return a.get_str(); }
  std::optional<long long> to_integer(const value_type& a) const {
    if (a.get_den() != 1 || !a.get_num().fits_slong_p()) return std::nullopt;
    return a.get_num().get_si();
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class F>
concept CoefficientField = requires(const F f, const typename F::value_type a, long long i) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.from_int(i) } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.neg(a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.config() } -> std::same_as<FieldConfig>;
  { f.to_string(a) } -> std::same_as<std::string>;
};

/// Calls fn(field) with the policy object matching cfg.
template <class Fn>
decltype(auto) with_field(const FieldConfig& cfg, Fn&& fn) {
  if (cfg.kind == FieldKind::Rationals) return std::forward<Fn>(fn)(RationalField{});
  return std::forward<Fn>(fn)(PrimeField{cfg.characteristic});
}

enum class FieldOp { Add, Sub, Mul, Div, Inv, Neg };

/// A scalar tagged with its field. Rationals are kept in lowest terms with a
/// positive denominator, residues in [0, p).
class FieldElement {
 public:
  FieldElement() = default;

  static FieldElement from_int(const FieldConfig& cfg, long long v) {
    FieldElement e;
    e.config_ = cfg;
    if (cfg.kind == FieldKind::Rationals) {
      e.rational_ = RationalField{}.from_int(v);
    } else {
      e.residue_ = PrimeField{cfg.characteristic}.from_int(v);
    }
    return e;
  }

  static FieldElement from_rational(const FieldConfig& cfg, long long num, long long den) {
    if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator");
    mpq_class q(RationalField{}.from_int(num) / RationalField{}.from_int(den));
    FieldElement e;
    e.config_ = cfg;
    if (cfg.kind == FieldKind::Rationals) {
      e.rational_ = q;
    } else {
      e.residue_ = PrimeField{cfg.characteristic}.from_rational(q);
    }
    return e;
  }

  const FieldConfig& config() const { return config_; }
  std::uint32_t residue() const { return residue_; }
  const mpq_class& rational() const { return rational_; }

  bool is_zero() const {
    return config_.kind == FieldKind::Rationals ? sgn(rational_) == 0 : residue_ == 0;
  }

  std::string to_string() const {
    return config_.kind == FieldKind::Rationals ? rational_.get_str() : std::to_string(residue_);
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!(a.config_ == b.config_)) return false;
    return a.config_.kind == FieldKind::Rationals ? a.rational_ == b.rational_ : a.residue_ == b.residue_;
  }

  friend FieldElement field_arith(FieldOp op, const FieldElement& x, const std::optional<FieldElement>& y);

 private:
  FieldConfig config_ = FieldConfig::rationals();
  std::uint32_t residue_ = 0;
  mpq_class rational_ = 0;
};

inline FieldElement field_arith(FieldOp op, const FieldElement& x, const std::optional<FieldElement>& y = std::nullopt) {
  const bool binary = op == FieldOp::Add || op == FieldOp::Sub || op == FieldOp::Mul || op == FieldOp::Div;
  if (binary && !y) fail(ErrorCode::InvalidInput, "binary field operation needs two operands");
  if (y && !(y->config_ == x.config_)) {
    fail(ErrorCode::MixedFields, x.config_.to_string() + " vs " + y->config_.to_string());
  }
  FieldElement out;
  out.config_ = x.config_;
  auto apply = [&](const auto& field, const auto& a, const auto& b) {
    switch (op) {
      case FieldOp::Add: return field.add(a, b);
      case FieldOp::Sub: return field.sub(a, b);
      case FieldOp::Mul: return field.mul(a, b);
      case FieldOp::Div: return field.div(a, b);
      case FieldOp::Inv: return field.inv(a);
      case FieldOp::Neg: return field.neg(a);
    }
    return field.zero();
  };
  if (x.config_.kind == FieldKind::Rationals) {
    out.rational_ = apply(RationalField{}, x.rational_, y ? y->rational_ : mpq_class(0));
  } else {
    out.residue_ = apply(PrimeField{x.config_.characteristic}, x.residue_, y ? y->residue_ : 0u);
  }
  return out;
}

}  // namespace samuel
