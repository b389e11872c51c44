#pragma once

// Exponent vectors and monomial orders.
//
// A Monomial stores up to kMonomialSlots exponents of at most kMaxExponent
// each, packed one per byte so that divisibility and products are word-wise
// operations. User rings may have kMaxVariables variables; the spare slots
// host auxiliary variables introduced by elimination.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "samuel/errors.hpp"

namespace samuel {

static_assert(std::endian::native == std::endian::little, "monomial slots assume little-endian words");

inline constexpr std::size_t kMaxVariables = 16;
inline constexpr std::size_t kMonomialSlots = 24;
inline constexpr unsigned kMaxExponent = 127;

class Monomial {
 public:
  Monomial() = default;

  static Monomial from_exponents(const std::vector<unsigned>& exps) {
    if (exps.size() > kMonomialSlots) fail(ErrorCode::InvalidInput, "too many exponents");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
    return m;
  }

  static Monomial variable(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  unsigned operator[](std::size_t i) const { return bytes()[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, unsigned e) {
    if (i >= kMonomialSlots) fail(ErrorCode::InvalidInput, "variable index out of range");
    if (e > kMaxExponent) {
      fail(ErrorCode::ResourceLimit, "exponent " + std::to_string(e) + " exceeds " + std::to_string(kMaxExponent));
    }
    auto* b = bytes_mut();
    degree_ = degree_ - b[i] + e;
    b[i] = static_cast<std::uint8_t>(e);
  }

  /// True when this divides other.
  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t w = 0; w < kWords; ++w) {
      if ((((other.words_[w] | kHigh) - words_[w]) & kHigh) != kHigh) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    std::uint64_t overflow = 0;
    for (std::size_t w = 0; w < kWords; ++w) {
      m.words_[w] = a.words_[w] + b.words_[w];
      overflow |= m.words_[w];
    }
    if (overflow & kHigh) fail(ErrorCode::ResourceLimit, "monomial exponent overflow");
    m.degree_ = a.degree_ + b.degree_;
    return m;
  }

  /// a / b; caller guarantees b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t w = 0; w < kWords; ++w) m.words_[w] = a.words_[w] - b.words_[w];
    m.degree_ = a.degree_ - b.degree_;
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    auto* out = m.bytes_mut();
    const auto* x = a.bytes();
    const auto* y = b.bytes();
    unsigned deg = 0;
    for (std::size_t i = 0; i < kMonomialSlots; ++i) {
      out[i] = x[i] > y[i] ? x[i] : y[i];
      deg += out[i];
    }
    m.degree_ = deg;
    return m;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    const auto* x = a.bytes();
    const auto* y = b.bytes();
    for (std::size_t i = 0; i < kMonomialSlots; ++i) {
      if (x[i] && y[i]) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.words_ == b.words_; }

  /// Packed slots 8w..8w+7, slot 8w in the low byte.
  std::uint64_t word(std::size_t w) const { return words_[w]; }

  /// Bit i set when variable i (mod 32) occurs; a cheap divisibility prefilter.
  std::uint32_t support_mask() const {
    std::uint32_t mask = 0;
    const auto* b = bytes();
    for (std::size_t i = 0; i < kMonomialSlots; ++i) {
      if (b[i]) mask |= 1u << (i % 32);
    }
    return mask;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (auto w : words_) h = (h ^ w) * 0xBF58476D1CE4E5B9ULL, h ^= h >> 31;
    return static_cast<std::size_t>(h);
  }

  /// Shifts every exponent `by` slots to the right (slot i moves to i + by).
  Monomial shifted(std::size_t by) const {
    Monomial m;
    for (std::size_t i = 0; i + by < kMonomialSlots; ++i) {
      if ((*this)[i]) m.set(i + by, (*this)[i]);
    }
    for (std::size_t i = kMonomialSlots - by; i < kMonomialSlots; ++i) {
      if ((*this)[i]) fail(ErrorCode::ResourceLimit, "no room to shift monomial");
    }
    return m;
  }

 private:
  static constexpr std::size_t kWords = kMonomialSlots / 8;
  static constexpr std::uint64_t kHigh = 0x8080808080808080ULL;

  const std::uint8_t* bytes() const { return reinterpret_cast<const std::uint8_t*>(words_.data()); }
  std::uint8_t* bytes_mut() { return reinterpret_cast<std::uint8_t*>(words_.data()); }

  std::array<std::uint64_t, kWords> words_{};
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind {
  Lex,
  DegRevLex,
  /// Block order: the first `block` variables by DegRevLex, ties broken by
  /// DegRevLex on the rest. Eliminates the first block.
  Elimination,
  /// Lowest total degree first, ties by reverse lexicographic comparison.
  /// Not a well-order; used only modulo a power of the maximal ideal.
  LocalDegRevLex,
};

class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::size_t nvars, std::size_t block = 0) : kind_(kind), nvars_(nvars), block_(block) {
    if (nvars > kMonomialSlots) fail(ErrorCode::InvalidInput, "too many variables for a monomial order");
    if (kind == OrderKind::Elimination && (block < 1 || block >= nvars)) {
      fail(ErrorCode::InvalidInput, "elimination block must satisfy 1 <= b < #variables");
    }
  }

  static MonomialOrder lex(std::size_t n) { return {OrderKind::Lex, n}; }
  static MonomialOrder degrevlex(std::size_t n) { return {OrderKind::DegRevLex, n}; }
  static MonomialOrder elimination(std::size_t n, std::size_t b) { return {OrderKind::Elimination, n, b}; }
  static MonomialOrder local(std::size_t n) { return {OrderKind::LocalDegRevLex, n}; }

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t block() const { return block_; }
  bool is_global() const { return kind_ != OrderKind::LocalDegRevLex; }

  /// Three-way comparison: positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::Lex:
        for (std::size_t i = 0; i < nvars_; ++i) {
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
      case OrderKind::DegRevLex:
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        return revlex(a, b, 0, nvars_);
      case OrderKind::LocalDegRevLex:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
        return revlex(a, b, 0, nvars_);
      case OrderKind::Elimination: {
        unsigned da = 0, db = 0;
        for (std::size_t i = 0; i < block_; ++i) da += a[i], db += b[i];
        if (da != db) return da > db ? 1 : -1;
        if (int c = revlex(a, b, 0, block_)) return c;
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        return revlex(a, b, block_, nvars_);
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string to_string() const {
    switch (kind_) {
      case OrderKind::Lex: return "lex";
      case OrderKind::DegRevLex: return "degrevlex";
      case OrderKind::LocalDegRevLex: return "local-degrevlex";
      case OrderKind::Elimination: return "elim:" + std::to_string(block_);
    }
    return "?";
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  /// Last differing slot in [lo, hi), found a word at a time.
  static int revlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    if (hi <= lo) return 0;
    for (std::size_t w = (hi - 1) / 8 + 1; w-- > lo / 8;) {
      std::uint64_t x = a.word(w) ^ b.word(w);
      const std::size_t first = w * 8;
      if (hi < first + 8) x &= (std::uint64_t{1} << (8 * (hi - first))) - 1;
      if (lo > first) x &= ~std::uint64_t{0} << (8 * (lo - first));
      if (x) {
        const std::size_t i = first + static_cast<std::size_t>(63 - std::countl_zero(x)) / 8;
        return a[i] < b[i] ? 1 : -1;
      }
    }
    return 0;
  }

  OrderKind kind_ = OrderKind::DegRevLex;
  std::size_t nvars_ = 0;
  std::size_t block_ = 0;
};

/// Parses "lex", "degrevlex", or "elim:B".
inline MonomialOrder parse_order(const std::string& text, std::size_t nvars) {
  if (text == "lex") return MonomialOrder::lex(nvars);
  if (text == "degrevlex" || text == "grevlex") return MonomialOrder::degrevlex(nvars);
  if (text.rfind("elim:", 0) == 0) {
    const std::string digits = text.substr(5);
    if (digits.empty() || digits.size() > 3 || digits.find_first_not_of("0123456789") != std::string::npos) {
      fail(ErrorCode::InvalidInput, "bad elimination block '" + digits + "'");
    }
    return MonomialOrder::elimination(nvars, std::stoul(digits));
  }
  fail(ErrorCode::InvalidInput, "unknown monomial order '" + text + "'");
}

}  // namespace samuel
