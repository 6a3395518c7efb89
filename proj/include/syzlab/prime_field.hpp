#pragma once

#include <cstdint>

namespace syzlab {

/// Residue class modulo the session prime, always kept in [0, p).
using Residue = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 1000003;

bool is_prime(std::uint64_t n);

/// Arithmetic in GF(p) for an odd prime p < 2^31. Elements are plain
/// residues; the field object only carries the modulus.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t prime() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// a - c*b, the elimination kernel.
  Residue sub_mul(Residue a, Residue c, Residue b) const noexcept {
    return sub(a, mul(c, b));
  }
  Residue pow(Residue a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse; `a` must be nonzero.
  Residue inv(Residue a) const;

  /// Square root if `a` is a square, else returns false (Tonelli-Shanks).
  bool sqrt(Residue a, Residue& root) const;
  bool is_square(Residue a) const noexcept;

  /// Signed representative in (-p/2, p/2], for printing.
  std::int64_t centered(Residue a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace syzlab
