#include "syzlab/prime_field.hpp"

#include <string>

#include "syzlab/errors.hpp"

namespace syzlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  }
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1;
  Residue base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) throw Error(ErrorCode::kInvalidArgument, "inverse of zero");
  return pow(a, p_ - 2);
}

bool PrimeField::is_square(Residue a) const noexcept {
  return a == 0 || pow(a, (p_ - 1) / 2) == 1;
}

bool PrimeField::sqrt(Residue a, Residue& root) const {
  if (a == 0) {
    root = 0;
    return true;
  }
  if (!is_square(a)) return false;
  if (p_ % 4 == 3) {
    root = pow(a, (p_ + 1) / 4);
    return true;
  }
  // Tonelli-Shanks for p = 1 mod 4.
  std::uint32_t q = p_ - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Residue z = 2;
  while (is_square(z)) ++z;
  Residue c = pow(z, q);
  Residue x = pow(a, (q + 1) / 2);
  Residue t = pow(a, q);
  int m = s;
  while (t != 1) {
    int i = 0;
    Residue t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2);
      ++i;
    }
    Residue b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mul(b, b);
    x = mul(x, b);
    c = mul(b, b);
    t = mul(t, c);
    m = i;
  }
  root = x;
  return true;
}

}  // namespace syzlab
