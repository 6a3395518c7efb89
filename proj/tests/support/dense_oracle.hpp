#pragma once

// Textbook dense Gauss-Jordan over Z/p. Deliberately shares nothing with the
// library's elimination (own modular inverse, own pivot search, own storage)
// so it can serve as an independent reference.

#include <cstdint>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<std::int64_t>>;

inline std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline std::int64_t inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return mod(t, p);
}

/// Reduces `m` in place to reduced row echelon form and returns the rank.
inline std::size_t gauss_jordan(Matrix& m, std::int64_t p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (mod(m[i][c], p) != 0) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    const std::int64_t inv = inverse(m[r][c], p);
    for (auto& x : m[r]) x = mod(x * inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::int64_t factor = mod(m[i][c], p);
      if (factor == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = mod(m[i][k] - factor * m[r][k], p);
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(Matrix m, std::int64_t p) { return gauss_jordan(m, p); }

}  // namespace oracle
