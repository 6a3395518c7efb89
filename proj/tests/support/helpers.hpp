#pragma once

#include <vector>

#include "syzlab/prime_field.hpp"
#include "syzlab/random.hpp"
#include "syzlab/sparse_matrix.hpp"
#include "support/dense_oracle.hpp"

namespace testing {

/// Random matrix with roughly `density` of its entries nonzero.
inline syzlab::SparseMatrix random_matrix(std::size_t rows, std::size_t cols, double density,
                                          const syzlab::PrimeField& f, syzlab::Rng& rng) {
  std::vector<std::vector<syzlab::Residue>> d(rows, std::vector<syzlab::Residue>(cols, 0));
  const auto threshold = static_cast<std::uint64_t>(density * 1'000'000);
  for (auto& row : d) {
    for (auto& x : row) {
      if (rng.below(1'000'000) < threshold) x = rng.nonzero_residue(f);
    }
  }
  return syzlab::SparseMatrix::from_dense(cols, d);
}

/// Matrix of prescribed rank r: product of random rows x r and r x cols factors.
inline syzlab::SparseMatrix random_rank_matrix(std::size_t rows, std::size_t cols, std::size_t r,
                                               const syzlab::PrimeField& f, syzlab::Rng& rng) {
  std::vector<std::vector<syzlab::Residue>> a(rows, std::vector<syzlab::Residue>(r));
  std::vector<std::vector<syzlab::Residue>> b(r, std::vector<syzlab::Residue>(cols));
  for (auto& row : a) for (auto& x : row) x = rng.residue(f);
  for (auto& row : b) for (auto& x : row) x = rng.residue(f);
  std::vector<std::vector<syzlab::Residue>> out(rows, std::vector<syzlab::Residue>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < cols; ++j)
        out[i][j] = f.add(out[i][j], f.mul(a[i][k], b[k][j]));
  return syzlab::SparseMatrix::from_dense(cols, out);
}

inline oracle::Matrix to_oracle(const syzlab::SparseMatrix& m) {
  oracle::Matrix out(m.rows(), std::vector<std::int64_t>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r)) out[r][e.col] = e.value;
  return out;
}

}  // namespace testing
