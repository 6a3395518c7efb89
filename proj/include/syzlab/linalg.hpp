#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "syzlab/prime_field.hpp"
#include "syzlab/sparse_matrix.hpp"

namespace syzlab {

class Subspace;

struct RrefResult {
  std::size_t rank = 0;
  /// Same shape as the input; the nonzero rows come first, zero rows after.
  SparseMatrix reduced;
  std::vector<std::uint32_t> pivot_cols;
};

// Elimination sweeps columns left to right and takes the lowest-index
// unpivoted row as pivot. Rows are sparse until their fill passes a quarter
// of the row length, then switch to dense storage.

RrefResult rref(const SparseMatrix& m, const PrimeField& field);

/// Forward elimination only; same pivot rule as rref.
std::size_t rank(const SparseMatrix& m, const PrimeField& field);

/// Right kernel {v : m v^T = 0} as a canonical subspace of GF(p)^cols.
Subspace kernel_basis(const SparseMatrix& m, const PrimeField& field);

/// Left kernel {c : c m = 0} as a subspace of GF(p)^rows.
Subspace left_kernel(const SparseMatrix& m, const PrimeField& field);

/// m v^T for a dense vector v.
std::vector<Residue> apply(const SparseMatrix& m, std::span<const Residue> v,
                           const PrimeField& field);

}  // namespace syzlab
