#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "syzlab/prime_field.hpp"
#include "syzlab/sparse_matrix.hpp"

namespace syzlab {

/// A linear subspace of GF(p)^n held by its reduced row echelon basis.
/// The basis is canonical, so two subspaces are equal exactly when their
/// basis matrices are identical.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace.
  explicit Subspace(std::size_t ambient_dim);

  /// Row span of `generators`.
  static Subspace span(const SparseMatrix& generators, const PrimeField& field);
  static Subspace span(std::size_t ambient_dim,
                       const std::vector<std::vector<Residue>>& generators,
                       const PrimeField& field);
  /// Trusts that `basis` is already in reduced echelon form with unit pivots.
  static Subspace from_rref(SparseMatrix basis, std::vector<std::uint32_t> pivots);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }

  const SparseMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::uint32_t>& pivot_cols() const noexcept { return pivots_; }
  std::vector<Residue> basis_vector(std::size_t i) const { return basis_.dense_row(i); }

  /// Remainder of v after clearing every pivot coordinate.
  std::vector<Residue> reduce(std::span<const Residue> v, const PrimeField& field) const;
  bool contains(std::span<const Residue> v, const PrimeField& field) const;
  /// Coordinates of v in the echelon basis; v must lie in the subspace.
  std::vector<Residue> coordinates(std::span<const Residue> v, const PrimeField& field) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  SparseMatrix basis_;
  std::vector<std::uint32_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b, const PrimeField& field);
Subspace subspace_intersect(const Subspace& a, const Subspace& b, const PrimeField& field);
bool subspace_equals(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, std::span<const Residue> v, const PrimeField& field);
/// a is contained in b.
bool subspace_is_within(const Subspace& a, const Subspace& b, const PrimeField& field);

}  // namespace syzlab
