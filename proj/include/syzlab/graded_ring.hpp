#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "syzlab/prime_field.hpp"
#include "syzlab/sparse_matrix.hpp"
#include "syzlab/subspace.hpp"

namespace syzlab {

/// C(g + d - 1, d): the number of degree-d monomials in g variables.
std::size_t graded_dim(std::size_t num_vars, std::size_t degree);

std::size_t binomial(std::size_t n, std::size_t k);

using Exponent = std::vector<std::uint8_t>;

/// Bijection between the degree-d monomials in Z1..Zg and [0, graded_dim).
/// The order is graded reverse lexicographic with Z1 > Z2 > ... > Zg, and
/// index 0 is the largest monomial Z1^d. Saved models depend on this order.
class MonomialIndexer {
 public:
  MonomialIndexer(std::size_t num_vars, std::size_t degree);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }

  std::size_t rank(std::span<const std::uint8_t> exponent) const;
  const Exponent& unrank(std::size_t index) const { return monomials_.at(index); }

 private:
  std::uint64_t key(std::span<const std::uint8_t> exponent) const;

  std::size_t num_vars_;
  std::size_t degree_;
  std::vector<Exponent> monomials_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

/// Coefficient vector of a form of fixed degree, indexed by MonomialIndexer.
struct GradedVector {
  std::size_t degree = 0;
  std::vector<Residue> coeffs;

  bool is_zero() const;
  friend bool operator==(const GradedVector&, const GradedVector&) = default;
};

/// The polynomial ring GF(p)[Z1..Zg] through a fixed maximum degree.
/// Variables are 0-based internally; Z1 is variable 0.
class GradedRing {
 public:
  GradedRing(std::size_t num_vars, PrimeField field, std::size_t max_degree = 4);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::size_t max_degree() const noexcept { return indexers_.size() - 1; }
  const PrimeField& field() const noexcept { return field_; }
  const MonomialIndexer& indexer(std::size_t degree) const;
  std::size_t dim(std::size_t degree) const { return indexer(degree).size(); }

  /// Index in degree d+1 of Z_var times monomial `index` of degree d.
  std::size_t times_variable(std::size_t degree, std::size_t var, std::size_t index) const;

  GradedVector zero(std::size_t degree) const;
  GradedVector one() const;
  GradedVector variable(std::size_t var) const;
  GradedVector monomial(std::span<const std::uint8_t> exponent) const;
  /// Product of the listed variables (repeats allowed), coefficient c.
  GradedVector monomial_of_vars(std::initializer_list<std::size_t> vars, Residue c = 1) const;

  GradedVector add(const GradedVector& f, const GradedVector& h) const;
  GradedVector sub(const GradedVector& f, const GradedVector& h) const;
  GradedVector scale(const GradedVector& f, Residue c) const;
  GradedVector multiply(const GradedVector& f, const GradedVector& h) const;

  Residue evaluate(const GradedVector& f, std::span<const Residue> point) const;

  /// Human-readable form, e.g. "3*Z1^2*Z2 + 1000002*Z3^3".
  std::string to_string(const GradedVector& f) const;

 private:
  void require_degree(std::size_t degree) const;

  std::size_t num_vars_;
  PrimeField field_;
  std::vector<MonomialIndexer> indexers_;
  // mul_table_[d][var * dim(d) + idx]
  std::vector<std::vector<std::uint32_t>> mul_table_;
};

/// Matrix of V (x) I2 -> S^3 V. Row var * m + j is Z_var * Q_j where Q_j is
/// the j-th echelon basis quadric; columns are cubic monomials.
SparseMatrix multiplication_matrix(const GradedRing& ring, const Subspace& quadrics);

/// Degree-q part of the ideal generated by the quadrics, 2 <= q <= 4.
Subspace ideal_piece(const GradedRing& ring, const Subspace& quadrics, std::size_t q);

/// Subspace spanned by a list of forms of one degree.
Subspace span_of(const GradedRing& ring, std::size_t degree,
                 const std::vector<GradedVector>& forms);

/// The form stored in row `i` of a subspace of S^d V.
GradedVector basis_form(const Subspace& s, std::size_t degree, std::size_t i);

/// S^q V modulo a subspace, with the non-pivot monomials as basis.
class QuotientPiece {
 public:
  QuotientPiece(const GradedRing& ring, std::size_t degree, Subspace ideal);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t dim() const noexcept { return basis_monomials_.size(); }
  const Subspace& ideal() const noexcept { return ideal_; }
  /// Monomial indices that represent the quotient basis.
  const std::vector<std::uint32_t>& basis_monomials() const noexcept { return basis_monomials_; }
  /// Normal form of one monomial in quotient coordinates.
  const SparseRow& normal_form(std::size_t monomial) const { return nf_.at(monomial); }
  std::vector<Residue> normal_form(const GradedVector& f, const PrimeField& field) const;

 private:
  std::size_t degree_;
  Subspace ideal_;
  std::vector<std::uint32_t> basis_monomials_;
  std::vector<SparseRow> nf_;
};

}  // namespace syzlab
