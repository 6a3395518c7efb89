#include "syzlab/subspace.hpp"

#include <string>

#include "syzlab/errors.hpp"
#include "syzlab/linalg.hpp"

namespace syzlab {
namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "subspaces of GF(p)^" + std::to_string(a.ambient_dim()) + " and GF(p)^" +
                    std::to_string(b.ambient_dim()));
  }
}

void require_length(const Subspace& a, std::size_t n) {
  if (a.ambient_dim() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector of length " + std::to_string(n) + " against subspace of GF(p)^" +
                    std::to_string(a.ambient_dim()));
  }
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim) : basis_(0, ambient_dim) {}

Subspace Subspace::span(const SparseMatrix& generators, const PrimeField& field) {
  RrefResult rr = rref(generators, field);
  return from_rref(rr.reduced.top_rows(rr.rank), std::move(rr.pivot_cols));
}

Subspace Subspace::span(std::size_t ambient_dim,
                        const std::vector<std::vector<Residue>>& generators,
                        const PrimeField& field) {
  SparseMatrix m(0, ambient_dim);
  for (const auto& g : generators) m.append_dense_row(g);
  return span(m, field);
}

Subspace Subspace::from_rref(SparseMatrix basis, std::vector<std::uint32_t> pivots) {
  if (basis.rows() != pivots.size()) {
    throw Error(ErrorCode::kMalformedInput, "pivot list does not match basis rows");
  }
  Subspace s;
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(pivots);
  return s;
}

std::vector<Residue> Subspace::reduce(std::span<const Residue> v,
                                      const PrimeField& field) const {
  require_length(*this, v.size());
  std::vector<Residue> out(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    const Residue c = out[pivots_[r]];
    if (c == 0) continue;
    for (const auto& e : basis_.row(r)) out[e.col] = field.sub_mul(out[e.col], c, e.value);
  }
  return out;
}

bool Subspace::contains(std::span<const Residue> v, const PrimeField& field) const {
  for (Residue x : reduce(v, field)) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<Residue> Subspace::coordinates(std::span<const Residue> v,
                                           const PrimeField& field) const {
  if (!contains(v, field)) {
    throw Error(ErrorCode::kInvalidArgument, "vector does not lie in the subspace");
  }
  // Reduced echelon form: the coordinate on row r is the entry at its pivot.
  std::vector<Residue> coords(dim());
  for (std::size_t r = 0; r < dim(); ++r) coords[r] = v[pivots_[r]];
  return coords;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b, const PrimeField& field) {
  require_same_ambient(a, b);
  SparseMatrix m(0, a.ambient_dim());
  for (std::size_t r = 0; r < a.dim(); ++r) m.append_row(a.basis().row(r));
  for (std::size_t r = 0; r < b.dim(); ++r) m.append_row(b.basis().row(r));
  return Subspace::span(m, field);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b, const PrimeField& field) {
  require_same_ambient(a, b);
  // Zassenhaus: rows [u | u] and [w | 0]; echelon rows with a zero left half
  // carry the intersection in their right half.
  const std::size_t n = a.ambient_dim();
  SparseMatrix m(0, 2 * n);
  auto doubled = [n](const SparseRow& row, bool copy_right) {
    SparseRow out = row;
    if (copy_right) {
      for (const auto& e : row) out.push_back({static_cast<std::uint32_t>(e.col + n), e.value});
    }
    return out;
  };
  for (std::size_t r = 0; r < a.dim(); ++r) m.append_row(doubled(a.basis().row(r), true));
  for (std::size_t r = 0; r < b.dim(); ++r) m.append_row(doubled(b.basis().row(r), false));
  RrefResult rr = rref(m, field);
  SparseMatrix right(0, n);
  for (std::size_t r = 0; r < rr.rank; ++r) {
    if (rr.pivot_cols[r] < n) continue;
    SparseRow row;
    for (const auto& e : rr.reduced.row(r)) {
      row.push_back({static_cast<std::uint32_t>(e.col - n), e.value});
    }
    right.append_row(std::move(row));
  }
  return Subspace::span(right, field);
}

bool subspace_equals(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return a == b;
}

bool subspace_contains(const Subspace& a, std::span<const Residue> v, const PrimeField& field) {
  return a.contains(v, field);
}

bool subspace_is_within(const Subspace& a, const Subspace& b, const PrimeField& field) {
  require_same_ambient(a, b);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    if (!b.contains(a.basis_vector(r), field)) return false;
  }
  return true;
}

}  // namespace syzlab
