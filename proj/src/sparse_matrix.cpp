#include "syzlab/sparse_matrix.hpp"

#include <algorithm>
#include <string>

#include "syzlab/errors.hpp"

namespace syzlab {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> triplets,
                                         const PrimeField& field) {
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  SparseMatrix m(rows, cols);
  std::size_t i = 0;
  while (i < triplets.size()) {
    const std::size_t r = triplets[i].row;
    const std::size_t c = triplets[i].col;
    if (r >= rows || c >= cols) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "triplet (" + std::to_string(r) + ", " + std::to_string(c) +
                      ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    Residue sum = 0;
    for (; i < triplets.size() && triplets[i].row == r && triplets[i].col == c; ++i) {
      sum = field.add(sum, triplets[i].value % field.prime());
    }
    if (sum != 0) {
      m.rows_[r].push_back({static_cast<std::uint32_t>(c), sum});
    }
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(std::size_t cols,
                                      const std::vector<std::vector<Residue>>& rows) {
  SparseMatrix m(0, cols);
  for (const auto& r : rows) m.append_dense_row(r);
  return m;
}

std::size_t SparseMatrix::nnz() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

void SparseMatrix::check_row(const SparseRow& row) const {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].col >= cols_ || row[i].value == 0 ||
        (i > 0 && row[i - 1].col >= row[i].col)) {
      throw Error(ErrorCode::kMalformedInput, "sparse row is not normalized");
    }
  }
}

void SparseMatrix::set_row(std::size_t r, SparseRow row) {
  check_row(row);
  rows_.at(r) = std::move(row);
}

void SparseMatrix::append_row(SparseRow row) {
  check_row(row);
  rows_.push_back(std::move(row));
}

void SparseMatrix::append_dense_row(std::span<const Residue> values) {
  if (values.size() != cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "row of length " + std::to_string(values.size()) + " in matrix with " +
                    std::to_string(cols_) + " columns");
  }
  rows_.push_back(sparse_from_dense(values));
}

Residue SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  return (it != row.end() && it->col == c) ? it->value : 0;
}

std::vector<Residue> SparseMatrix::dense_row(std::size_t r) const {
  std::vector<Residue> out(cols_, 0);
  for (const auto& e : rows_.at(r)) out[e.col] = e.value;
  return out;
}

std::vector<std::vector<Residue>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Residue>> out;
  out.reserve(rows());
  for (std::size_t r = 0; r < rows(); ++r) out.push_back(dense_row(r));
  return out;
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& e : rows_[r]) out.push_back({r, e.col, e.value});
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& e : rows_[r]) {
      t.rows_[e.col].push_back({static_cast<std::uint32_t>(r), e.value});
    }
  }
  return t;
}

SparseMatrix SparseMatrix::top_rows(std::size_t n) const {
  SparseMatrix m(0, cols_);
  for (std::size_t r = 0; r < std::min(n, rows()); ++r) m.rows_.push_back(rows_[r]);
  return m;
}

SparseRow sparse_from_dense(std::span<const Residue> values) {
  SparseRow row;
  for (std::size_t c = 0; c < values.size(); ++c) {
    if (values[c] != 0) row.push_back({static_cast<std::uint32_t>(c), values[c]});
  }
  return row;
}

}  // namespace syzlab
