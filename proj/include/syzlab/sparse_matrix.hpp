#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "syzlab/prime_field.hpp"

namespace syzlab {

struct Entry {
  std::uint32_t col;
  Residue value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Row stored as (col, value) pairs sorted by column, no zeros, no repeats.
using SparseRow = std::vector<Entry>;

struct Triplet {
  std::size_t row;
  std::size_t col;
  Residue value;
};

/// Row-compressed matrix over GF(p). Every row is kept normalized.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  /// Duplicate positions are summed; zero sums are dropped.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    std::vector<Triplet> triplets,
                                    const PrimeField& field);
  static SparseMatrix from_dense(std::size_t cols,
                                 const std::vector<std::vector<Residue>>& rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept;

  const SparseRow& row(std::size_t r) const { return rows_.at(r); }
  /// Throws on unsorted, out-of-range or zero entries.
  void set_row(std::size_t r, SparseRow row);
  void append_row(SparseRow row);
  void append_dense_row(std::span<const Residue> values);

  Residue at(std::size_t r, std::size_t c) const;
  std::vector<Residue> dense_row(std::size_t r) const;
  std::vector<std::vector<Residue>> to_dense() const;
  std::vector<Triplet> triplets() const;

  SparseMatrix transpose() const;
  /// Keeps rows [0, n).
  SparseMatrix top_rows(std::size_t n) const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  void check_row(const SparseRow& row) const;

  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
};

SparseRow sparse_from_dense(std::span<const Residue> values);

}  // namespace syzlab
