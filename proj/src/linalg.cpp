#include "syzlab/linalg.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "syzlab/errors.hpp"
#include "syzlab/subspace.hpp"

namespace syzlab {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Elimination row with a sparse representation that is swapped for a dense
// one once it fills past a quarter of the columns.
class WorkRow {
 public:
  WorkRow(const SparseRow& row, std::size_t cols) : cols_(cols), sparse_(row) {
    maybe_densify();
  }

  bool is_dense() const { return dense_mode_; }

  /// First nonzero column at or after `from`.
  std::size_t lead(std::size_t from) const {
    if (dense_mode_) {
      for (std::size_t c = from; c < cols_; ++c) {
        if (dense_[c] != 0) return c;
      }
      return kNone;
    }
    auto it = std::lower_bound(sparse_.begin(), sparse_.end(), from,
                               [](const Entry& e, std::size_t c) { return e.col < c; });
    return it == sparse_.end() ? kNone : it->col;
  }

  Residue at(std::size_t c) const {
    if (dense_mode_) return dense_[c];
    auto it = std::lower_bound(sparse_.begin(), sparse_.end(), c,
                               [](const Entry& e, std::size_t col) { return e.col < col; });
    return (it != sparse_.end() && it->col == c) ? it->value : 0;
  }

  void scale(Residue s, const PrimeField& f) {
    if (dense_mode_) {
      for (auto& v : dense_) v = f.mul(v, s);
    } else {
      for (auto& e : sparse_) e.value = f.mul(e.value, s);
    }
  }

  /// this -= s * pivot
  void sub_scaled(Residue s, const WorkRow& pivot, const PrimeField& f) {
    if (!dense_mode_ && !pivot.dense_mode_) {
      merge_sparse(s, pivot.sparse_, f);
      maybe_densify();
      return;
    }
    to_dense();
    if (pivot.dense_mode_) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (pivot.dense_[c] != 0) dense_[c] = f.sub_mul(dense_[c], s, pivot.dense_[c]);
      }
    } else {
      for (const auto& e : pivot.sparse_) dense_[e.col] = f.sub_mul(dense_[e.col], s, e.value);
    }
  }

  SparseRow to_sparse() const {
    if (!dense_mode_) return sparse_;
    return sparse_from_dense(dense_);
  }

 private:
  void merge_sparse(Residue s, const SparseRow& other, const PrimeField& f) {
    SparseRow out;
    out.reserve(sparse_.size() + other.size());
    auto a = sparse_.begin();
    auto b = other.begin();
    while (a != sparse_.end() || b != other.end()) {
      if (b == other.end() || (a != sparse_.end() && a->col < b->col)) {
        out.push_back(*a++);
      } else if (a == sparse_.end() || b->col < a->col) {
        out.push_back({b->col, f.neg(f.mul(s, b->value))});
        ++b;
      } else {
        Residue v = f.sub_mul(a->value, s, b->value);
        if (v != 0) out.push_back({a->col, v});
        ++a;
        ++b;
      }
    }
    sparse_ = std::move(out);
  }

  void maybe_densify() {
    if (!dense_mode_ && sparse_.size() * 4 > cols_) to_dense();
  }

  void to_dense() {
    if (dense_mode_) return;
    dense_.assign(cols_, 0);
    for (const auto& e : sparse_) dense_[e.col] = e.value;
    sparse_.clear();
    sparse_.shrink_to_fit();
    dense_mode_ = true;
  }

  std::size_t cols_;
  bool dense_mode_ = false;
  SparseRow sparse_;
  std::vector<Residue> dense_;
};

struct Elimination {
  std::vector<WorkRow> rows;
  // (pivot column, row index) in the order pivots were found.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

Elimination eliminate(const SparseMatrix& m, const PrimeField& f, bool back_substitute) {
  Elimination el;
  el.rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) el.rows.emplace_back(m.row(r), m.cols());

  // Unpivoted rows, ascending by index, with the column their scan starts at.
  std::vector<std::size_t> active;
  for (std::size_t r = 0; r < m.rows(); ++r) active.push_back(r);
  std::vector<std::size_t> leads(m.rows(), 0);
  for (std::size_t r : active) leads[r] = el.rows[r].lead(0);

  while (true) {
    std::erase_if(active, [&](std::size_t r) { return leads[r] == kNone; });
    if (active.empty()) break;
    // Leftmost column first; ties go to the smallest row index.
    std::size_t col = kNone;
    std::size_t piv = kNone;
    for (std::size_t r : active) {
      if (leads[r] < col) {
        col = leads[r];
        piv = r;
      }
    }
    WorkRow& prow = el.rows[piv];
    prow.scale(f.inv(prow.at(col)), f);
    std::erase(active, piv);

    for (std::size_t r : active) {
      if (leads[r] != col) continue;
      el.rows[r].sub_scaled(el.rows[r].at(col), prow, f);
      leads[r] = el.rows[r].lead(col + 1);
    }
    if (back_substitute) {
      for (const auto& [pc, pr] : el.pivots) {
        Residue v = el.rows[pr].at(col);
        if (v != 0) el.rows[pr].sub_scaled(v, prow, f);
      }
    }
    el.pivots.emplace_back(col, piv);
  }
  return el;
}

}  // namespace

RrefResult rref(const SparseMatrix& m, const PrimeField& field) {
  Elimination el = eliminate(m, field, /*back_substitute=*/true);
  RrefResult out;
  out.rank = el.pivots.size();
  out.reduced = SparseMatrix(0, m.cols());
  // Pivots were discovered left to right, so this order is already echelon.
  for (const auto& [col, r] : el.pivots) {
    out.reduced.append_row(el.rows[r].to_sparse());
    out.pivot_cols.push_back(static_cast<std::uint32_t>(col));
  }
  for (std::size_t r = out.rank; r < m.rows(); ++r) out.reduced.append_row({});
  return out;
}

std::size_t rank(const SparseMatrix& m, const PrimeField& field) {
  return eliminate(m, field, /*back_substitute=*/false).pivots.size();
}

Subspace kernel_basis(const SparseMatrix& m, const PrimeField& field) {
  const RrefResult rr = rref(m, field);
  const std::size_t n = m.cols();
  std::vector<char> is_pivot(n, 0);
  for (auto c : rr.pivot_cols) is_pivot[c] = 1;

  // For each free column f: e_f - sum_r reduced[r][f] e_{pivot(r)}.
  std::vector<std::vector<Triplet>> per_free(n);
  for (std::size_t r = 0; r < rr.rank; ++r) {
    const std::uint32_t pc = rr.pivot_cols[r];
    for (const auto& e : rr.reduced.row(r)) {
      if (e.col == pc) continue;
      per_free[e.col].push_back({0, pc, field.neg(e.value)});
    }
  }
  // Leading entries of these vectors can sit on pivot columns, so the set is
  // re-reduced into canonical form.
  SparseMatrix gens(0, n);
  for (std::size_t fcol = 0; fcol < n; ++fcol) {
    if (is_pivot[fcol]) continue;
    std::vector<Triplet> t = per_free[fcol];
    t.push_back({0, fcol, 1});
    SparseMatrix one = SparseMatrix::from_triplets(1, n, std::move(t), field);
    gens.append_row(one.row(0));
  }
  return Subspace::span(gens, field);
}

Subspace left_kernel(const SparseMatrix& m, const PrimeField& field) {
  return kernel_basis(m.transpose(), field);
}

std::vector<Residue> apply(const SparseMatrix& m, std::span<const Residue> v,
                           const PrimeField& field) {
  if (v.size() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " against " +
                    std::to_string(m.cols()) + " columns");
  }
  std::vector<Residue> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Residue acc = 0;
    for (const auto& e : m.row(r)) acc = field.add(acc, field.mul(e.value, v[e.col]));
    out[r] = acc;
  }
  return out;
}

}  // namespace syzlab
