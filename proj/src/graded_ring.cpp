#include "syzlab/graded_ring.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "syzlab/errors.hpp"
#include "syzlab/linalg.hpp"

namespace syzlab {
namespace {

// True when a precedes b in the fixed order (a is the larger monomial).
bool grevlex_greater(const Exponent& a, const Exponent& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

void enumerate(std::size_t num_vars, std::size_t degree, std::size_t var, Exponent& cur,
               std::vector<Exponent>& out) {
  if (var + 1 == num_vars) {
    cur[var] = static_cast<std::uint8_t>(degree);
    out.push_back(cur);
    cur[var] = 0;
    return;
  }
  for (std::size_t e = 0; e <= degree; ++e) {
    cur[var] = static_cast<std::uint8_t>(e);
    enumerate(num_vars, degree - e, var + 1, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t graded_dim(std::size_t num_vars, std::size_t degree) {
  if (num_vars == 0) return degree == 0 ? 1 : 0;
  return binomial(num_vars + degree - 1, degree);
}

MonomialIndexer::MonomialIndexer(std::size_t num_vars, std::size_t degree)
    : num_vars_(num_vars), degree_(degree) {
  if (num_vars == 0 || num_vars > 16 || degree > 15) {
    throw Error(ErrorCode::kInvalidArgument,
                "monomial indexing supports 1..16 variables and degree <= 15");
  }
  Exponent cur(num_vars, 0);
  enumerate(num_vars, degree, 0, cur, monomials_);
  std::sort(monomials_.begin(), monomials_.end(), grevlex_greater);
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    index_.emplace(key(monomials_[i]), static_cast<std::uint32_t>(i));
  }
}

std::uint64_t MonomialIndexer::key(std::span<const std::uint8_t> exponent) const {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < exponent.size(); ++i) {
    k |= static_cast<std::uint64_t>(exponent[i] & 0xF) << (4 * i);
  }
  return k;
}

std::size_t MonomialIndexer::rank(std::span<const std::uint8_t> exponent) const {
  if (exponent.size() != num_vars_) {
    throw Error(ErrorCode::kDimensionMismatch, "exponent vector has wrong length");
  }
  std::size_t total = 0;
  for (auto e : exponent) total += e;
  if (total != degree_) {
    throw Error(ErrorCode::kDimensionMismatch, "exponent vector has wrong degree");
  }
  return index_.at(key(exponent));
}

bool GradedVector::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Residue c) { return c == 0; });
}

GradedRing::GradedRing(std::size_t num_vars, PrimeField field, std::size_t max_degree)
    : num_vars_(num_vars), field_(field) {
  for (std::size_t d = 0; d <= max_degree; ++d) indexers_.emplace_back(num_vars, d);
  for (std::size_t d = 0; d < max_degree; ++d) {
    const auto& from = indexers_[d];
    const auto& to = indexers_[d + 1];
    std::vector<std::uint32_t> table(num_vars * from.size());
    for (std::size_t idx = 0; idx < from.size(); ++idx) {
      Exponent e = from.unrank(idx);
      for (std::size_t v = 0; v < num_vars; ++v) {
        ++e[v];
        table[v * from.size() + idx] = static_cast<std::uint32_t>(to.rank(e));
        --e[v];
      }
    }
    mul_table_.push_back(std::move(table));
  }
}

void GradedRing::require_degree(std::size_t degree) const {
  if (degree >= indexers_.size()) {
    throw Error(ErrorCode::kUnsupportedDegree,
                "degree " + std::to_string(degree) + " exceeds ring maximum " +
                    std::to_string(max_degree()));
  }
}

const MonomialIndexer& GradedRing::indexer(std::size_t degree) const {
  require_degree(degree);
  return indexers_[degree];
}

std::size_t GradedRing::times_variable(std::size_t degree, std::size_t var,
                                       std::size_t index) const {
  require_degree(degree + 1);
  return mul_table_[degree][var * dim(degree) + index];
}

GradedVector GradedRing::zero(std::size_t degree) const {
  return {degree, std::vector<Residue>(dim(degree), 0)};
}

GradedVector GradedRing::one() const { return {0, {1}}; }

GradedVector GradedRing::variable(std::size_t var) const {
  Exponent e(num_vars_, 0);
  e.at(var) = 1;
  return monomial(e);
}

GradedVector GradedRing::monomial(std::span<const std::uint8_t> exponent) const {
  std::size_t d = 0;
  for (auto e : exponent) d += e;
  GradedVector f = zero(d);
  f.coeffs[indexer(d).rank(exponent)] = 1;
  return f;
}

GradedVector GradedRing::monomial_of_vars(std::initializer_list<std::size_t> vars,
                                          Residue c) const {
  Exponent e(num_vars_, 0);
  for (auto v : vars) ++e.at(v);
  GradedVector f = monomial(e);
  return scale(f, c);
}

GradedVector GradedRing::add(const GradedVector& f, const GradedVector& h) const {
  if (f.degree != h.degree) throw Error(ErrorCode::kDimensionMismatch, "adding forms of different degree");
  GradedVector out = f;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = field_.add(out.coeffs[i], h.coeffs[i]);
  return out;
}

GradedVector GradedRing::sub(const GradedVector& f, const GradedVector& h) const {
  if (f.degree != h.degree) throw Error(ErrorCode::kDimensionMismatch, "subtracting forms of different degree");
  GradedVector out = f;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = field_.sub(out.coeffs[i], h.coeffs[i]);
  return out;
}

GradedVector GradedRing::scale(const GradedVector& f, Residue c) const {
  GradedVector out = f;
  for (auto& v : out.coeffs) v = field_.mul(v, c);
  return out;
}

GradedVector GradedRing::multiply(const GradedVector& f, const GradedVector& h) const {
  const std::size_t d = f.degree + h.degree;
  const auto& fi = indexer(f.degree);
  const auto& hi = indexer(h.degree);
  const auto& out_index = indexer(d);
  if (f.coeffs.size() != fi.size() || h.coeffs.size() != hi.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "form length does not match its degree");
  }
  GradedVector out = zero(d);
  Exponent e(num_vars_);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    const Exponent& a = fi.unrank(i);
    for (std::size_t j = 0; j < h.coeffs.size(); ++j) {
      if (h.coeffs[j] == 0) continue;
      const Exponent& b = hi.unrank(j);
      for (std::size_t v = 0; v < num_vars_; ++v) e[v] = static_cast<std::uint8_t>(a[v] + b[v]);
      auto& slot = out.coeffs[out_index.rank(e)];
      slot = field_.add(slot, field_.mul(f.coeffs[i], h.coeffs[j]));
    }
  }
  return out;
}

Residue GradedRing::evaluate(const GradedVector& f, std::span<const Residue> point) const {
  if (point.size() != num_vars_) throw Error(ErrorCode::kDimensionMismatch, "point has wrong length");
  const auto& idx = indexer(f.degree);
  Residue acc = 0;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    Residue term = f.coeffs[i];
    const Exponent& e = idx.unrank(i);
    for (std::size_t v = 0; v < num_vars_; ++v) {
      if (e[v]) term = field_.mul(term, field_.pow(point[v], e[v]));
    }
    acc = field_.add(acc, term);
  }
  return acc;
}

std::string GradedRing::to_string(const GradedVector& f) const {
  std::ostringstream os;
  bool first = true;
  const auto& idx = indexer(f.degree);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << f.coeffs[i];
    const Exponent& e = idx.unrank(i);
    for (std::size_t v = 0; v < num_vars_; ++v) {
      if (e[v] == 0) continue;
      os << "*Z" << (v + 1);
      if (e[v] > 1) os << "^" << static_cast<int>(e[v]);
    }
  }
  if (first) os << "0";
  return os.str();
}

SparseMatrix multiplication_matrix(const GradedRing& ring, const Subspace& quadrics) {
  if (quadrics.ambient_dim() != ring.dim(2)) {
    throw Error(ErrorCode::kDimensionMismatch, "quadric subspace does not live in S^2 V");
  }
  const std::size_t g = ring.num_vars();
  const std::size_t m = quadrics.dim();
  SparseMatrix out(0, ring.dim(3));
  for (std::size_t var = 0; var < g; ++var) {
    for (std::size_t j = 0; j < m; ++j) {
      SparseRow row;
      for (const auto& e : quadrics.basis().row(j)) {
        row.push_back({static_cast<std::uint32_t>(ring.times_variable(2, var, e.col)), e.value});
      }
      // Multiplying by one variable is injective on monomials, so only order changes.
      std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
      out.append_row(std::move(row));
    }
  }
  return out;
}

Subspace ideal_piece(const GradedRing& ring, const Subspace& quadrics, std::size_t q) {
  if (q < 2 || q > 4) {
    throw Error(ErrorCode::kUnsupportedDegree,
                "ideal pieces are supported for degrees 2..4, got " + std::to_string(q));
  }
  if (quadrics.ambient_dim() != ring.dim(2)) {
    throw Error(ErrorCode::kDimensionMismatch, "quadric subspace does not live in S^2 V");
  }
  if (q == 2) return quadrics;
  const auto& mult = ring.indexer(q - 2);
  const auto& quad = ring.indexer(2);
  const auto& target = ring.indexer(q);
  const std::size_t g = ring.num_vars();
  SparseMatrix gens(0, target.size());
  Exponent e(g);
  for (std::size_t mi = 0; mi < mult.size(); ++mi) {
    const Exponent& a = mult.unrank(mi);
    for (std::size_t j = 0; j < quadrics.dim(); ++j) {
      SparseRow row;
      for (const auto& entry : quadrics.basis().row(j)) {
        const Exponent& b = quad.unrank(entry.col);
        for (std::size_t v = 0; v < g; ++v) e[v] = static_cast<std::uint8_t>(a[v] + b[v]);
        row.push_back({static_cast<std::uint32_t>(target.rank(e)), entry.value});
      }
      std::sort(row.begin(), row.end(), [](const Entry& x, const Entry& y) { return x.col < y.col; });
      gens.append_row(std::move(row));
    }
  }
  return Subspace::span(gens, ring.field());
}

Subspace span_of(const GradedRing& ring, std::size_t degree,
                 const std::vector<GradedVector>& forms) {
  SparseMatrix m(0, ring.dim(degree));
  for (const auto& f : forms) {
    if (f.degree != degree) throw Error(ErrorCode::kDimensionMismatch, "form of unexpected degree");
    m.append_dense_row(f.coeffs);
  }
  return Subspace::span(m, ring.field());
}

GradedVector basis_form(const Subspace& s, std::size_t degree, std::size_t i) {
  return {degree, s.basis_vector(i)};
}

QuotientPiece::QuotientPiece(const GradedRing& ring, std::size_t degree, Subspace ideal)
    : degree_(degree), ideal_(std::move(ideal)) {
  const std::size_t n = ring.dim(degree);
  if (ideal_.ambient_dim() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "ideal piece does not live in S^q V");
  }
  const PrimeField& f = ring.field();
  std::vector<std::int64_t> position(n, -1);
  std::vector<std::int64_t> pivot_row(n, -1);
  for (std::size_t r = 0; r < ideal_.dim(); ++r) pivot_row[ideal_.pivot_cols()[r]] = static_cast<std::int64_t>(r);
  for (std::size_t c = 0; c < n; ++c) {
    if (pivot_row[c] < 0) {
      position[c] = static_cast<std::int64_t>(basis_monomials_.size());
      basis_monomials_.push_back(static_cast<std::uint32_t>(c));
    }
  }
  nf_.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (pivot_row[c] < 0) {
      nf_[c] = {{static_cast<std::uint32_t>(position[c]), 1}};
      continue;
    }
    // Monomial c equals minus the rest of its echelon row, modulo the ideal.
    SparseRow row;
    for (const auto& e : ideal_.basis().row(static_cast<std::size_t>(pivot_row[c]))) {
      if (e.col == c) continue;
      row.push_back({static_cast<std::uint32_t>(position[e.col]), f.neg(e.value)});
    }
    nf_[c] = std::move(row);
  }
}

std::vector<Residue> QuotientPiece::normal_form(const GradedVector& form,
                                                const PrimeField& field) const {
  if (form.degree != degree_) throw Error(ErrorCode::kDimensionMismatch, "form of unexpected degree");
  std::vector<Residue> out(dim(), 0);
  for (std::size_t c = 0; c < form.coeffs.size(); ++c) {
    if (form.coeffs[c] == 0) continue;
    for (const auto& e : nf_[c]) out[e.col] = field.add(out[e.col], field.mul(form.coeffs[c], e.value));
  }
  return out;
}

}  // namespace syzlab
