#include "syzlab/koszul.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "syzlab/errors.hpp"
#include "syzlab/linalg.hpp"

namespace syzlab {
namespace {

std::vector<std::uint32_t> subsets_of_size(std::size_t n, std::size_t p) {
  std::vector<std::uint32_t> out;
  if (p > n) return out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) == p) out.push_back(mask);
  }
  // Increasing index tuples in lexicographic order.
  auto tuple_less = [](std::uint32_t a, std::uint32_t b) {
    while (a != 0 && b != 0) {
      const int la = std::countr_zero(a), lb = std::countr_zero(b);
      if (la != lb) return la < lb;
      a &= a - 1;
      b &= b - 1;
    }
    return false;
  };
  std::sort(out.begin(), out.end(), tuple_less);
  return out;
}

QuotientPiece quotient(const GradedRing& ring, const Subspace& i2, std::size_t q) {
  if (q < 2) return QuotientPiece(ring, q, Subspace(ring.dim(q)));
  return QuotientPiece(ring, q, ideal_piece(ring, i2, q));
}

// Matrix of d: wedge^p V (x) B_q -> wedge^{p-1} V (x) B_{q+1}.
SparseMatrix koszul_differential(const GradedRing& ring, std::size_t p, const QuotientPiece& bq,
                                 const QuotientPiece& bq1) {
  const std::size_t g = ring.num_vars();
  const PrimeField& f = ring.field();
  const auto source = subsets_of_size(g, p);
  const auto target = subsets_of_size(g, p - 1);
  std::unordered_map<std::uint32_t, std::size_t> target_index;
  for (std::size_t i = 0; i < target.size(); ++i) target_index.emplace(target[i], i);
  const std::size_t nb = bq1.dim();
  std::vector<Triplet> trip;
  std::size_t row = 0;
  for (std::uint32_t s : source) {
    for (std::uint32_t mono : bq.basis_monomials()) {
      int k = 0;
      for (std::uint32_t rest = s; rest != 0; rest &= rest - 1, ++k) {
        const auto var = static_cast<std::size_t>(std::countr_zero(rest));
        const std::size_t col0 = target_index.at(s & ~(1u << var)) * nb;
        const SparseRow& nf = bq1.normal_form(ring.times_variable(bq.degree(), var, mono));
        for (const auto& e : nf) trip.push_back({row, col0 + e.col, k % 2 == 0 ? e.value : f.neg(e.value)});
      }
      ++row;
    }
  }
  return SparseMatrix::from_triplets(source.size() * bq.dim(), target.size() * nb, std::move(trip), f);
}

}  // namespace

std::vector<SyzygyVector> linear_syzygies(const GradedRing& ring, const Subspace& i2) {
  const Subspace k = left_kernel(multiplication_matrix(ring, i2), ring.field());
  std::vector<SyzygyVector> out;
  out.reserve(k.dim());
  for (std::size_t r = 0; r < k.dim(); ++r) out.push_back({ring.num_vars(), i2.dim(), k.basis_vector(r)});
  return out;
}

std::size_t kappa21(const GradedRing& ring, const Subspace& i2) {
  const SparseMatrix m = multiplication_matrix(ring, i2);
  return m.rows() - rank(m, ring.field());
}

std::vector<GradedVector> row_quadrics(const GradedRing& ring, const Subspace& i2, const SyzygyVector& gamma) {
  if (gamma.num_vars != ring.num_vars() || gamma.num_quadrics != i2.dim() ||
      gamma.coeffs.size() != gamma.num_vars * gamma.num_quadrics) {
    throw Error(ErrorCode::kDimensionMismatch, "syzygy vector does not match the quadric space");
  }
  const PrimeField& f = ring.field();
  std::vector<GradedVector> out(gamma.num_vars, ring.zero(2));
  for (std::size_t i = 0; i < gamma.num_vars; ++i) {
    for (std::size_t j = 0; j < gamma.num_quadrics; ++j) {
      const Residue c = gamma.at(i, j);
      if (c == 0) continue;
      for (const auto& e : i2.basis().row(j)) {
        out[i].coeffs[e.col] = f.add(out[i].coeffs[e.col], f.mul(c, e.value));
      }
    }
  }
  return out;
}

bool is_syzygy(const GradedRing& ring, const Subspace& i2, const SyzygyVector& gamma) {
  const auto q = row_quadrics(ring, i2, gamma);
  GradedVector total = ring.zero(3);
  for (std::size_t i = 0; i < q.size(); ++i) total = ring.add(total, ring.multiply(ring.variable(i), q[i]));
  return total.is_zero();
}

Subspace quadrics_involved(const GradedRing& ring, const Subspace& i2, const SyzygyVector& gamma) {
  if (!is_syzygy(ring, i2, gamma)) {
    throw Error(ErrorCode::kInvalidSyzygy, "sum_i Z_i q_i is not zero");
  }
  return span_of(ring, 2, row_quadrics(ring, i2, gamma));
}

SyzygyVector syzygy_from_terms(const GradedRing& ring, const Subspace& i2,
                               std::span<const std::pair<GradedVector, GradedVector>> terms) {
  const PrimeField& f = ring.field();
  const std::size_t g = ring.num_vars();
  SyzygyVector gamma{g, i2.dim(), std::vector<Residue>(g * i2.dim(), 0)};
  for (const auto& [linear, quadric] : terms) {
    if (linear.degree != 1 || quadric.degree != 2) {
      throw Error(ErrorCode::kDimensionMismatch, "syzygy terms are (linear form, quadric) pairs");
    }
    if (!i2.contains(quadric.coeffs, f)) {
      throw Error(ErrorCode::kInvalidSyzygy, "a quadric of the syzygy lies outside I2");
    }
    const auto coords = i2.coordinates(quadric.coeffs, f);
    for (std::size_t i = 0; i < g; ++i) {
      if (linear.coeffs[i] == 0) continue;
      for (std::size_t j = 0; j < coords.size(); ++j) {
        auto& slot = gamma.coeffs[i * i2.dim() + j];
        slot = f.add(slot, f.mul(linear.coeffs[i], coords[j]));
      }
    }
  }
  if (!is_syzygy(ring, i2, gamma)) throw Error(ErrorCode::kInvalidSyzygy, "terms do not sum to zero");
  return gamma;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kEqualsCurve: return "EqualsCurve";
    case Verdict::kProperSurface: return "ProperSurface";
    case Verdict::kWholeSpace: return "WholeSpace";
  }
  return "unknown";
}

Syz2Report syz2_span(const GradedRing& ring, const Subspace& i2, const std::optional<Subspace>& surface_i2) {
  const PrimeField& f = ring.field();
  const std::size_t m = i2.dim();
  const std::vector<SyzygyVector> syz = linear_syzygies(ring, i2);
  // W in I2 coordinates: every row of every basis syzygy.
  SparseMatrix rows(0, m);
  for (const auto& gamma : syz) {
    for (std::size_t i = 0; i < gamma.num_vars; ++i) {
      rows.append_dense_row(std::span<const Residue>(gamma.coeffs).subspan(i * m, m));
    }
  }
  const Subspace w_coords = Subspace::span(rows, f);
  std::vector<Triplet> trip;
  for (std::size_t r = 0; r < w_coords.dim(); ++r) {
    for (const auto& c : w_coords.basis().row(r)) {
      for (const auto& e : i2.basis().row(c.col)) trip.push_back({r, e.col, f.mul(c.value, e.value)});
    }
  }
  Syz2Report report;
  report.kappa21 = syz.size();
  report.w = Subspace::span(SparseMatrix::from_triplets(w_coords.dim(), i2.ambient_dim(), std::move(trip), f), f);
  if (report.w.is_zero()) {
    report.verdict = Verdict::kWholeSpace;
  } else if (report.w.dim() == m) {
    report.verdict = Verdict::kEqualsCurve;
  } else {
    report.verdict = Verdict::kProperSurface;
  }
  if (surface_i2) report.surface_match = subspace_equals(report.w, *surface_i2);
  return report;
}

std::size_t koszul_dimension(const GradedRing& ring, const Subspace& i2, std::size_t p, std::size_t q,
                             const KoszulOptions& options) {
  const std::size_t g = ring.num_vars();
  if (q > 3) throw Error(ErrorCode::kUnsupportedDegree, "kappa_{p,q} is supported for q <= 3");
  if (ring.max_degree() < q + 1) {
    throw Error(ErrorCode::kUnsupportedDegree, "ring must carry degree " + std::to_string(q + 1));
  }
  if (g > 16) throw Error(ErrorCode::kSizeLimit, "exterior powers are indexed for g <= 16");
  if (p > g) return 0;

  const std::size_t wp = binomial(g, p);
  const std::size_t wp1 = binomial(g, p + 1);
  auto dim_b = [&](std::size_t d) { return graded_dim(g, d); };  // upper bound before reduction
  if (wp * dim_b(q) > options.budget || (q > 0 && wp1 * dim_b(q - 1) > options.budget)) {
    throw Error(ErrorCode::kSizeLimit, "kappa_{" + std::to_string(p) + "," + std::to_string(q) +
                                           "} exceeds the matrix budget of " + std::to_string(options.budget));
  }

  std::vector<QuotientPiece> b;
  for (std::size_t d = (q == 0 ? 0 : q - 1); d <= q + 1; ++d) b.push_back(quotient(ring, i2, d));
  const QuotientPiece& bq = b[q == 0 ? 0 : 1];
  const QuotientPiece& bq_next = b[q == 0 ? 1 : 2];
  if (options.canonical_curve) {
    for (const auto* piece : {&bq, &bq_next}) {
      const std::size_t d = piece->degree();
      if ((d == 2 || d == 3) && piece->dim() != (2 * d - 1) * (g - 1)) {
        throw Error(ErrorCode::kModelInconsistency,
                    "dim B_" + std::to_string(d) + " = " + std::to_string(piece->dim()) +
                        " but a canonical curve has " + std::to_string((2 * d - 1) * (g - 1)));
      }
    }
  }

  const PrimeField& f = ring.field();
  const std::size_t middle = wp * bq.dim();
  const std::size_t out_rank = p == 0 ? 0 : rank(koszul_differential(ring, p, bq, bq_next), f);
  const std::size_t in_rank = (q == 0 || p + 1 > g) ? 0 : rank(koszul_differential(ring, p + 1, b[0], bq), f);
  return middle - out_rank - in_rank;
}

BettiTable betti_table(const GradedRing& ring, const Subspace& i2, std::size_t p_max, std::size_t q_max,
                       const KoszulOptions& options) {
  BettiTable t{p_max, q_max, {}};
  t.kappa.assign(q_max + 1, std::vector<std::optional<std::size_t>>(p_max + 1));
  for (std::size_t q = 0; q <= q_max; ++q) {
    for (std::size_t p = 0; p <= p_max; ++p) {
      try {
        t.kappa[q][p] = koszul_dimension(ring, i2, p, q, options);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kSizeLimit) throw;
      }
    }
  }
  return t;
}

std::string render_betti(const BettiTable& t) {
  std::ostringstream out;
  out << "q\\p";
  for (std::size_t p = 0; p <= t.p_max; ++p) out << '\t' << p;
  out << '\n';
  for (std::size_t q = 0; q <= t.q_max; ++q) {
    out << q;
    for (std::size_t p = 0; p <= t.p_max; ++p) {
      const auto& v = t.kappa[q][p];
      out << '\t';
      if (!v) {
        out << '?';
      } else if (*v == 0) {
        out << "--";
      } else {
        out << *v;
      }
    }
    out << '\n';
  }
  return out.str();
}

std::size_t expected_kappa21(int genus) {
  if (genus < 5) throw Error(ErrorCode::kInvalidArgument, "formula needs g >= 5");
  return static_cast<std::size_t>((genus - 1) * (genus - 3) * (genus - 5) / 3);
}

Verdict expected_verdict(const CurveModel& model) {
  switch (model.family) {
    case Family::kGenus5: return Verdict::kWholeSpace;
    case Family::kBielliptic:
    case Family::kDelPezzo:
    case Family::kVeronese: return Verdict::kProperSurface;
    case Family::kFourgonal: {
      const int a = model.params.a.value_or(1), b = model.params.b.value_or(1);
      return std::min(a, b) > 0 ? Verdict::kEqualsCurve : Verdict::kProperSurface;
    }
  }
  return Verdict::kEqualsCurve;
}

TheoremCheck classify_theorem(const CurveModel& model, const std::optional<Subspace>& surface_i2) {
  const PrimeField field(model.prime);
  const GradedRing ring(static_cast<std::size_t>(model.genus), field, 3);
  const std::optional<Subspace>& surface = surface_i2 ? surface_i2 : model.surface_i2;
  const Syz2Report r = syz2_span(ring, model.i2, surface);

  TheoremCheck c;
  c.family = model.family;
  c.genus = model.genus;
  c.kappa11 = model.i2.dim();
  c.kappa21 = r.kappa21;
  c.expected_kappa21 = expected_kappa21(model.genus);
  c.dim_w = r.w.dim();
  c.verdict = r.verdict;
  c.expected_verdict = expected_verdict(model);
  c.surface_match = r.surface_match;

  const std::size_t g = static_cast<std::size_t>(model.genus);
  c.pass = true;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) {
      c.pass = false;
      c.notes.push_back(what);
    }
  };
  require(c.kappa11 == binomial(g - 2, 2), "dim I2 != C(g-2,2)");
  require(c.kappa21 == c.expected_kappa21, "kappa21 != (g-1)(g-3)(g-5)/3");
  require(c.verdict == c.expected_verdict, std::string("verdict ") + std::string(to_string(c.verdict)) +
                                               ", expected " + std::string(to_string(c.expected_verdict)));
  if (c.expected_verdict == Verdict::kProperSurface) {
    require(c.dim_w + 1 == c.kappa11, "dim W != dim I2 - 1");
    if (surface) {
      require(c.surface_match.value_or(false), "W differs from the surface quadrics");
    } else {
      c.notes.push_back("no surface quadrics supplied; W compared by dimension only");
    }
  }
  return c;
}

}  // namespace syzlab
