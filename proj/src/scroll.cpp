#include "syzlab/scroll.hpp"

#include <algorithm>
#include <string>

#include "syzlab/errors.hpp"
#include "syzlab/linalg.hpp"
#include "syzlab/random.hpp"

namespace syzlab {
namespace {

std::vector<Residue> random_coords(std::size_t n, Rng& rng, const PrimeField& f) {
  std::vector<Residue> v(n);
  do {
    for (auto& x : v) x = rng.residue(f);
  } while (std::all_of(v.begin(), v.end(), [](Residue r) { return r == 0; }));
  return v;
}

std::vector<GradedVector> multiples_lifted(const GradedRing& ring, const Section2H& q, int degree) {
  std::vector<GradedVector> out;
  for (int i = 0; i <= degree; ++i) {
    out.push_back(lift_section(ring, multiply_binary(q, i, degree, ring.field())));
  }
  return out;
}

// Offset of each block inside the flattened section coordinates.
std::array<std::size_t, 6> block_offsets(const ScrollFrame& frame, int twist) {
  std::array<std::size_t, 6> off{};
  std::size_t acc = 0;
  for (std::size_t p = 0; p < 6; ++p) {
    off[p] = acc;
    acc += static_cast<std::size_t>(std::max(0, block_degree(frame, p, twist) + 1));
  }
  return off;
}

std::size_t pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  for (std::size_t p = 0; p < kRulingPairs.size(); ++p) {
    if (kRulingPairs[p].first == i && kRulingPairs[p].second == j) return p;
  }
  throw Error(ErrorCode::kInvalidArgument, "ruling index out of range");
}

}  // namespace

ScrollFrame::ScrollFrame(int k1, int k2, int k3) : k_{k1, k2, k3} {
  if (k1 < 0 || k1 > k2 || k2 > k3) {
    throw Error(ErrorCode::kInvalidArgument,
                "scroll type must satisfy 0 <= k1 <= k2 <= k3, got (" + std::to_string(k1) + "," +
                    std::to_string(k2) + "," + std::to_string(k3) + ")");
  }
  if (genus() > 16) {
    throw Error(ErrorCode::kInvalidArgument, "scroll types are supported up to g = 16");
  }
  offset_ = {0, static_cast<std::size_t>(k1 + 1), static_cast<std::size_t>(k1 + k2 + 2)};
}

std::size_t ScrollFrame::var(int ruling, int power) const {
  if (ruling < 0 || ruling > 2 || power < 0 || power > k(ruling)) {
    throw Error(ErrorCode::kInvalidArgument, "no scroll coordinate for ruling " +
                                                 std::to_string(ruling) + ", power " +
                                                 std::to_string(power));
  }
  return offset_[static_cast<std::size_t>(ruling)] + static_cast<std::size_t>(power);
}

std::pair<int, int> ScrollFrame::bidegree_of(std::size_t v) const {
  for (int i = 2; i >= 0; --i) {
    if (v >= offset_[static_cast<std::size_t>(i)]) {
      const int power = static_cast<int>(v - offset_[static_cast<std::size_t>(i)]);
      if (power > k(i)) break;
      return {i, power};
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "variable " + std::to_string(v) + " outside the scroll");
}

ScrollFrame balanced_frame(int genus) {
  const int n = genus - 3;
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "balanced frame needs g >= 4");
  const int base = n / 3;
  const int r = n % 3;
  return ScrollFrame(base, base + (r == 2 ? 1 : 0), base + (r >= 1 ? 1 : 0));
}

ScrollMatrix scroll_matrix(const ScrollFrame& frame) {
  if (frame.k(1) == 0) {
    throw Error(ErrorCode::kDegenerateScroll, "k2 = 0 does not give a three-dimensional scroll");
  }
  ScrollMatrix m;
  for (int i = 0; i < 3; ++i) {
    for (int a = 0; a < frame.k(i); ++a) {
      m.top.push_back(frame.var(i, a));
      m.bottom.push_back(frame.var(i, a + 1));
    }
  }
  return m;
}

std::vector<GradedVector> minor_forms(const GradedRing& ring, const ScrollFrame& frame) {
  const ScrollMatrix m = scroll_matrix(frame);
  std::vector<GradedVector> out;
  for (std::size_t j = 0; j < m.top.size(); ++j) {
    for (std::size_t k = j + 1; k < m.top.size(); ++k) {
      GradedVector yw = ring.monomial_of_vars({m.top[j], m.bottom[k]});
      GradedVector wy = ring.monomial_of_vars({m.top[k], m.bottom[j]});
      out.push_back(ring.sub(yw, wy));
    }
  }
  return out;
}

Subspace scroll_minors(const GradedRing& ring, const ScrollFrame& frame) {
  return span_of(ring, 2, minor_forms(ring, frame));
}

bool Section2H::is_zero() const {
  for (const auto& b : blocks) {
    for (Residue c : b) {
      if (c != 0) return false;
    }
  }
  return true;
}

int block_degree(const ScrollFrame& frame, std::size_t pair, int twist) {
  const auto [i, j] = kRulingPairs.at(pair);
  return frame.k(i) + frame.k(j) - twist;
}

std::size_t section_dim(const ScrollFrame& frame, int twist) {
  std::size_t d = 0;
  for (std::size_t p = 0; p < 6; ++p) d += static_cast<std::size_t>(std::max(0, block_degree(frame, p, twist) + 1));
  return d;
}

Section2H zero_section(const ScrollFrame& frame, int twist) {
  Section2H s{frame, twist, {}};
  for (std::size_t p = 0; p < 6; ++p) {
    s.blocks[p].assign(static_cast<std::size_t>(std::max(0, block_degree(frame, p, twist) + 1)), 0);
  }
  return s;
}

std::vector<Section2H> section_space(const ScrollFrame& frame, int twist) {
  if (twist < 0) throw Error(ErrorCode::kInvalidArgument, "negative twist");
  std::vector<Section2H> basis;
  const Section2H zero = zero_section(frame, twist);
  for (std::size_t p = 0; p < 6; ++p) {
    for (std::size_t alpha = 0; alpha < zero.blocks[p].size(); ++alpha) {
      Section2H s = zero;
      s.blocks[p][alpha] = 1;
      basis.push_back(std::move(s));
    }
  }
  return basis;
}

std::vector<Residue> section_coords(const Section2H& sec) {
  std::vector<Residue> out;
  for (const auto& b : sec.blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

Section2H section_from_coords(const ScrollFrame& frame, int twist, std::span<const Residue> coords) {
  Section2H s = zero_section(frame, twist);
  if (coords.size() != section_dim(frame, twist)) {
    throw Error(ErrorCode::kDimensionMismatch, "section coordinate vector has wrong length");
  }
  std::size_t pos = 0;
  for (auto& b : s.blocks) {
    for (auto& c : b) c = coords[pos++];
  }
  return s;
}

Section2H multiply_binary(const Section2H& sec, int s_power, int degree, const PrimeField& field) {
  if (degree < 0 || s_power < 0 || s_power > degree) {
    throw Error(ErrorCode::kInvalidArgument, "binary monomial out of range");
  }
  Section2H out = zero_section(sec.frame, sec.twist - degree);
  for (std::size_t p = 0; p < 6; ++p) {
    for (std::size_t alpha = 0; alpha < sec.blocks[p].size(); ++alpha) {
      auto& slot = out.blocks[p][alpha + static_cast<std::size_t>(s_power)];
      slot = field.add(slot, sec.blocks[p][alpha]);
    }
  }
  return out;
}

Section2H add_sections(const Section2H& a, const Section2H& b, const PrimeField& field) {
  if (a.frame != b.frame || a.twist != b.twist) {
    throw Error(ErrorCode::kDimensionMismatch, "sections of different line bundles");
  }
  Section2H out = a;
  for (std::size_t p = 0; p < 6; ++p) {
    for (std::size_t i = 0; i < out.blocks[p].size(); ++i) {
      out.blocks[p][i] = field.add(out.blocks[p][i], b.blocks[p][i]);
    }
  }
  return out;
}

Section2H scale_section(const Section2H& a, Residue c, const PrimeField& field) {
  Section2H out = a;
  for (auto& b : out.blocks) {
    for (auto& x : b) x = field.mul(x, c);
  }
  return out;
}

Residue evaluate_section(const Section2H& sec, Residue s, Residue t,
                         const std::array<Residue, 3>& x, const PrimeField& f) {
  Residue total = 0;
  for (std::size_t p = 0; p < 6; ++p) {
    const auto& block = sec.blocks[p];
    if (block.empty()) continue;
    const std::size_t deg = block.size() - 1;
    Residue form = 0;
    for (std::size_t alpha = 0; alpha <= deg; ++alpha) {
      if (block[alpha] == 0) continue;
      form = f.add(form, f.mul(block[alpha], f.mul(f.pow(s, alpha), f.pow(t, deg - alpha))));
    }
    const auto [i, j] = kRulingPairs[p];
    total = f.add(total, f.mul(form, f.mul(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)])));
  }
  return total;
}

GradedVector lift_section(const GradedRing& ring, const Section2H& sec, LiftSplit split) {
  if (sec.twist != 0) {
    throw Error(ErrorCode::kLiftOfTwistedSection,
                "only twist-0 sections lift; multiply by a binary form of degree " +
                    std::to_string(sec.twist) + " first");
  }
  const ScrollFrame& fr = sec.frame;
  if (ring.num_vars() != static_cast<std::size_t>(fr.genus())) {
    throw Error(ErrorCode::kDimensionMismatch, "ring and scroll have different ambient spaces");
  }
  const PrimeField& f = ring.field();
  GradedVector q = ring.zero(2);
  for (std::size_t p = 0; p < 6; ++p) {
    const auto [i, j] = kRulingPairs[p];
    for (std::size_t alpha = 0; alpha < sec.blocks[p].size(); ++alpha) {
      const Residue c = sec.blocks[p][alpha];
      if (c == 0) continue;
      const int al = static_cast<int>(alpha);
      int a, b;
      if (split == LiftSplit::kFirstFactor) {
        a = std::min(al, fr.k(i));
        b = al - a;
      } else {
        b = std::min(al, fr.k(j));
        a = al - b;
      }
      Exponent e(ring.num_vars(), 0);
      ++e[fr.var(i, a)];
      ++e[fr.var(j, b)];
      auto& slot = q.coeffs[ring.indexer(2).rank(e)];
      slot = f.add(slot, c);
    }
  }
  return q;
}

Section2H restrict_to_scroll(const ScrollFrame& frame, const GradedVector& quadric,
                             const PrimeField& field) {
  if (quadric.degree != 2) throw Error(ErrorCode::kDimensionMismatch, "restriction expects a quadric");
  MonomialIndexer idx(static_cast<std::size_t>(frame.genus()), 2);
  if (quadric.coeffs.size() != idx.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "quadric has the wrong number of variables");
  }
  Section2H out = zero_section(frame, 0);
  std::vector<std::pair<std::size_t, std::size_t>> targets(idx.size());
  for (std::size_t m = 0; m < idx.size(); ++m) {
    const Exponent& e = idx.unrank(m);
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < e.size(); ++v) {
      for (int r = 0; r < e[v]; ++r) vars.push_back(v);
    }
    const auto [i, a] = frame.bidegree_of(vars[0]);
    const auto [j, b] = frame.bidegree_of(vars[1]);
    targets[m] = {pair_index(i, j), static_cast<std::size_t>(a + b)};
  }
  for (std::size_t m = 0; m < idx.size(); ++m) {
    if (quadric.coeffs[m] == 0) continue;
    auto& slot = out.blocks[targets[m].first][targets[m].second];
    slot = field.add(slot, quadric.coeffs[m]);
  }
  return out;
}

Subspace restrict_subspace(const GradedRing& ring, const ScrollFrame& frame, const Subspace& quadrics) {
  const PrimeField& f = ring.field();
  SparseMatrix m(0, section_dim(frame, 0));
  for (std::size_t r = 0; r < quadrics.dim(); ++r) {
    m.append_dense_row(section_coords(restrict_to_scroll(frame, basis_form(quadrics, 2, r), f)));
  }
  return Subspace::span(m, f);
}

std::vector<ScrollPoint> scroll_points(const ScrollFrame& frame, std::size_t n, std::uint64_t seed,
                                       const PrimeField& f) {
  Rng rng(seed);
  std::vector<ScrollPoint> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ScrollPoint pt;
    pt.s = rng.residue(f);
    pt.t = rng.residue(f);
    for (auto& x : pt.x) x = rng.residue(f);
    pt.ambient.assign(static_cast<std::size_t>(frame.genus()), 0);
    for (int r = 0; r < 3; ++r) {
      for (int a = 0; a <= frame.k(r); ++a) {
        pt.ambient[frame.var(r, a)] =
            f.mul(pt.x[static_cast<std::size_t>(r)],
                  f.mul(f.pow(pt.s, static_cast<std::uint64_t>(a)),
                        f.pow(pt.t, static_cast<std::uint64_t>(frame.k(r) - a))));
      }
    }
    pts.push_back(std::move(pt));
  }
  return pts;
}

std::vector<GradedVector> top_row_cofactors(const GradedRing& ring, const ScrollFrame& frame,
                                            const GradedVector& q1) {
  const ScrollMatrix m = scroll_matrix(frame);
  const PrimeField& f = ring.field();
  std::vector<long> column_of(ring.num_vars(), -1);
  for (std::size_t j = 0; j < m.top.size(); ++j) column_of[m.top[j]] = static_cast<long>(j);
  std::vector<GradedVector> cof(m.top.size(), ring.zero(1));
  const auto& idx = ring.indexer(2);
  for (std::size_t mono = 0; mono < q1.coeffs.size(); ++mono) {
    const Residue c = q1.coeffs[mono];
    if (c == 0) continue;
    const Exponent& e = idx.unrank(mono);
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < e.size(); ++v) {
      for (int r = 0; r < e[v]; ++r) vars.push_back(v);
    }
    std::size_t y, other;
    if (column_of[vars[0]] >= 0) {
      y = vars[0];
      other = vars[1];
    } else if (column_of[vars[1]] >= 0) {
      y = vars[1];
      other = vars[0];
    } else {
      throw Error(ErrorCode::kMalformedInput,
                  "quadric has a monomial without a factor from the first row of the scroll matrix");
    }
    auto& slot = cof[static_cast<std::size_t>(column_of[y])].coeffs[other];
    slot = f.add(slot, c);
  }
  return cof;
}

RollingFactors rolling_factors(const GradedRing& ring, const ScrollFrame& frame,
                               const GradedVector& q1, std::span<const GradedVector> cofactors,
                               std::span<const Residue> alpha) {
  const ScrollMatrix m = scroll_matrix(frame);
  const std::size_t n = m.top.size();
  if (cofactors.size() != n || alpha.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "rolling factors needs " + std::to_string(n) + " linear forms and scalars");
  }
  if (std::all_of(alpha.begin(), alpha.end(), [](Residue r) { return r == 0; })) {
    throw Error(ErrorCode::kInvalidArgument, "all rolling scalars are zero");
  }
  GradedVector check = ring.zero(2);
  RollingFactors rf{ring.zero(2), ring.zero(1), ring.zero(1), {}};
  for (std::size_t j = 0; j < n; ++j) {
    if (cofactors[j].degree != 1) throw Error(ErrorCode::kMalformedInput, "cofactors must be linear forms");
    const GradedVector y = ring.variable(m.top[j]);
    const GradedVector w = ring.variable(m.bottom[j]);
    check = ring.add(check, ring.multiply(cofactors[j], y));
    rf.q2 = ring.add(rf.q2, ring.multiply(cofactors[j], w));
    rf.h1 = ring.add(rf.h1, ring.scale(y, alpha[j]));
    rf.h2 = ring.add(rf.h2, ring.scale(w, alpha[j]));
  }
  if (check != q1) {
    throw Error(ErrorCode::kMalformedInput, "q1 is not sum_j A_j Y_j for the given linear forms");
  }
  rf.delta.assign(n, std::vector<GradedVector>(n, ring.zero(1)));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      rf.delta[j][k] = ring.sub(ring.scale(cofactors[j], alpha[k]), ring.scale(cofactors[k], alpha[j]));
    }
  }
  return rf;
}

bool rolling_identity_holds(const GradedRing& ring, const ScrollFrame& frame,
                            const GradedVector& q1, const RollingFactors& rf) {
  const std::vector<GradedVector> minors = minor_forms(ring, frame);
  const std::size_t n = rf.delta.size();
  GradedVector lhs = ring.sub(ring.multiply(rf.h2, q1), ring.multiply(rf.h1, rf.q2));
  GradedVector rhs = ring.zero(3);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      rhs = ring.add(rhs, ring.multiply(rf.delta[j][k], minors[idx++]));
    }
  }
  return lhs == rhs;
}

ScrollFrame default_fourgonal_frame(int genus, int a, int b) {
  if (std::min(a, b) > 0) return balanced_frame(genus);
  switch (genus) {
    case 6: return ScrollFrame(1, 1, 1);
    case 7: return ScrollFrame(1, 1, 2);
    case 8: return ScrollFrame(1, 2, 2);
    case 9: return ScrollFrame(2, 2, 2);
    default: break;
  }
  if (genus < 6) throw Error(ErrorCode::kInvalidArgument, "four-gonal models need g >= 6");
  const int n = genus - 3;
  return ScrollFrame(0, n / 2, n - n / 2);
}

FourgonalConstruction build_fourgonal(const ScrollFrame& frame, int a, int b, std::uint64_t seed,
                                      const PrimeField& field) {
  const int g = frame.genus();
  if (g < 6) throw Error(ErrorCode::kInvalidArgument, "four-gonal models need g >= 6");
  if (a < 0 || b < 0 || a + b != g - 5) {
    throw Error(ErrorCode::kInvalidArgument,
                "a+b must equal g-5 = " + std::to_string(g - 5) + " with a, b >= 0 (got a=" +
                    std::to_string(a) + ", b=" + std::to_string(b) + ")");
  }
  if (frame.k(2) > (g - 1) / 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "k3 must not exceed floor((g-1)/2) = " + std::to_string((g - 1) / 2) +
                    " for a scroll swept by a g^1_4 (fibres meet the curve in 4 points)");
  }
  const std::size_t dim_a = section_dim(frame, a);
  const std::size_t dim_b = section_dim(frame, b);
  if (dim_a == 0 || dim_b == 0) {
    throw Error(ErrorCode::kEmptyLinearSystem,
                "H^0(O_X(2H - " + std::to_string(dim_a == 0 ? a : b) +
                    "F)) = 0 on this scroll; both |2H-aF| and |2H-bF| must be nonempty");
  }

  GradedRing ring(static_cast<std::size_t>(g), field, 2);
  const std::vector<GradedVector> minors = minor_forms(ring, frame);
  const Subspace scroll_ideal = span_of(ring, 2, minors);
  const std::size_t target = binomial(static_cast<std::size_t>(g - 2), 2);
  Rng rng(seed);

  for (int attempt = 0; attempt < kMaxGenericityRetries; ++attempt) {
    FourgonalConstruction c{CurveModel{}, frame,
                            section_from_coords(frame, a, random_coords(dim_a, rng, field)),
                            section_from_coords(frame, b, random_coords(dim_b, rng, field)),
                            {},
                            {}};
    c.lifts_a = multiples_lifted(ring, c.q1, a);
    c.lifts_b = multiples_lifted(ring, c.q2, b);
    std::vector<GradedVector> gens = minors;
    gens.insert(gens.end(), c.lifts_a.begin(), c.lifts_a.end());
    gens.insert(gens.end(), c.lifts_b.begin(), c.lifts_b.end());
    Subspace i2 = span_of(ring, 2, gens);
    if (i2.dim() != target) continue;

    c.model.genus = g;
    c.model.prime = field.prime();
    c.model.family = Family::kFourgonal;
    c.model.params.frame = frame.splitting();
    c.model.params.a = a;
    c.model.params.b = b;
    c.model.params.seed = seed;
    c.model.i2 = std::move(i2);
    c.model.scroll_i2 = scroll_ideal;
    // lambda_1 = 0: the multiples of the twisted quadric cut a surface of degree g - 1.
    const std::vector<GradedVector>* surface_lifts = nullptr;
    if (a == g - 5) surface_lifts = &c.lifts_a;
    if (b == g - 5) surface_lifts = &c.lifts_b;
    if (surface_lifts) {
      std::vector<GradedVector> s = minors;
      s.insert(s.end(), surface_lifts->begin(), surface_lifts->end());
      c.model.surface_i2 = span_of(ring, 2, s);
    }
    return c;
  }
  throw Error(ErrorCode::kGenericityExhausted,
              "no draw of Q1, Q2 gave dim I_C,2 = C(g-2,2) = " + std::to_string(target) + " after " +
                  std::to_string(kMaxGenericityRetries) + " attempts");
}

CurveModel fourgonal_curve(const ScrollFrame& frame, int a, int b, std::uint64_t seed,
                           const PrimeField& field) {
  return build_fourgonal(frame, a, b, seed, field).model;
}

std::pair<int, int> scrollar_bidegrees(const ScrollFrame& frame, const Subspace& curve_sections,
                                       const PrimeField& field) {
  const int g = frame.genus();
  const std::size_t n0 = section_dim(frame, 0);
  if (curve_sections.ambient_dim() != n0 || curve_sections.dim() != static_cast<std::size_t>(g - 3)) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected a (g-3)-dimensional subspace of H^0(O_X(2H)), got dim " +
                    std::to_string(curve_sections.dim()));
  }
  // Linear functionals cutting out the subspace.
  const Subspace annihilator = kernel_basis(curve_sections.basis(), field);
  const auto off0 = block_offsets(frame, 0);

  int lambda0 = -1;
  for (int lambda = 2 * frame.k(2); lambda >= 0; --lambda) {
    const std::size_t n = section_dim(frame, lambda);
    if (n == 0) continue;
    const auto off = block_offsets(frame, lambda);
    // sigma lies in H^0(I_C/X(2H - lambda F)) iff every s^c t^(lambda-c) sigma
    // lands in the curve's sections.
    std::vector<Triplet> trip;
    std::size_t row = 0;
    for (int c = 0; c <= lambda; ++c) {
      for (std::size_t r = 0; r < annihilator.dim(); ++r, ++row) {
        const auto functional = annihilator.basis_vector(r);
        for (std::size_t p = 0; p < 6; ++p) {
          const int deg = block_degree(frame, p, lambda);
          for (int alpha = 0; alpha <= deg; ++alpha) {
            const Residue v = functional[off0[p] + static_cast<std::size_t>(alpha + c)];
            if (v != 0) trip.push_back({row, off[p] + static_cast<std::size_t>(alpha), v});
          }
        }
      }
    }
    SparseMatrix conditions = SparseMatrix::from_triplets(row, n, std::move(trip), field);
    if (kernel_basis(conditions, field).dim() > 0) {
      lambda0 = lambda;
      break;
    }
  }
  if (lambda0 < 0 || lambda0 > g - 5) {
    throw Error(ErrorCode::kModelInconsistency,
                "lambda_0 = " + std::to_string(lambda0) + " violates lambda_0 <= g-5 = " +
                    std::to_string(g - 5));
  }
  return {lambda0, g - 5 - lambda0};
}

RelativeSyzygySplit relative_syzygy_split(const GradedRing& ring, const FourgonalConstruction& c) {
  const PrimeField& f = ring.field();
  const std::size_t g = ring.num_vars();
  const Subspace scroll_ideal = scroll_minors(ring, c.frame);
  const QuotientPiece cubic(ring, 3, ideal_piece(ring, scroll_ideal, 3));

  std::vector<GradedVector> lifts = c.lifts_a;
  lifts.insert(lifts.end(), c.lifts_b.begin(), c.lifts_b.end());
  const std::size_t na = c.lifts_a.size();

  // Row l*g + v is Z_v * lift_l reduced modulo the scroll's cubics.
  SparseMatrix rows(0, cubic.dim());
  SparseMatrix rows_a(0, cubic.dim());
  SparseMatrix rows_b(0, cubic.dim());
  for (std::size_t l = 0; l < lifts.size(); ++l) {
    for (std::size_t v = 0; v < g; ++v) {
      auto nf = cubic.normal_form(ring.multiply(ring.variable(v), lifts[l]), f);
      rows.append_dense_row(nf);
      (l < na ? rows_a : rows_b).append_dense_row(nf);
    }
  }
  RelativeSyzygySplit out;
  out.h0_3h = cubic.dim();
  out.cubic_image = rank(rows, f);
  const Subspace all = left_kernel(rows, f);
  const Subspace ka = left_kernel(rows_a, f);
  const Subspace kb = left_kernel(rows_b, f);
  out.total = all.dim();
  out.from_a = ka.dim();
  out.from_b = kb.dim();

  const std::size_t total_len = rows.rows();
  const std::size_t shift = rows_a.rows();
  SparseMatrix embedded(0, total_len);
  for (std::size_t r = 0; r < ka.dim(); ++r) embedded.append_row(ka.basis().row(r));
  for (std::size_t r = 0; r < kb.dim(); ++r) {
    SparseRow row;
    for (const auto& e : kb.basis().row(r)) row.push_back({static_cast<std::uint32_t>(e.col + shift), e.value});
    embedded.append_row(std::move(row));
  }
  out.splits = Subspace::span(embedded, f) == all;
  return out;
}

}  // namespace syzlab
