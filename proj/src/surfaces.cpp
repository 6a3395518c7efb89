#include "syzlab/surfaces.hpp"

#include <algorithm>
#include <string>

#include "syzlab/errors.hpp"
#include "syzlab/linalg.hpp"
#include "syzlab/scroll.hpp"

namespace syzlab {
namespace {

constexpr int kMaxDoublings = 4;
// Consecutive empty draws tolerated before the sampler is declared dry.
constexpr std::size_t kMaxEmptyDraws = 10000;

std::vector<Point> draw(const PointSampler& sampler, std::size_t n, Rng& rng) {
  std::vector<Point> out;
  out.reserve(n);
  std::size_t misses = 0;
  while (out.size() < n) {
    if (auto p = sampler(rng)) {
      out.push_back(std::move(*p));
      misses = 0;
    } else if (++misses > kMaxEmptyDraws) {
      throw Error(ErrorCode::kSampleExhausted,
                  "could not sample enough points (" + std::to_string(out.size()) + " of " +
                      std::to_string(n) + ")");
    }
  }
  return out;
}

Subspace embed_quadrics(const GradedRing& target, std::size_t shift, const Subspace& q, std::size_t source_vars) {
  const MonomialIndexer src(source_vars, 2);
  const auto& dst = target.indexer(2);
  std::vector<std::uint32_t> map(src.size());
  for (std::size_t m = 0; m < src.size(); ++m) {
    Exponent e(target.num_vars(), 0);
    const Exponent& s = src.unrank(m);
    std::copy(s.begin(), s.end(), e.begin() + static_cast<std::ptrdiff_t>(shift));
    map[m] = static_cast<std::uint32_t>(dst.rank(e));
  }
  std::vector<Triplet> trip;
  for (std::size_t r = 0; r < q.dim(); ++r)
    for (const auto& e : q.basis().row(r)) trip.push_back({r, map[e.col], e.value});
  return Subspace::span(SparseMatrix::from_triplets(q.dim(), dst.size(), std::move(trip), target.field()),
                        target.field());
}

GradedVector random_quadric(const GradedRing& ring, Rng& rng) {
  GradedVector q = ring.zero(2);
  for (auto& c : q.coeffs) c = rng.residue(ring.field());
  return q;
}

Subspace add_quadric(const GradedRing& ring, const Subspace& base, const GradedVector& q) {
  SparseMatrix gens = base.basis();
  gens.append_dense_row(q.coeffs);
  return Subspace::span(gens, ring.field());
}

void require_genus(int genus, int lo, int hi, const char* what) {
  if (genus < lo || genus > hi) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " needs " + std::to_string(lo) +
                                                 " <= g <= " + std::to_string(hi) + ", got " +
                                                 std::to_string(genus));
  }
}

}  // namespace

bool is_nonsingular(const WeierstrassCurve& c, const PrimeField& f) {
  const Residue a3 = f.mul(f.mul(c.a4, c.a4), c.a4);
  const Residue disc = f.add(f.mul(4, a3), f.mul(27, f.mul(c.a6, c.a6)));
  return disc != 0;
}

WeierstrassCurve random_weierstrass(std::uint64_t seed, const PrimeField& f) {
  Rng rng(mix_seed(seed, 0x57e1));
  for (;;) {
    WeierstrassCurve c{rng.residue(f), rng.residue(f)};
    if (is_nonsingular(c, f)) return c;
  }
}

std::optional<std::pair<Residue, Residue>> try_curve_point(const WeierstrassCurve& c, Rng& rng,
                                                           const PrimeField& f) {
  const Residue x = rng.residue(f);
  const Residue rhs = f.add(f.add(f.mul(f.mul(x, x), x), f.mul(c.a4, x)), c.a6);
  Residue y = 0;
  if (!f.sqrt(rhs, y)) return std::nullopt;
  if (rng.below(2) == 1) y = f.neg(y);
  return std::pair{x, y};
}

Subspace quadrics_through(std::size_t n, const std::vector<Point>& points, const PrimeField& f) {
  const MonomialIndexer idx(n, 2);
  // Column of Z_u Z_v for u <= v.
  std::vector<std::pair<std::size_t, std::size_t>> factors(idx.size());
  for (std::size_t m = 0; m < idx.size(); ++m) {
    const Exponent& e = idx.unrank(m);
    std::size_t vars[2], k = 0;
    for (std::size_t v = 0; v < n; ++v)
      for (int r = 0; r < e[v]; ++r) vars[k++] = v;
    factors[m] = {vars[0], vars[1]};
  }
  SparseMatrix eval(0, idx.size());
  std::vector<Residue> row(idx.size());
  for (const auto& p : points) {
    if (p.size() != n) throw Error(ErrorCode::kDimensionMismatch, "sample point has wrong length");
    for (std::size_t m = 0; m < idx.size(); ++m) row[m] = f.mul(p[factors[m].first], p[factors[m].second]);
    eval.append_dense_row(row);
  }
  return kernel_basis(eval, f);
}

Interpolation interpolate_quadrics(std::size_t n, const PointSampler& sampler, Rng& rng, const PrimeField& f) {
  Interpolation out;
  out.points = draw(sampler, 3 * graded_dim(n, 2), rng);
  out.quadrics = quadrics_through(n, out.points, f);
  for (int round = 0; round < kMaxDoublings; ++round) {
    std::vector<Point> more = draw(sampler, out.points.size(), rng);
    out.points.insert(out.points.end(), more.begin(), more.end());
    Subspace doubled = quadrics_through(n, out.points, f);
    if (doubled == out.quadrics) return out;
    out.quadrics = std::move(doubled);
  }
  throw Error(ErrorCode::kSampleExhausted, "quadric interpolation did not stabilize");
}

Interpolation elliptic_normal_ideal(int n, const WeierstrassCurve& curve, std::uint64_t seed,
                                    const PrimeField& f) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "elliptic normal curves need degree >= 3");
  if (!is_nonsingular(curve, f)) throw Error(ErrorCode::kInvalidArgument, "singular Weierstrass curve");
  Rng rng(seed);
  const PointSampler sampler = [&](Rng& r) -> std::optional<Point> {
    const auto xy = try_curve_point(curve, r, f);
    if (!xy) return std::nullopt;
    const auto [x, y] = *xy;
    Point p;
    p.reserve(static_cast<std::size_t>(n));
    p.push_back(1);
    // Pole order k: x^(k/2) for even k, x^((k-3)/2) y for odd k.
    for (int k = 2; k <= n; ++k) {
      p.push_back(k % 2 == 0 ? f.pow(x, static_cast<std::uint64_t>(k / 2))
                             : f.mul(f.pow(x, static_cast<std::uint64_t>((k - 3) / 2)), y));
    }
    return p;
  };
  return interpolate_quadrics(static_cast<std::size_t>(n), sampler, rng, f);
}

SurfaceModel elliptic_cone(int genus, const WeierstrassCurve& curve, std::uint64_t seed, const PrimeField& f) {
  require_genus(genus, 6, 16, "elliptic cone");
  const Interpolation base = elliptic_normal_ideal(genus - 1, curve, seed, f);
  GradedRing ring(static_cast<std::size_t>(genus), f, 2);
  SurfaceModel s;
  s.kind = SurfaceKind::kEllipticCone;
  s.genus = genus;
  s.i2 = embed_quadrics(ring, 1, base.quadrics, static_cast<std::size_t>(genus - 1));
  Rng rng(mix_seed(seed, 0xc0e));
  for (const auto& p : base.points) {
    const Residue lambda = rng.residue(f);
    const Residue mu = rng.nonzero_residue(f);
    Point z{lambda};
    for (Residue c : p) z.push_back(f.mul(mu, c));
    s.sample_points.push_back(std::move(z));
  }
  return s;
}

CurveModel bielliptic_curve(int genus, const WeierstrassCurve& curve, std::uint64_t seed, const PrimeField& f) {
  const SurfaceModel cone = elliptic_cone(genus, curve, seed, f);
  GradedRing ring(static_cast<std::size_t>(genus), f, 2);
  Rng rng(mix_seed(seed, 0xb1e));
  const std::size_t target = binomial(static_cast<std::size_t>(genus - 2), 2);
  for (int attempt = 0; attempt < kMaxGenericityRetries; ++attempt) {
    const GradedVector q = random_quadric(ring, rng);
    if (q.coeffs[0] == 0) continue;  // the quadric must miss the vertex
    Subspace i2 = add_quadric(ring, cone.i2, q);
    if (i2.dim() != target) continue;
    CurveModel m;
    m.genus = genus;
    m.prime = f.prime();
    m.family = Family::kBielliptic;
    m.params.seed = seed;
    m.params.weierstrass = curve;
    m.i2 = std::move(i2);
    m.surface_i2 = cone.i2;
    return m;
  }
  throw Error(ErrorCode::kGenericityExhausted, "no quadric avoiding the cone vertex was found");
}

CurveModel bielliptic_curve(int genus, std::uint64_t seed, const PrimeField& f) {
  return bielliptic_curve(genus, random_weierstrass(seed, f), seed, f);
}

SurfaceModel delpezzo_surface(int genus, std::uint64_t seed, const PrimeField& f,
                              std::vector<std::array<Residue, 3>>* base_points_out) {
  require_genus(genus, 6, 10, "Del Pezzo surface");
  const std::size_t n_points = static_cast<std::size_t>(10 - genus);
  const std::size_t target = binomial(static_cast<std::size_t>(genus - 2), 2) - 1;
  const MonomialIndexer cubic(3, 3);
  Rng rng(seed);
  auto cubic_monomials = [&](const std::array<Residue, 3>& p) {
    std::vector<Residue> v(cubic.size());
    for (std::size_t m = 0; m < cubic.size(); ++m) {
      const Exponent& e = cubic.unrank(m);
      v[m] = f.mul(f.mul(f.pow(p[0], e[0]), f.pow(p[1], e[1])), f.pow(p[2], e[2]));
    }
    return v;
  };
  for (int attempt = 0; attempt < kMaxGenericityRetries; ++attempt) {
    std::vector<std::array<Residue, 3>> base(n_points);
    SparseMatrix conditions(0, cubic.size());
    for (auto& p : base) {
      p = {rng.residue(f), rng.residue(f), 1};
      conditions.append_dense_row(cubic_monomials(p));
    }
    const Subspace cubics = kernel_basis(conditions, f);
    if (cubics.dim() != static_cast<std::size_t>(genus)) continue;
    const PointSampler sampler = [&](Rng& r) -> std::optional<Point> {
      const std::array<Residue, 3> p{r.residue(f), r.residue(f), r.nonzero_residue(f)};
      const auto mono = cubic_monomials(p);
      Point z(cubics.dim());
      for (std::size_t i = 0; i < cubics.dim(); ++i) {
        Residue acc = 0;
        for (const auto& e : cubics.basis().row(i)) acc = f.add(acc, f.mul(e.value, mono[e.col]));
        z[i] = acc;
      }
      if (std::all_of(z.begin(), z.end(), [](Residue c) { return c == 0; })) return std::nullopt;
      return z;
    };
    Interpolation interp = interpolate_quadrics(static_cast<std::size_t>(genus), sampler, rng, f);
    if (interp.quadrics.dim() != target) continue;
    if (base_points_out) *base_points_out = base;
    SurfaceModel s;
    s.kind = genus == 10 ? SurfaceKind::kVeronese : SurfaceKind::kDelPezzo;
    s.genus = genus;
    s.i2 = std::move(interp.quadrics);
    s.sample_points = std::move(interp.points);
    return s;
  }
  throw Error(ErrorCode::kGenericityExhausted, "base points stayed in special position");
}

CurveModel delpezzo_curve(int genus, std::uint64_t seed, const PrimeField& f) {
  std::vector<std::array<Residue, 3>> base;
  const SurfaceModel s = delpezzo_surface(genus, seed, f, &base);
  GradedRing ring(static_cast<std::size_t>(genus), f, 2);
  Rng rng(mix_seed(seed, 0xde1));
  const std::size_t target = binomial(static_cast<std::size_t>(genus - 2), 2);
  for (int attempt = 0; attempt < kMaxGenericityRetries; ++attempt) {
    Subspace i2 = add_quadric(ring, s.i2, random_quadric(ring, rng));
    if (i2.dim() != target) continue;
    CurveModel m;
    m.genus = genus;
    m.prime = f.prime();
    m.family = genus == 10 ? Family::kVeronese : Family::kDelPezzo;
    m.params.seed = seed;
    m.params.base_points = std::move(base);
    m.i2 = std::move(i2);
    m.surface_i2 = s.i2;
    return m;
  }
  throw Error(ErrorCode::kGenericityExhausted, "random quadric fell inside I_S,2");
}

CurveModel genus5_intersection(std::uint64_t seed, const PrimeField& f) {
  GradedRing ring(5, f, 2);
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxGenericityRetries; ++attempt) {
    SparseMatrix gens(0, ring.dim(2));
    for (int i = 0; i < 3; ++i) gens.append_dense_row(random_quadric(ring, rng).coeffs);
    Subspace i2 = Subspace::span(gens, f);
    if (i2.dim() != 3) continue;
    CurveModel m;
    m.genus = 5;
    m.prime = f.prime();
    m.family = Family::kGenus5;
    m.params.seed = seed;
    m.i2 = std::move(i2);
    return m;
  }
  throw Error(ErrorCode::kGenericityExhausted, "three random quadrics were dependent");
}

CurveModel construct_model(Family family, int genus, const ConstructionParams& params, const PrimeField& f) {
  switch (family) {
    case Family::kGenus5:
      if (genus != 5) throw Error(ErrorCode::kInvalidArgument, "genus5 models have g = 5");
      return genus5_intersection(params.seed, f);
    case Family::kBielliptic:
      return params.weierstrass ? bielliptic_curve(genus, *params.weierstrass, params.seed, f)
                                : bielliptic_curve(genus, params.seed, f);
    case Family::kDelPezzo:
      require_genus(genus, 6, 9, "delpezzo");
      return delpezzo_curve(genus, params.seed, f);
    case Family::kVeronese:
      if (genus != 10) throw Error(ErrorCode::kInvalidArgument, "veronese models have g = 10");
      return delpezzo_curve(genus, params.seed, f);
    case Family::kFourgonal: {
      if (genus < 6) throw Error(ErrorCode::kInvalidArgument, "fourgonal models need g >= 6");
      int a = params.a.value_or(-1);
      int b = params.b.value_or(-1);
      if (a < 0 && b < 0) {
        a = (genus - 5 + 1) / 2;
        b = (genus - 5) / 2;
      } else if (a < 0) {
        a = genus - 5 - b;
      } else if (b < 0) {
        b = genus - 5 - a;
      }
      const ScrollFrame frame = params.frame ? ScrollFrame(*params.frame) : default_fourgonal_frame(genus, a, b);
      if (frame.genus() != genus) {
        throw Error(ErrorCode::kInvalidArgument, "frame genus " + std::to_string(frame.genus()) +
                                                     " does not match g = " + std::to_string(genus));
      }
      return fourgonal_curve(frame, a, b, params.seed, f);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family");
}

}  // namespace syzlab
