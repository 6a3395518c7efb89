// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support/dense_oracle.hpp"
#include "support/helpers.hpp"
#include "syzlab/koszul.hpp"
#include "syzlab/linalg.hpp"
#include "syzlab/scroll.hpp"
#include "syzlab/surfaces.hpp"

using namespace syzlab;

namespace {

const PrimeField kField(kDefaultPrime);

// Wall-clock limits in seconds.
constexpr double kKappaPerModelLimit = 10.0;
constexpr double kGenus6BettiLimit = 30.0;
constexpr double kVeroneseLimit = 60.0;
constexpr double kSweepLimit = 300.0;
constexpr double kGenus5Limit = 1.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::size_t choose2(int n) { return static_cast<std::size_t>(n * (n - 1) / 2); }

Outcome kappa21_formula() {
  Outcome o;
  double worst = 0;
  std::size_t models = 0;
  for (int g = 6; g <= 12; ++g) {
    GradedRing ring(static_cast<std::size_t>(g), kField, 3);
    std::vector<std::function<CurveModel()>> builders;
    const int b = (g - 5) / 2, a = g - 5 - b;
    if (b > 0) builders.push_back([=] { return fourgonal_curve(default_fourgonal_frame(g, a, b), a, b, 1, kField); });
    builders.push_back([=] { return fourgonal_curve(default_fourgonal_frame(g, g - 5, 0), g - 5, 0, 1, kField); });
    builders.push_back([=] { return bielliptic_curve(g, 1, kField); });
    if (g <= 10) builders.push_back([=] { return delpezzo_curve(g, 1, kField); });
    for (const auto& build : builders) {
      const auto t0 = Clock::now();
      const CurveModel m = build();
      const std::size_t k = linear_syzygies(ring, m.i2).size();
      const double dt = seconds_since(t0);
      worst = std::max(worst, dt);
      ++models;
      o.require(k == expected_kappa21(g), "g=" + std::to_string(g) + " " + std::string(to_string(m.family)) +
                                              ": kappa21=" + std::to_string(k));
      if (g == 12) o.require(dt < kKappaPerModelLimit, "g=12 model took " + std::to_string(dt) + " s");
    }
  }
  if (o.pass) o.detail = std::to_string(models) + " models, slowest " + std::to_string(worst) + " s";
  return o;
}

Outcome genus6_betti() {
  Outcome o;
  const auto t0 = Clock::now();
  GradedRing ring(6, kField, 4);
  const CurveModel c = delpezzo_curve(6, 1, kField);
  KoszulOptions canon;
  canon.canonical_curve = true;
  const BettiTable tc = betti_table(ring, c.i2, 4, 3, canon);
  const BettiTable ts = betti_table(ring, *c.surface_i2, 3, 2);
  const std::vector<std::vector<std::size_t>> curve{{1, 0, 0, 0, 0}, {0, 6, 5, 0, 0}, {0, 0, 5, 6, 0}, {0, 0, 0, 0, 1}};
  const std::vector<std::vector<std::size_t>> surface{{1, 0, 0, 0}, {0, 5, 5, 0}, {0, 0, 0, 1}};
  for (std::size_t q = 0; q < curve.size(); ++q)
    for (std::size_t p = 0; p < curve[q].size(); ++p)
      o.require(tc.kappa[q][p] == curve[q][p], "curve kappa_" + std::to_string(p) + "," + std::to_string(q));
  for (std::size_t q = 0; q < surface.size(); ++q)
    for (std::size_t p = 0; p < surface[q].size(); ++p)
      o.require(ts.kappa[q][p] == surface[q][p], "surface kappa_" + std::to_string(p) + "," + std::to_string(q));
  const double dt = seconds_since(t0);
  o.require(dt < kGenus6BettiLimit, "took " + std::to_string(dt) + " s");
  if (o.pass) o.detail = std::to_string(dt) + " s";
  return o;
}

Outcome veronese_counts() {
  Outcome o;
  const auto t0 = Clock::now();
  GradedRing ring(10, kField, 3);
  const CurveModel c = delpezzo_curve(10, 1, kField);
  const Subspace& s = *c.surface_i2;
  o.require(c.i2.dim() == 28, "kappa11(C) = " + std::to_string(c.i2.dim()));
  o.require(s.dim() == 27, "kappa11(S) = " + std::to_string(s.dim()));
  const std::size_t is3 = ideal_piece(ring, s, 3).dim();
  o.require(is3 == 165, "dim I_S,3 = " + std::to_string(is3));
  const std::size_t ks = kappa21(ring, s), kc = kappa21(ring, c.i2);
  o.require(ks == 105, "kappa21(S) = " + std::to_string(ks));
  o.require(kc == 105, "kappa21(C) = " + std::to_string(kc));
  const Syz2Report r = syz2_span(ring, c.i2, s);
  o.require(r.surface_match == true, "W(C) != I_S,2");
  const double dt = seconds_since(t0);
  o.require(dt < kVeroneseLimit, "took " + std::to_string(dt) + " s");
  if (o.pass) o.detail = std::to_string(dt) + " s";
  return o;
}

Outcome theorem_sweep() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t runs = 0;
  for (std::uint64_t seed : {11ull, 22ull, 33ull}) {
    for (int g : {11, 12}) {
      const int b = (g - 5) / 2, a = g - 5 - b;
      const TheoremCheck f = classify_theorem(fourgonal_curve(balanced_frame(g), a, b, seed, kField));
      o.require(f.verdict == Verdict::kEqualsCurve, "fourgonal g=" + std::to_string(g) + " not EqualsCurve");
      const CurveModel bm = bielliptic_curve(g, seed, kField);
      const TheoremCheck bc = classify_theorem(bm);
      o.require(bc.verdict == Verdict::kProperSurface, "bielliptic g=" + std::to_string(g) + " not ProperSurface");
      o.require(bc.surface_match == true, "bielliptic g=" + std::to_string(g) + ": W != cone quadrics");
      o.require(bc.dim_w == choose2(g - 2) - 1, "bielliptic g=" + std::to_string(g) + ": dim W");
      runs += 2;
    }
    for (int g = 6; g <= 10; ++g) {
      const TheoremCheck d = classify_theorem(delpezzo_curve(g, seed, kField));
      o.require(d.verdict == Verdict::kProperSurface && d.surface_match == true,
                "Del Pezzo g=" + std::to_string(g) + ": W != I_S,2");
      ++runs;
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < kSweepLimit, "took " + std::to_string(dt) + " s");
  if (o.pass) o.detail = std::to_string(runs) + " runs, " + std::to_string(dt) + " s";
  return o;
}

Outcome lambda1_zero() {
  Outcome o;
  for (int g = 7; g <= 10; ++g) {
    GradedRing ring(static_cast<std::size_t>(g), kField, 3);
    const CurveModel m = fourgonal_curve(default_fourgonal_frame(g, g - 5, 0), g - 5, 0, 5, kField);
    const Syz2Report r = syz2_span(ring, m.i2, m.surface_i2);
    o.require(r.verdict == Verdict::kProperSurface, "g=" + std::to_string(g) + " verdict");
    o.require(r.w.dim() == choose2(g - 2) - 1, "g=" + std::to_string(g) + " dim W = " + std::to_string(r.w.dim()));
  }
  if (o.pass) o.detail = "g = 7..10";
  return o;
}

Outcome rolling_identity() {
  Outcome o;
  Rng rng(606);
  std::size_t count = 0;
  for (const ScrollFrame f : {ScrollFrame(1, 1, 1), ScrollFrame(2, 2, 2), ScrollFrame(2, 3, 3)}) {
    GradedRing ring(static_cast<std::size_t>(f.genus()), kField, 3);
    const ScrollMatrix m = scroll_matrix(f);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<GradedVector> a(m.top.size(), ring.zero(1));
      std::vector<Residue> alpha(m.top.size());
      GradedVector q1 = ring.zero(2);
      for (std::size_t j = 0; j < a.size(); ++j) {
        for (auto& c : a[j].coeffs) c = rng.residue(kField);
        alpha[j] = rng.nonzero_residue(kField);
        q1 = ring.add(q1, ring.multiply(a[j], ring.variable(m.top[j])));
      }
      const RollingFactors rf = rolling_factors(ring, f, q1, a, alpha);
      o.require(rolling_identity_holds(ring, f, q1, rf), "identity failed");
      ++count;
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " instances";
  return o;
}

Outcome remark_split() {
  Outcome o;
  for (int g = 8; g <= 12; ++g) {
    const int b = (g - 5) / 2, a = g - 5 - b;
    const auto c = build_fourgonal(balanced_frame(g), a, b, 3, kField);
    GradedRing ring(static_cast<std::size_t>(g), kField, 3);
    const RelativeSyzygySplit s = relative_syzygy_split(ring, c);
    const std::string tag = "g=" + std::to_string(g) + ": ";
    o.require(s.h0_3h == static_cast<std::size_t>(10 * g - 20), tag + "h0(3H)");
    o.require(s.total == static_cast<std::size_t>((g - 5) * (g - 3)), tag + "total " + std::to_string(s.total));
    o.require(s.from_a == static_cast<std::size_t>(a * (g - 3)), tag + "a-part");
    o.require(s.from_b == static_cast<std::size_t>(b * (g - 3)), tag + "b-part");
    o.require(s.splits, tag + "does not split");
  }
  if (o.pass) o.detail = "g = 8..12";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  Rng rng(808);
  for (int i = 0; i < 200; ++i) {
    const PrimeField f(i % 4 == 0 ? 7 : kDefaultPrime);
    const std::size_t rows = 1 + rng.below(50), cols = 1 + rng.below(50);
    const SparseMatrix m = i % 2 == 0 ? testing::random_matrix(rows, cols, 0.05 + 0.9 * (rng.below(100) / 100.0), f, rng)
                                      : testing::random_rank_matrix(rows, cols, rng.below(std::min(rows, cols) + 1), f, rng);
    oracle::Matrix dense = testing::to_oracle(m);
    const std::size_t r = oracle::gauss_jordan(dense, f.prime());
    o.require(rank(m, f) == r, "rank mismatch on matrix " + std::to_string(i));
    const Subspace k = kernel_basis(m, f);
    o.require(k.dim() == cols - r, "kernel dimension mismatch on matrix " + std::to_string(i));
    for (std::size_t v = 0; v < k.dim(); ++v) {
      const auto image = apply(m, k.basis_vector(v), f);
      o.require(std::all_of(image.begin(), image.end(), [](Residue x) { return x == 0; }), "kernel vector not in kernel");
    }
  }
  // Interpolation: the quadrics through half the final sample already agree with the full sample.
  std::size_t constructions = 0;
  auto stable = [&](std::size_t n, const std::vector<Point>& pts, const Subspace& q, const std::string& tag) {
    const std::vector<Point> half(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(pts.size() / 2));
    o.require(quadrics_through(n, half, kField) == q, tag + " unstable");
    o.require(quadrics_through(n, pts, kField) == q, tag + " mismatch");
    ++constructions;
  };
  for (int g = 6; g <= 12; ++g) {
    const WeierstrassCurve w = random_weierstrass(static_cast<std::uint64_t>(g), kField);
    const Interpolation e = elliptic_normal_ideal(g - 1, w, 2, kField);
    stable(static_cast<std::size_t>(g - 1), e.points, e.quadrics, "elliptic normal n=" + std::to_string(g - 1));
    const SurfaceModel cone = elliptic_cone(g, w, 2, kField);
    stable(static_cast<std::size_t>(g), cone.sample_points, cone.i2, "cone g=" + std::to_string(g));
  }
  for (int g = 6; g <= 10; ++g) {
    const SurfaceModel s = delpezzo_surface(g, 2, kField);
    stable(static_cast<std::size_t>(g), s.sample_points, s.i2, "Del Pezzo g=" + std::to_string(g));
  }
  if (o.pass) o.detail = "200 matrices, " + std::to_string(constructions) + " interpolations";
  return o;
}

Outcome genus5() {
  Outcome o;
  const auto t0 = Clock::now();
  const CurveModel m = genus5_intersection(1, kField);
  GradedRing ring(5, kField, 3);
  const Syz2Report r = syz2_span(ring, m.i2);
  o.require(r.kappa21 == 0, "kappa21 = " + std::to_string(r.kappa21));
  o.require(r.verdict == Verdict::kWholeSpace, "verdict " + std::string(to_string(r.verdict)));
  const double dt = seconds_since(t0);
  o.require(dt < kGenus5Limit, "took " + std::to_string(dt) + " s");
  if (o.pass) o.detail = std::to_string(dt) + " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"1 kappa21 = (g-1)(g-3)(g-5)/3 for g = 6..12", kappa21_formula},
      {"2 genus-6 Betti tables of C and S", genus6_betti},
      {"3 Veronese and plane-sextic counts", veronese_counts},
      {"4 theorem sweep", theorem_sweep},
      {"5 lambda1 = 0 branch", lambda1_zero},
      {"6 rolling-factors identity", rolling_identity},
      {"7 relative syzygies split", remark_split},
      {"8 oracle equivalence and interpolation stability", oracle_equivalence},
      {"9 genus 5", genus5},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %s (%s)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
