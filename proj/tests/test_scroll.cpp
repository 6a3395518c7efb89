#include <doctest.h>

#include "support/dense_oracle.hpp"
#include "support/helpers.hpp"
#include "support/univariate.hpp"
#include "syzlab/errors.hpp"
#include "syzlab/linalg.hpp"
#include "syzlab/scroll.hpp"

using namespace syzlab;

namespace {

const PrimeField kField(1000003);
constexpr std::int64_t kP = 1000003;

std::vector<ScrollFrame> frames_of_genus(int g) {
  std::vector<ScrollFrame> out;
  for (int k1 = 0; 3 * k1 <= g - 3; ++k1)
    for (int k2 = std::max(k1, 1); k1 + 2 * k2 <= g - 3; ++k2) out.emplace_back(k1, k2, g - 3 - k1 - k2);
  return out;
}

Section2H random_section(const ScrollFrame& frame, int twist, Rng& rng) {
  std::vector<Residue> c(section_dim(frame, twist));
  for (auto& x : c) x = rng.residue(kField);
  return section_from_coords(frame, twist, c);
}

// Independent evaluation of a section from its block data.
std::int64_t eval_blocks(const Section2H& sec, std::int64_t s, std::int64_t t,
                         const std::array<std::int64_t, 3>& x) {
  const std::array<std::pair<int, int>, 6> pairs{{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};
  std::int64_t total = 0;
  for (std::size_t p = 0; p < 6; ++p) {
    const auto& b = sec.blocks[p];
    std::int64_t form = 0;
    for (std::size_t alpha = 0; alpha < b.size(); ++alpha) {
      std::int64_t term = b[alpha];
      for (std::size_t i = 0; i < alpha; ++i) term = term * s % kP;
      for (std::size_t i = alpha + 1; i < b.size(); ++i) term = term * t % kP;
      form = (form + term) % kP;
    }
    total = (total + form * x[pairs[p].first] % kP * x[pairs[p].second]) % kP;
  }
  return total;
}

std::vector<Residue> ambient_point(const ScrollFrame& frame, std::int64_t s, std::int64_t t,
                                   const std::array<std::int64_t, 3>& x) {
  std::vector<Residue> z(static_cast<std::size_t>(frame.genus()));
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    for (int a = 0; a <= frame.k(i); ++a) {
      std::int64_t v = x[i];
      for (int e = 0; e < a; ++e) v = v * s % kP;
      for (int e = a; e < frame.k(i); ++e) v = v * t % kP;
      z[pos++] = static_cast<Residue>(v);
    }
  }
  return z;
}

// Conic of a section on the fibre (s : t), coefficients e[i][j] of x_i x_j.
std::array<std::array<std::int64_t, 3>, 3> fibre_conic(const Section2H& sec, std::int64_t s, std::int64_t t) {
  std::array<std::array<std::int64_t, 3>, 3> e{};
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      std::array<std::int64_t, 3> x{0, 0, 0};
      Section2H only = sec;
      for (std::size_t p = 0; p < 6; ++p)
        if (kRulingPairs[p] != std::pair<int, int>{i, j}) std::fill(only.blocks[p].begin(), only.blocks[p].end(), 0);
      x[i] = 1;
      x[j] = 1;
      e[i][j] = eval_blocks(only, s, t, x);
    }
  return e;
}

// Points of Q1 cap Q2 on the fibre (s : t) with x0 = 1, by a resultant in z = x2.
std::vector<std::array<std::int64_t, 3>> fibre_intersection(const Section2H& q1, const Section2H& q2,
                                                            std::int64_t s, std::int64_t t) {
  const auto e = fibre_conic(q1, s, t);
  const auto f = fibre_conic(q2, s, t);
  using oracle::Poly;
  const Poly a2{e[2][2]}, a1{e[0][2], e[1][2]}, a0{e[0][0], e[0][1], e[1][1]};
  const Poly b2{f[2][2]}, b1{f[0][2], f[1][2]}, b0{f[0][0], f[0][1], f[1][1]};
  auto mul = [](const Poly& x, const Poly& y) { return oracle::poly_mul(x, y, kP); };
  auto sub = [](const Poly& x, const Poly& y) { return oracle::poly_sub(x, y, kP); };
  const Poly c1 = sub(mul(a2, b0), mul(a0, b2));
  const Poly res = sub(mul(c1, c1), mul(sub(mul(a2, b1), mul(a1, b2)), sub(mul(a1, b0), mul(a0, b1))));
  std::vector<std::array<std::int64_t, 3>> pts;
  if (res.empty()) return pts;
  for (std::int64_t u : oracle::poly_roots(res, kP)) {
    auto at = [&](const Poly& c) { return oracle::poly_eval(c, u, kP); };
    const Poly qa{at(a0), at(a1), at(a2)}, qb{at(b0), at(b1), at(b2)};
    const Poly common = oracle::poly_gcd(qa, qb, kP);
    if (common.size() != 2) continue;
    pts.push_back({1, u, oracle::mod(-common[0], kP)});
  }
  return pts;
}

}  // namespace

TEST_CASE("scroll matrix layout") {
  const ScrollMatrix m = scroll_matrix(ScrollFrame(1, 1, 1));
  CHECK(m.top == std::vector<std::size_t>{0, 2, 4});
  CHECK(m.bottom == std::vector<std::size_t>{1, 3, 5});

  const ScrollMatrix cone = scroll_matrix(ScrollFrame(0, 1, 2));
  CHECK(cone.top.size() == 3);
  for (auto v : cone.top) CHECK(v != 0);
  for (auto v : cone.bottom) CHECK(v != 0);
  CHECK(ScrollFrame(0, 1, 2).is_cone());

  const ScrollFrame f222(2, 2, 2);
  CHECK(scroll_matrix(f222).top.size() == 6);
  CHECK(minor_forms(GradedRing(9, kField, 2), f222).size() == 15);

  CHECK_THROWS_AS(scroll_matrix(ScrollFrame(0, 0, 3)), Error);
  CHECK_THROWS_AS(ScrollFrame(2, 1, 3), Error);
  CHECK_THROWS_AS(ScrollFrame(-1, 1, 3), Error);
}

TEST_CASE("var and bidegree_of are inverse") {
  for (int g = 6; g <= 15; ++g) {
    for (const auto& f : frames_of_genus(g)) {
      std::size_t expected = 0;
      for (int i = 0; i < 3; ++i)
        for (int a = 0; a <= f.k(i); ++a) {
          CHECK(f.var(i, a) == expected++);
          CHECK(f.bidegree_of(f.var(i, a)) == std::pair<int, int>{i, a});
        }
      CHECK(expected == static_cast<std::size_t>(g));
    }
  }
}

TEST_CASE("balanced frames") {
  CHECK(balanced_frame(6).splitting() == std::array<int, 3>{1, 1, 1});
  CHECK(balanced_frame(10).splitting() == std::array<int, 3>{2, 2, 3});
  CHECK(balanced_frame(11).splitting() == std::array<int, 3>{2, 3, 3});
  for (int g = 4; g <= 16; ++g) {
    const auto k = balanced_frame(g).splitting();
    CHECK(k[2] - k[0] <= 1);
    CHECK(balanced_frame(g).genus() == g);
  }
}

TEST_CASE("minors span C(g-3,2) dimensions for every frame with 6 <= g <= 15") {
  for (int g = 6; g <= 15; ++g) {
    GradedRing ring(static_cast<std::size_t>(g), kField, 2);
    for (const auto& f : frames_of_genus(g)) {
      CHECK(scroll_minors(ring, f).dim() == binomial(static_cast<std::size_t>(g - 3), 2));
    }
  }
}

TEST_CASE("minors vanish on sampled scroll points") {
  const ScrollFrame f(2, 2, 2);
  GradedRing ring(9, kField, 2);
  const auto minors = minor_forms(ring, f);
  const auto pts = scroll_points(f, 200, 11, kField);
  REQUIRE(pts.size() == 200);
  bool all_zero = true;
  for (const auto& pt : pts)
    for (const auto& m : minors) all_zero &= ring.evaluate(m, pt.ambient) == 0;
  CHECK(all_zero);
  CHECK(scroll_points(f, 0, 1, kField).empty());
}

TEST_CASE("interpolation through 500 scroll points recovers the determinantal quadrics") {
  const ScrollFrame f(2, 2, 2);
  GradedRing ring(9, kField, 2);
  const auto pts = scroll_points(f, 500, 99, kField);
  const auto& idx = ring.indexer(2);
  std::vector<std::vector<Residue>> rows;
  for (const auto& pt : pts) {
    std::vector<Residue> row(idx.size());
    for (std::size_t m = 0; m < idx.size(); ++m) row[m] = ring.evaluate(ring.monomial(idx.unrank(m)), pt.ambient);
    rows.push_back(std::move(row));
  }
  const SparseMatrix eval = SparseMatrix::from_dense(idx.size(), rows);
  oracle::Matrix dense = testing::to_oracle(eval);
  const std::size_t oracle_rank = oracle::gauss_jordan(dense, kP);
  CHECK(idx.size() - oracle_rank == 15);
  const Subspace kernel = kernel_basis(eval, kField);
  CHECK(kernel == scroll_minors(ring, f));
}

TEST_CASE("section space dimensions") {
  for (int g = 6; g <= 15; ++g) {
    for (const auto& f : frames_of_genus(g)) {
      CHECK(section_dim(f, 0) == static_cast<std::size_t>(4 * g - 6));
      CHECK(section_space(f, 0).size() == section_dim(f, 0));
      CHECK(section_dim(f, 2 * f.k(2) + 1) == 0);
      for (int lambda = 0; 3 * lambda <= 2 * g - 4; ++lambda) {
        CHECK(static_cast<long>(section_dim(f, lambda)) >= 4L * g - 6L * (lambda + 1));
      }
    }
  }
  CHECK(section_dim(ScrollFrame(1, 1, 1), 2) == 6);
  CHECK_THROWS_AS(section_space(ScrollFrame(1, 1, 1), -1), Error);
}

TEST_CASE("lifting follows the greedy split") {
  const ScrollFrame f(1, 1, 1);
  GradedRing ring(6, kField, 2);
  Section2H sec = zero_section(f, 0);
  sec.blocks[0][2] = 1;  // x1^2 s^2
  CHECK(lift_section(ring, sec) == ring.monomial_of_vars({1, 1}));
  sec.blocks[0][2] = 0;
  sec.blocks[0][0] = 1;  // x1^2 t^2
  CHECK(lift_section(ring, sec) == ring.monomial_of_vars({0, 0}));

  const Section2H twisted = zero_section(f, 1);
  CHECK_THROWS_AS(lift_section(ring, twisted), Error);
  try {
    lift_section(ring, twisted);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kLiftOfTwistedSection);
  }
}

TEST_CASE("two liftings differ by scroll minors and agree on the scroll") {
  Rng rng(5);
  for (const ScrollFrame f : {ScrollFrame(1, 1, 1), ScrollFrame(0, 1, 2), ScrollFrame(2, 2, 3), ScrollFrame(1, 3, 4)}) {
    GradedRing ring(static_cast<std::size_t>(f.genus()), kField, 2);
    const Subspace minors = scroll_minors(ring, f);
    const auto pts = scroll_points(f, 200, 17, kField);
    for (int trial = 0; trial < 5; ++trial) {
      const Section2H sec = random_section(f, 0, rng);
      const GradedVector first = lift_section(ring, sec, LiftSplit::kFirstFactor);
      const GradedVector second = lift_section(ring, sec, LiftSplit::kSecondFactor);
      CHECK(minors.contains(ring.sub(first, second).coeffs, kField));
      CHECK(restrict_to_scroll(f, first, kField) == sec);
      bool agree = true;
      for (const auto& pt : pts) {
        const std::array<std::int64_t, 3> x{pt.x[0], pt.x[1], pt.x[2]};
        agree &= static_cast<std::int64_t>(ring.evaluate(first, pt.ambient)) == eval_blocks(sec, pt.s, pt.t, x);
        agree &= evaluate_section(sec, pt.s, pt.t, pt.x, kField) == ring.evaluate(second, pt.ambient);
      }
      CHECK(agree);
    }
    for (const auto& m : minor_forms(ring, f)) CHECK(restrict_to_scroll(f, m, kField).is_zero());
  }
}

TEST_CASE("binary multiplication shifts the twist") {
  Rng rng(8);
  const ScrollFrame f(2, 2, 3);
  const Section2H sec = random_section(f, 2, rng);
  const Section2H up = multiply_binary(sec, 1, 2, kField);
  CHECK(up.twist == 0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::int64_t s = rng.residue(kField), t = rng.residue(kField);
    const std::array<std::int64_t, 3> x{rng.residue(kField), rng.residue(kField), rng.residue(kField)};
    CHECK(eval_blocks(up, s, t, x) == eval_blocks(sec, s, t, x) * s % kP * t % kP);
  }
  CHECK_THROWS_AS(multiply_binary(sec, 3, 2, kField), Error);
}

TEST_CASE("rolling factors: two-term identity") {
  const ScrollFrame f(1, 1, 1);
  GradedRing ring(6, kField, 3);
  const ScrollMatrix m = scroll_matrix(f);
  std::vector<GradedVector> a(3, ring.zero(1));
  a[0] = ring.variable(0);  // A = (Z1, 0, 0)
  const std::vector<Residue> alpha{0, 1, 0};
  const GradedVector q1 = ring.multiply(a[0], ring.variable(m.top[0]));
  const RollingFactors rf = rolling_factors(ring, f, q1, a, alpha);
  CHECK(rf.q2 == ring.multiply(a[0], ring.variable(m.bottom[0])));
  CHECK(rf.h1 == ring.variable(m.top[1]));
  CHECK(rf.h2 == ring.variable(m.bottom[1]));
  CHECK(rf.delta[0][1] == a[0]);
  CHECK(rf.delta[1][0] == ring.scale(a[0], kField.neg(1)));
  CHECK(rolling_identity_holds(ring, f, q1, rf));
}

TEST_CASE("rolling factors identity holds on random inputs") {
  Rng rng(2024);
  for (const ScrollFrame f : {ScrollFrame(1, 1, 1), ScrollFrame(2, 2, 2), ScrollFrame(2, 3, 3), ScrollFrame(0, 2, 3)}) {
    GradedRing ring(static_cast<std::size_t>(f.genus()), kField, 3);
    const ScrollMatrix m = scroll_matrix(f);
    const std::size_t n = m.top.size();
    int holds = 0;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<GradedVector> a(n, ring.zero(1));
      std::vector<Residue> alpha(n);
      GradedVector q1 = ring.zero(2);
      for (std::size_t j = 0; j < n; ++j) {
        for (auto& c : a[j].coeffs) c = rng.residue(kField);
        alpha[j] = rng.nonzero_residue(kField);
        q1 = ring.add(q1, ring.multiply(a[j], ring.variable(m.top[j])));
      }
      const RollingFactors rf = rolling_factors(ring, f, q1, a, alpha);
      holds += rolling_identity_holds(ring, f, q1, rf) ? 1 : 0;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) CHECK(rf.delta[j][k] == ring.scale(rf.delta[k][j], kField.neg(1)));
    }
    CHECK(holds == 100);
  }
}

TEST_CASE("rolling factors from a section vanishing on a fibre") {
  Rng rng(31);
  const ScrollFrame f(2, 2, 2);
  GradedRing ring(9, kField, 3);
  const Section2H q1 = multiply_binary(random_section(f, 1, rng), 0, 1, kField);
  const GradedVector lifted = lift_section(ring, q1);
  const auto cof = top_row_cofactors(ring, f, lifted);
  std::vector<Residue> alpha(cof.size());
  for (auto& x : alpha) x = rng.nonzero_residue(kField);
  const RollingFactors rf = rolling_factors(ring, f, lifted, cof, alpha);
  CHECK(rolling_identity_holds(ring, f, lifted, rf));
  // On X, W_j = (s/t) Y_j, hence t Q2 = s Q1 at every scroll point.
  for (const auto& pt : scroll_points(f, 200, 3, kField)) {
    CHECK(kField.mul(pt.t, ring.evaluate(rf.q2, pt.ambient)) == kField.mul(pt.s, ring.evaluate(lifted, pt.ambient)));
  }

  GradedVector bad = ring.monomial_of_vars({2, 2});  // (x1 s^2)^2 has no Y factor
  CHECK_THROWS_AS(top_row_cofactors(ring, f, bad), Error);
  CHECK_THROWS_AS(rolling_factors(ring, f, bad, cof, alpha), Error);
  CHECK_THROWS_AS(rolling_factors(ring, f, lifted, cof, std::vector<Residue>(cof.size(), 0)), Error);
}

TEST_CASE("four-gonal curves have C(g-2,2) quadrics") {
  const auto c9 = build_fourgonal(ScrollFrame(2, 2, 2), 2, 2, 1, kField);
  CHECK(c9.model.i2.dim() == 21);
  CHECK(c9.lifts_a.size() + c9.lifts_b.size() == 6);
  CHECK_FALSE(c9.model.surface_i2.has_value());
  CHECK(c9.model.scroll_i2->dim() == 15);

  const auto m8 = fourgonal_curve(default_fourgonal_frame(8, 3, 0), 3, 0, 2, kField);
  CHECK(m8.i2.dim() == 15);
  REQUIRE(m8.surface_i2.has_value());
  CHECK(m8.surface_i2->dim() == 14);
  CHECK(subspace_is_within(*m8.surface_i2, m8.i2, kField));

  CHECK(fourgonal_curve(ScrollFrame(2, 3, 3), 3, 3, 3, kField).i2.dim() == 36);
  CHECK(fourgonal_curve(ScrollFrame(2, 2, 2), 2, 2, 1, kField) == c9.model);
}

TEST_CASE("four-gonal construction errors") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kParse;
  };
  CHECK(code_of([] { fourgonal_curve(ScrollFrame(2, 2, 2), 2, 1, 0, kField); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { fourgonal_curve(ScrollFrame(1, 1, 5), 3, 2, 0, kField); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { fourgonal_curve(ScrollFrame(3, 3, 3), 7, 0, 0, kField); }) == ErrorCode::kEmptyLinearSystem);
}

TEST_CASE("default frames") {
  CHECK(default_fourgonal_frame(10, 2, 3) == balanced_frame(10));
  CHECK(default_fourgonal_frame(6, 1, 0) == ScrollFrame(1, 1, 1));
  CHECK(default_fourgonal_frame(9, 0, 4) == ScrollFrame(2, 2, 2));
  CHECK(default_fourgonal_frame(10, 5, 0) == ScrollFrame(0, 3, 4));
  CHECK(default_fourgonal_frame(13, 8, 0) == ScrollFrame(0, 5, 5));
  for (int g = 6; g <= 13; ++g) {
    const ScrollFrame f = default_fourgonal_frame(g, g - 5, 0);
    CHECK(f.k(2) <= (g - 1) / 2);
    CHECK(section_dim(f, g - 5) > 0);
  }
}

TEST_CASE("scrollar bidegrees are recovered from the model") {
  struct Case {
    ScrollFrame frame;
    int a, b;
    std::pair<int, int> expected;
  };
  const std::vector<Case> cases{{ScrollFrame(2, 2, 2), 2, 2, {2, 2}},
                                {ScrollFrame(1, 2, 2), 3, 0, {3, 0}},
                                {ScrollFrame(2, 2, 2), 1, 3, {3, 1}},
                                {ScrollFrame(1, 1, 1), 1, 0, {1, 0}},
                                {ScrollFrame(0, 3, 4), 5, 0, {5, 0}},
                                {ScrollFrame(2, 3, 3), 4, 2, {4, 2}}};
  for (const auto& c : cases) {
    const auto model = fourgonal_curve(c.frame, c.a, c.b, 77, kField);
    GradedRing ring(static_cast<std::size_t>(c.frame.genus()), kField, 2);
    const Subspace sections = restrict_subspace(ring, c.frame, model.i2);
    CHECK(sections.dim() == static_cast<std::size_t>(c.frame.genus() - 3));
    CHECK(scrollar_bidegrees(c.frame, sections, kField) == c.expected);
  }
  // Only twist-lambda multiples: lambda_0 is at least lambda.
  Rng rng(4);
  auto multiples_plus = [&](const ScrollFrame& f, int lambda, std::size_t extra) {
    const Section2H q = random_section(f, lambda, rng);
    SparseMatrix gens(0, section_dim(f, 0));
    for (int i = 0; i <= lambda; ++i) gens.append_dense_row(section_coords(multiply_binary(q, i, lambda, kField)));
    for (std::size_t e = 0; e < extra; ++e) gens.append_dense_row(section_coords(random_section(f, 0, rng)));
    return Subspace::span(gens, kField);
  };
  const ScrollFrame f(2, 2, 2);
  const Subspace six = multiples_plus(f, 3, 2);
  REQUIRE(six.dim() == 6);
  CHECK(scrollar_bidegrees(f, six, kField).first >= 3);

  const ScrollFrame steep(1, 2, 3);
  const Subspace too_deep = multiples_plus(steep, 5, 0);
  REQUIRE(too_deep.dim() == 6);
  try {
    scrollar_bidegrees(steep, too_deep, kField);
    FAIL("lambda_0 > g-5 was accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kModelInconsistency);
  }
  CHECK_THROWS_AS(scrollar_bidegrees(f, multiples_plus(f, 3, 0), kField), Error);
}

TEST_CASE("four-gonal curves vanish on fibre points of Q1 cap Q2") {
  for (const auto& [frame, a, b] : std::vector<std::tuple<ScrollFrame, int, int>>{
           {ScrollFrame(2, 2, 2), 2, 2}, {ScrollFrame(1, 2, 2), 3, 0}, {ScrollFrame(0, 3, 4), 5, 0}}) {
    const auto c = build_fourgonal(frame, a, b, 5, kField);
    GradedRing ring(static_cast<std::size_t>(frame.genus()), kField, 2);
    Rng rng(123);
    std::size_t found = 0;
    bool vanish = true;
    for (int fibre = 0; fibre < 60; ++fibre) {
      const std::int64_t s = rng.residue(kField), t = rng.nonzero_residue(kField);
      for (const auto& x : fibre_intersection(c.q1, c.q2, s, t)) {
        REQUIRE(eval_blocks(c.q1, s, t, x) == 0);
        const auto z = ambient_point(frame, s, t, x);
        for (std::size_t r = 0; r < c.model.i2.dim(); ++r)
          vanish &= ring.evaluate(basis_form(c.model.i2, 2, r), z) == 0;
        ++found;
      }
    }
    CHECK(found >= 20);
    CHECK(vanish);
  }
}

TEST_CASE("relative linear syzygies split between the two quadrics") {
  for (const auto& [frame, a, b] : std::vector<std::tuple<ScrollFrame, int, int>>{
           {ScrollFrame(1, 2, 2), 2, 1}, {ScrollFrame(2, 2, 2), 2, 2}, {ScrollFrame(2, 2, 3), 3, 2}}) {
    const int g = frame.genus();
    const auto c = build_fourgonal(frame, a, b, 9, kField);
    GradedRing ring(static_cast<std::size_t>(g), kField, 3);
    const RelativeSyzygySplit split = relative_syzygy_split(ring, c);
    CHECK(split.h0_3h == static_cast<std::size_t>(10 * g - 20));
    CHECK(split.total == static_cast<std::size_t>((g - 5) * (g - 3)));
    CHECK(split.from_a == static_cast<std::size_t>(a * (g - 3)));
    CHECK(split.from_b == static_cast<std::size_t>(b * (g - 3)));
    CHECK(split.cubic_image == static_cast<std::size_t>(5 * (g - 3)));
    CHECK(split.splits);
  }
}
