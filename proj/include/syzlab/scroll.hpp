#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "syzlab/graded_ring.hpp"
#include "syzlab/model.hpp"
#include "syzlab/prime_field.hpp"
#include "syzlab/subspace.hpp"

namespace syzlab {

/// Splitting type (k1, k2, k3) of a three-dimensional rational normal scroll
/// in P^{g-1}, g = k1 + k2 + k3 + 3.
///
/// Ruling i contributes the k_i + 1 consecutive variables x_i s^a t^(k_i - a),
/// a = 0..k_i, in block order. When k1 = 0 the first block is the single
/// vertex variable Z1 and the scroll is a cone.
class ScrollFrame {
 public:
  ScrollFrame(int k1, int k2, int k3);
  explicit ScrollFrame(const std::array<int, 3>& k) : ScrollFrame(k[0], k[1], k[2]) {}

  int k(int ruling) const { return k_.at(static_cast<std::size_t>(ruling)); }
  const std::array<int, 3>& splitting() const noexcept { return k_; }
  int genus() const noexcept { return k_[0] + k_[1] + k_[2] + 3; }
  bool is_cone() const noexcept { return k_[0] == 0; }
  /// 0-based ambient variable of x_ruling s^power t^(k - power).
  std::size_t var(int ruling, int power) const;
  /// Inverse of var(): (ruling, power).
  std::pair<int, int> bidegree_of(std::size_t var) const;

  friend bool operator==(const ScrollFrame&, const ScrollFrame&) = default;

 private:
  std::array<int, 3> k_;
  std::array<std::size_t, 3> offset_;
};

/// The balanced splitting type for genus g (k_i differ by at most one).
ScrollFrame balanced_frame(int genus);

/// Rows Y (top) and W (bottom) of the 2 x (g-3) determinantal matrix, as
/// 0-based ambient variables. Y entries vanish on the fibre t = 0, W entries
/// on s = 0.
struct ScrollMatrix {
  std::vector<std::size_t> top;
  std::vector<std::size_t> bottom;
};

ScrollMatrix scroll_matrix(const ScrollFrame& frame);

/// The 2x2 minors M_jk = Y_j W_k - Y_k W_j for j < k, in lexicographic (j, k) order.
std::vector<GradedVector> minor_forms(const GradedRing& ring, const ScrollFrame& frame);
/// Span of the minors: the quadric part of the scroll's ideal.
Subspace scroll_minors(const GradedRing& ring, const ScrollFrame& frame);

/// The six unordered pairs i <= j of rulings, in the order blocks are stored.
inline constexpr std::array<std::pair<int, int>, 6> kRulingPairs = {
    {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};

/// A section of O_X(2H - twist F): sum over i <= j of x_i x_j P_ij(s, t) with
/// P_ij a binary form of degree k_i + k_j - twist (absent when negative).
/// blocks[pair][alpha] is the coefficient of s^alpha t^(deg - alpha).
struct Section2H {
  ScrollFrame frame;
  int twist = 0;
  std::array<std::vector<Residue>, 6> blocks;

  bool is_zero() const;
  friend bool operator==(const Section2H&, const Section2H&) = default;
};

int block_degree(const ScrollFrame& frame, std::size_t pair, int twist);
std::size_t section_dim(const ScrollFrame& frame, int twist);
Section2H zero_section(const ScrollFrame& frame, int twist);

/// Monomial basis x_i x_j s^alpha t^(k_i + k_j - twist - alpha).
std::vector<Section2H> section_space(const ScrollFrame& frame, int twist);

/// Flattened coordinates in the order of section_space().
std::vector<Residue> section_coords(const Section2H& sec);
Section2H section_from_coords(const ScrollFrame& frame, int twist, std::span<const Residue> coords);

/// Multiplies by s^s_power t^(degree - s_power); the twist drops by `degree`.
Section2H multiply_binary(const Section2H& sec, int s_power, int degree, const PrimeField& field);

Section2H add_sections(const Section2H& a, const Section2H& b, const PrimeField& field);
Section2H scale_section(const Section2H& a, Residue c, const PrimeField& field);

/// Value at the scroll point with parameters (s, t) and fibre coordinates x.
Residue evaluate_section(const Section2H& sec, Residue s, Residue t,
                         const std::array<Residue, 3>& x, const PrimeField& field);

/// How the s-degree alpha of x_i x_j s^alpha t^... is shared between the two
/// factors when lifting to a quadric.
enum class LiftSplit {
  kFirstFactor,   // a = min(alpha, k_i)
  kSecondFactor,  // b = min(alpha, k_j)
};

/// A quadric in S^2 V restricting to the twist-0 section `sec`.
GradedVector lift_section(const GradedRing& ring, const Section2H& sec,
                          LiftSplit split = LiftSplit::kFirstFactor);

/// Restriction of a quadric to the scroll, as a twist-0 section.
Section2H restrict_to_scroll(const ScrollFrame& frame, const GradedVector& quadric,
                             const PrimeField& field);

/// Image of a space of quadrics in H^0(O_X(2H)) section coordinates.
Subspace restrict_subspace(const GradedRing& ring, const ScrollFrame& frame, const Subspace& quadrics);

struct ScrollPoint {
  Residue s = 0;
  Residue t = 0;
  std::array<Residue, 3> x{};
  std::vector<Residue> ambient;
};

/// n random points of the scroll, Z_var(i, a) = x_i s^a t^(k_i - a).
std::vector<ScrollPoint> scroll_points(const ScrollFrame& frame, std::size_t n, std::uint64_t seed,
                                       const PrimeField& field);

struct RollingFactors {
  GradedVector q2;
  /// sum_k alpha_k Y_k
  GradedVector h1;
  /// sum_k alpha_k W_k
  GradedVector h2;
  /// delta[j][k] = A_j alpha_k - A_k alpha_j (antisymmetric, linear forms).
  std::vector<std::vector<GradedVector>> delta;
};

/// Linear forms A_j with q1 = sum_j A_j Y_j, read off monomial by monomial.
/// Fails with malformed-input when some monomial has no Y factor.
std::vector<GradedVector> top_row_cofactors(const GradedRing& ring, const ScrollFrame& frame,
                                            const GradedVector& q1);

/// Rolling factors: from q1 = sum A_j Y_j build q2 = sum A_j W_j together
/// with the witness of the linear syzygy
///   h2 q1 - h1 q2 = sum_{j<k} delta_jk M_jk.
RollingFactors rolling_factors(const GradedRing& ring, const ScrollFrame& frame,
                               const GradedVector& q1, std::span<const GradedVector> cofactors,
                               std::span<const Residue> alpha);

/// Checks the identity above coefficient by coefficient (cubic forms).
bool rolling_identity_holds(const GradedRing& ring, const ScrollFrame& frame,
                            const GradedVector& q1, const RollingFactors& rf);

/// Everything produced while building a four-gonal curve C = Q1 cap Q2 on X.
struct FourgonalConstruction {
  CurveModel model;
  ScrollFrame frame;
  Section2H q1;  // in |2H - aF|
  Section2H q2;  // in |2H - bF|
  /// Lifts of s^i t^(a-i) Q1, i = 0..a, then of s^j t^(b-j) Q2, j = 0..b.
  std::vector<GradedVector> lifts_a;
  std::vector<GradedVector> lifts_b;
};

inline constexpr int kMaxGenericityRetries = 8;

FourgonalConstruction build_fourgonal(const ScrollFrame& frame, int a, int b, std::uint64_t seed,
                                      const PrimeField& field);
CurveModel fourgonal_curve(const ScrollFrame& frame, int a, int b, std::uint64_t seed,
                           const PrimeField& field);

/// Splitting type used for a four-gonal model when none is given. For
/// min(a, b) > 0 this is the balanced frame; for the lambda_1 = 0 branch it is
/// a frame on which Q1 is irreducible (a cone frame from genus 10 on).
ScrollFrame default_fourgonal_frame(int genus, int a, int b);

/// (lambda_0, lambda_1) of I_{C/X,2} given in twist-0 section coordinates.
std::pair<int, int> scrollar_bidegrees(const ScrollFrame& frame, const Subspace& curve_sections,
                                       const PrimeField& field);

/// Linear syzygies of I_{C/X,2} computed in the scroll's coordinate ring.
struct RelativeSyzygySplit {
  std::size_t total = 0;        // dim of all linear syzygies
  std::size_t from_a = 0;       // those among the Q1 multiples only
  std::size_t from_b = 0;       // those among the Q2 multiples only
  std::size_t cubic_image = 0;  // dim I_{C/X,3}
  std::size_t h0_3h = 0;        // dim H^0(O_X(3H))
  bool splits = false;          // total == from_a (+) from_b as subspaces
};

RelativeSyzygySplit relative_syzygy_split(const GradedRing& ring, const FourgonalConstruction& c);

}  // namespace syzlab
