#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "syzlab/graded_ring.hpp"
#include "syzlab/model.hpp"
#include "syzlab/subspace.hpp"

namespace syzlab {

/// gamma = sum_i e_i (x) q_i in V (x) I2, where q_i is the combination of the
/// echelon basis of I2 with coefficients coeffs[i * m .. i * m + m).
struct SyzygyVector {
  std::size_t num_vars = 0;
  std::size_t num_quadrics = 0;
  std::vector<Residue> coeffs;

  Residue at(std::size_t var, std::size_t quadric) const { return coeffs[var * num_quadrics + quadric]; }
  friend bool operator==(const SyzygyVector&, const SyzygyVector&) = default;
};

/// Basis of ker(V (x) I2 -> S^3 V); its size is kappa_{2,1}.
std::vector<SyzygyVector> linear_syzygies(const GradedRing& ring, const Subspace& i2);
std::size_t kappa21(const GradedRing& ring, const Subspace& i2);

/// The quadrics q_i of gamma as forms.
std::vector<GradedVector> row_quadrics(const GradedRing& ring, const Subspace& i2, const SyzygyVector& gamma);
bool is_syzygy(const GradedRing& ring, const Subspace& i2, const SyzygyVector& gamma);

/// Image of gamma: span of its row quadrics. Fails with invalid-syzygy when
/// sum_i Z_i q_i != 0.
Subspace quadrics_involved(const GradedRing& ring, const Subspace& i2, const SyzygyVector& gamma);

/// Packs sum_k l_k (x) Q_k (linear forms l_k, quadrics Q_k in I2) into a
/// SyzygyVector. Fails with invalid-syzygy when some Q_k is outside I2 or the
/// combination is not a syzygy.
SyzygyVector syzygy_from_terms(const GradedRing& ring, const Subspace& i2,
                               std::span<const std::pair<GradedVector, GradedVector>> terms);

enum class Verdict { kEqualsCurve, kProperSurface, kWholeSpace };
std::string_view to_string(Verdict v);

struct Syz2Report {
  std::size_t kappa21 = 0;
  /// Span of the quadrics involved in all linear syzygies (W is inside I2).
  Subspace w;
  Verdict verdict = Verdict::kWholeSpace;
  std::optional<bool> surface_match;
};

Syz2Report syz2_span(const GradedRing& ring, const Subspace& i2,
                     const std::optional<Subspace>& surface_i2 = std::nullopt);

inline constexpr std::size_t kDefaultKoszulBudget = 4'000'000;

struct KoszulOptions {
  /// Largest allowed C(g, p) * dim B_q over the two differentials.
  std::size_t budget = kDefaultKoszulBudget;
  /// Check dim B_q = (2q - 1)(g - 1) for q = 2, 3 before trusting B_q.
  bool canonical_curve = false;
};

/// kappa_{p,q}: middle cohomology of
///   wedge^{p+1} V (x) B_{q-1} -> wedge^p V (x) B_q -> wedge^{p-1} V (x) B_{q+1},
/// B = S/(I2), d(e_{i1} ^ ... ^ e_{ip} (x) f) = sum_k (-1)^(k-1) (... e^_{ik} ...) (x) Z_{ik} f.
/// Requires 0 <= q <= 3 and a ring of degree >= q + 1.
std::size_t koszul_dimension(const GradedRing& ring, const Subspace& i2, std::size_t p, std::size_t q,
                             const KoszulOptions& options = {});

struct BettiTable {
  std::size_t p_max = 0;
  std::size_t q_max = 0;
  /// kappa[q][p]; nullopt where the size budget was exceeded.
  std::vector<std::vector<std::optional<std::size_t>>> kappa;
};

BettiTable betti_table(const GradedRing& ring, const Subspace& i2, std::size_t p_max, std::size_t q_max = 3,
                       const KoszulOptions& options = {});

/// Rows q, columns p; zero entries print as "--" and skipped ones as "?".
std::string render_betti(const BettiTable& table);

/// Outcome of comparing a model with the branch of the main theorem its
/// construction predicts.
struct TheoremCheck {
  Family family = Family::kGenus5;
  int genus = 0;
  std::size_t kappa11 = 0;
  std::size_t kappa21 = 0;
  std::size_t expected_kappa21 = 0;
  std::size_t dim_w = 0;
  Verdict verdict = Verdict::kWholeSpace;
  Verdict expected_verdict = Verdict::kWholeSpace;
  std::optional<bool> surface_match;
  bool pass = false;
  std::vector<std::string> notes;
};

/// (g-1)(g-3)(g-5)/3 for g >= 5.
std::size_t expected_kappa21(int genus);
Verdict expected_verdict(const CurveModel& model);

TheoremCheck classify_theorem(const CurveModel& model, const std::optional<Subspace>& surface_i2 = std::nullopt);

}  // namespace syzlab
