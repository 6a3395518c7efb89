#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "syzlab/graded_ring.hpp"
#include "syzlab/koszul.hpp"
#include "syzlab/model.hpp"

namespace syzlab {

inline constexpr int kModelFormatVersion = 1;
inline constexpr int kReportFormatVersion = 1;

nlohmann::json model_to_json(const CurveModel& model);
/// Validates the prime, the matrix shapes and that stored bases are already
/// canonical; failures raise malformed-input.
CurveModel model_from_json(const nlohmann::json& j);

void save_model(const CurveModel& model, const std::string& path);
CurveModel load_model(const std::string& path);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);
/// Digest of the canonical serialization of the model.
std::string model_digest(const CurveModel& model);

struct Report {
  std::string model_digest;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  int genus = 0;
  Family family = Family::kGenus5;
  std::size_t kappa11 = 0;
  std::size_t kappa21 = 0;
  std::size_t dim_w = 0;
  Verdict verdict = Verdict::kWholeSpace;
  std::optional<bool> surface_match;
  std::optional<std::pair<int, int>> scrollar_bidegrees;
  std::optional<BettiTable> betti;
  std::vector<std::string> warnings;
  /// Wall-clock milliseconds per stage; only filled on request so that
  /// default reports stay bit-identical between runs.
  std::optional<std::map<std::string, double>> timings;
};

nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

/// Plain-text generator list for other computer algebra systems.
struct CasText {
  std::uint32_t prime = kDefaultPrime;
  std::size_t num_vars = 0;
  std::string ideal = "I2";
  std::vector<GradedVector> generators;
  std::vector<std::vector<Residue>> points;
};

std::string write_cas_text(const GradedRing& ring, const CasText& doc);
CasText parse_cas_text(std::string_view text);

/// Parses "c*Z1^2*Z3 + c'*Z2^3 - Z4^3"; every term must have the same degree.
GradedVector parse_polynomial(const GradedRing& ring, std::string_view text);

}  // namespace syzlab
