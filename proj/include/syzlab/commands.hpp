#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "syzlab/io.hpp"
#include "syzlab/koszul.hpp"
#include "syzlab/model.hpp"

namespace syzlab {

/// Exit statuses shared by the command implementations.
inline constexpr int kExitOk = 0;
inline constexpr int kExitTheoremFailure = 1;
inline constexpr int kExitUsage = 2;

/// The --prime flag if given, else SYZLAB_PRIME, else the default prime.
std::uint32_t resolve_prime(std::optional<std::uint32_t> flag);

struct ConstructOptions {
  Family family = Family::kFourgonal;
  std::optional<int> genus;
  std::optional<std::array<int, 3>> frame;
  std::optional<int> a;
  std::optional<int> b;
  std::uint64_t seed = 0;
  std::uint32_t prime = kDefaultPrime;
  std::string out;
};

CurveModel construct(const ConstructOptions& options);
int cmd_construct(const ConstructOptions& options, std::ostream& out);

struct AnalyzeOptions {
  std::string model_path;
  std::optional<std::size_t> betti_max_p;
  std::string out;
  bool timings = false;
};

Report analyze(const CurveModel& model, const AnalyzeOptions& options);
int cmd_analyze(const AnalyzeOptions& options, std::ostream& out);

struct VerifyOptions {
  int genus_lo = 5;
  int genus_hi = 12;
  int trials = 1;
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string out;
};

struct SweepRow {
  int genus = 0;
  std::string label;
  int trial = 0;
  std::uint64_t seed = 0;
  std::optional<TheoremCheck> check;
  std::string error;
  bool pass = false;
};

/// Models the sweep builds for one genus: genus5 at g = 5; otherwise
/// four-gonal with a, b > 0 (g >= 7), four-gonal with (g-5, 0), bielliptic,
/// and a Del Pezzo (g <= 9) or Veronese (g = 10) curve.
std::vector<SweepRow> verify_theorem(const VerifyOptions& options);
int cmd_verify_theorem(const VerifyOptions& options, std::ostream& out);

struct ExportOptions {
  std::string model_path;
  std::string format = "cas-text";
  std::string ideal = "I2";
  std::size_t points = 0;
  std::uint64_t seed = 0;
  std::string out;
};

std::string export_ideal(const CurveModel& model, const ExportOptions& options);
int cmd_export_ideal(const ExportOptions& options, std::ostream& out);

}  // namespace syzlab
