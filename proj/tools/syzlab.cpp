#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "syzlab/commands.hpp"
#include "syzlab/errors.hpp"

using namespace syzlab;

namespace {

std::array<int, 3> parse_frame(const std::string& s) {
  std::array<int, 3> k{};
  std::istringstream in(s);
  char c1 = 0, c2 = 0;
  if (!(in >> k[0] >> c1 >> k[1] >> c2 >> k[2]) || c1 != ',' || c2 != ',' || !in.eof()) {
    throw Error(ErrorCode::kInvalidArgument, "--frame expects k1,k2,k3 (got '" + s + "')");
  }
  return k;
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int g = std::stoi(s);
      return {g, g};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidArgument, "--genus-range expects LO..HI (got '" + s + "')");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Syzygy schemes of canonical curves over GF(p)"};
  app.require_subcommand(1);

  std::optional<std::uint32_t> prime;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--prime", prime, "odd prime below 2^31 (default: $SYZLAB_PRIME or 1000003)");
    sub->add_option("--seed", seed, "random seed")->capture_default_str();
  };

  // construct
  ConstructOptions copts;
  std::string family_name;
  std::string frame_text;
  auto* construct = app.add_subcommand("construct", "build a canonical curve model");
  construct->add_option("family", family_name, "fourgonal | bielliptic | delpezzo | veronese | genus5")->required();
  construct->add_option("--genus", copts.genus, "genus g");
  construct->add_option("--frame", frame_text, "scroll type k1,k2,k3 (fourgonal)");
  construct->add_option("--a", copts.a, "twist of Q1 (fourgonal)");
  construct->add_option("--b", copts.b, "twist of Q2 (fourgonal)");
  construct->add_option("--out", copts.out, "model JSON path (default: print to stdout)");
  add_common(construct);

  // analyze
  AnalyzeOptions aopts;
  auto* analyze = app.add_subcommand("analyze", "linear syzygies, syzygy span and Betti table of a model");
  analyze->add_option("model", aopts.model_path, "model JSON")->required();
  analyze->add_option("--betti-max-p", aopts.betti_max_p, "print kappa_{p,q} for p <= N, q <= 3");
  analyze->add_option("--out", aopts.out, "report JSON path");
  analyze->add_flag("--timings", aopts.timings, "record wall-clock timings in the report");

  // verify-theorem
  VerifyOptions vopts;
  std::string range = "5..12";
  auto* verify = app.add_subcommand("verify-theorem", "sweep model families and compare with the theorem");
  verify->add_option("--genus-range", range, "LO..HI within 5..13")->capture_default_str();
  verify->add_option("--trials", vopts.trials, "seeds per genus")->capture_default_str();
  verify->add_option("--jobs", vopts.jobs, "worker threads")->capture_default_str();
  verify->add_option("--out", vopts.out, "summary JSON path");
  add_common(verify);

  // export-ideal
  ExportOptions eopts;
  auto* exporter = app.add_subcommand("export-ideal", "write generators as plain polynomial text");
  exporter->add_option("model", eopts.model_path, "model JSON")->required();
  exporter->add_option("--format", eopts.format, "cas-text")->capture_default_str();
  exporter->add_option("--ideal", eopts.ideal, "I2 | IS2 | IX2")->capture_default_str();
  exporter->add_option("--points", eopts.points, "number of scroll points to append (IX2 only)");
  exporter->add_option("--seed", eopts.seed, "seed for the sample points");
  exporter->add_option("--out", eopts.out, "output path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) {
      const auto family = parse_family(family_name);
      if (!family) {
        throw Error(ErrorCode::kInvalidArgument,
                    "unknown family '" + family_name + "' (fourgonal, bielliptic, delpezzo, veronese, genus5)");
      }
      copts.family = *family;
      if (!frame_text.empty()) copts.frame = parse_frame(frame_text);
      copts.seed = seed;
      copts.prime = resolve_prime(prime);
      return cmd_construct(copts, std::cout);
    }
    if (*analyze) return cmd_analyze(aopts, std::cout);
    if (*verify) {
      std::tie(vopts.genus_lo, vopts.genus_hi) = parse_range(range);
      vopts.seed = seed;
      vopts.prime = resolve_prime(prime);
      return cmd_verify_theorem(vopts, std::cout);
    }
    if (*exporter) return cmd_export_ideal(eopts, std::cout);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
