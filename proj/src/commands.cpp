#include "syzlab/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <ostream>
#include <thread>

#include "syzlab/errors.hpp"
#include "syzlab/random.hpp"
#include "syzlab/scroll.hpp"
#include "syzlab/surfaces.hpp"

namespace syzlab {
namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  f << text;
}

int default_genus(Family family) {
  switch (family) {
    case Family::kGenus5: return 5;
    case Family::kVeronese: return 10;
    default: break;
  }
  throw Error(ErrorCode::kInvalidArgument, "--genus is required for " + std::string(to_string(family)));
}

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

std::uint32_t resolve_prime(std::optional<std::uint32_t> flag) {
  if (flag) return PrimeField(*flag).prime();
  if (const char* env = std::getenv("SYZLAB_PRIME"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v >= (1ull << 31)) {
      throw Error(ErrorCode::kInvalidArgument, std::string("SYZLAB_PRIME='") + env + "' is not an odd prime below 2^31");
    }
    return PrimeField(static_cast<std::uint32_t>(v)).prime();
  }
  return kDefaultPrime;
}

CurveModel construct(const ConstructOptions& o) {
  const PrimeField field(o.prime);
  const int genus = o.genus ? *o.genus : default_genus(o.family);
  if (o.family != Family::kFourgonal && (o.frame || o.a || o.b)) {
    throw Error(ErrorCode::kInvalidArgument, "--frame, --a and --b only apply to fourgonal models");
  }
  ConstructionParams params;
  params.seed = o.seed;
  params.frame = o.frame;
  params.a = o.a;
  params.b = o.b;
  return construct_model(o.family, genus, params, field);
}

int cmd_construct(const ConstructOptions& o, std::ostream& out) {
  const CurveModel m = construct(o);
  if (!o.out.empty()) save_model(m, o.out);
  out << "family " << to_string(m.family) << ", g = " << m.genus << ", p = " << m.prime << '\n';
  out << "dim I2 = " << m.i2.dim() << '\n';
  if (m.surface_i2) out << "dim IS2 = " << m.surface_i2->dim() << '\n';
  if (m.family == Family::kFourgonal) {
    const auto& k = *m.params.frame;
    out << "frame (" << k[0] << "," << k[1] << "," << k[2] << "), a = " << *m.params.a << ", b = " << *m.params.b
        << '\n';
  }
  if (o.out.empty()) out << model_to_json(m).dump(1) << '\n';
  return kExitOk;
}

Report analyze(const CurveModel& model, const AnalyzeOptions& o) {
  Stopwatch clock;
  std::map<std::string, double> timings;
  const PrimeField field(model.prime);
  const std::size_t max_degree = o.betti_max_p ? 4 : 3;
  const GradedRing ring(static_cast<std::size_t>(model.genus), field, max_degree);

  Report r;
  r.model_digest = model_digest(model);
  r.prime = model.prime;
  r.seed = model.params.seed;
  r.genus = model.genus;
  r.family = model.family;
  r.kappa11 = model.i2.dim();
  const Syz2Report syz = syz2_span(ring, model.i2, model.surface_i2);
  timings["syzygies"] = clock.lap();
  r.kappa21 = syz.kappa21;
  r.dim_w = syz.w.dim();
  r.verdict = syz.verdict;
  r.surface_match = syz.surface_match;

  if (model.family == Family::kFourgonal && model.params.frame && model.params.a && model.params.b) {
    const ScrollFrame frame(*model.params.frame);
    const Subspace sections = restrict_subspace(ring, frame, model.i2);
    try {
      r.scrollar_bidegrees = scrollar_bidegrees(frame, sections, field);
      const std::pair<int, int> built{std::max(*model.params.a, *model.params.b),
                                      std::min(*model.params.a, *model.params.b)};
      if (*r.scrollar_bidegrees != built) {
        r.warnings.push_back("non-generic draw: recovered (lambda0, lambda1) = (" +
                             std::to_string(r.scrollar_bidegrees->first) + ", " +
                             std::to_string(r.scrollar_bidegrees->second) + "), constructed with (" +
                             std::to_string(built.first) + ", " + std::to_string(built.second) + ")");
      }
    } catch (const Error& e) {
      r.warnings.push_back(e.what());
    }
    timings["bidegrees"] = clock.lap();
  }

  if (o.betti_max_p) {
    KoszulOptions kopts;
    kopts.canonical_curve = model.genus >= 3;
    try {
      r.betti = betti_table(ring, model.i2, *o.betti_max_p, 3, kopts);
      bool truncated = false;
      for (const auto& row : r.betti->kappa)
        for (const auto& v : row) truncated |= !v.has_value();
      if (truncated) r.warnings.push_back("Betti table truncated: some entries exceed the matrix budget");
    } catch (const Error& e) {
      r.warnings.push_back(std::string("Betti table skipped: ") + e.what());
    }
    timings["betti"] = clock.lap();
  }
  if (o.timings) r.timings = timings;
  return r;
}

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out) {
  const CurveModel model = load_model(o.model_path);
  const Report r = analyze(model, o);
  if (!o.out.empty()) write_text(o.out, report_to_json(r).dump(1) + "\n");
  out << "family " << to_string(r.family) << ", g = " << r.genus << ", p = " << r.prime << '\n';
  out << "kappa11 = " << r.kappa11 << '\n';
  out << "kappa21 = " << r.kappa21 << '\n';
  out << "dim W = " << r.dim_w << '\n';
  out << "verdict = " << to_string(r.verdict) << '\n';
  if (r.surface_match) out << "W equals surface quadrics: " << (*r.surface_match ? "yes" : "no") << '\n';
  if (r.scrollar_bidegrees) {
    out << "(lambda0, lambda1) = (" << r.scrollar_bidegrees->first << ", " << r.scrollar_bidegrees->second << ")\n";
  }
  if (r.betti) out << render_betti(*r.betti);
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  return kExitOk;
}

std::vector<SweepRow> verify_theorem(const VerifyOptions& o) {
  if (o.genus_lo < 5 || o.genus_hi > 13 || o.genus_lo > o.genus_hi) {
    throw Error(ErrorCode::kInvalidArgument, "genus range must lie within 5..13");
  }
  if (o.trials < 1) throw Error(ErrorCode::kInvalidArgument, "--trials must be positive");
  const PrimeField field(o.prime);

  struct Task {
    int genus;
    std::string label;
    int trial;
    std::uint64_t seed;
    std::function<CurveModel(std::uint64_t)> build;
  };
  std::vector<Task> tasks;
  for (int g = o.genus_lo; g <= o.genus_hi; ++g) {
    for (int t = 0; t < o.trials; ++t) {
      auto add = [&](std::string label, int salt, std::function<CurveModel(std::uint64_t)> fn) {
        const std::uint64_t seed = mix_seed(o.seed, static_cast<std::uint64_t>(g) * 1'000'000 + salt * 1000 + t);
        tasks.push_back({g, std::move(label), t, seed, std::move(fn)});
      };
      if (g == 5) {
        add("genus5", 0, [field](std::uint64_t s) { return genus5_intersection(s, field); });
        continue;
      }
      const int b = (g - 5) / 2, a = g - 5 - b;
      if (b > 0) {
        add("fourgonal(" + std::to_string(a) + "," + std::to_string(b) + ")", 1, [=](std::uint64_t s) {
          return fourgonal_curve(default_fourgonal_frame(g, a, b), a, b, s, field);
        });
      }
      add("fourgonal(" + std::to_string(g - 5) + ",0)", 2, [=](std::uint64_t s) {
        return fourgonal_curve(default_fourgonal_frame(g, g - 5, 0), g - 5, 0, s, field);
      });
      add("bielliptic", 3, [=](std::uint64_t s) { return bielliptic_curve(g, s, field); });
      if (g <= 10) {
        add(g == 10 ? "veronese" : "delpezzo", 4, [=](std::uint64_t s) { return delpezzo_curve(g, s, field); });
      }
    }
  }

  std::vector<SweepRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      SweepRow row{t.genus, t.label, t.trial, t.seed, std::nullopt, "", false};
      try {
        row.check = classify_theorem(t.build(t.seed));
        row.pass = row.check->pass;
      } catch (const Error& e) {
        row.error = e.what();
      }
      rows[i] = std::move(row);
    }
  };
  const unsigned jobs = std::max(1u, o.jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

int cmd_verify_theorem(const VerifyOptions& o, std::ostream& out) {
  const auto rows = verify_theorem(o);
  nlohmann::json summary = nlohmann::json::array();
  std::size_t failures = 0;
  out << "g\tmodel\ttrial\tkappa21\tdim W\tverdict\texpected\tresult\n";
  for (const auto& r : rows) {
    failures += r.pass ? 0 : 1;
    nlohmann::json j{{"genus", r.genus}, {"model", r.label}, {"trial", r.trial}, {"seed", r.seed}, {"pass", r.pass}};
    out << r.genus << '\t' << r.label << '\t' << r.trial << '\t';
    if (r.check) {
      const auto& c = *r.check;
      out << c.kappa21 << '\t' << c.dim_w << '\t' << to_string(c.verdict) << '\t' << to_string(c.expected_verdict);
      j["kappa21"] = c.kappa21;
      j["dim_W"] = c.dim_w;
      j["verdict"] = std::string(to_string(c.verdict));
      j["expected"] = std::string(to_string(c.expected_verdict));
      j["notes"] = c.notes;
    } else {
      out << "-\t-\terror\t-";
      j["error"] = r.error;
    }
    out << '\t' << (r.pass ? "PASS" : "FAIL") << '\n';
    if (!r.pass) {
      if (r.check)
        for (const auto& n : r.check->notes) out << "  note: " << n << '\n';
      if (!r.error.empty()) out << "  error: " << r.error << '\n';
    }
    summary.push_back(j);
  }
  out << rows.size() - failures << "/" << rows.size() << " PASS\n";
  if (!o.out.empty()) write_text(o.out, summary.dump(1) + "\n");
  return failures == 0 ? kExitOk : kExitTheoremFailure;
}

std::string export_ideal(const CurveModel& model, const ExportOptions& o) {
  if (o.format != "cas-text") throw Error(ErrorCode::kInvalidArgument, "unknown format '" + o.format + "'");
  const PrimeField field(model.prime);
  const GradedRing ring(static_cast<std::size_t>(model.genus), field, 2);
  const Subspace* ideal = nullptr;
  if (o.ideal == "I2") {
    ideal = &model.i2;
  } else if (o.ideal == "IS2") {
    if (!model.surface_i2) throw Error(ErrorCode::kInvalidArgument, "model has no surface quadrics (IS2)");
    ideal = &*model.surface_i2;
  } else if (o.ideal == "IX2") {
    if (!model.scroll_i2) throw Error(ErrorCode::kInvalidArgument, "model has no scroll quadrics (IX2)");
    ideal = &*model.scroll_i2;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "--ideal must be I2, IS2 or IX2");
  }
  CasText doc;
  doc.prime = model.prime;
  doc.num_vars = static_cast<std::size_t>(model.genus);
  doc.ideal = o.ideal;
  for (std::size_t r = 0; r < ideal->dim(); ++r) doc.generators.push_back(basis_form(*ideal, 2, r));
  if (o.points > 0) {
    if (o.ideal != "IX2" || !model.params.frame) {
      throw Error(ErrorCode::kInvalidArgument, "sample points are only exported for the scroll ideal IX2");
    }
    for (auto& p : scroll_points(ScrollFrame(*model.params.frame), o.points, o.seed, field)) {
      doc.points.push_back(std::move(p.ambient));
    }
  }
  return write_cas_text(ring, doc);
}

int cmd_export_ideal(const ExportOptions& o, std::ostream& out) {
  const std::string text = export_ideal(load_model(o.model_path), o);
  if (o.out.empty()) {
    out << text;
  } else {
    write_text(o.out, text);
  }
  return kExitOk;
}

}  // namespace syzlab
