#include "syzlab/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "syzlab/errors.hpp"

namespace syzlab {
namespace {

using nlohmann::json;

json subspace_to_json(const Subspace& s) {
  json rows = json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(s.basis_vector(r));
  return json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"rows", rows}};
}

Subspace subspace_from_json(const json& j, std::size_t ambient, const PrimeField& f, const char* name) {
  const auto declared_ambient = j.at("ambient_dim").get<std::size_t>();
  if (declared_ambient != ambient) {
    throw Error(ErrorCode::kMalformedInput, std::string(name) + ": ambient_dim " + std::to_string(declared_ambient) +
                                                " but S^2 V has dimension " + std::to_string(ambient));
  }
  const auto& rows = j.at("rows");
  SparseMatrix m(0, ambient);
  for (const auto& row : rows) {
    std::vector<Residue> v;
    for (const auto& x : row) {
      const auto value = x.get<std::int64_t>();
      if (value < 0 || value >= static_cast<std::int64_t>(f.prime())) {
        throw Error(ErrorCode::kMalformedInput, std::string(name) + ": entry outside [0, p)");
      }
      v.push_back(static_cast<Residue>(value));
    }
    if (v.size() != ambient) throw Error(ErrorCode::kMalformedInput, std::string(name) + ": row of wrong length");
    m.append_dense_row(v);
  }
  Subspace s = Subspace::span(m, f);
  if (s.basis() != m || j.at("dim").get<std::size_t>() != s.dim()) {
    throw Error(ErrorCode::kMalformedInput, std::string(name) + ": rows are not a reduced echelon basis");
  }
  return s;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

Verdict parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::kEqualsCurve, Verdict::kProperSurface, Verdict::kWholeSpace}) {
    if (to_string(v) == s) return v;
  }
  throw Error(ErrorCode::kMalformedInput, "unknown verdict '" + s + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, const char* what) {
  s = trim(s);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::kParse, std::string("expected a nonnegative integer for ") + what + ", got '" +
                                       std::string(s) + "'");
  }
  return v;
}

}  // namespace

json model_to_json(const CurveModel& m) {
  json params{{"seed", m.params.seed}, {"a", optional_json(m.params.a)}, {"b", optional_json(m.params.b)}};
  params["frame"] = m.params.frame ? json(*m.params.frame) : json(nullptr);
  params["weierstrass"] = m.params.weierstrass ? json{{"a4", m.params.weierstrass->a4}, {"a6", m.params.weierstrass->a6}}
                                               : json(nullptr);
  params["base_points"] = m.params.base_points;
  json j{{"format_version", kModelFormatVersion},
         {"prime", m.prime},
         {"genus", m.genus},
         {"family", std::string(to_string(m.family))},
         {"params", params},
         {"I2", subspace_to_json(m.i2)}};
  j["IS2"] = m.surface_i2 ? subspace_to_json(*m.surface_i2) : json(nullptr);
  j["IX2"] = m.scroll_i2 ? subspace_to_json(*m.scroll_i2) : json(nullptr);
  return j;
}

CurveModel model_from_json(const json& j) {
  try {
    const int version = j.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw Error(ErrorCode::kMalformedInput, "unsupported model format_version " + std::to_string(version));
    }
    CurveModel m;
    m.prime = j.at("prime").get<std::uint32_t>();
    const PrimeField f(m.prime);
    m.genus = j.at("genus").get<int>();
    if (m.genus < 3 || m.genus > 16) throw Error(ErrorCode::kMalformedInput, "genus outside 3..16");
    const auto family = parse_family(j.at("family").get<std::string>());
    if (!family) throw Error(ErrorCode::kMalformedInput, "unknown family");
    m.family = *family;
    const json& p = j.at("params");
    m.params.seed = p.at("seed").get<std::uint64_t>();
    m.params.a = optional_from<int>(p, "a");
    m.params.b = optional_from<int>(p, "b");
    m.params.frame = optional_from<std::array<int, 3>>(p, "frame");
    if (p.contains("weierstrass") && !p.at("weierstrass").is_null()) {
      m.params.weierstrass = WeierstrassCurve{p.at("weierstrass").at("a4").get<Residue>(),
                                              p.at("weierstrass").at("a6").get<Residue>()};
    }
    if (p.contains("base_points")) m.params.base_points = p.at("base_points").get<std::vector<std::array<Residue, 3>>>();
    const std::size_t ambient = graded_dim(static_cast<std::size_t>(m.genus), 2);
    m.i2 = subspace_from_json(j.at("I2"), ambient, f, "I2");
    if (j.contains("IS2") && !j.at("IS2").is_null()) m.surface_i2 = subspace_from_json(j.at("IS2"), ambient, f, "IS2");
    if (j.contains("IX2") && !j.at("IX2").is_null()) m.scroll_i2 = subspace_from_json(j.at("IX2"), ambient, f, "IX2");
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("model file: ") + e.what());
  }
}

void save_model(const CurveModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  out << model_to_json(model).dump(1) << '\n';
}

CurveModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, "'" + path + "' is not JSON: " + e.what());
  }
  return model_from_json(j);
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kInvalidArgument, "SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 15]);
  }
  return out;
}

std::string model_digest(const CurveModel& model) { return sha256_hex(model_to_json(model).dump()); }

json report_to_json(const Report& r) {
  json j{{"format_version", kReportFormatVersion},
         {"model_digest", r.model_digest},
         {"prime", r.prime},
         {"seed", r.seed},
         {"genus", r.genus},
         {"family", std::string(to_string(r.family))},
         {"kappa11", r.kappa11},
         {"kappa21", r.kappa21},
         {"dim_W", r.dim_w},
         {"verdict", std::string(to_string(r.verdict))},
         {"surface_match", optional_json(r.surface_match)},
         {"warnings", r.warnings}};
  j["scrollar_bidegrees"] =
      r.scrollar_bidegrees ? json::array({r.scrollar_bidegrees->first, r.scrollar_bidegrees->second}) : json(nullptr);
  if (r.betti) {
    json rows = json::array();
    for (const auto& row : r.betti->kappa) {
      json jr = json::array();
      for (const auto& v : row) jr.push_back(optional_json(v));
      rows.push_back(jr);
    }
    j["betti"] = json{{"p_max", r.betti->p_max}, {"q_max", r.betti->q_max}, {"kappa", rows}};
  } else {
    j["betti"] = nullptr;
  }
  if (r.timings) j["timings_ms"] = *r.timings;
  return j;
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.model_digest = j.at("model_digest").get<std::string>();
    r.prime = j.at("prime").get<std::uint32_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.genus = j.at("genus").get<int>();
    const auto family = parse_family(j.at("family").get<std::string>());
    if (!family) throw Error(ErrorCode::kMalformedInput, "unknown family");
    r.family = *family;
    r.kappa11 = j.at("kappa11").get<std::size_t>();
    r.kappa21 = j.at("kappa21").get<std::size_t>();
    r.dim_w = j.at("dim_W").get<std::size_t>();
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    r.surface_match = optional_from<bool>(j, "surface_match");
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (!j.at("scrollar_bidegrees").is_null()) {
      r.scrollar_bidegrees = std::pair{j.at("scrollar_bidegrees").at(0).get<int>(), j.at("scrollar_bidegrees").at(1).get<int>()};
    }
    if (!j.at("betti").is_null()) {
      BettiTable t;
      t.p_max = j.at("betti").at("p_max").get<std::size_t>();
      t.q_max = j.at("betti").at("q_max").get<std::size_t>();
      for (const auto& row : j.at("betti").at("kappa")) {
        std::vector<std::optional<std::size_t>> vals;
        for (const auto& v : row) vals.push_back(v.is_null() ? std::nullopt : std::optional(v.get<std::size_t>()));
        t.kappa.push_back(std::move(vals));
      }
      r.betti = std::move(t);
    }
    if (j.contains("timings_ms")) r.timings = j.at("timings_ms").get<std::map<std::string, double>>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("report file: ") + e.what());
  }
}

std::string write_cas_text(const GradedRing& ring, const CasText& doc) {
  std::ostringstream out;
  out << "# syzlab cas-text 1\n";
  out << "# prime: " << doc.prime << '\n';
  out << "# variables: " << doc.num_vars << '\n';
  out << "# ideal: " << doc.ideal << '\n';
  out << "# generators: " << doc.generators.size() << '\n';
  for (const auto& g : doc.generators) out << ring.to_string(g) << '\n';
  out << "# points: " << doc.points.size() << '\n';
  for (const auto& p : doc.points) {
    out << "point";
    for (Residue c : p) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

GradedVector parse_polynomial(const GradedRing& ring, std::string_view text) {
  const PrimeField& f = ring.field();
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty()) throw Error(ErrorCode::kParse, "empty polynomial");
  if (compact == "0") throw Error(ErrorCode::kParse, "the zero polynomial has no degree");

  std::optional<std::size_t> degree;
  std::vector<std::pair<Exponent, Residue>> terms;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    bool negative = false;
    if (compact[pos] == '+' || compact[pos] == '-') {
      negative = compact[pos] == '-';
      ++pos;
    } else if (!terms.empty()) {
      throw Error(ErrorCode::kParse, "expected '+' or '-' at offset " + std::to_string(pos));
    }
    std::size_t end = pos;
    while (end < compact.size() && compact[end] != '+' && compact[end] != '-') ++end;
    const std::string_view term(compact.data() + pos, end - pos);
    if (term.empty()) throw Error(ErrorCode::kParse, "empty term at offset " + std::to_string(pos));
    Residue coeff = 1;
    Exponent e(ring.num_vars(), 0);
    std::size_t fpos = 0;
    bool first_factor = true;
    while (fpos <= term.size()) {
      std::size_t fend = term.find('*', fpos);
      if (fend == std::string_view::npos) fend = term.size();
      const std::string_view factor = term.substr(fpos, fend - fpos);
      if (factor.empty()) throw Error(ErrorCode::kParse, "empty factor in '" + std::string(term) + "'");
      if (factor[0] == 'Z') {
        const std::size_t caret = factor.find('^');
        const std::uint64_t var = parse_uint(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), "variable index");
        const std::uint64_t power = caret == std::string_view::npos ? 1 : parse_uint(factor.substr(caret + 1), "exponent");
        if (var < 1 || var > ring.num_vars()) {
          throw Error(ErrorCode::kParse, "variable Z" + std::to_string(var) + " outside Z1..Z" + std::to_string(ring.num_vars()));
        }
        if (e[var - 1] + power > 255) throw Error(ErrorCode::kParse, "exponent too large");
        e[var - 1] = static_cast<std::uint8_t>(e[var - 1] + power);
      } else if (first_factor) {
        coeff = static_cast<Residue>(parse_uint(factor, "coefficient") % f.prime());
      } else {
        throw Error(ErrorCode::kParse, "coefficient must come first in '" + std::string(term) + "'");
      }
      first_factor = false;
      fpos = fend + 1;
    }
    std::size_t d = 0;
    for (auto x : e) d += x;
    if (degree && *degree != d) throw Error(ErrorCode::kParse, "polynomial is not homogeneous");
    degree = d;
    terms.emplace_back(std::move(e), negative ? f.neg(coeff) : coeff);
    pos = end;
  }
  if (*degree > ring.max_degree()) throw Error(ErrorCode::kParse, "degree exceeds the ring's range");
  GradedVector out = ring.zero(*degree);
  for (const auto& [e, c] : terms) {
    auto& slot = out.coeffs[ring.indexer(*degree).rank(e)];
    slot = f.add(slot, c);
  }
  return out;
}

CasText parse_cas_text(std::string_view text) {
  CasText doc;
  std::map<std::string, std::string> header;
  std::vector<std::string> poly_lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      const std::size_t colon = t.find(':');
      if (colon != std::string_view::npos) {
        header[std::string(trim(t.substr(1, colon - 1)))] = std::string(trim(t.substr(colon + 1)));
      }
      continue;
    }
    if (t.starts_with("point")) {
      std::istringstream ps{std::string(t.substr(5))};
      std::vector<Residue> p;
      std::string tok;
      while (ps >> tok) p.push_back(static_cast<Residue>(parse_uint(tok, "point coordinate")));
      doc.points.push_back(std::move(p));
      continue;
    }
    poly_lines.emplace_back(t);
  }
  for (const char* key : {"prime", "variables", "ideal", "generators"}) {
    if (!header.count(key)) throw Error(ErrorCode::kParse, std::string("missing header '") + key + "'");
  }
  doc.prime = static_cast<std::uint32_t>(parse_uint(header["prime"], "prime"));
  doc.num_vars = static_cast<std::size_t>(parse_uint(header["variables"], "variables"));
  doc.ideal = header["ideal"];
  const std::size_t count = static_cast<std::size_t>(parse_uint(header["generators"], "generators"));
  if (count != poly_lines.size()) {
    throw Error(ErrorCode::kParse, "header announces " + std::to_string(count) + " generators, found " +
                                       std::to_string(poly_lines.size()));
  }
  for (const auto& p : doc.points) {
    if (p.size() != doc.num_vars) throw Error(ErrorCode::kParse, "point has the wrong number of coordinates");
  }
  const GradedRing ring(doc.num_vars, PrimeField(doc.prime), 4);
  for (const auto& l : poly_lines) doc.generators.push_back(parse_polynomial(ring, l));
  return doc;
}

}  // namespace syzlab
