#include "syzlab/model.hpp"

namespace syzlab {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kFourgonal: return "fourgonal";
    case Family::kBielliptic: return "bielliptic";
    case Family::kDelPezzo: return "delpezzo";
    case Family::kVeronese: return "veronese";
    case Family::kGenus5: return "genus5";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::kFourgonal, Family::kBielliptic, Family::kDelPezzo,
                   Family::kVeronese, Family::kGenus5}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::kEllipticCone: return "elliptic-cone";
    case SurfaceKind::kDelPezzo: return "del-pezzo";
    case SurfaceKind::kVeronese: return "veronese";
  }
  return "unknown";
}

}  // namespace syzlab
