#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syzlab/prime_field.hpp"
#include "syzlab/subspace.hpp"

namespace syzlab {

enum class Family { kFourgonal, kBielliptic, kDelPezzo, kVeronese, kGenus5 };

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

/// y^2 = x^3 + a4 x + a6 with nonzero discriminant.
struct WeierstrassCurve {
  Residue a4 = 0;
  Residue a6 = 0;
  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

struct ConstructionParams {
  std::optional<std::array<int, 3>> frame;
  std::optional<int> a;
  std::optional<int> b;
  std::uint64_t seed = 0;
  std::optional<WeierstrassCurve> weierstrass;
  /// Plane points blown up for Del Pezzo models, as (x : y : z).
  std::vector<std::array<Residue, 3>> base_points;
  friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

/// A canonical curve given by the quadric part of its ideal.
struct CurveModel {
  int genus = 0;
  std::uint32_t prime = kDefaultPrime;
  Family family = Family::kGenus5;
  ConstructionParams params;
  Subspace i2;
  /// Quadrics of the surface the curve was cut from, when there is one.
  std::optional<Subspace> surface_i2;
  /// Quadrics of the three-dimensional scroll, for four-gonal models.
  std::optional<Subspace> scroll_i2;
  friend bool operator==(const CurveModel&, const CurveModel&) = default;
};

enum class SurfaceKind { kEllipticCone, kDelPezzo, kVeronese };

std::string_view to_string(SurfaceKind kind);

struct SurfaceModel {
  SurfaceKind kind = SurfaceKind::kDelPezzo;
  int genus = 0;
  Subspace i2;
  std::vector<std::vector<Residue>> sample_points;
};

}  // namespace syzlab
