#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "syzlab/graded_ring.hpp"
#include "syzlab/model.hpp"
#include "syzlab/prime_field.hpp"
#include "syzlab/random.hpp"
#include "syzlab/subspace.hpp"

namespace syzlab {

using Point = std::vector<Residue>;

bool is_nonsingular(const WeierstrassCurve& curve, const PrimeField& field);
/// Random coefficients, redrawn until the discriminant is nonzero.
WeierstrassCurve random_weierstrass(std::uint64_t seed, const PrimeField& field);

/// Affine point (x, y) on the curve with random x, or nullopt when x^3 + a4 x + a6
/// is not a square.
std::optional<std::pair<Residue, Residue>> try_curve_point(const WeierstrassCurve& curve, Rng& rng,
                                                           const PrimeField& field);

/// Draws one point of the variety per call; nullopt means "try again".
using PointSampler = std::function<std::optional<Point>(Rng&)>;

struct Interpolation {
  Subspace quadrics;
  std::vector<Point> points;
};

/// Quadrics through `points`: kernel of the evaluation matrix of the degree-2
/// monomials.
Subspace quadrics_through(std::size_t num_vars, const std::vector<Point>& points, const PrimeField& field);

/// Samples 3 * graded_dim(n, 2) points, then keeps doubling the sample until the
/// quadric kernel stops changing. Fails with sample-exhausted when the sampler
/// keeps returning nothing or the kernel never stabilizes.
Interpolation interpolate_quadrics(std::size_t num_vars, const PointSampler& sampler, Rng& rng,
                                   const PrimeField& field);

/// The elliptic normal curve of degree n in P^{n-1}: coordinates are the
/// functions 1, x, y, x^2, xy, ... of pole order at most n at infinity.
Interpolation elliptic_normal_ideal(int n, const WeierstrassCurve& curve, std::uint64_t seed,
                                    const PrimeField& field);

/// Cone over the elliptic normal curve of degree g - 1, vertex Z1.
SurfaceModel elliptic_cone(int genus, const WeierstrassCurve& curve, std::uint64_t seed,
                           const PrimeField& field);

/// Intersection of the elliptic cone with a quadric not through the vertex.
CurveModel bielliptic_curve(int genus, const WeierstrassCurve& curve, std::uint64_t seed,
                            const PrimeField& field);
/// Same, with the Weierstrass curve drawn from the seed.
CurveModel bielliptic_curve(int genus, std::uint64_t seed, const PrimeField& field);

/// Image of P^2 under the cubics through 10 - g general points, 6 <= g <= 10.
/// At g = 10 there are no base points and the image is the Veronese surface.
SurfaceModel delpezzo_surface(int genus, std::uint64_t seed, const PrimeField& field,
                              std::vector<std::array<Residue, 3>>* base_points = nullptr);

/// Intersection of the Del Pezzo surface with a general quadric.
CurveModel delpezzo_curve(int genus, std::uint64_t seed, const PrimeField& field);

/// Three general quadrics in five variables.
CurveModel genus5_intersection(std::uint64_t seed, const PrimeField& field);

/// Dispatch on the family name; `a`, `b` and the frame are only read for
/// four-gonal models.
CurveModel construct_model(Family family, int genus, const ConstructionParams& params,
                           const PrimeField& field);

}  // namespace syzlab
