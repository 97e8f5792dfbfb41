#pragma once

#include <span>
#include <vector>

#include "hsgas/rng.hpp"

namespace hsgas {

// A location in d-dimensional Euclidean space, in units of the sphere
// diameter: the hard-core constraint is |x - y| > 1 and the sampling domain
// is the closed unit ball.
struct Point {
  std::vector<double> coords;

  int dim() const { return static_cast<int>(coords.size()); }
};

// A tuple of points of one common dimension; may be empty.
struct Configuration {
  std::vector<Point> points;

  int size() const { return static_cast<int>(points.size()); }
};

// pi^(d/2) / Gamma(d/2 + 1), the volume of the unit d-ball.
// Throws std::invalid_argument for d < 1.
double volume_unit_ball(int d);

// Uniform draw from the closed unit d-ball. d <= 4 uses rejection from the
// enclosing cube (acceptance >= 30.8% there); d >= 5 uses an isotropic
// normal direction scaled by radius U^(1/d), at constant cost per draw.
Point sample_point_in_unit_ball(int d, RandomStream& stream);

// Allocation-free variant writing into `out` (size d).
void sample_point_in_unit_ball(int d, RandomStream& stream, std::span<double> out);

// True iff every pair of points is strictly more than unit distance apart;
// vacuously true for k <= 1. Throws std::invalid_argument when the points do
// not all share one dimension.
bool is_hardcore_valid(const Configuration& config);

// Same predicate on a flat row-major (count x d) coordinate buffer.
bool pairwise_separated(std::span<const double> flat, int count, int d);

}  // namespace hsgas
