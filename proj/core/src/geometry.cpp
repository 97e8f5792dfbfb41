#include "hsgas/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hsgas {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double dist2(const double* a, const double* b, int d) {
  double s = 0.0;
  for (int i = 0; i < d; ++i) {
    const double t = a[i] - b[i];
    s += t * t;
  }
  return s;
}

}  // namespace

double volume_unit_ball(int d) {
  if (d < 1) {
    throw std::invalid_argument("volume_unit_ball: dimension must be >= 1, got " +
                                std::to_string(d));
  }
  return std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

void sample_point_in_unit_ball(int d, RandomStream& stream, std::span<double> out) {
  if (d < 1) {
    throw std::invalid_argument("sample_point_in_unit_ball: dimension must be >= 1");
  }
  if (static_cast<int>(out.size()) != d) {
    throw std::invalid_argument("sample_point_in_unit_ball: output size != d");
  }
  if (d <= 4) {
    // Rejection from the enclosing cube; acceptance pi^(d/2)/(2^d Gamma(d/2+1)).
    for (;;) {
      double n2 = 0.0;
      for (int i = 0; i < d; ++i) {
        const double x = stream.uniform_sym();
        out[i] = x;
        n2 += x * x;
      }
      if (n2 <= 1.0) return;
    }
  }
  // Isotropic direction from independent normals, radius U^(1/d).
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (int i = 0; i < d; ++i) {
      const double z = stream.normal();
      out[i] = z;
      n2 += z * z;
    }
  } while (n2 == 0.0);
  const double scale = std::pow(stream.uniform01(), 1.0 / d) / std::sqrt(n2);
  double r2 = 0.0;
  for (int i = 0; i < d; ++i) {
    out[i] *= scale;
    r2 += out[i] * out[i];
  }
  if (r2 > 1.0) {
    // Rounding can overshoot the closed ball by an ulp when the radius draw
    // is at the top of its range; pull back onto the boundary.
    const double fix = 1.0 / std::sqrt(r2);
    for (int i = 0; i < d; ++i) out[i] *= fix;
  }
}

Point sample_point_in_unit_ball(int d, RandomStream& stream) {
  Point p;
  p.coords.resize(static_cast<std::size_t>(d));
  sample_point_in_unit_ball(d, stream, p.coords);
  return p;
}

bool pairwise_separated(std::span<const double> flat, int count, int d) {
  for (int i = 1; i < count; ++i) {
    const double* pi = flat.data() + static_cast<std::size_t>(i) * d;
    for (int j = 0; j < i; ++j) {
      // Squared distances against 1; ties (distance exactly 1) are not valid.
      if (dist2(pi, flat.data() + static_cast<std::size_t>(j) * d, d) <= 1.0) {
        return false;
      }
    }
  }
  return true;
}

bool is_hardcore_valid(const Configuration& config) {
  const int k = config.size();
  if (k <= 1) return true;
  const int d = config.points.front().dim();
  for (const Point& p : config.points) {
    if (p.dim() != d) {
      throw std::invalid_argument(
          "is_hardcore_valid: points of mixed dimensions (" + std::to_string(d) +
          " vs " + std::to_string(p.dim()) + ")");
    }
  }
  for (int i = 1; i < k; ++i) {
    for (int j = 0; j < i; ++j) {
      if (dist2(config.points[i].coords.data(), config.points[j].coords.data(), d) <=
          1.0) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace hsgas
