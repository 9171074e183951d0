#pragma once

#include <complex>
#include <optional>

// Geometry of the right half of the lemniscate of Bernoulli
// (x^2+y^2)^2 = 2(x^2-y^2), the boundary of the region |w^2-1| < 1.

namespace lemni {

inline constexpr double kSqrt2 = 1.4142135623730951;
// Center where the nearest boundary point switches between the interior
// critical point and the vertex (sqrt(2), 0).
inline constexpr double kInnerBreak = 2.0 * kSqrt2 / 3.0;
// Center where the farthest boundary point switches between the vertex
// and the origin.
inline constexpr double kOuterBreak = 1.0 / kSqrt2;

// Disk {w : |w - center| < radius} with real nonnegative center.
struct RealDisk {
    double center = 0.0;
    double radius = 0.0;
    bool valid() const;
};

struct BoundaryPoint {
    double t;  // parameter in [-pi/2, pi/2]
    double x;
    double y;
};

// Strict membership |w^2 - 1| < 1.
bool in_lemniscate(std::complex<double> w);

// Parametrization of the right half:
//   x(t) = sqrt(2) cos t / (1 + sin^2 t),  y(t) = sqrt(2) sin t cos t / (1 + sin^2 t).
BoundaryPoint boundary_point(double t);

// Squared distance from (center, 0) to the boundary point at parameter t:
//   center^2 + 2(cos^2 t - sqrt(2) center cos t) / (1 + sin^2 t).
double squared_distance(double center, double t);

// d/dt of squared_distance: 2 (-4 cos t + sqrt(2) center (2 + cos^2 t)) sin t / (1 + sin^2 t)^2.
double squared_distance_derivative(double center, double t);

// Largest rho with {|w - center| < rho} inside the lemniscate region,
// for center in (0, sqrt(2)):
//   (sqrt(1-a^2) - (1-a^2))^(1/2)  for a <= 2 sqrt(2)/3,
//   sqrt(2) - a                    otherwise.
double inner_radius(double center);

// Smallest rho with the lemniscate region inside {|w - center| < rho},
// for center > 0: sqrt(2) - a for a <= 1/sqrt(2), else a.
double outer_radius(double center);

// True iff the closed disk lies inside the closed lemniscate region.
// Centers outside (0, sqrt(2)) have no inner disk and return false.
bool disk_in_lemniscate(const RealDisk& d);

enum class Extremum { Min, Max };

// Independent check of inner_radius/outer_radius: min or max distance from
// (center, 0) to the boundary by dense grid scan over t plus golden-section
// refinement of the bracketing cell.
double extremal_distance_oracle(double center, Extremum mode, long grid_size = 10001);

// Interior critical parameter t0 with cos t0 = sqrt(2)(1 - sqrt(1-a^2))/a.
// Diagnostic only; empty when the cosine is not in (0, 1].
std::optional<double> interior_critical_angle(double center);

}  // namespace lemni
