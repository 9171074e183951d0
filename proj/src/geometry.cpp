#include "lemni/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "lemni/scan.hpp"

namespace lemni {

namespace {
constexpr double kHalfPi = 1.5707963267948966;
}

bool RealDisk::valid() const {
    return center >= 0.0 && radius >= 0.0 && std::isfinite(center) && std::isfinite(radius);
}

bool in_lemniscate(std::complex<double> w) {
    return std::abs(w * w - 1.0) < 1.0;
}

BoundaryPoint boundary_point(double t) {
    if (!(t >= -kHalfPi && t <= kHalfPi))
        throw std::domain_error("boundary_point: t must be in [-pi/2, pi/2]");
    const double s = std::sin(t);
    const double c = std::cos(t);
    const double d = 1.0 + s * s;
    return {t, kSqrt2 * c / d, kSqrt2 * s * c / d};
}

double squared_distance(double center, double t) {
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double d = 1.0 + s * s;
    return center * center + 2.0 * (c * c - kSqrt2 * center * c) / d;
}

double squared_distance_derivative(double center, double t) {
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double d = 1.0 + s * s;
    return 2.0 * (-4.0 * c + kSqrt2 * center * (2.0 + c * c)) * s / (d * d);
}

double inner_radius(double center) {
    if (!(center > 0.0 && center < kSqrt2))
        throw std::domain_error("inner_radius: center must be in (0, sqrt(2))");
    if (center <= kInnerBreak) {
        const double u = std::sqrt(1.0 - center * center);
        return std::sqrt(u - (1.0 - center * center));
    }
    return kSqrt2 - center;
}

double outer_radius(double center) {
    if (!(center > 0.0))
        throw std::domain_error("outer_radius: center must be positive");
    return center <= kOuterBreak ? kSqrt2 - center : center;
}

bool disk_in_lemniscate(const RealDisk& d) {
    if (!d.valid()) return false;
    // Degenerate disks are a single point, accepted for any positive center.
    if (d.radius == 0.0) return d.center > 0.0;
    if (!(d.center > 0.0 && d.center < kSqrt2)) return false;
    return d.radius <= inner_radius(d.center);
}

double extremal_distance_oracle(double center, Extremum mode, long grid_size) {
    if (!(center > 0.0))
        throw std::domain_error("extremal_distance_oracle: center must be positive");
    if (grid_size < 1000)
        throw std::domain_error("extremal_distance_oracle: grid_size must be >= 1000");

    const auto z = [center](double t) { return squared_distance(center, t); };
    const auto m = mode == Extremum::Min ? scan::Mode::Min : scan::Mode::Max;

    const auto coarse = scan::grid_extreme(-kHalfPi, kHalfPi, grid_size, m, z);
    const double step = (2.0 * kHalfPi) / static_cast<double>(grid_size - 1);
    const double lo = std::max(-kHalfPi, coarse.arg - step);
    const double hi = std::min(kHalfPi, coarse.arg + step);
    const auto fine = scan::golden_refine(lo, hi, m, 1e-12, z);
    const double best = scan::detail::better(m, coarse.value, fine.value) ? coarse.value : fine.value;
    return std::sqrt(std::max(0.0, best));
}

std::optional<double> interior_critical_angle(double center) {
    if (!(center > 0.0) || center > 1.0) return std::nullopt;
    double c = kSqrt2 * (1.0 - std::sqrt(1.0 - center * center)) / center;
    if (c > 1.0 && c <= 1.0 + 1e-12) c = 1.0;  // roundoff at center = 2 sqrt(2)/3
    if (!(c > 0.0 && c <= 1.0)) return std::nullopt;
    return std::acos(c);
}

}  // namespace lemni
