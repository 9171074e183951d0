#include "lemni/radii.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace lemni {

namespace {

constexpr double kSqrt2m1 = kSqrt2 - 1.0;

// Smallest positive root of c2 x^2 + c1 x + c0 = 0, c1 > 0.
std::optional<double> smallest_positive_root(double c2, double c1, double c0) {
    if (!(c1 > 0.0)) throw std::invalid_argument("smallest_positive_root: c1 must be > 0");
    if (c2 == 0.0) {
        if (c0 >= 0.0) return std::nullopt;
        return -c0 / c1;
    }
    const double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc < 0.0) return std::nullopt;
    const double x = -2.0 * c0 / (c1 + std::sqrt(disc));
    if (!(x > 0.0)) return std::nullopt;
    return x;
}

RadiusResult make_result(double value, std::string id, ClassSpec cls, TargetSpec target,
                         bool clamped) {
    RadiusResult res;
    res.value = value;
    res.formula_id = std::move(id);
    res.cls = cls;
    res.target = target;
    res.clamped = clamped;
    res.sharp = !clamped;
    return res;
}

}  // namespace

double smallest_positive_root_in_rn(double c2, double c1, double c0, int n) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    const auto x = smallest_positive_root(c2, c1, c0);
    if (!x) throw std::domain_error("no positive root in r^n");
    return std::pow(*x, 1.0 / n);
}

RadiusResult sl_radius_of_S(int n) {
    const auto cls = ClassSpec::s_class(n);
    // root of (sqrt(2)-1) x^2 + 2n x - (sqrt(2)-1) = 0
    const double xn = kSqrt2m1 / (n + std::sqrt(double(n) * n + kSqrt2m1 * kSqrt2m1));
    return make_result(std::pow(xn, 1.0 / n), "sl_radius_s", cls, TargetSpec::sl(), false);
}

RadiusResult sl_radius_of_CS(int n, double alpha) {
    const auto cls = ClassSpec::close_to_starlike(n, alpha);
    const double value =
        smallest_positive_root_in_rn(1.0 - 2.0 * alpha + kSqrt2, 2.0 * (1.0 + n - alpha),
                                     -kSqrt2m1, n);
    return make_result(value, "sl_radius_cs", cls, TargetSpec::sl(), false);
}

InclusionVerdict sl_inclusion_STAB(double A, double B) {
    if (!(B >= -1.0 && B < A && A <= 1.0))
        throw std::domain_error("require -1 <= B < A <= 1");

    InclusionVerdict v;
    const double one = 1.0 - B * B;
    if (one == 0.0) {
        v.limit_center = std::numeric_limits<double>::infinity();
        v.limit_radius = std::numeric_limits<double>::infinity();
        v.included = false;
        v.condition_used = "oracle";
        return v;
    }
    v.limit_center = (1.0 - A * B) / one;
    v.limit_radius = (A - B) / one;
    v.included = disk_in_lemniscate({v.limit_center, v.limit_radius});

    // Printed conditions, verbatim.
    const double ab1 = 1.0 - A * B;
    v.cond_i = (1.0 + A <= kSqrt2 * (1.0 + B)) && (2.0 * kSqrt2 * one <= 3.0 * ab1) &&
               (3.0 * ab1 < 3.0 * kSqrt2 * one);
    const double sq = one - ab1 * ab1;
    v.cond_ii = sq >= 0.0 &&
                ((A - B) * one + one * one <= one * std::sqrt(sq) + ab1 * ab1) &&
                (2.0 * kSqrt2 * one >= 3.0 * ab1);
    v.literal_condition_result = v.cond_i || v.cond_ii;
    v.shortcut = 1.0 + A < kSqrt2 * (1.0 + B);

    if (v.cond_i)
        v.condition_used = "cond_i";
    else if (v.cond_ii)
        v.condition_used = "cond_ii";
    else if (v.shortcut)
        v.condition_used = "shortcut";
    else
        v.condition_used = "oracle";
    return v;
}

RadiusResult sl_radius_of_STAB_Bnonpos(int n, double A, double B) {
    const auto cls = ClassSpec::janowski(n, A, B);
    if (B > 0.0) throw std::domain_error("require B <= 0");
    const double value =
        smallest_positive_root_in_rn((kSqrt2 * B - A) * B, A - B, -kSqrt2m1, n);
    const bool clamp = value >= 1.0;
    return make_result(clamp ? 1.0 : value, "sl_radius_st_bnonpos", cls, TargetSpec::sl(),
                       clamp);
}

double janowski_center_crossing(int n, double A, double B) {
    ClassSpec::janowski(n, A, B);
    // (1 - A B r^{2n})/(1 - B^2 r^{2n}) = 2 sqrt(2)/3 at r^{2n} = y.
    const double den = (2.0 * kSqrt2 * B - 3.0 * A) * B;
    const double num = 2.0 * kSqrt2 - 3.0;
    if (den == 0.0) return std::numeric_limits<double>::infinity();
    const double y = num / den;
    if (!(y > 0.0)) return std::numeric_limits<double>::infinity();
    return std::pow(y, 1.0 / (2.0 * n));
}

double janowski_R3(int n, double A, double B) {
    ClassSpec::janowski(n, A, B);
    const auto inside = [&](double r) {
        return disk_in_lemniscate(janowski_disk(n, A, B, r));
    };

    // Coarse scan for the first exit, then bisection in the bracketing cell.
    const long m = 4096;
    long fail = -1;
    for (long i = 1; i < m; ++i) {
        if (!inside(static_cast<double>(i) / m)) {
            fail = i;
            break;
        }
    }
    if (fail < 0) return 1.0;

    double lo = static_cast<double>(fail - 1) / m;
    double hi = static_cast<double>(fail) / m;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (inside(mid) ? lo : hi) = mid;
    }
    return lo;
}

RadiusResult sl_radius_of_STAB_Bpos(int n, double A, double B) {
    const auto cls = ClassSpec::janowski(n, A, B);
    if (!(B > 0.0)) throw std::domain_error("require 0 < B < A");

    // R2: the B<=0 formula, evaluated algebraically for B > 0. No real root
    // means the tangency condition never binds on (0, 1).
    const auto x = smallest_positive_root((kSqrt2 * B - A) * B, A - B, -kSqrt2m1);
    const double r2 = x ? std::pow(*x, 1.0 / n) : std::numeric_limits<double>::infinity();
    const double r2_clamped = std::min(1.0, r2);

    const double r1 = janowski_center_crossing(n, A, B);
    if (r2_clamped <= r1) {
        const bool clamp = r2 >= 1.0;
        return make_result(r2_clamped, "sl_radius_st_bpos_r2", cls, TargetSpec::sl(), clamp);
    }

    const double r3 = janowski_R3(n, A, B);
    const bool clamp = r3 >= 1.0;
    return make_result(std::min(1.0, r3), "sl_radius_st_bpos_r3", cls, TargetSpec::sl(), clamp);
}

RadiusResult sl_radius_of_STAB(int n, double A, double B) {
    return B <= 0.0 ? sl_radius_of_STAB_Bnonpos(n, A, B) : sl_radius_of_STAB_Bpos(n, A, B);
}

RadiusResult m_radius_of_S(int n, double beta) {
    const auto cls = ClassSpec::s_class(n);
    const auto target = TargetSpec::m(beta);
    const double b1 = beta - 1.0;
    const double xn = b1 / (n + std::sqrt(double(n) * n + b1 * b1));
    const double value = std::pow(xn, 1.0 / n);
    const bool clamp = value >= 1.0;
    return make_result(clamp ? 1.0 : value, "m_radius_s", cls, target, clamp);
}

RadiusResult m_radius_of_CS(int n, double alpha, double beta) {
    const auto cls = ClassSpec::close_to_starlike(n, alpha);
    const auto target = TargetSpec::m(beta);
    const double value = smallest_positive_root_in_rn(1.0 - 2.0 * alpha + beta,
                                                      2.0 * (1.0 + n - alpha),
                                                      -(beta - 1.0), n);
    const bool clamp = value >= 1.0;
    return make_result(clamp ? 1.0 : value, "m_radius_cs", cls, target, clamp);
}

}  // namespace lemni
