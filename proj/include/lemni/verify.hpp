#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lemni/classes.hpp"

// Empirical machinery that checks every closed-form radius against a
// bisection estimate computed directly from the extremal map.

namespace lemni {

struct VerificationReport {
    std::string formula_id;
    ClassSpec cls;
    TargetSpec target;
    double closed_form = 0.0;
    double empirical = 0.0;
    double abs_gap = 0.0;
    double sharpness_residual = 0.0;  // boundary residual at r = closed_form
    bool passed = false;
    bool clamped = false;
    long samples = 0;
    double tolerance = 0.0;
    std::string note;
};

struct AuditGrid {
    std::vector<int> n;
    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<std::pair<double, double>> ab;

    static AuditGrid defaults();
};

// Largest violation of the target constraint over the circle |z| = r:
// |w^2-1| - 1 for SL, Re w - beta for M. Uniform angular grid plus one
// golden-section pass around the worst angle; non-finite w counts as +inf.
// When worst_theta is non-null it receives the violating angle.
double worst_violation(const ExtremalMap& map, const TargetSpec& target, double r,
                       long angular_samples, double* worst_theta = nullptr);

// sup { r in (0,1) : map(|z| = r) stays in the target }, by bisection to
// width tol (at most 80 iterations).
double empirical_radius(const ExtremalMap& map, const TargetSpec& target,
                        long angular_samples = 720, double tol = 1e-9);

// Minimum boundary residual over |z| = R: | |w^2-1| - 1 | for SL,
// |Re w - beta| for M. Near zero exactly when the radius is sharp.
double sharpness_check(const ExtremalMap& map, const TargetSpec& target, double R,
                       long angular_samples = 720);

// One report per (formula, grid point), in a fixed order.
std::vector<VerificationReport> audit_all(const AuditGrid& grid, double tol);

}  // namespace lemni
