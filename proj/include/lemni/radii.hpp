#pragma once

#include <string>

#include "lemni/classes.hpp"

// Closed-form radius computations: the largest r such that every member of a
// class maps |z| < r into the target region.

namespace lemni {

struct RadiusResult {
    double value = 0.0;  // in (0, 1]
    std::string formula_id;
    ClassSpec cls;
    TargetSpec target;
    bool sharp = false;    // equality attained by the extremal member
    bool clamped = false;  // value was clamped to 1
};

struct InclusionVerdict {
    bool included = false;            // oracle-backed verdict (the contract)
    std::string condition_used;       // cond_i | cond_ii | shortcut | oracle
    bool literal_condition_result = false;  // printed conditions (i) or (ii), verbatim
    bool cond_i = false;
    bool cond_ii = false;
    bool shortcut = false;            // 1 + A < sqrt(2) (1 + B)
    double limit_center = 0.0;        // (1 - AB)/(1 - B^2); inf when B = -1
    double limit_radius = 0.0;        // (A - B)/(1 - B^2); inf when B = -1
};

// Smallest positive root of c2 x^2 + c1 x + c0 = 0 in x = r^n, returned as r.
// Requires c1 > 0; uses x = -2 c0 / (c1 + sqrt(c1^2 - 4 c2 c0)) to avoid
// cancellation. Throws when no positive root exists.
double smallest_positive_root_in_rn(double c2, double c1, double c0, int n);

// SL-radius of {f : f/z has positive real part}:
//   r^n = (sqrt(2)-1) / (n + sqrt(n^2 + (sqrt(2)-1)^2)).
RadiusResult sl_radius_of_S(int n);

// SL-radius of the close-to-starlike class of type alpha; r^n is the smallest
// positive root of (1 - 2a + sqrt(2)) x^2 + 2(1 + n - a) x - (sqrt(2)-1) = 0.
RadiusResult sl_radius_of_CS(int n, double alpha);

// Whole-class inclusion ST_n[A,B] in SL_n, decided by the limit disk
// (r -> 1) against the lemniscate. Accepts B = -1 (never included).
InclusionVerdict sl_inclusion_STAB(double A, double B);

// SL-radius for the Janowski class with B <= 0:
//   min(1, root of (sqrt(2) B - A) B x^2 + (A - B) x - (sqrt(2)-1) in x = r^n).
RadiusResult sl_radius_of_STAB_Bnonpos(int n, double A, double B);

// SL-radius for the Janowski class with 0 < B < A: either the B<=0 formula
// (when its root lies where the disk center stays >= 2 sqrt(2)/3) or the
// bisection radius R3 where the moving disk first leaves the lemniscate.
RadiusResult sl_radius_of_STAB_Bpos(int n, double A, double B);

// Dispatch on the sign of B.
RadiusResult sl_radius_of_STAB(int n, double A, double B);

// M(beta)-radius of S_n: r^n = (beta-1)/(n + sqrt(n^2 + (beta-1)^2)).
RadiusResult m_radius_of_S(int n, double beta);

// M(beta)-radius of the close-to-starlike class; r^n is the smallest positive
// root of (1 - 2a + beta) x^2 + 2(1 + n - a) x - (beta - 1) = 0.
RadiusResult m_radius_of_CS(int n, double alpha, double beta);

// r below which the Janowski disk center stays >= 2 sqrt(2)/3 (B > 0 split).
// +inf when the center never drops that low on (0, 1].
double janowski_center_crossing(int n, double A, double B);

// Largest rho in (0, 1] with the Janowski disk inside the lemniscate for all
// r <= rho, found by coarse scan plus bisection to 1e-10.
double janowski_R3(int n, double A, double B);

}  // namespace lemni
