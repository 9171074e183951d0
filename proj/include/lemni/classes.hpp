#pragma once

#include <complex>
#include <string>

#include "lemni/geometry.hpp"

// Function classes, the disk bounds their members satisfy, and the
// closed-form extremal maps w(z) = z f'(z)/f(z).

namespace lemni {

enum class ClassKind { SClass, CloseToStarlike, Janowski, MClass, SLClass };

struct ClassSpec {
    ClassKind kind = ClassKind::SClass;
    int n = 1;          // series index: f(z) = z + a_{n+1} z^{n+1} + ...
    double alpha = 0.0; // order, CloseToStarlike only, in [0, 1)
    double A = 0.0;     // Janowski only, -1 <= B < A <= 1
    double B = 0.0;
    double beta = 0.0;  // MClass only, > 1

    static ClassSpec s_class(int n);
    static ClassSpec close_to_starlike(int n, double alpha);
    static ClassSpec janowski(int n, double A, double B);
    static ClassSpec m_class(int n, double beta);
    static ClassSpec sl_class(int n);

    void validate() const;  // throws std::domain_error
    std::string label() const;
};

enum class TargetKind { SL, M };

struct TargetSpec {
    TargetKind kind = TargetKind::SL;
    double beta = 0.0;  // M only, > 1

    static TargetSpec sl();
    static TargetSpec m(double beta);

    void validate() const;
    std::string label() const;
};

// Extremal member of a class, represented by its closed-form w(z) = z f'(z)/f(z).
struct ExtremalMap {
    ClassSpec cls;
    std::complex<double> operator()(std::complex<double> z) const;
};

// |z p'(z)/p(z)| <= 2 n r^n / (1 - r^{2n}) for p with positive real part.
double macgregor_bound(int n, double r);

// Disk containing p(z) for p subordinate to (1+Az)/(1+Bz):
// center (1 - A B r^{2n})/(1 - B^2 r^{2n}), radius (A - B) r^n/(1 - B^2 r^{2n}).
RealDisk janowski_disk(int n, double A, double B, double r);

// Disk containing z f'/f for close-to-starlike f of type alpha:
// center (1 + (1-2a) r^{2n})/(1 - r^{2n}), radius 2(1 + n - a) r^n/(1 - r^{2n}).
RealDisk cs_disk(int n, double alpha, double r);

// Disk containing z f'/f for f with f/z of positive real part:
// center 1, radius 2 n r^n/(1 - r^{2n}).
RealDisk s_class_disk(int n, double r);

ExtremalMap extremal_map(const ClassSpec& cls);

// SL target: |w^2 - 1| < 1.  M target: Re w < beta.
bool in_target(std::complex<double> w, const TargetSpec& target);

}  // namespace lemni
