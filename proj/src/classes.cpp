#include "lemni/classes.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lemni {

ClassSpec ClassSpec::s_class(int n) {
    ClassSpec c;
    c.kind = ClassKind::SClass;
    c.n = n;
    c.validate();
    return c;
}

ClassSpec ClassSpec::close_to_starlike(int n, double alpha) {
    ClassSpec c;
    c.kind = ClassKind::CloseToStarlike;
    c.n = n;
    c.alpha = alpha;
    c.validate();
    return c;
}

ClassSpec ClassSpec::janowski(int n, double A, double B) {
    ClassSpec c;
    c.kind = ClassKind::Janowski;
    c.n = n;
    c.A = A;
    c.B = B;
    c.validate();
    return c;
}

ClassSpec ClassSpec::m_class(int n, double beta) {
    ClassSpec c;
    c.kind = ClassKind::MClass;
    c.n = n;
    c.beta = beta;
    c.validate();
    return c;
}

ClassSpec ClassSpec::sl_class(int n) {
    ClassSpec c;
    c.kind = ClassKind::SLClass;
    c.n = n;
    c.validate();
    return c;
}

void ClassSpec::validate() const {
    if (n < 1) throw std::domain_error("n must be >= 1");
    switch (kind) {
        case ClassKind::CloseToStarlike:
            if (!(alpha >= 0.0 && alpha < 1.0))
                throw std::domain_error("alpha must be in [0, 1)");
            break;
        case ClassKind::Janowski:
            if (!(B >= -1.0 && B < A && A <= 1.0))
                throw std::domain_error("require -1 <= B < A <= 1");
            break;
        case ClassKind::MClass:
            if (!(beta > 1.0)) throw std::domain_error("beta must be > 1");
            break;
        default:
            break;
    }
}

std::string ClassSpec::label() const {
    std::ostringstream os;
    switch (kind) {
        case ClassKind::SClass: os << "S_" << n; break;
        case ClassKind::CloseToStarlike: os << "CS_" << n << "(" << alpha << ")"; break;
        case ClassKind::Janowski: os << "ST_" << n << "[" << A << "," << B << "]"; break;
        case ClassKind::MClass: os << "M_" << n << "(" << beta << ")"; break;
        case ClassKind::SLClass: os << "SL_" << n; break;
    }
    return os.str();
}

TargetSpec TargetSpec::sl() { return {TargetKind::SL, 0.0}; }

TargetSpec TargetSpec::m(double beta) {
    TargetSpec t{TargetKind::M, beta};
    t.validate();
    return t;
}

void TargetSpec::validate() const {
    if (kind == TargetKind::M && !(beta > 1.0))
        throw std::domain_error("beta must be > 1");
}

std::string TargetSpec::label() const {
    if (kind == TargetKind::SL) return "SL";
    std::ostringstream os;
    os << "M(" << beta << ")";
    return os.str();
}

std::complex<double> ExtremalMap::operator()(std::complex<double> z) const {
    const std::complex<double> zn = std::pow(z, cls.n);
    const std::complex<double> z2n = zn * zn;
    switch (cls.kind) {
        case ClassKind::SClass:
            return 1.0 + 2.0 * static_cast<double>(cls.n) * zn / (1.0 - z2n);
        case ClassKind::CloseToStarlike: {
            const double k = 2.0 * (1.0 + cls.n - cls.alpha);
            return (1.0 + k * zn + (1.0 - 2.0 * cls.alpha) * z2n) / (1.0 - z2n);
        }
        case ClassKind::Janowski:
            if (cls.B == 0.0) return 1.0 + cls.A * zn;
            return (1.0 + cls.A * zn) / (1.0 + cls.B * zn);
        default:
            throw std::domain_error("no extremal map for this class kind");
    }
}

double macgregor_bound(int n, double r) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("r must be in [0, 1)");
    const double rn = std::pow(r, n);
    return 2.0 * n * rn / (1.0 - rn * rn);
}

RealDisk janowski_disk(int n, double A, double B, double r) {
    ClassSpec::janowski(n, A, B);  // parameter validation
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("r must be in [0, 1)");
    const double rn = std::pow(r, n);
    const double d = 1.0 - B * B * rn * rn;
    return {(1.0 - A * B * rn * rn) / d, (A - B) * rn / d};
}

RealDisk cs_disk(int n, double alpha, double r) {
    ClassSpec::close_to_starlike(n, alpha);
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("r must be in [0, 1)");
    const double rn = std::pow(r, n);
    const double d = 1.0 - rn * rn;
    return {(1.0 + (1.0 - 2.0 * alpha) * rn * rn) / d, 2.0 * (1.0 + n - alpha) * rn / d};
}

RealDisk s_class_disk(int n, double r) {
    return {1.0, macgregor_bound(n, r)};
}

ExtremalMap extremal_map(const ClassSpec& cls) {
    cls.validate();
    if (cls.kind == ClassKind::MClass || cls.kind == ClassKind::SLClass)
        throw std::domain_error("class has no extremal map here: " + cls.label());
    return {cls};
}

bool in_target(std::complex<double> w, const TargetSpec& target) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
    if (target.kind == TargetKind::SL) return in_lemniscate(w);
    return w.real() < target.beta;
}

}  // namespace lemni
