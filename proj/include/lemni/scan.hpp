#pragma once

#include <cmath>
#include <cstdint>

// Grid-scan reduction kernels. Each kernel has an OpenMP variant (the
// production path) and a _serial reference used by the tests and the
// benchmark. Ties in the reductions break toward the smaller grid index,
// which makes the parallel result independent of the iteration partition.

namespace lemni::scan {

struct GridExtreme {
    long index;
    double arg;
    double value;
};

enum class Mode { Min, Max };

namespace detail {

inline bool better(Mode m, double a, double b) {
    return m == Mode::Min ? a < b : a > b;
}

inline GridExtreme combine(Mode m, const GridExtreme& a, const GridExtreme& b) {
    if (better(m, a.value, b.value)) return a;
    if (better(m, b.value, a.value)) return b;
    return a.index <= b.index ? a : b;
}

}  // namespace detail

// Extremum of f over n uniformly spaced points on [lo, hi], n >= 2.
template <class F>
GridExtreme grid_extreme_serial(double lo, double hi, long n, Mode mode, F&& f) {
    const double step = (hi - lo) / static_cast<double>(n - 1);
    GridExtreme best{0, lo, f(lo)};
    for (long i = 1; i < n; ++i) {
        const double t = lo + static_cast<double>(i) * step;
        best = detail::combine(mode, best, {i, t, f(t)});
    }
    return best;
}

template <class F>
GridExtreme grid_extreme(double lo, double hi, long n, Mode mode, F&& f) {
    const double step = (hi - lo) / static_cast<double>(n - 1);
    GridExtreme best{0, lo, f(lo)};
#pragma omp parallel
    {
        GridExtreme local{-1, 0.0, 0.0};
        bool seen = false;
#pragma omp for nowait
        for (long i = 1; i < n; ++i) {
            const double t = lo + static_cast<double>(i) * step;
            const GridExtreme cur{i, t, f(t)};
            local = seen ? detail::combine(mode, local, cur) : cur;
            seen = true;
        }
        if (seen) {
#pragma omp critical
            best = detail::combine(mode, best, local);
        }
    }
    return best;
}

// Conjunction of pred over i in [0, n).
template <class Pred>
bool all_of_grid_serial(long n, Pred&& pred) {
    for (long i = 0; i < n; ++i)
        if (!pred(i)) return false;
    return true;
}

template <class Pred>
bool all_of_grid(long n, Pred&& pred) {
    bool ok = true;
#pragma omp parallel for reduction(&& : ok)
    for (long i = 0; i < n; ++i)
        ok = ok && pred(i);
    return ok;
}

// Golden-section refinement of an isolated extremum bracketed by [a, b].
// Shrinks the bracket below `width` and returns the best sampled point.
template <class F>
GridExtreme golden_refine(double a, double b, Mode mode, double width, F&& f) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > width) {
        if (detail::better(mode, f1, f2)) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    if (detail::better(mode, f1, f2)) return {0, x1, f1};
    return {0, x2, f2};
}

}  // namespace lemni::scan
