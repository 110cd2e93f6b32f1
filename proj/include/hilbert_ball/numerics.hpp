#pragma once

#include <cmath>
#include <utility>

namespace hball {

/// Root of an increasing function on [lo, hi] by bisection. Stops once the
/// bracket is narrower than `width` or stops shrinking in floating point.
template <typename F>
double bisect_increasing(F&& f, double lo, double hi, double width) {
    for (int it = 0; it < 400 && hi - lo > width; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (f(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

struct Extremum {
    double arg;
    double value;
};

/// Golden-section search for a maximum of a unimodal f on [lo, hi].
template <typename F>
Extremum golden_section_maximize(F&& f, double lo, double hi, double tol = 1e-12) {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = hi - g * (hi - lo);
    double d = lo + g * (hi - lo);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - g * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + g * (hi - lo);
            fd = f(d);
        }
    }
    const double arg = 0.5 * (lo + hi);
    return {arg, f(arg)};
}

template <typename F>
Extremum golden_section_minimize(F&& f, double lo, double hi, double tol = 1e-12) {
    const Extremum e = golden_section_maximize([&](double t) { return -f(t); }, lo, hi, tol);
    return {e.arg, -e.value};
}

} // namespace hball
