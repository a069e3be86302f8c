#pragma once

#include <cmath>
#include <functional>

// Test-only reference solvers, independent of the library's solve path.
namespace oracle {

/// Plain 200-step bisection. Assumes a single sign change of f - target
/// on [lo, hi]. Accuracy ~ (hi - lo) * 2^-200, i.e. exact in doubles.
inline double bisect(const std::function<double(double)>& f, double target,
                     double lo, double hi) {
    double glo = f(lo) - target;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double gmid = f(mid) - target;
        if (gmid == 0.0) return mid;
        if ((glo < 0.0) == (gmid < 0.0)) {
            lo = mid;
            glo = gmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Central finite difference for first derivatives.
inline double derivative(const std::function<double(double)>& f, double x,
                         double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

} // namespace oracle
