#include "regraph/roots.hpp"

#include <cmath>
#include <string>

namespace regraph {

namespace {

double eval_checked(const RealFn& f, double x, double target) {
    const double y = f(x);
    if (!std::isfinite(y)) {
        throw NonFinite("f(" + std::to_string(x) + ") is not finite");
    }
    return y - target;
}

bool opposite_signs(double a, double b) {
    return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0);
}

} // namespace

RootResult solve_monotone(const RealFn& f, double target, const Bracket& bracket,
                          double rel_tol) {
    if (!(rel_tol > 0.0)) {
        throw DomainError("rel_tol must be positive");
    }
    if (!(bracket.lo < bracket.hi) || !std::isfinite(bracket.lo) ||
        !std::isfinite(bracket.hi)) {
        throw DomainError("bracket requires finite lo < hi");
    }

    double lo = bracket.lo;
    double hi = bracket.hi;
    double glo = eval_checked(f, lo, target);
    double ghi = eval_checked(f, hi, target);

    if (glo == 0.0) return {lo, 0.0, 0};
    if (ghi == 0.0) return {hi, 0.0, 0};
    if (!opposite_signs(glo, ghi)) {
        throw NoSignChange("bracket does not straddle the target value");
    }

    double best_x = (std::abs(glo) <= std::abs(ghi)) ? lo : hi;
    double best_g = (std::abs(glo) <= std::abs(ghi)) ? glo : ghi;

    // Width two accepted steps ago; a secant run that fails to halve the
    // bracket over that window gets replaced by a bisection step.
    double width_prev2 = 2.0 * (hi - lo);
    double width_prev1 = 2.0 * (hi - lo);
    bool force_bisect = false;

    for (int iter = 1; iter <= kMaxIterations; ++iter) {
        const double width = hi - lo;
        if (width <= rel_tol * std::max(1.0, std::abs(best_x)) &&
            std::abs(best_g) <= rel_tol * std::max(1.0, std::abs(target))) {
            return {best_x, best_g, iter - 1};
        }

        const double mid = lo + 0.5 * width;
        double x = mid;
        if (!force_bisect) {
            const double secant = lo - glo * width / (ghi - glo);
            if (std::isfinite(secant) && secant > lo && secant < hi) {
                x = secant;
            }
        }

        const double gx = eval_checked(f, x, target);
        if (std::abs(gx) < std::abs(best_g)) {
            best_x = x;
            best_g = gx;
        }
        if (gx == 0.0) {
            return {x, 0.0, iter};
        }

        if (opposite_signs(glo, gx)) {
            hi = x;
            ghi = gx;
        } else {
            lo = x;
            glo = gx;
        }

        force_bisect = (hi - lo) > 0.5 * width_prev2;
        width_prev2 = width_prev1;
        width_prev1 = hi - lo;
    }

    throw IterationLimit("no convergence within " +
                         std::to_string(kMaxIterations) + " iterations");
}

std::vector<Bracket> bracket_scan(const RealFn& f, double target, double lo,
                                  double hi, int steps) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError("scan requires finite lo < hi");
    }
    if (steps < 2) {
        throw DomainError("scan requires steps >= 2");
    }

    std::vector<Bracket> out;
    double x_prev = lo;
    double g_prev = eval_checked(f, lo, target);
    for (int i = 1; i <= steps; ++i) {
        const double x = (i == steps) ? hi : lo + (hi - lo) * i / steps;
        const double g = eval_checked(f, x, target);
        const bool crossing = opposite_signs(g_prev, g) ||
                              (g == 0.0 && g_prev != 0.0) ||
                              (i == 1 && g_prev == 0.0 && g != 0.0);
        if (crossing) {
            out.push_back({x_prev, x,
                           g > g_prev ? Monotonicity::increasing
                                      : Monotonicity::decreasing});
        }
        x_prev = x;
        g_prev = g;
    }
    return out;
}

} // namespace regraph
