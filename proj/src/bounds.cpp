#include "regraph/bounds.hpp"

#include <cmath>
#include <string>

#include "regraph/regular_graph.hpp"
#include "regraph/roots.hpp"

namespace regraph {

namespace {

double decreasing_side(int n, double w) { return n * w / (w - n + 1.0); }

// Crossing value of an increasing curve with n*w/(w-n+1) on (n, inf).
// The decreasing side starts at n^2 and falls to n while the increasing
// side is unbounded, so doubling from 4n always finds a sign flip. The
// root is solved on the log of the ratio, which keeps the residual
// O(1)-scaled for large n.
double crossing_value(int n, const RealFn& increasing) {
    const auto h = [&](double w) {
        return std::log(increasing(w)) - std::log(decreasing_side(n, w));
    };
    const double lo = n + 1e-9;
    double hi = 4.0 * static_cast<double>(n);
    while (h(hi) <= 0.0) hi *= 2.0;
    const double w_cross =
        solve_monotone(h, 0.0, {lo, hi, Monotonicity::increasing}).root;
    return increasing(w_cross);
}

} // namespace

double unconditional_bound(int n) {
    if (n < 2) throw DomainError("bounds require n >= 2");
    if (n == 3) return 3.0 + std::sqrt(2.0);
    const double nd = n;
    return nd - 0.5 + std::sqrt(nd * nd - 2.0 * nd + 1.25);
}

double conditional_bound(int n) {
    if (n < 2) throw DomainError("bounds require n >= 2");
    return crossing_value(n, [n](double w) { return phi(n, w); });
}

GraphConstants tau_delta() {
    const auto f = [](double y) { return y * std::exp(1.0 / y); };
    const double target = 2.0 * std::sqrt(std::exp(1.0));
    const double tau =
        solve_monotone(f, target, {0.01, 1.0, Monotonicity::decreasing}).root;
    return {tau, std::log(2.0 / tau) + 1.0, 2.0 / tau};
}

double glueck_bound(int n) {
    if (n < 2) throw DomainError("bounds require n >= 2");
    const auto envelope = [n](double w) {
        return std::exp((std::log(static_cast<double>(n)) + n * std::log(w)) /
                        (n + 1));
    };
    return crossing_value(n, envelope);
}

double mit_check(int n) {
    if (n <= 2) throw DomainError("mit_check requires n >= 3");
    const double ratio_pow =
        std::exp(n * (std::log(n - 1.0) - std::log(n - 2.0)));
    return 2.0 / (n - 2.0) + 3.0 - ratio_pow;
}

BoundReport bound_report(int n, std::optional<double> w) {
    if (n < 2) throw DomainError("bounds require n >= 2");
    BoundReport report{};
    report.n = n;
    report.unconditional = unconditional_bound(n);
    if (w) {
        if (!(*w >= n)) {
            throw DomainError("bound report requires w >= n");
        }
        report.w = *w;
        const double phi_w = phi(n, *w);
        const double rational = decreasing_side(n, *w);
        report.conditional_star = std::min(rational, phi_w);
        report.conditional_w =
            std::min(std::max(2.0 * n - 2.0, rational), phi_w);
    } else {
        report.conditional_star = conditional_bound(n);
        report.conditional_w = std::max(2.0 * n - 2.0, report.conditional_star);
    }
    report.asymptotic_gap = 2.0 * n - report.conditional_star;
    report.caveat = report.conditional_star < 2.0 * n - 2.0;
    return report;
}

} // namespace regraph
