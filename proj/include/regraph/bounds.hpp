#pragma once

#include <optional>

#include "regraph/errors.hpp"

namespace regraph {

/// tau solves y*e^{1/y} = 2*sqrt(e) on (0, 1); delta = log(2/tau) + 1
/// governs the asymptotic conditional bound 2n - delta; theta = 2/tau.
struct GraphConstants {
    double tau;
    double delta;
    double theta;
};

/// Upper bounds for the uniform linear-form exponents at dimension n.
struct BoundReport {
    int n;
    std::optional<double> w;    ///< set when evaluated at a prescribed w_n
    double unconditional;       ///< proved bound for hw_n
    double conditional_star;    ///< conjectural bound for hw*_n
    double conditional_w;       ///< conjectural bound for hw_n
    double asymptotic_gap;      ///< 2n - conditional_star
    bool caveat;                ///< conditional_star transfers to hw_n only
                                ///< barring w_{n-2} < w_{n-1} = w_n
};

/// The proved bound: 3 + sqrt(2) for n = 3, otherwise
/// n - 1/2 + sqrt(n^2 - 2n + 5/4). Requires n >= 2.
double unconditional_bound(int n);

/// The conjectural bound for hw*_n: the common value at the unique
/// crossing of phi_n(w) (increasing) with n*w/(w-n+1) (decreasing)
/// on (n, inf). Requires n >= 2.
double conditional_bound(int n);

/// The constants tau, delta and theta = 2/tau.
GraphConstants tau_delta();

/// The weaker conjectural bound obtained by replacing phi_n with its
/// envelope n^{1/(n+1)} w^{n/(n+1)}; tends to 2n - 1 - log 2.
double glueck_bound(int n);

/// H(2(n-1)^2/(n-2), 2n-2) = 2/(n-2) + 3 - ((n-1)/(n-2))^n. Positivity
/// certifies the hw_n <= 2n-2 bound; holds for n >= 10. Requires n >= 3.
double mit_check(int n);

/// Full report at dimension n; with w given, evaluates the pointwise
/// bound combinations at that prescribed ordinary exponent instead.
BoundReport bound_report(int n, std::optional<double> w = std::nullopt);

} // namespace regraph
