#pragma once

#include <optional>

#include "regraph/errors.hpp"

namespace regraph {

enum class SignClass {
    always_above,          ///< lambda_{n,j} > 1/n for all lambda > 1/n
    always_below,          ///< lambda_{n,j} < 1/n for all lambda > 1/n
    crosses_once,          ///< one sign change at tilde_lambda in (1/n, n)
    identically_dirichlet  ///< lambda_{n,j} = 1/n identically (n = 1, j = 2)
};

/// Sign classification of lambda_{n,j}(lambda) - 1/n over lambda > 1/n.
struct ThresholdResult {
    int n;
    int j;
    SignClass classification;
    std::optional<double> tilde_lambda;  ///< present iff crosses_once
    std::optional<double> theta_root;    ///< the chi root mu_0 > 1, iff crosses_once
};

/// Maximal parameter interval on which the graph certifies Schmidt's
/// property for (n, T): lambda_{n,T+1} > 1/n > lambda_{n,T+2} inside.
struct SchmidtInterval {
    int n;
    int T;
    double lo;
    double hi;  ///< +inf when T = 1
};

/// chi_{n,j}(theta) = theta^{j-2} + theta^{j-3} + ... + theta^{j-1-n},
/// the n-term geometric sum whose root beyond 1 locates the threshold.
/// chi_{n,j}(1) = n by construction. Requires 2 <= j <= n, theta > 0.
double chi(int n, int j, double theta);

/// chi'_{n,j}(1) = n*j - (n^2 + 3n)/2, negative exactly when j < (n+3)/2.
double chi_prime_at_one(int n, int j);

/// Classifies lambda_{n,j}(lambda) - 1/n for 1 <= j <= n+2. For the
/// crossing case the root mu_0 of chi = n is found on the increasing
/// branch and tilde_lambda = mu_0^{j-1}/n.
ThresholdResult classify(int n, int j);

/// Sign of lambda_{n,j}(lambda) - 1/n, with |.| < 1e-11 reported as 0.
int sign_at(int n, int j, double lambda);

/// The threshold-to-threshold interval for Schmidt's property. Requires
/// 1 <= T <= floor(n/2); beyond that the property is unattainable and
/// NotRepresentable is thrown.
SchmidtInterval schmidt_interval(int n, int T);

/// Token for rendering ("always_above", "crosses_once", ...).
const char* to_string(SignClass c);

} // namespace regraph
