#include "regraph/thresholds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "regraph/regular_graph.hpp"
#include "regraph/roots.hpp"

namespace regraph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSignDeadZone = 1e-11;

void check_indices(int n, int j) {
    if (n < 1) throw DomainError("dimension n must be >= 1");
    if (j < 1 || j > n + 2) {
        throw DomainError("index j must lie in [1, n+2]");
    }
}

// Unique root mu_0 > 1 of chi_{n,j} = n. chi dips below n right of 1
// (chi'(1) < 0) and is convex, so doubling from 1 + 1e-6 until chi > n
// always yields a single-crossing bracket.
double chi_threshold_root(int n, int j) {
    const auto f = [n, j](double theta) { return chi(n, j, theta); };
    const double target = static_cast<double>(n);
    double lo = 1.0 + 1e-6;
    double hi = 2.0 * lo;
    while (f(hi) <= target) {
        lo = hi;
        hi *= 2.0;
    }
    return solve_monotone(f, target, {lo, hi, Monotonicity::increasing}).root;
}

} // namespace

double chi(int n, int j, double theta) {
    if (n < 1) throw DomainError("dimension n must be >= 1");
    if (j < 2 || j > n) throw DomainError("chi requires 2 <= j <= n");
    if (!(theta > 0.0)) throw DomainError("chi requires theta > 0");
    double term = std::pow(theta, j - 2);
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        sum += term;
        term /= theta;
    }
    return sum;
}

double chi_prime_at_one(int n, int j) {
    if (n < 1) throw DomainError("dimension n must be >= 1");
    if (j < 2 || j > n) {
        throw DomainError("chi_prime_at_one requires 2 <= j <= n");
    }
    return n * static_cast<double>(j) - (n * static_cast<double>(n) + 3.0 * n) / 2.0;
}

ThresholdResult classify(int n, int j) {
    check_indices(n, j);
    if (n == 1 && j == 2) {
        return {n, j, SignClass::identically_dirichlet, std::nullopt, std::nullopt};
    }
    if (j <= 2) {
        return {n, j, SignClass::always_above, std::nullopt, std::nullopt};
    }
    if (j >= n + 1) {
        return {n, j, SignClass::always_below, std::nullopt, std::nullopt};
    }
    if (n <= 2 * j - 3) {
        return {n, j, SignClass::always_below, std::nullopt, std::nullopt};
    }
    const double mu0 = chi_threshold_root(n, j);
    const double tilde = std::pow(mu0, j - 1) / n;
    return {n, j, SignClass::crosses_once, tilde, mu0};
}

int sign_at(int n, int j, double lambda) {
    check_indices(n, j);
    const LambdaSpectrum spec = lambda_spectrum({n, lambda});
    const double diff = spec.values[static_cast<std::size_t>(j) - 1] - 1.0 / n;
    if (std::abs(diff) < kSignDeadZone) return 0;
    return diff > 0.0 ? 1 : -1;
}

SchmidtInterval schmidt_interval(int n, int T) {
    if (n < 2) throw DomainError("Schmidt intervals require n >= 2");
    if (T < 1) throw DomainError("T must be >= 1");
    if (T > n / 2) {
        throw NotRepresentable("no vector attains Schmidt's property for T = " +
                               std::to_string(T) + " > floor(" +
                               std::to_string(n) + "/2)");
    }

    const ThresholdResult upper = classify(n, T + 1);
    const double hi = (upper.classification == SignClass::crosses_once)
                          ? *upper.tilde_lambda
                          : kInf;

    const ThresholdResult lower = classify(n, T + 2);
    const double lo = (lower.classification == SignClass::crosses_once)
                          ? *lower.tilde_lambda
                          : 1.0 / n;

    const double probe = std::isinf(hi) ? 2.0 * lo + 1.0 : lo + 0.5 * (hi - lo);
    if (sign_at(n, T + 1, probe) <= 0 || sign_at(n, T + 2, probe) >= 0) {
        throw Error("Schmidt interval failed its midpoint certificate");
    }
    return {n, T, lo, hi};
}

const char* to_string(SignClass c) {
    switch (c) {
        case SignClass::always_above: return "always_above";
        case SignClass::always_below: return "always_below";
        case SignClass::crosses_once: return "crosses_once";
        case SignClass::identically_dirichlet: return "identically_dirichlet";
    }
    return "unknown";
}

} // namespace regraph
