// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure. Runs the full (non-quick) grids; budget is one minute.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "regraph/bounds.hpp"
#include "regraph/regular_graph.hpp"
#include "regraph/thresholds.hpp"
#include "regraph/verify.hpp"

using namespace regraph;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& label, bool pass,
            const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL",
                criterion, label.c_str(), detail.empty() ? "" : " — ",
                detail.c_str());
    if (!pass) ++g_failures;
}

double timed_call(const std::function<double()>& f, double& seconds) {
    const auto start = std::chrono::steady_clock::now();
    const double value = f();
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
    return value;
}

bool close(double value, double expected, double tol) {
    return std::abs(value - expected) <= tol;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

// Criterion 1: tabulated conditional bounds, each solved in under 1 s.
void criterion_paper_values() {
    bool pass = true;
    std::string detail;
    struct Case {
        int n;
        double expected;
    };
    for (const Case& c : {Case{4, 6.2875}, Case{20, 37.8787}, Case{50, 97.7996}}) {
        double seconds = 0.0;
        const double value =
            timed_call([&] { return conditional_bound(c.n); }, seconds);
        if (!close(value, c.expected, 5e-4) || seconds >= 1.0) pass = false;
        detail += "cb(" + std::to_string(c.n) + ")=" + fmt(value) + " ";
    }
    const double gap = 2.0 * 50 - conditional_bound(50);
    if (!close(gap, 2.2004, 5e-4)) pass = false;
    detail += "gap(50)=" + fmt(gap);
    report(1, "tabulated conditional bounds and the n=50 gap", pass, detail);
}

// Criterion 2: closed forms at n = 2, 3 within 1e-9.
void criterion_closed_forms() {
    const double cb2 = conditional_bound(2);
    const double cb3 = conditional_bound(3);
    const bool pass = close(cb2, (3.0 + std::sqrt(5.0)) / 2.0, 1e-9) &&
                      close(cb3, 3.0 + std::sqrt(2.0), 1e-9);
    report(2, "closed-form agreement at n = 2, 3", pass,
           "cb(2)=" + fmt(cb2) + " cb(3)=" + fmt(cb3));
}

// Criterion 3: the constants tau, delta, theta.
void criterion_constants() {
    const GraphConstants constants = tau_delta();
    const bool pass = close(constants.tau, 0.5693, 5e-5) &&
                      close(constants.delta, 2.2564, 5e-5) &&
                      close(constants.theta, 3.5128, 5e-4);
    report(3, "tau, delta and 2/tau", pass,
           "tau=" + fmt(constants.tau) + " delta=" + fmt(constants.delta) +
               " theta=" + fmt(constants.theta));
}

bool find_check(const std::vector<CheckResult>& results, const std::string& name,
                std::string& detail) {
    for (const CheckResult& result : results) {
        if (result.name == name) {
            if (!result.pass) detail += name + ": " + result.detail + "; ";
            return result.pass;
        }
    }
    detail += name + ": missing; ";
    return false;
}

// Criterion 4: the identity suite over the full grids.
void criterion_identities(const std::vector<CheckResult>& results) {
    std::string detail;
    bool pass = true;
    for (const char* name :
         {"total_identity", "implicit_theta_residual",
          "spectrum_implicit_residual", "constant_quotient",
          "dual_implicit_residual"}) {
        pass = find_check(results, name, detail) && pass;
    }
    report(4, "identity suite residuals on the documented grids", pass, detail);
}

// Criterion 5: the structural case split and its cross-validation.
void criterion_structural(const std::vector<CheckResult>& results) {
    bool pass = true;
    std::string detail;
    for (int n = 1; n <= 12; ++n) {
        for (int j = 1; j <= n + 2; ++j) {
            const ThresholdResult result = classify(n, j);
            const bool expect_cross = j >= 3 && j <= n && n >= 2 * j - 2;
            if (expect_cross !=
                (result.classification == SignClass::crosses_once)) {
                pass = false;
                detail = "case split mismatch at n=" + std::to_string(n) +
                         ", j=" + std::to_string(j);
            }
            if (result.tilde_lambda) {
                const double tilde = *result.tilde_lambda;
                const double entry =
                    lambda_spectrum({n, tilde}).values[static_cast<std::size_t>(j) - 1];
                if (!(tilde > 1.0 / n && tilde < n) ||
                    std::abs(entry - 1.0 / n) > 1e-9) {
                    pass = false;
                    detail = "root check fails at n=" + std::to_string(n) +
                             ", j=" + std::to_string(j);
                }
            }
        }
    }
    pass = find_check(results, "small_dimension_pattern", detail) && pass;
    report(5, "sign-change case split for n <= 12 and its roots", pass, detail);
}

// Criterion 6: Schmidt intervals and the impossible index.
void criterion_schmidt() {
    bool pass = true;
    std::string detail;
    for (int n : {4, 6, 8, 10}) {
        for (int T = 1; T <= n / 2; ++T) {
            try {
                const SchmidtInterval interval = schmidt_interval(n, T);
                const double mid = std::isinf(interval.hi)
                                       ? 2.0 * interval.lo + 1.0
                                       : 0.5 * (interval.lo + interval.hi);
                const LambdaSpectrum spec = lambda_spectrum({n, mid});
                if (!(spec.values[static_cast<std::size_t>(T)] > 1.0 / n &&
                      spec.values[static_cast<std::size_t>(T) + 1] < 1.0 / n)) {
                    pass = false;
                    detail = "midpoint fails at n=" + std::to_string(n) +
                             ", T=" + std::to_string(T);
                }
            } catch (const Error& e) {
                pass = false;
                detail = e.what();
            }
        }
        bool rejected = false;
        try {
            schmidt_interval(n, n / 2 + 1);
        } catch (const NotRepresentable&) {
            rejected = true;
        }
        if (!rejected) {
            pass = false;
            detail = "T beyond floor(n/2) not rejected at n=" + std::to_string(n);
        }
    }
    report(6, "Schmidt-property intervals for n in {4,6,8,10}", pass, detail);
}

// Criterion 7: asymptotic behaviour.
void criterion_asymptotics(const std::vector<CheckResult>& results) {
    std::string detail;
    bool pass = true;
    for (const char* name :
         {"dimension_monotonicity", "dimension_limit", "large_lambda_limit",
          "glueck_asymptote", "mit_sign_pattern"}) {
        pass = find_check(results, name, detail) && pass;
    }
    report(7, "asymptotic trends and sign patterns", pass, detail);
}

// Criterion 8 is the explicit exclusion list: existence results and the
// conjectures themselves are not desk-checkable; only their computable
// consequences (criteria 1-7) are exercised.
void criterion_exclusions() {
    report(8, "excluded claims acknowledged (existence results, conjectures)",
           true);
}

} // namespace

int main() {
    criterion_paper_values();
    criterion_closed_forms();
    criterion_constants();

    const std::vector<CheckResult> results = run_checks(false);
    criterion_identities(results);
    criterion_structural(results);
    criterion_schmidt();
    criterion_asymptotics(results);
    criterion_exclusions();

    if (g_failures > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
