#include <cmath>
#include <limits>

#include "doctest.h"
#include "oracles.hpp"
#include "regraph/regular_graph.hpp"
#include "regraph/roots.hpp"
#include "regraph/thresholds.hpp"

using namespace regraph;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("chi equals n at theta = 1") {
    for (int n = 2; n <= 15; ++n) {
        for (int j = 2; j <= n; ++j) {
            CHECK(chi(n, j, 1.0) == static_cast<double>(n));
        }
    }
}

TEST_CASE("chi at (8, 3, 2) is the exact dyadic sum") {
    // 2 + 1 + 1/2 + ... + 1/64 = 3 + 63/64
    CHECK(chi(8, 3, 2.0) == 3.984375);
}

TEST_CASE("chi_{3,3} stays above 3 beyond 1") {
    for (double theta : {1.001, 1.5, 4.0, 50.0}) {
        CHECK(chi(3, 3, theta) > 3.0);
    }
}

TEST_CASE("chi validates its arguments") {
    CHECK_THROWS_AS(chi(5, 1, 2.0), DomainError);
    CHECK_THROWS_AS(chi(5, 6, 2.0), DomainError);
    CHECK_THROWS_AS(chi(5, 3, 0.0), DomainError);
    CHECK_THROWS_AS(chi(5, 3, -1.0), DomainError);
}

TEST_CASE("chi_prime_at_one matches its closed form and a finite difference") {
    CHECK(chi_prime_at_one(8, 3) == -20.0);
    CHECK(chi_prime_at_one(3, 3) == 0.0);
    for (int n : {5, 9, 12}) {
        for (int j = 2; j <= n; ++j) {
            const double expected = chi_prime_at_one(n, j);
            const double numeric = oracle::derivative(
                [n, j](double t) { return chi(n, j, t); }, 1.0, 1e-6);
            CHECK(numeric == doctest::Approx(expected).epsilon(1e-6).scale(1.0));
        }
    }
    // zero exactly on the case-split boundary for odd n
    for (int n : {3, 5, 7, 9, 11}) {
        CHECK(chi_prime_at_one(n, (n + 3) / 2) == 0.0);
    }
    CHECK_THROWS_AS(chi_prime_at_one(5, 1), DomainError);
    CHECK_THROWS_AS(chi_prime_at_one(5, 6), DomainError);
}

TEST_CASE("classify reproduces the sign case split") {
    CHECK(classify(3, 3).classification == SignClass::always_below);
    CHECK(classify(2, 4).classification == SignClass::always_below);
    CHECK(classify(1, 2).classification == SignClass::identically_dirichlet);
    for (int n : {2, 5, 12}) {
        CHECK(classify(n, 1).classification == SignClass::always_above);
        CHECK(classify(n, 2).classification == SignClass::always_above);
        CHECK(classify(n, n + 1).classification == SignClass::always_below);
        CHECK(classify(n, n + 2).classification == SignClass::always_below);
    }
    CHECK_THROWS_AS(classify(4, 0), DomainError);
    CHECK_THROWS_AS(classify(4, 7), DomainError);
}

TEST_CASE("classify(8, 3) crosses once at a root of chi") {
    const ThresholdResult result = classify(8, 3);
    REQUIRE(result.classification == SignClass::crosses_once);
    REQUIRE(result.tilde_lambda.has_value());
    REQUIRE(result.theta_root.has_value());
    CHECK(*result.tilde_lambda > 1.0 / 8);
    CHECK(*result.tilde_lambda < 8.0);
    CHECK(*result.theta_root > 1.0);
    CHECK(chi(8, 3, *result.theta_root) == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(*result.tilde_lambda ==
          doctest::Approx(std::pow(*result.theta_root, 2) / 8).epsilon(1e-13));
    // the threshold puts the spectrum entry exactly on 1/n
    const LambdaSpectrum spec = lambda_spectrum({8, *result.tilde_lambda});
    CHECK(spec.values[2] == doctest::Approx(1.0 / 8).epsilon(1e-9));
}

TEST_CASE("crossing classification matches the arithmetic condition") {
    for (int n = 1; n <= 12; ++n) {
        for (int j = 1; j <= n + 2; ++j) {
            const bool crosses =
                classify(n, j).classification == SignClass::crosses_once;
            CHECK(crosses == (j >= 3 && j <= n && n >= 2 * j - 2));
        }
    }
}

TEST_CASE("bracket_scan isolates the single chi crossing") {
    const auto f = [](double theta) { return chi(8, 3, theta); };
    const std::vector<Bracket> brackets = bracket_scan(f, 8.0, 1.0 + 1e-9, 10.0, 1000);
    REQUIRE(brackets.size() == 1);
    const double mu0 = *classify(8, 3).theta_root;
    CHECK(brackets[0].lo < mu0);
    CHECK(brackets[0].hi > mu0);
}

TEST_CASE("sign_at agrees with the thresholds") {
    for (int n : {2, 5, 9}) {
        for (int j = 1; j <= n + 2; ++j) {
            CHECK(sign_at(n, j, 1.0 / n) == 0);
        }
    }
    const double tilde = *classify(8, 3).tilde_lambda;
    CHECK(sign_at(8, 3, tilde * 0.9) == 1);
    CHECK(sign_at(8, 3, tilde * 1.1) == -1);
    CHECK(sign_at(3, 3, 2.0) == -1);
    CHECK(sign_at(4, 1, kInf) == 1);
    CHECK(sign_at(4, 4, kInf) == -1);
    CHECK_THROWS_AS(sign_at(4, 3, 0.2), DomainError);
}

TEST_CASE("schmidt_interval(2, 1) is the full half line") {
    const SchmidtInterval interval = schmidt_interval(2, 1);
    CHECK(interval.lo == 0.5);
    CHECK(interval.hi == kInf);
}

TEST_CASE("schmidt_interval(8, 4) is bounded by the j=5 threshold") {
    const SchmidtInterval interval = schmidt_interval(8, 4);
    CHECK(interval.lo == 1.0 / 8);
    CHECK(interval.hi == doctest::Approx(*classify(8, 5).tilde_lambda).epsilon(1e-13));
    CHECK(interval.lo < interval.hi);
}

TEST_CASE("schmidt_interval certifies its midpoint") {
    for (int n : {4, 6, 8}) {
        for (int T = 1; T <= n / 2; ++T) {
            const SchmidtInterval interval = schmidt_interval(n, T);
            const double probe = std::isinf(interval.hi)
                                     ? 2.0 * interval.lo + 1.0
                                     : 0.5 * (interval.lo + interval.hi);
            const LambdaSpectrum spec = lambda_spectrum({n, probe});
            CHECK(spec.values[static_cast<std::size_t>(T)] > 1.0 / n);
            CHECK(spec.values[static_cast<std::size_t>(T) + 1] < 1.0 / n);
        }
    }
}

TEST_CASE("schmidt_interval rejects unattainable T") {
    CHECK_THROWS_AS(schmidt_interval(8, 5), NotRepresentable);
    CHECK_THROWS_AS(schmidt_interval(2, 2), NotRepresentable);
    CHECK_THROWS_AS(schmidt_interval(8, 0), DomainError);
    CHECK_THROWS_AS(schmidt_interval(1, 1), DomainError);
}

TEST_CASE("sign_at stays consistent in the ill-conditioned Dirichlet fringe") {
    // lambda a hair above 1/n: the middle exponents differ from 1/n only
    // at second order, so the sign must read 0 or match the theorem.
    CHECK(sign_at(3, 3, 1.0 / 3 + 1e-6) <= 0);
    CHECK(sign_at(1, 2, 1.0 + 1e-6) == 0);
    CHECK(sign_at(3, 1, 1.0 / 3 + 1e-6) == 1);
    CHECK(sign_at(3, 4, 1.0 / 3 + 1e-6) == -1);
    CHECK(sign_at(3, 5, 1.0 / 3 + 1e-6) == -1);
}

TEST_CASE("thresholds stay below n") {
    for (int n = 4; n <= 12; ++n) {
        for (int j = 3; j <= n; ++j) {
            const ThresholdResult result = classify(n, j);
            if (result.tilde_lambda) CHECK(*result.tilde_lambda < n);
        }
    }
}
