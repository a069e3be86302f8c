#include "regraph/regular_graph.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "regraph/roots.hpp"

namespace regraph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dirichlet-point detection band. Below it the root finder would face a
// bracket collapsing onto the flat minimum of f_n.
constexpr double kExactRelTol = 1e-15;

constexpr double kTiny = 1e-300;  // lower bracket endpoint, pre-log

bool nearly_equal(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

// Relative band around the minimum point inside which the root is
// solved in difference form. Beyond it the plain log form is fully
// accurate; inside it the difference form avoids the catastrophic
// cancellation of two nearly equal log values.
constexpr double kNearMinimumBand = 1e-3;

// log(f(x)/f(ref)) for f(x) = (1+x)^a / x^b, written so that x close to
// ref loses no precision: a log1p((x-ref)/(1+ref)) - b log1p((x-ref)/ref).
double log_ratio_near(double a, double b, double x, double ref) {
    const double d = x - ref;
    return a * std::log1p(d / (1.0 + ref)) - b * std::log1p(d / ref);
}

// Root of f(x) = f(param) on (0, m) when param sits just right of the
// minimum point m of f = (1+x)^a / x^b. The root then lies just left of
// m, at distance comparable to param - m.
double solve_near_minimum(double a, double b, double m, double param) {
    const auto h = [&](double x) { return log_ratio_near(a, b, x, param); };
    if (h(m) >= 0.0) return m;  // param indistinguishable from the minimum
    double span = 5.0 * (param - m);
    while (h(m - span) <= 0.0) span *= 2.0;
    return solve_monotone(h, 0.0, {m - span, m, Monotonicity::decreasing}).root;
}

// Root of log f_n = log f_n(lambda) on x in (0, 1/n). Away from the
// Dirichlet point this is solved in u = log x, where the function is
// close to linear (-u + (n+1) log1p(e^u)).
double solve_last_minimum_log(int n, double lambda) {
    const double m = 1.0 / n;
    if (lambda - m <= kNearMinimumBand * m) {
        return solve_near_minimum(n + 1.0, 1.0, m, lambda);
    }
    const double target = log_f_aux(n, lambda);
    const auto g = [n](double u) { return log_f_aux(n, std::exp(u)); };
    const Bracket bracket{std::log(kTiny), std::log(m),
                          Monotonicity::decreasing};
    if (target <= g(bracket.hi)) return m;
    return std::exp(solve_monotone(g, target, bracket).root);
}

// log of g_n(x) = (1+x)^{n+1}/x^n, the dual-side analogue of f_n.
// Strictly decreasing on (0, n), increasing beyond.
double log_g_dual(int n, double x) {
    return (n + 1) * std::log1p(x) - n * std::log(x);
}

// Root of log g_n = log g_n(w) on x in (0, n), again in u = log x away
// from the minimum and in difference form near it.
double solve_dual_minimum_log(int n, double w) {
    const double m = n;
    if (w - m <= kNearMinimumBand * m) {
        return solve_near_minimum(n + 1.0, static_cast<double>(n), m, w);
    }
    const double target = log_g_dual(n, w);
    const auto g = [n](double u) { return log_g_dual(n, std::exp(u)); };
    const Bracket bracket{std::log(kTiny), std::log(m),
                          Monotonicity::decreasing};
    if (target <= g(bracket.hi)) return m;
    return std::exp(solve_monotone(g, target, bracket).root);
}

std::vector<double> geometric_values(int n, double first, double ratio) {
    std::vector<double> values(static_cast<std::size_t>(n) + 2);
    double v = first;
    for (auto& entry : values) {
        entry = v;
        v *= ratio;
    }
    return values;
}

// First-to-second quotient, mapping the degenerate inf/inf case to inf.
double leading_quotient(double a, double b) {
    if (b == 0.0 || (std::isinf(a) && std::isinf(b))) return kInf;
    return a / b;
}

} // namespace

void validate(const GraphParams& params) {
    if (params.n < 1) {
        throw DomainError("dimension n must be >= 1");
    }
    if (std::isnan(params.lambda)) {
        throw DomainError("lambda must not be NaN");
    }
    const double dirichlet = 1.0 / params.n;
    if (params.lambda < dirichlet &&
        !nearly_equal(params.lambda, dirichlet, kExactRelTol)) {
        throw DomainError("lambda must be >= 1/n (got " +
                          std::to_string(params.lambda) + " < 1/" +
                          std::to_string(params.n) + ")");
    }
}

bool at_dirichlet_point(const GraphParams& params) {
    return nearly_equal(params.lambda, 1.0 / params.n, kExactRelTol);
}

double f_aux(int n, double x) {
    if (n < 1) throw DomainError("dimension n must be >= 1");
    if (!(x > 0.0)) throw DomainError("f_aux requires x > 0");
    return std::pow(1.0 + x, n + 1) / x;
}

double log_f_aux(int n, double x) {
    if (n < 1) throw DomainError("dimension n must be >= 1");
    if (!(x > 0.0)) throw DomainError("log_f_aux requires x > 0");
    return (n + 1) * std::log1p(x) - std::log(x);
}

double last_minimum(const GraphParams& params) {
    validate(params);
    if (params.lambda == kInf) return 0.0;
    if (at_dirichlet_point(params)) return 1.0 / params.n;
    return solve_last_minimum_log(params.n, params.lambda);
}

double vartheta(const GraphParams& params) {
    validate(params);
    if (params.lambda == kInf) return 1.0;
    if (at_dirichlet_point(params)) return 1.0 / params.n;
    const double lm = last_minimum(params);
    return std::exp((params.n * std::log(params.lambda) + std::log(lm)) /
                    (params.n + 1));
}

LambdaSpectrum lambda_spectrum(const GraphParams& params) {
    validate(params);
    const int n = params.n;
    if (params.lambda == kInf) {
        std::vector<double> values(static_cast<std::size_t>(n) + 2, 0.0);
        values[0] = kInf;
        values[1] = 1.0;
        return {n, std::move(values), kInf};
    }
    if (at_dirichlet_point(params)) {
        std::vector<double> values(static_cast<std::size_t>(n) + 2, 1.0 / n);
        return {n, std::move(values), 1.0};
    }
    const double theta = vartheta(params);
    const double ratio = theta / params.lambda;
    return {n, geometric_values(n, params.lambda, ratio), 1.0 / ratio};
}

double phi(int n, double w) {
    if (n < 1) throw DomainError("dimension n must be >= 1");
    if (std::isnan(w) ||
        (w < n && !nearly_equal(w, static_cast<double>(n), kExactRelTol))) {
        throw DomainError("phi requires w >= n");
    }
    if (w == kInf) return kInf;
    if (nearly_equal(w, static_cast<double>(n), kExactRelTol)) {
        return static_cast<double>(n);
    }
    const double z = solve_dual_minimum_log(n, w);
    return std::exp((n * std::log(w) + std::log(z)) / (n + 1));
}

DualSpectrum dual_spectrum(int n, double w) {
    if (n < 1) throw DomainError("dimension n must be >= 1");
    if (std::isnan(w) ||
        (w < n && !nearly_equal(w, static_cast<double>(n), kExactRelTol))) {
        throw DomainError("dual spectrum requires w >= n");
    }
    if (w == kInf) {
        std::vector<double> values(static_cast<std::size_t>(n) + 2, kInf);
        values[static_cast<std::size_t>(n)] = 1.0;
        values[static_cast<std::size_t>(n) + 1] = 0.0;
        return {n, std::move(values), kInf};
    }
    if (nearly_equal(w, static_cast<double>(n), kExactRelTol)) {
        std::vector<double> values(static_cast<std::size_t>(n) + 2,
                                   static_cast<double>(n));
        return {n, std::move(values), 1.0};
    }
    const double ratio = phi(n, w) / w;
    return {n, geometric_values(n, w, ratio), 1.0 / ratio};
}

DualSpectrum to_dual(const LambdaSpectrum& spec) {
    const std::size_t count = static_cast<std::size_t>(spec.n) + 2;
    if (spec.n < 1 || spec.values.size() != count) {
        throw DomainError("malformed spectrum");
    }
    // w_{n,j} = 1 / hl_{n,n+2-j} and hl_{n,k} = lambda_{n,k+1}, so the
    // dual vector is the reciprocal of the reversed input.
    std::vector<double> values(count);
    for (std::size_t j = 0; j < count; ++j) {
        values[j] = 1.0 / spec.values[count - 1 - j];
    }
    const double quotient = leading_quotient(values[0], values[1]);
    return {spec.n, std::move(values), quotient};
}

LambdaSpectrum from_dual(const DualSpectrum& spec) {
    const std::size_t count = static_cast<std::size_t>(spec.n) + 2;
    if (spec.n < 1 || spec.values.size() != count) {
        throw DomainError("malformed spectrum");
    }
    std::vector<double> values(count);
    for (std::size_t j = 0; j < count; ++j) {
        values[j] = 1.0 / spec.values[count - 1 - j];
    }
    const double quotient = leading_quotient(values[0], values[1]);
    return {spec.n, std::move(values), quotient};
}

PsiProfile psi_profile(const GraphParams& params) {
    validate(params);
    if (params.lambda == kInf) {
        throw DomainError("psi profile is undefined at lambda = inf");
    }
    const LambdaSpectrum spec = lambda_spectrum(params);
    const int n = params.n;
    const double scale = (n + 1.0) / n;
    PsiProfile profile{n, {}, {}};
    profile.psi_lower.reserve(static_cast<std::size_t>(n) + 1);
    profile.psi_upper.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n + 1; ++j) {
        const double ordinary = spec.values[static_cast<std::size_t>(j) - 1];
        const double uniform = spec.values[static_cast<std::size_t>(j)];
        profile.psi_lower.push_back(scale / (1.0 + ordinary) - 1.0);
        profile.psi_upper.push_back(scale / (1.0 + uniform) - 1.0);
    }
    return profile;
}

RelationReport relation_report(const GraphParams& params) {
    validate(params);
    if (params.n < 2) {
        throw DomainError("relation report requires n >= 2");
    }
    if (params.lambda == kInf || at_dirichlet_point(params)) {
        throw DomainError("relation report requires finite lambda > 1/n");
    }
    const int n = params.n;
    const DualSpectrum dual = to_dual(lambda_spectrum(params));
    const double w = dual.values[0];
    const double hw = dual.values[1];
    const double hl = vartheta(params);

    // Chain identity w_{n,i} = hw^{i-1}/w^{i-2}, evaluated in logs to
    // stay finite for large w.
    double chain_residual = 0.0;
    const double log_w = std::log(w);
    const double log_hw = std::log(hw);
    for (int i = 1; i <= n + 1; ++i) {
        const double predicted = (i - 1) * log_hw - (i - 2) * log_w;
        const double actual = std::log(dual.values[static_cast<std::size_t>(i) - 1]);
        chain_residual =
            std::max(chain_residual, std::abs(std::expm1(predicted - actual)));
    }

    RelationReport report{};
    report.n = n;
    report.lambda = params.lambda;
    report.geometric_chain_residual = chain_residual;
    report.linear_form_gap =
        w - hw * std::pow((hw - 1.0) / (n - 1.0), 1.0 / (n - 1.0));
    report.simultaneous_gap =
        params.lambda -
        hl * std::pow((n - 1.0) * hl / (1.0 - hl), 1.0 / (n - 1.0));
    report.transference_upper_gap = hw / (hw - n + 1.0) - hl;
    report.transference_lower_gap = hl - (hw - 1.0) / ((n - 1.0) * hw);
    if (n == 2) {
        report.laurent_gap = w - hw * (hw - 1.0);
    }
    return report;
}

} // namespace regraph
