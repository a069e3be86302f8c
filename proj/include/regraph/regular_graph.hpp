#pragma once

#include <optional>
#include <vector>

#include "regraph/errors.hpp"

namespace regraph {

/// Dimension n and parameter lambda identifying one regular graph.
/// lambda is an extended real: any value in [1/n, +inf], where +inf
/// selects the degenerate graph.
struct GraphParams {
    int n;
    double lambda;
};

/// The ordered exponent vector lambda_{n,1} >= ... >= lambda_{n,n+2}
/// together with the common quotient rho = lambda_{n,1}/lambda_{n,2}.
/// Uniform exponents are read off by index shift: the j-th uniform
/// exponent equals values[j] (0-based), i.e. the (j+1)-st ordinary one.
struct LambdaSpectrum {
    int n;
    std::vector<double> values;  ///< size n+2
    double quotient;
};

/// The linear-form exponents w_{n,1} >= ... >= w_{n,n+2}.
struct DualSpectrum {
    int n;
    std::vector<double> values;  ///< size n+2
    double quotient;             ///< w_{n,1}/w_{n,2}
};

/// liminf/limsup values of the parametric successive-minima exponents,
/// for j = 1..n+1. All entries lie in [-1, 1/n].
struct PsiProfile {
    int n;
    std::vector<double> psi_lower;
    std::vector<double> psi_upper;
};

/// Identities and inequalities that the exponents of one regular graph
/// satisfy, reported as residuals/slacks (nonnegative slack = holds).
struct RelationReport {
    int n;
    double lambda;
    double geometric_chain_residual;   ///< max rel. error of w_{n,i} vs uniform^{i-1}/w^{i-2}
    double linear_form_gap;            ///< w_n - hw_n*((hw_n-1)/(n-1))^{1/(n-1)}
    double simultaneous_gap;           ///< lambda_n - hl_n*((n-1)hl_n/(1-hl_n))^{1/(n-1)}
    double transference_upper_gap;     ///< hw_n/(hw_n-n+1) - hl_n
    double transference_lower_gap;     ///< hl_n - (hw_n-1)/((n-1)hw_n)
    std::optional<double> laurent_gap; ///< n = 2 only: w_2 - hw_2(hw_2 - 1)
};

/// Throws DomainError unless n >= 1 and lambda >= 1/n (or +inf).
void validate(const GraphParams& params);

/// True when lambda is indistinguishable from the Dirichlet point 1/n
/// (relative difference below 1e-15).
bool at_dirichlet_point(const GraphParams& params);

/// f_n(x) = (1+x)^{n+1}/x. Strictly decreasing on (0, 1/n), strictly
/// increasing on (1/n, inf). May overflow to +inf for large arguments;
/// solvers use log_f_aux instead.
double f_aux(int n, double x);

/// log f_n(x) = (n+1) log1p(x) - log x, safe for n up to 500 and
/// x up to 1e6 in either direction.
double log_f_aux(int n, double x);

/// The last uniform exponent hl_{n,n+1} in [0, 1/n]: the unique root of
/// f_n(x) = f_n(lambda) on [0, 1/n]. Exactly 1/n at the Dirichlet point,
/// exactly 0 at lambda = +inf.
double last_minimum(const GraphParams& params);

/// vartheta_n(lambda) = hl_n = lambda^{n/(n+1)} * last_minimum^{1/(n+1)},
/// the uniform exponent as a function of the ordinary one.
double vartheta(const GraphParams& params);

/// The full assignment (n, lambda) -> (lambda_{n,1}, ..., lambda_{n,n+2})
/// with constant successive quotients vartheta/lambda. At lambda = +inf
/// returns the exact degenerate vector (inf, 1, 0, ..., 0).
LambdaSpectrum lambda_spectrum(const GraphParams& params);

/// phi_n(w) = hw_n, the uniform linear-form exponent in terms of the
/// ordinary one, for w in [n, +inf]. phi_n(n) = n, phi_n(inf) = inf.
double phi(int n, double w);

/// The dual assignment w_{n,j} = w * (phi_n(w)/w)^{j-1} for w >= n.
DualSpectrum dual_spectrum(int n, double w);

/// Reciprocal-and-mirror duality: w_{n,j} = 1 / (uniform lambda-side
/// exponent at index n+2-j).
DualSpectrum to_dual(const LambdaSpectrum& spec);

/// Inverse of to_dual (the same mirror applied to the dual side).
LambdaSpectrum from_dual(const DualSpectrum& spec);

/// psi_lower[j] = (n+1)/(n(1+lambda_{n,j})) - 1 and the analogous upper
/// value from the uniform exponent, j = 1..n+1. Rejects lambda = +inf.
PsiProfile psi_profile(const GraphParams& params);

/// Evaluates the exponent identities/inequalities on one regular graph.
/// Requires n >= 2 and finite lambda > 1/n.
RelationReport relation_report(const GraphParams& params);

} // namespace regraph
