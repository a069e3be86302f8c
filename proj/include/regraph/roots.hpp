#pragma once

#include <functional>
#include <vector>

#include "regraph/errors.hpp"

namespace regraph {

using RealFn = std::function<double(double)>;

enum class Monotonicity { increasing, decreasing };

/// An interval [lo, hi] on which f - target changes sign exactly once.
struct Bracket {
    double lo;
    double hi;
    Monotonicity monotonicity;
};

struct RootResult {
    double root;      ///< in [Bracket.lo, Bracket.hi]
    double residual;  ///< f(root) - target at the returned point
    int iterations;   ///< refinement steps taken (0 for endpoint hits)
};

/// Relative tolerance used when none is given. All downstream residual
/// checks run at 1e-9 or looser, so this leaves a wide safety margin.
inline constexpr double kDefaultRelTol = 1e-13;

/// Hard cap on refinement steps; hitting it throws IterationLimit
/// instead of returning a possibly wrong answer.
inline constexpr int kMaxIterations = 200;

/*!
  Finds x in [bracket.lo, bracket.hi] with f(x) = target.

  f must be continuous with a single sign change of f - target on the
  bracket (strict monotonicity is the typical case).  The interval is
  narrowed by bisection, with secant steps taken whenever they stay
  inside the bracket and keep shrinking it.  Returns the evaluated point
  with the smallest |f(x) - target| once both

     hi - lo          <= rel_tol * max(1, |x|)      and
     |f(x) - target|  <= rel_tol * max(1, |target|)

  hold.  Deterministic: identical inputs give bit-identical results, and
  tightening rel_tol never worsens the returned residual.
*/
RootResult solve_monotone(const RealFn& f, double target, const Bracket& bracket,
                          double rel_tol = kDefaultRelTol);

/// Evaluates f - target on a uniform grid of `steps` cells over [lo, hi]
/// and returns every cell on which the sign flips, in increasing order.
/// Used to seed solve_monotone when monotonicity holds only piecewise.
std::vector<Bracket> bracket_scan(const RealFn& f, double target, double lo,
                                  double hi, int steps);

} // namespace regraph
