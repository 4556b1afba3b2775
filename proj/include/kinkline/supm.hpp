#pragma once

// Static underestimating polynomial method: fixed alpha, seven-point bracket.

#include <utility>

#include "kinkline/brackets.hpp"
#include "kinkline/models.hpp"
#include "kinkline/solver.hpp"

namespace kinkline {

struct SupmConfig {
  double alpha = 1.0;
  double eps = 1e-8;
  // 0 selects default_delta() at every iteration.
  double delta = 0.0;
  int budget = 500;
};

/// Throws InvalidConfig unless eps > 0, 0 <= delta < eps, budget >= 1, alpha >= 0.
void check_config(const SupmConfig& cfg);

/// Unclamped argmin of max(left, right) over [lo, hi]. Candidates are the
/// interval ends, the real roots of right - left inside the interval and the
/// vertices of convex models inside the interval. Equal minima resolve to
/// the candidate nearest `centre`, or to the midpoint of a flat stretch.
double model_argmin(const QuadModel& left, const QuadModel& right, double lo, double hi, double centre);

/// Moves `x` to the nearest point of [lo+delta, centre-delta] U [centre+delta, hi-delta].
/// A trial sitting exactly on the centre goes to centre - delta when possible.
/// Throws BracketTooSmall if both pieces are empty.
double clamp_trial(double x, double lo, double centre, double hi, double delta);

/// g_S(X; alpha) before the delta adjustment.
double supm_raw_step(const ExtendedBracket7& b, double alpha);

/// g_S(X; alpha) with the minimum-separation safeguard applied.
double supm_step(const ExtendedBracket7& b, double alpha, double delta);

/// Equality with the incumbent counts as non-improving.
Branch classify_branch(double trial, double ftrial, double xm, double fm);

template <std::size_t N>
Branch classify_branch(double trial, double ftrial, const ExtendedBracket<N>& b) {
  return classify_branch(trial, ftrial, b.xm(), b.fm());
}

/// Applies U_branch, inserting (trial, ftrial). Throws InvariantBroken if
/// the result is not a valid extended bracket or does not shrink d(X).
template <std::size_t N>
ExtendedBracket<N> apply_update(Branch branch, double trial, double ftrial, const ExtendedBracket<N>& b);

extern template ExtendedBracket<5> apply_update<5>(Branch, double, double, const ExtendedBracket<5>&);
extern template ExtendedBracket<7> apply_update<7>(Branch, double, double, const ExtendedBracket<7>&);

SolverResult supm_minimize(const Objective& f, const ExtendedBracket7& x0, const SupmConfig& cfg);

}  // namespace kinkline
