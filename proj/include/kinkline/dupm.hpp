#pragma once

// Dynamic underestimating polynomial method: the static step with an alpha
// that only ever grows, and a forced extremal step whenever the last few
// updates all moved the same side of the bracket.

#include <vector>

#include "kinkline/brackets.hpp"
#include "kinkline/models.hpp"
#include "kinkline/solver.hpp"

namespace kinkline {

struct DupmConfig {
  double alpha0 = 0.0;
  double eps = 1e-8;
  double delta = 0.0;  // 0 selects default_delta()
  int budget = 500;
  int fallback_after = 3;     // same-side updates before an extremal step
  double chi_tol_rel = 1e-3;  // bisection width relative to max(1, alpha_plus)
};

struct DupmState {
  ExtendedBracket7 x;
  double alpha = 0.0;
  // Newest flag first.
  std::vector<Side> history;
};

/// Fresh state with history (L, R, L, ...) so the fallback cannot fire early.
DupmState make_dupm_state(const ExtendedBracket7& x, const DupmConfig& cfg = {});

/// (1/h) max_k (f[xk1,xk2,xk3] - f[xm,xk1,xk2]). May be negative.
double alpha_floor(const ExtendedBracket7& x);

/// max_k f[xk1,xk2,xk3] / h. Above it both models are concave.
double alpha_plus(const ExtendedBracket7& x);

/// Whether the unclamped static step lands on an intersection of the two models.
bool intersection_condition(const ExtendedBracket7& x, double alpha);

/// Smallest alpha >= alpha_lo (to within tol) from which the intersection
/// condition holds. Returns alpha_lo if it already holds there; otherwise
/// bisects (alpha_lo, alpha_plus] and returns the upper end of the final
/// interval. Throws ConditionFalseAtUpper if the condition fails at alpha_plus.
double chi(const ExtendedBracket7& x, double alpha_lo, double tol);

/// max(alpha, floor, chi) with the fallback to alpha_plus + 1.
double escalate_alpha(const ExtendedBracket7& x, double alpha, const DupmConfig& cfg = {});

bool fallback_due(const DupmState& s);

/// Extremal step on the inner five points when the history is uniform,
/// static step at s.alpha otherwise. Both are delta-clamped.
double dupm_step(const DupmState& s, double delta);

/// Branches 1 and 3 record R, branches 2 and 4 record L.
Side recorded_side(Branch b);

DupmState dupm_update(double trial, double ftrial, const DupmState& s);

SolverResult dupm_minimize(const Objective& f, const ExtendedBracket7& x0, const DupmConfig& cfg);

}  // namespace kinkline
