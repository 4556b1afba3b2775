#pragma once

// Reference solvers: golden section, Brent's parabolic/golden hybrid and a
// five-point polyhedral-quadratic method in the style of Mifflin and
// Strodiot.

#include "kinkline/brackets.hpp"
#include "kinkline/solver.hpp"

namespace kinkline {

struct BaselineConfig {
  double eps = 1e-8;
  int budget = 500;
};

inline constexpr double kGoldenRatio = 0.6180339887498949;  // (sqrt(5) - 1) / 2

/// Keeps two golden probes inside [a, b] and retains the sub-interval holding
/// the best point seen so far, so every iteration shrinks b - a by exactly
/// the golden ratio. The reported centre is that best point.
SolverResult golden_section_minimize(const Objective& f, const Bracket3& b, const BaselineConfig& cfg);

/// Brent's localmin started from the bracket's centre. Stops once b - a <= 2 eps.
SolverResult brent_minimize(const Objective& f, const Bracket3& b, const BaselineConfig& cfg);

/// Each side is modelled by the quadratic through its two outer points with
/// curvature max(0, f[x2, x1, xm]); the step minimizes the larger model over
/// the inner bracket and the five-point updates are applied. When three
/// iterations fail to halve the inner length, the next trial bisects the
/// longer half of the inner bracket instead.
SolverResult mifflin_strodiot_minimize(const Objective& f, const ExtendedBracket5& x, const BaselineConfig& cfg);

}  // namespace kinkline
