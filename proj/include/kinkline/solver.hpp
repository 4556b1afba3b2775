#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "kinkline/brackets.hpp"

namespace kinkline {

/// Black-box objective. Solvers only ever call it at new trial abscissae.
using Objective = std::function<double(double)>;

enum class Status { Converged, BudgetExhausted, Stalled };

const char* to_string(Status s);

/// One row of a solver trace. Row 0 describes the starting bracket; row i
/// the bracket after iteration i. `alpha` is NaN for solvers without one;
/// `branch` is 0 for rows not produced by a four-way update.
struct TraceEntry {
  int iteration = 0;
  double xl = 0, xm = 0, xr = 0;
  double fl = 0, fm = 0, fr = 0;
  double d = 0;
  double trial = std::numeric_limits<double>::quiet_NaN();
  double alpha = std::numeric_limits<double>::quiet_NaN();
  int branch = 0;
};

struct SolverResult {
  Bracket3 final_bracket;
  int iterations = 0;
  int evaluations = 0;
  std::vector<TraceEntry> trace;
  Status status = Status::BudgetExhausted;
};

inline TraceEntry trace_row(int iteration, const Bracket3& b) {
  TraceEntry t;
  t.iteration = iteration;
  t.xl = b.xl;
  t.xm = b.xm;
  t.xr = b.xr;
  t.fl = b.fl;
  t.fm = b.fm;
  t.fr = b.fr;
  t.d = b.xr - b.xl;
  return t;
}

/// Minimum trial separation used when the caller leaves delta at 0:
/// max(eps/4, 64 * machine-eps * (|xl1| + |xr1|)).
double default_delta(double eps, double xl1, double xr1);

}  // namespace kinkline
