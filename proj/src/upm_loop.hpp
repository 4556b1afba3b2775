#pragma once

// Shared driver for the bracket-update solvers (SUPM, EUPM, DUPM and the
// five-point baseline). The caller supplies the step rule; the driver owns
// termination, oracle accounting, the four-way update and the trace.

#include "kinkline/solver.hpp"
#include "kinkline/supm.hpp"

namespace kinkline::detail {

struct Proposal {
  double trial;
  double alpha;  // NaN when the step has no alpha
};

// Step: (const ExtendedBracket<N>&, double delta) -> Proposal
// Observe: (Branch) -> void, called after every accepted update
template <std::size_t N, class Step, class Observe>
SolverResult run_update_loop(const Objective& f, ExtendedBracket<N> x, double eps, double delta, int budget,
                             Step&& step, Observe&& observe) {
  SolverResult r;
  r.trace.push_back(trace_row(0, x.inner()));
  while (true) {
    if (inner_length(x) <= 2 * eps) {
      r.status = Status::Converged;
      break;
    }
    if (r.iterations >= budget) {
      r.status = Status::BudgetExhausted;
      break;
    }
    const double d = delta > 0 ? delta : default_delta(eps, x.xl(1), x.xr(1));
    Proposal p;
    try {
      p = step(x, d);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BracketTooSmall) throw;
      r.status = Status::Stalled;
      break;
    }
    const double ft = f(p.trial);
    ++r.evaluations;
    const Branch br = classify_branch(p.trial, ft, x);
    x = apply_update(br, p.trial, ft, x);
    observe(br);
    ++r.iterations;
    TraceEntry row = trace_row(r.iterations, x.inner());
    row.trial = p.trial;
    row.alpha = p.alpha;
    row.branch = static_cast<int>(br);
    r.trace.push_back(row);
  }
  r.final_bracket = x.inner();
  return r;
}

}  // namespace kinkline::detail
