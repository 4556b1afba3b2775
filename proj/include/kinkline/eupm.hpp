#pragma once

// Extremal underestimating polynomial method: the alpha -> infinity limit of
// the static step on a five-point bracket, plus the oracle-free sequence
// algebra used to check its contraction bounds.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kinkline/brackets.hpp"
#include "kinkline/solver.hpp"

namespace kinkline {

/// (xr1 xr2 - xl1 xl2) / (xr1 + xr2 - xl1 - xl2), evaluated relative to xm.
double eupm_step(const ExtendedBracket5& b);

/// c(X) = eupm_step(X) - xm. Zero counts as the left family.
double bracket_check(const ExtendedBracket5& b);

struct EupmConfig {
  double eps = 1e-8;
  double delta = 0.0;  // 0 selects default_delta()
  int budget = 500;
};

SolverResult eupm_minimize(const Objective& f, const ExtendedBracket5& x0, const EupmConfig& cfg);

/// Ordered list of update indices, e.g. "4314".
class UpdateSequence {
 public:
  UpdateSequence() = default;
  explicit UpdateSequence(std::vector<Branch> steps) : steps_(std::move(steps)) {}

  /// Throws InvalidConfig on characters outside '1'..'4'.
  static UpdateSequence parse(std::string_view digits);

  std::string str() const;
  std::size_t size() const { return steps_.size(); }
  Branch operator[](std::size_t i) const { return steps_[i]; }
  const std::vector<Branch>& steps() const { return steps_; }

  /// A 1 may only be followed by 1 or 4, a 2 only by 2 or 3.
  bool successor_ok() const;

 private:
  std::vector<Branch> steps_;
};

struct SequenceOutcome {
  ExtendedBracket5 bracket;
  bool feasible = true;
};

/// Applies the updates in order with the unclamped extremal step, touching
/// abscissae only. Values are synthesized from the improving flag of each
/// index. The final bracket is returned even when the sequence is infeasible.
SequenceOutcome apply_sequence(const ExtendedBracket5& x, const UpdateSequence& seq);

/// One oracle-free step: side from the sign of c(X), branch from `improving`.
ExtendedBracket5 extremal_update(const ExtendedBracket5& x, bool improving, Branch* taken = nullptr);

/// d(U_I X) / d(X), or nullopt when I cannot occur from X.
std::optional<double> contraction_ratio(const ExtendedBracket5& x, const UpdateSequence& seq);

/// The twelve sequences whose half-contraction covers every five-step run.
const std::vector<UpdateSequence>& minimal_set();

}  // namespace kinkline
