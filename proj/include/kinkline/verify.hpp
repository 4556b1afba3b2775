#pragma once

// Numerical checks of the extremal method's contraction algebra and of its
// mirror symmetries, sampled over random gap vectors.

#include <cstdint>
#include <string>
#include <vector>

#include "kinkline/harness.hpp"

namespace kinkline {

struct ContractionSummary {
  double max_ratio = 0;
  std::string worst_sequence;
  long long feasible_runs = 0;  // (sample, sequence) pairs that were feasible
  int feasible_sequences = 0;   // sequences feasible for at least one sample
};

/// Every I in {1,2,3,4}^length applied to `samples` unit-sum gap vectors;
/// ratios are taken over feasible pairs only.
ContractionSummary exhaustive_contraction(int length, int samples, std::uint64_t seed,
                                          Execution exec = Execution::Parallel, int jobs = 0);

struct SequenceCheck {
  std::string sequence;
  bool filtered = false;  // only feasible samples counted
  int samples = 0;
  int counted = 0;
  double max_ratio = 0;
};

/// The twelve-sequence table. 414, 4114 and 4314 count feasible samples
/// only; the rest are pure algebra and count every sample.
std::vector<SequenceCheck> minimal_set_check(int samples, std::uint64_t seed);

/// Largest |ratio(a) - ratio(b)| over the samples, using the final brackets
/// regardless of feasibility.
double max_ratio_gap(const std::string& a, const std::string& b, int samples, std::uint64_t seed);

struct ReflectionSummary {
  long long samples = 0;
  long long failures = 0;
  double worst_scaled_error = 0;  // max error / (machine eps * D(X))
};

/// g(Xi X) = -g(X), Xi Xi X = X, U1 X = Xi U2 Xi X and U4 X = Xi U3 Xi X, each
/// to 4 machine eps times the outer length.
ReflectionSummary reflection_suite(int samples, std::uint64_t seed, Execution exec = Execution::Parallel,
                                   int jobs = 0);

}  // namespace kinkline
