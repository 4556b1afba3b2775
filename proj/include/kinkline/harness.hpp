#pragma once

// Randomized experiments over the test-function registry: bracket sampling,
// the convergence-rate metric, the rate tables and the binary-sequence study.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kinkline/brackets.hpp"
#include "kinkline/rng.hpp"
#include "kinkline/solver.hpp"
#include "kinkline/testfuncs.hpp"

namespace kinkline {

enum class Execution { Serial, Parallel };

enum class Algorithm { Supm, Eupm, Dupm, Brent, Mifflin, Golden };

struct AlgorithmSpec {
  Algorithm kind = Algorithm::Dupm;
  double alpha = 0.0;  // Supm only

  /// Table column name: the alpha value for Supm, otherwise the method name.
  std::string column() const;
};

/// "supm", "supm:0.1", "eupm", "dupm", "brent", "mifflin", "golden".
/// Throws InvalidConfig.
AlgorithmSpec parse_algorithm(const std::string& text);

/// Supm at 0, 0.1, 1, 10 then EUPM, DUPM, Brent and optionally Mifflin and Golden.
std::vector<AlgorithmSpec> table_columns(bool with_mifflin = true, bool with_golden = false);

/// Four uniform samples from the left fifth of the domain and four from the
/// right half; the best becomes the centre and its three nearest neighbours
/// on each side complete the bracket. Redraws all eight when a side is short
/// (ResampleLimitExceeded after 1000 draws).
ExtendedBracket7 generate_bracket(const TestFunction& fn, Rng& rng);

/// (d_final / d_initial)^(1/n) for a converged run, 0 when n = 0, infinity otherwise.
double convergence_rate(const SolverResult& r);

/// Runs one solver from `start` against a fresh counting oracle.
SolverResult run_algorithm(const AlgorithmSpec& alg, const TestFunction& fn, const ExtendedBracket7& start,
                           double eps, int budget);

struct TrialConfig {
  std::vector<const TestFunction*> functions;
  std::vector<AlgorithmSpec> algorithms;
  int trials = 1000;
  double eps = 1e-8;
  int budget = 500;
  std::uint64_t seed = 0;
  int jobs = 0;  // 0 leaves the OpenMP default
  Execution execution = Execution::Parallel;
};

struct CellStats {
  double mean_rate = 0;  // infinity when any trial failed
  int trials = 0;
  int failures = 0;
};

struct BenchmarkReport {
  std::vector<const TestFunction*> functions;
  std::vector<AlgorithmSpec> algorithms;
  std::vector<std::vector<CellStats>> cells;  // [function][algorithm]
};

/// Every trial draws one bracket from a stream keyed by (seed, function, trial)
/// and hands it to every algorithm, so results do not depend on scheduling.
BenchmarkReport run_benchmark(const TrialConfig& cfg);

enum class LabelStyle { Plain, Latex };

void write_benchmark_csv(std::ostream& os, const BenchmarkReport& report, const TrialConfig& cfg,
                         LabelStyle labels = LabelStyle::Plain);

struct SequenceRow {
  std::string sequence;  // '1' improving, '0' not, first iteration first
  double eupm_rate = 0;
  double golden_rate = 0;
};

/// Gap vector drawn uniformly from the positive unit-sum simplex.
GapVector sample_unit_gaps(Rng& rng);

/// Rate of the oracle-free extremal method driven by `bits` from the gap vector p.
double sequence_rate(const GapVector& p, const std::string& bits);

/// All 2^bits sequences, each averaged over `samples` shared gap vectors,
/// sorted slowest first.
std::vector<SequenceRow> run_sequence_experiment(int bits, int samples, std::uint64_t seed,
                                                 Execution exec = Execution::Parallel, int jobs = 0);

void write_sequence_csv(std::ostream& os, const std::vector<SequenceRow>& rows, int bits, int samples,
                        std::uint64_t seed);

/// A known stalling start for NU3, sorted ascending, with NU3 values.
ExtendedBracket7 supm_failure_bracket();

/// Bracket from stream (seed, function index, 0), then the chosen solver.
SolverResult minimize_once(const std::string& function_id, const AlgorithmSpec& alg, std::uint64_t seed,
                           double eps, int budget);

/// iteration,xl,xm,xr,d,fm
void write_trace_csv(std::ostream& os, const SolverResult& r);

/// Fixed-precision formatting shared by the CSV writers; infinity prints as inf.
std::string format_number(double v);

/// Sets the OpenMP worker cap for a region; 0 keeps the default.
int resolve_jobs(int jobs);

}  // namespace kinkline
