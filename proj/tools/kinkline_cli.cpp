// Command-line front end: minimize, bench, seqexp, verify, list-functions.
//
// Exit codes: 0 success, 1 solver or check failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "kinkline/harness.hpp"
#include "kinkline/testfuncs.hpp"
#include "kinkline/verify.hpp"

using namespace kinkline;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  double eps = 1e-8;
  int budget = 500;
  int jobs = 0;
};

std::uint64_t env_seed() {
  const char* s = std::getenv("KINKLINE_SEED");
  if (!s || !*s) return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw Error(ErrorCode::InvalidConfig, "KINKLINE_SEED is not an unsigned integer");
  return v;
}

// Writes to `path`, or stdout for "" and "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorCode::InvalidConfig, "cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int cmd_minimize(const Globals& g, const std::string& fn, const std::string& alg, const std::string& trace) {
  const SolverResult r = minimize_once(fn, parse_algorithm(alg), g.seed, g.eps, g.budget);
  const Bracket3& b = r.final_bracket;
  std::printf("function=%s algorithm=%s seed=%llu\n", fn.c_str(), alg.c_str(),
              static_cast<unsigned long long>(g.seed));
  std::printf("status=%s iterations=%d evaluations=%d rate=%s\n", to_string(r.status), r.iterations,
              r.evaluations, format_number(convergence_rate(r)).c_str());
  std::printf("bracket=[%.17g, %.17g, %.17g] f(xm)=%.17g\n", b.xl, b.xm, b.xr, b.fm);
  if (!trace.empty()) {
    Output out(trace);
    write_trace_csv(out.stream(), r);
  }
  return r.status == Status::Converged ? 0 : 1;
}

int cmd_bench(const Globals& g, const std::string& suite_name, int trials, const std::string& out_path,
              const std::vector<std::string>& skip, bool golden, bool latex) {
  bool with_mifflin = true;
  for (const std::string& s : skip) {
    if (s == "mifflin") {
      with_mifflin = false;
    } else {
      throw Error(ErrorCode::InvalidConfig, "--skip accepts only 'mifflin'");
    }
  }
  TrialConfig cfg;
  cfg.functions = suite(suite_name);
  cfg.algorithms = table_columns(with_mifflin, golden);
  cfg.trials = trials;
  cfg.eps = g.eps;
  cfg.budget = g.budget;
  cfg.seed = g.seed;
  cfg.jobs = g.jobs;
  const BenchmarkReport rep = run_benchmark(cfg);
  Output out(out_path);
  write_benchmark_csv(out.stream(), rep, cfg, latex ? LabelStyle::Latex : LabelStyle::Plain);
  return 0;
}

int cmd_seqexp(const Globals& g, int bits, int samples, const std::string& out_path) {
  const auto rows = run_sequence_experiment(bits, samples, g.seed, Execution::Parallel, g.jobs);
  Output out(out_path);
  write_sequence_csv(out.stream(), rows, bits, samples, g.seed);
  return 0;
}

int cmd_verify(const Globals& g, bool contraction, bool sequences, bool reflection, int samples) {
  if (!contraction && !sequences && !reflection) contraction = sequences = reflection = true;
  bool ok = true;
  if (contraction) {
    const ContractionSummary s = exhaustive_contraction(5, samples, g.seed, Execution::Parallel, g.jobs);
    const bool pass = s.max_ratio <= 0.5 + 1e-12;
    ok = ok && pass;
    std::printf("contraction length=5 samples=%d feasible_runs=%lld feasible_sequences=%d max_ratio=%.15f worst=%s %s\n",
                samples, s.feasible_runs, s.feasible_sequences, s.max_ratio, s.worst_sequence.c_str(),
                pass ? "PASS" : "FAIL");
  }
  if (sequences) {
    for (const SequenceCheck& c : minimal_set_check(samples, g.seed)) {
      const bool pass = c.counted == 0 || c.max_ratio < 0.5;
      ok = ok && pass;
      std::printf("sequence %-5s counted=%d/%d%s max_ratio=%.15f %s\n", c.sequence.c_str(), c.counted, c.samples,
                  c.filtered ? " (feasible only)" : "", c.max_ratio, pass ? "PASS" : "FAIL");
    }
    for (const auto& [a, b] : {std::pair{"44", "422"}, std::pair{"434", "4322"}}) {
      const double gap = max_ratio_gap(a, b, samples, g.seed);
      const bool pass = gap <= 1e-12;
      ok = ok && pass;
      std::printf("pair %s=%s max_difference=%.3e %s\n", a, b, gap, pass ? "PASS" : "FAIL");
    }
  }
  if (reflection) {
    const ReflectionSummary s = reflection_suite(samples * 10, g.seed, Execution::Parallel, g.jobs);
    const bool pass = s.failures == 0;
    ok = ok && pass;
    std::printf("reflection samples=%lld failures=%lld worst=%.3f eps*D %s\n", s.samples, s.failures,
                s.worst_scaled_error, pass ? "PASS" : "FAIL");
  }
  return ok ? 0 : 1;
}

int cmd_list() {
  for (const TestFunction& f : all_functions()) {
    std::printf("%s  %-18s  [%s, %s]  %s\n", f.id.c_str(), to_string(f.category), format_number(f.lo).c_str(),
                format_number(f.hi).c_str(), f.formula.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derivative-free bracketing minimizers for piecewise-smooth objectives"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  try {
    g.seed = env_seed();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  app.add_option("--seed", g.seed, "RNG seed (falls back to KINKLINE_SEED, then 0)");
  app.add_option("--eps", g.eps, "Stop once the inner bracket is at most 2*eps")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "Iteration budget per run")->check(CLI::PositiveNumber);
  app.add_option("--jobs", g.jobs, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);

  auto* minimize = app.add_subcommand("minimize", "Run one solver from a sampled bracket");
  std::string fn, alg = "dupm", trace;
  minimize->add_option("-f,--function", fn, "Test function id, e.g. NU3")->required();
  minimize->add_option("-a,--algorithm", alg, "supm[:alpha] | eupm | dupm | brent | mifflin | golden");
  minimize->add_option("--trace", trace, "Write the iteration trace CSV here ('-' for stdout)");

  auto* bench = app.add_subcommand("bench", "Average convergence-rate table");
  std::string suite_name = "all", bench_out;
  int trials = 1000;
  std::vector<std::string> skip;
  bool golden = false, latex = false;
  bench->add_option("--suite", suite_name, "su | nu | sm | all");
  bench->add_option("--trials", trials, "Random brackets per function")->check(CLI::PositiveNumber);
  bench->add_option("--out", bench_out, "CSV output path (default stdout)");
  bench->add_option("--skip", skip, "Omit a column (mifflin)");
  bench->add_flag("--golden", golden, "Append a golden-section column");
  bench->add_flag("--latex-labels", latex, "Label rows as $f^{SU}_1$ instead of SU1");

  auto* seqexp = app.add_subcommand("seqexp", "Extremal-method rates over all improving/worse sequences");
  int bits = 10, seq_samples = 1000;
  std::string seq_out;
  seqexp->add_option("--bits", bits, "Sequence length")->check(CLI::Range(1, 24));
  seqexp->add_option("--samples", seq_samples, "Gap vectors per sequence")->check(CLI::PositiveNumber);
  seqexp->add_option("--out", seq_out, "CSV output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Sampled checks of the contraction bounds and symmetries");
  bool contraction = false, sequences = false, reflection = false;
  int ver_samples = 10000;
  verify->add_flag("--contraction", contraction, "All feasible five-step sequences");
  verify->add_flag("--sequences", sequences, "The twelve-sequence ratio table");
  verify->add_flag("--reflection", reflection, "Mirror-symmetry identities");
  verify->add_option("--samples", ver_samples, "Gap vectors per check")->check(CLI::PositiveNumber);

  auto* list = app.add_subcommand("list-functions", "Print the test-function registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*minimize) return cmd_minimize(g, fn, alg, trace);
    if (*bench) return cmd_bench(g, suite_name, trials, bench_out, skip, golden, latex);
    if (*seqexp) return cmd_seqexp(g, bits, seq_samples, seq_out);
    if (*verify) return cmd_verify(g, contraction, sequences, reflection, ver_samples);
    if (*list) return cmd_list();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const ErrorCode c = e.code();
    return c == ErrorCode::InvalidConfig || c == ErrorCode::UnknownFunction ? 2 : 1;
  }
  return 2;
}
