#include "kinkline/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>

#include "kinkline/baselines.hpp"
#include "kinkline/dupm.hpp"
#include "kinkline/eupm.hpp"
#include "kinkline/supm.hpp"

namespace kinkline {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kSequenceStream = 0x5e9e11ce;

std::size_t function_index(const TestFunction& fn) {
  const auto& all = all_functions();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (&all[i] == &fn || all[i].id == fn.id) return i;
  }
  return all.size();
}

}  // namespace

std::string AlgorithmSpec::column() const {
  switch (kind) {
    case Algorithm::Supm: return format_number(alpha);
    case Algorithm::Eupm: return "EUPM";
    case Algorithm::Dupm: return "DUPM";
    case Algorithm::Brent: return "Brent";
    case Algorithm::Mifflin: return "Mifflin";
    case Algorithm::Golden: return "Golden";
  }
  return "?";
}

AlgorithmSpec parse_algorithm(const std::string& text) {
  std::string name = text, arg;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    arg = text.substr(colon + 1);
  }
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
  AlgorithmSpec s;
  if (name == "supm") {
    s.kind = Algorithm::Supm;
    if (!arg.empty()) {
      std::size_t used = 0;
      try {
        s.alpha = std::stod(arg, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != arg.size() || !(s.alpha >= 0)) {
        throw Error(ErrorCode::InvalidConfig, "bad alpha in '" + text + "'");
      }
    }
    return s;
  }
  if (!arg.empty()) throw Error(ErrorCode::InvalidConfig, "only supm takes a parameter: '" + text + "'");
  if (name == "eupm") s.kind = Algorithm::Eupm;
  else if (name == "dupm") s.kind = Algorithm::Dupm;
  else if (name == "brent") s.kind = Algorithm::Brent;
  else if (name == "mifflin") s.kind = Algorithm::Mifflin;
  else if (name == "golden") s.kind = Algorithm::Golden;
  else throw Error(ErrorCode::InvalidConfig, "unknown algorithm '" + text + "'");
  return s;
}

std::vector<AlgorithmSpec> table_columns(bool with_mifflin, bool with_golden) {
  std::vector<AlgorithmSpec> cols;
  for (double a : {0.0, 0.1, 1.0, 10.0}) cols.push_back({Algorithm::Supm, a});
  cols.push_back({Algorithm::Eupm, 0});
  cols.push_back({Algorithm::Dupm, 0});
  cols.push_back({Algorithm::Brent, 0});
  if (with_mifflin) cols.push_back({Algorithm::Mifflin, 0});
  if (with_golden) cols.push_back({Algorithm::Golden, 0});
  return cols;
}

ExtendedBracket7 generate_bracket(const TestFunction& fn, Rng& rng) {
  const double a = fn.lo, b = fn.hi, w = b - a;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::array<double, 8> xs{};
    for (int i = 0; i < 4; ++i) xs[i] = rng.uniform(a, a + w / 5);
    for (int i = 4; i < 8; ++i) xs[i] = rng.uniform(b - w / 2, b);
    std::array<double, 8> fs{};
    for (int i = 0; i < 8; ++i) fs[i] = fn(xs[i]);
    const std::size_t best = std::min_element(fs.begin(), fs.end()) - fs.begin();
    const double xm = xs[best];

    std::vector<std::pair<double, double>> left, right;
    for (int i = 0; i < 8; ++i) {
      if (xs[i] < xm) left.emplace_back(xs[i], fs[i]);
      if (xs[i] > xm) right.emplace_back(xs[i], fs[i]);
    }
    if (left.size() < 3 || right.size() < 3) continue;
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());

    std::array<double, 7> px{}, pf{};
    for (int k = 0; k < 3; ++k) {
      const auto& l = left[left.size() - 3 + k];
      px[k] = l.first;
      pf[k] = l.second;
      px[4 + k] = right[k].first;
      pf[4 + k] = right[k].second;
    }
    px[3] = xm;
    pf[3] = fs[best];
    try {
      return make_extended7(px, pf);
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(ErrorCode::ResampleLimitExceeded, "no usable bracket for " + fn.id + " after 1000 draws");
}

double convergence_rate(const SolverResult& r) {
  if (r.status != Status::Converged) return kInf;
  if (r.iterations == 0) return 0.0;
  const double d0 = r.trace.front().d;
  return std::pow(r.final_bracket.length() / d0, 1.0 / r.iterations);
}

SolverResult run_algorithm(const AlgorithmSpec& alg, const TestFunction& fn, const ExtendedBracket7& start,
                           double eps, int budget) {
  CountingOracle oracle(fn);
  const Objective f = [&oracle](double x) { return oracle(x); };
  SolverResult r;
  switch (alg.kind) {
    case Algorithm::Supm: {
      SupmConfig c;
      c.alpha = alg.alpha;
      c.eps = eps;
      c.budget = budget;
      r = supm_minimize(f, start, c);
      break;
    }
    case Algorithm::Eupm:
      r = eupm_minimize(f, inner_five(start), {eps, 0.0, budget});
      break;
    case Algorithm::Dupm: {
      DupmConfig c;
      c.eps = eps;
      c.budget = budget;
      r = dupm_minimize(f, start, c);
      break;
    }
    case Algorithm::Brent:
      r = brent_minimize(f, start.inner(), {eps, budget});
      break;
    case Algorithm::Mifflin:
      r = mifflin_strodiot_minimize(f, inner_five(start), {eps, budget});
      break;
    case Algorithm::Golden:
      r = golden_section_minimize(f, start.inner(), {eps, budget});
      break;
  }
  r.evaluations = oracle.count();
  return r;
}

int resolve_jobs(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

BenchmarkReport run_benchmark(const TrialConfig& cfg) {
  if (cfg.trials < 1) throw Error(ErrorCode::InvalidConfig, "trials must be at least 1");
  BenchmarkReport rep;
  rep.functions = cfg.functions;
  rep.algorithms = cfg.algorithms;
  const std::size_t na = cfg.algorithms.size();
  const int threads = cfg.execution == Execution::Parallel ? resolve_jobs(cfg.jobs) : 1;

  for (const TestFunction* fn : cfg.functions) {
    const std::uint64_t fidx = function_index(*fn);
    std::vector<double> rates(static_cast<std::size_t>(cfg.trials) * na, kInf);

#pragma omp parallel for schedule(dynamic) num_threads(threads) if (cfg.execution == Execution::Parallel)
    for (int t = 0; t < cfg.trials; ++t) {
      double* row = &rates[static_cast<std::size_t>(t) * na];
      Rng rng(derive_seed(cfg.seed, fidx, static_cast<std::uint64_t>(t)));
      ExtendedBracket7 start;
      try {
        start = generate_bracket(*fn, rng);
      } catch (const Error&) {
        continue;
      }
      for (std::size_t k = 0; k < na; ++k) {
        try {
          row[k] = convergence_rate(run_algorithm(cfg.algorithms[k], *fn, start, cfg.eps, cfg.budget));
        } catch (const Error&) {
          row[k] = kInf;
        }
      }
    }

    std::vector<CellStats> cells(na);
    for (std::size_t k = 0; k < na; ++k) {
      double sum = 0;
      for (int t = 0; t < cfg.trials; ++t) {
        const double v = rates[static_cast<std::size_t>(t) * na + k];
        if (std::isinf(v)) ++cells[k].failures;
        sum += v;
      }
      cells[k].trials = cfg.trials;
      cells[k].mean_rate = cells[k].failures > 0 ? kInf : sum / cfg.trials;
    }
    rep.cells.push_back(std::move(cells));
  }
  return rep;
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void write_benchmark_csv(std::ostream& os, const BenchmarkReport& report, const TrialConfig& cfg,
                         LabelStyle labels) {
  os << "# seed=" << cfg.seed << " eps=" << format_number(cfg.eps) << " budget=" << cfg.budget
     << " trials=" << cfg.trials << "\n";
  os << "Functions";
  for (const AlgorithmSpec& a : report.algorithms) os << ',' << a.column();
  os << '\n';
  for (std::size_t i = 0; i < report.functions.size(); ++i) {
    const TestFunction& fn = *report.functions[i];
    os << (labels == LabelStyle::Latex ? fn.latex_label() : fn.id);
    for (const CellStats& c : report.cells[i]) os << ',' << format_number(c.mean_rate);
    os << '\n';
  }
}

GapVector sample_unit_gaps(Rng& rng) {
  double e[4];
  for (double& v : e) v = rng.exponential();
  const double s = e[0] + e[1] + e[2] + e[3];
  return {e[0] / s, e[1] / s, e[2] / s, e[3] / s};
}

double sequence_rate(const GapVector& p, const std::string& bits) {
  ExtendedBracket5 x = from_gaps(p, 0.0);
  const double d0 = inner_length(x);
  for (char c : bits) x = extremal_update(x, c == '1');
  return std::pow(inner_length(x) / d0, 1.0 / static_cast<double>(bits.size()));
}

std::vector<SequenceRow> run_sequence_experiment(int bits, int samples, std::uint64_t seed, Execution exec,
                                                 int jobs) {
  if (bits < 1 || bits > 24) throw Error(ErrorCode::InvalidConfig, "bits must be in 1..24");
  if (samples < 1) throw Error(ErrorCode::InvalidConfig, "samples must be at least 1");
  std::vector<GapVector> gaps(samples);
  for (int s = 0; s < samples; ++s) {
    Rng rng(derive_seed(seed, kSequenceStream, static_cast<std::uint64_t>(s)));
    gaps[s] = sample_unit_gaps(rng);
  }

  const long n = 1L << bits;
  std::vector<SequenceRow> rows(n);
  const int threads = exec == Execution::Parallel ? resolve_jobs(jobs) : 1;
#pragma omp parallel for schedule(static) num_threads(threads) if (exec == Execution::Parallel)
  for (long i = 0; i < n; ++i) {
    std::string seq(bits, '0');
    for (int j = 0; j < bits; ++j) {
      if ((i >> (bits - 1 - j)) & 1) seq[j] = '1';
    }
    double sum = 0;
    for (const GapVector& p : gaps) sum += sequence_rate(p, seq);
    rows[i] = {seq, sum / samples, kGoldenRatio};
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SequenceRow& a, const SequenceRow& b) { return a.eupm_rate > b.eupm_rate; });
  return rows;
}

void write_sequence_csv(std::ostream& os, const std::vector<SequenceRow>& rows, int bits, int samples,
                        std::uint64_t seed) {
  os << "# seed=" << seed << " bits=" << bits << " samples=" << samples << "\n";
  os << "sequence,bits,eupm_rate,golden_rate\n";
  for (const SequenceRow& r : rows) {
    os << r.sequence << ',' << bits << ',' << format_number(r.eupm_rate) << ',' << format_number(r.golden_rate)
       << '\n';
  }
}

ExtendedBracket7 supm_failure_bracket() {
  std::array<double, 7> x = {-2.23927, -2.171330, -1.811263, 1.820150, 2.102197, 2.293404, 2.334091};
  const TestFunction& fn = get_function("NU3");
  std::array<double, 7> f{};
  for (int i = 0; i < 7; ++i) f[i] = fn(x[i]);
  return make_extended7(x, f);
}

SolverResult minimize_once(const std::string& function_id, const AlgorithmSpec& alg, std::uint64_t seed,
                           double eps, int budget) {
  const TestFunction& fn = get_function(function_id);
  Rng rng(derive_seed(seed, function_index(fn), 0));
  return run_algorithm(alg, fn, generate_bracket(fn, rng), eps, budget);
}

void write_trace_csv(std::ostream& os, const SolverResult& r) {
  os << "iteration,xl,xm,xr,d,fm\n";
  char buf[256];
  for (const TraceEntry& t : r.trace) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", t.iteration, t.xl, t.xm, t.xr, t.d, t.fm);
    os << buf;
  }
}

}  // namespace kinkline
