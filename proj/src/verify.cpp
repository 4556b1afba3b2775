#include "kinkline/verify.hpp"

#include <algorithm>
#include <cmath>

#include "kinkline/eupm.hpp"

namespace kinkline {

namespace {

constexpr std::uint64_t kContractionStream = 0xc0a7;
constexpr std::uint64_t kReflectionStream = 0x4ef1;

std::vector<GapVector> draw_gaps(int samples, std::uint64_t seed, std::uint64_t stream) {
  std::vector<GapVector> gaps(samples);
  for (int s = 0; s < samples; ++s) {
    Rng rng(derive_seed(seed, stream, static_cast<std::uint64_t>(s)));
    gaps[s] = sample_unit_gaps(rng);
  }
  return gaps;
}

std::vector<UpdateSequence> all_sequences(int length) {
  std::vector<UpdateSequence> out;
  long n = 1;
  for (int i = 0; i < length; ++i) n *= 4;
  for (long code = 0; code < n; ++code) {
    std::vector<Branch> steps(length);
    long c = code;
    for (int j = length - 1; j >= 0; --j) {
      steps[j] = static_cast<Branch>(1 + c % 4);
      c /= 4;
    }
    out.emplace_back(std::move(steps));
  }
  return out;
}

double max_abs_diff(const std::array<double, 5>& a, const std::array<double, 5>& b) {
  double m = 0;
  for (int i = 0; i < 5; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

ExtendedBracket5 one_update(const ExtendedBracket5& x, Branch br) {
  return apply_sequence(x, UpdateSequence({br})).bracket;
}

}  // namespace

ContractionSummary exhaustive_contraction(int length, int samples, std::uint64_t seed, Execution exec, int jobs) {
  if (length < 1 || length > 8) throw Error(ErrorCode::InvalidConfig, "sequence length must be in 1..8");
  if (samples < 1) throw Error(ErrorCode::InvalidConfig, "samples must be at least 1");
  const std::vector<GapVector> gaps = draw_gaps(samples, seed, kContractionStream);
  const std::vector<UpdateSequence> seqs = all_sequences(length);
  const long nseq = static_cast<long>(seqs.size());

  std::vector<double> best(samples, 0.0);
  std::vector<long> best_seq(samples, -1);
  std::vector<long long> counts(samples, 0);
  std::vector<unsigned char> seen(nseq, 0);

  const int threads = exec == Execution::Parallel ? resolve_jobs(jobs) : 1;
#pragma omp parallel for schedule(static) num_threads(threads) if (exec == Execution::Parallel)
  for (int s = 0; s < samples; ++s) {
    const ExtendedBracket5 x = from_gaps(gaps[s], 0.0);
    for (long k = 0; k < nseq; ++k) {
      const auto r = contraction_ratio(x, seqs[k]);
      if (!r) continue;
      ++counts[s];
      if (!seen[k]) {
#pragma omp atomic write
        seen[k] = 1;
      }
      if (*r > best[s]) {
        best[s] = *r;
        best_seq[s] = k;
      }
    }
  }

  ContractionSummary out;
  for (int s = 0; s < samples; ++s) {
    out.feasible_runs += counts[s];
    if (best_seq[s] >= 0 && best[s] > out.max_ratio) {
      out.max_ratio = best[s];
      out.worst_sequence = seqs[best_seq[s]].str();
    }
  }
  out.feasible_sequences = static_cast<int>(std::count(seen.begin(), seen.end(), 1));
  return out;
}

std::vector<SequenceCheck> minimal_set_check(int samples, std::uint64_t seed) {
  const std::vector<GapVector> gaps = draw_gaps(samples, seed, kContractionStream);
  std::vector<SequenceCheck> out;
  for (const UpdateSequence& seq : minimal_set()) {
    SequenceCheck c;
    c.sequence = seq.str();
    c.filtered = c.sequence == "414" || c.sequence == "4114" || c.sequence == "4314";
    c.samples = samples;
    for (const GapVector& p : gaps) {
      const ExtendedBracket5 x = from_gaps(p, 0.0);
      const SequenceOutcome o = apply_sequence(x, seq);
      if (c.filtered && !o.feasible) continue;
      ++c.counted;
      c.max_ratio = std::max(c.max_ratio, inner_length(o.bracket) / inner_length(x));
    }
    out.push_back(c);
  }
  return out;
}

double max_ratio_gap(const std::string& a, const std::string& b, int samples, std::uint64_t seed) {
  const std::vector<GapVector> gaps = draw_gaps(samples, seed, kContractionStream);
  const UpdateSequence sa = UpdateSequence::parse(a), sb = UpdateSequence::parse(b);
  double worst = 0;
  for (const GapVector& p : gaps) {
    const ExtendedBracket5 x = from_gaps(p, 0.0);
    const double ra = inner_length(apply_sequence(x, sa).bracket) / inner_length(x);
    const double rb = inner_length(apply_sequence(x, sb).bracket) / inner_length(x);
    worst = std::max(worst, std::abs(ra - rb));
  }
  return worst;
}

ReflectionSummary reflection_suite(int samples, std::uint64_t seed, Execution exec, int jobs) {
  std::vector<double> err(samples, 0.0);
  const int threads = exec == Execution::Parallel ? resolve_jobs(jobs) : 1;
#pragma omp parallel for schedule(static) num_threads(threads) if (exec == Execution::Parallel)
  for (int s = 0; s < samples; ++s) {
    Rng rng(derive_seed(seed, kReflectionStream, static_cast<std::uint64_t>(s)));
    const GapVector u = sample_unit_gaps(rng);
    const double scale = std::pow(10.0, rng.uniform(-3, 3));
    const double xm = rng.uniform(-1, 1);
    const ExtendedBracket5 x = from_gaps({u.p1 * scale, u.p2 * scale, u.p3 * scale, u.p4 * scale}, xm);
    const double D = outer_length(x);

    double e = std::abs(eupm_step(reflect(x)) + eupm_step(x));
    e = std::max(e, max_abs_diff(reflect(reflect(x)).x(), x.x()));
    e = std::max(e, max_abs_diff(one_update(x, Branch::LeftImproving).x(),
                                 reflect(one_update(reflect(x), Branch::RightImproving)).x()));
    e = std::max(e, max_abs_diff(one_update(x, Branch::LeftWorse).x(),
                                 reflect(one_update(reflect(x), Branch::RightWorse)).x()));
    err[s] = e / (kMachineEps * D);
  }
  ReflectionSummary out;
  out.samples = samples;
  for (double e : err) {
    if (e > 4) ++out.failures;
    out.worst_scaled_error = std::max(out.worst_scaled_error, e);
  }
  return out;
}

}  // namespace kinkline
