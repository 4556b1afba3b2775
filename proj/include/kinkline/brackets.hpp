#pragma once

// Bracket types shared by every solver.
//
// An extended bracket stores N ascending abscissae (N = 7 for the static and
// dynamic underestimating methods, N = 5 for the extremal one) together with
// the objective values already paid for at those abscissae. The centre entry
// carries the smallest value among the inner triple.

#include <array>
#include <cstddef>
#include <limits>
#include <span>

#include "kinkline/error.hpp"

namespace kinkline {

inline constexpr double kMachineEps = std::numeric_limits<double>::epsilon();

/// Plain three-point bracket: xl < xm < xr and fl >= fm <= fr.
struct Bracket3 {
  double xl = 0, xm = 0, xr = 0;
  double fl = 0, fm = 0, fr = 0;

  double length() const { return xr - xl; }
};

/// Throws NotAscending / NotABracket if `b` is not a bracket.
void validate(const Bracket3& b);

/// The four ways a trial point can enter a bracket. Values match the
/// numbering used for update sequences ("4314" etc.).
enum class Branch : int {
  LeftImproving = 1,
  RightImproving = 2,
  RightWorse = 3,
  LeftWorse = 4,
};

inline bool is_left(Branch b) { return b == Branch::LeftImproving || b == Branch::LeftWorse; }
inline bool is_improving(Branch b) {
  return b == Branch::LeftImproving || b == Branch::RightImproving;
}

struct BracketOptions {
  // Adjacent gaps below min_gap_rel * outer_length are rejected.
  double min_gap_rel = 16 * kMachineEps;
};

template <std::size_t N>
class ExtendedBracket {
  static_assert(N == 5 || N == 7, "extended brackets have five or seven points");

 public:
  static constexpr std::size_t kSize = N;
  static constexpr std::size_t kCenter = N / 2;

  const std::array<double, N>& x() const { return x_; }
  const std::array<double, N>& fv() const { return f_; }

  /// x^L_k for k = 1 .. N/2 (1 is nearest the centre).
  double xl(std::size_t k) const { return x_[kCenter - k]; }
  double xr(std::size_t k) const { return x_[kCenter + k]; }
  double fl(std::size_t k) const { return f_[kCenter - k]; }
  double fr(std::size_t k) const { return f_[kCenter + k]; }
  double xm() const { return x_[kCenter]; }
  double fm() const { return f_[kCenter]; }

  Bracket3 inner() const {
    return {xl(1), xm(), xr(1), fl(1), fm(), fr(1)};
  }

  /// Validated construction. Throws NotAscending(i) when x[i] <= x[i-1],
  /// DegenerateGap(i) when a gap is below the configured threshold and
  /// NotABracket when the centre condition fails.
  static ExtendedBracket make(std::span<const double, N> points, std::span<const double, N> values,
                              const BracketOptions& opts = {});

  /// Construction without any checks. Used by the oracle-free sequence
  /// algebra, which deliberately explores non-bracket configurations.
  static ExtendedBracket unchecked(const std::array<double, N>& points,
                                   const std::array<double, N>& values) {
    ExtendedBracket b;
    b.x_ = points;
    b.f_ = values;
    return b;
  }

 private:
  std::array<double, N> x_{};
  std::array<double, N> f_{};
};

using ExtendedBracket7 = ExtendedBracket<7>;
using ExtendedBracket5 = ExtendedBracket<5>;

ExtendedBracket7 make_extended7(std::span<const double, 7> points, std::span<const double, 7> values,
                                const BracketOptions& opts = {});
ExtendedBracket5 make_extended5(std::span<const double, 5> points, std::span<const double, 5> values,
                                const BracketOptions& opts = {});

/// d(X) = x^R_1 - x^L_1.
template <std::size_t N>
double inner_length(const ExtendedBracket<N>& b) {
  return b.xr(1) - b.xl(1);
}

/// D(X): diameter of the convex hull.
template <std::size_t N>
double outer_length(const ExtendedBracket<N>& b) {
  return b.x()[N - 1] - b.x()[0];
}

/// Drops the outermost pair of a seven-point bracket.
ExtendedBracket5 inner_five(const ExtendedBracket7& b);

/// Gap coordinates of a five-point bracket:
/// (x^L_1 - x^L_2, x^M - x^L_1, x^R_1 - x^M, x^R_2 - x^R_1).
struct GapVector {
  double p1 = 0, p2 = 0, p3 = 0, p4 = 0;
};

GapVector to_gaps(const ExtendedBracket5& b);

/// Inverse of to_gaps; objective values are zero-filled. Throws
/// NonPositiveGap if any component is <= 0.
ExtendedBracket5 from_gaps(const GapVector& p, double xm);

/// Xi(a,b,c,d,e) = -(e,d,c,b,a); values are reversed so the result models
/// the mirrored objective x -> f(-x).
ExtendedBracket5 reflect(const ExtendedBracket5& b);

/// Inserts `trial` around the centre according to `branch` and drops the
/// outermost entry on the opposite side:
///   1: (.., xl1, t, xm, xr1, ..)  dropping the last entry, t is the new centre
///   2: (.., xl1, xm, t, xr1, ..)  dropping the first entry, t is the new centre
///   3: (.., xl1, xm, t, xr1, ..)  dropping the last entry
///   4: (.., xl1, t, xm, xr1, ..)  dropping the first entry
template <std::size_t N>
std::array<double, N> insert_trial(const std::array<double, N>& v, Branch branch, double trial) {
  constexpr std::size_t c = N / 2;
  std::array<double, N> out{};
  switch (branch) {
    case Branch::LeftImproving:
      for (std::size_t i = 0; i < c; ++i) out[i] = v[i];
      out[c] = trial;
      for (std::size_t i = c + 1; i < N; ++i) out[i] = v[i - 1];
      break;
    case Branch::RightImproving:
      for (std::size_t i = 0; i < c; ++i) out[i] = v[i + 1];
      out[c] = trial;
      for (std::size_t i = c + 1; i < N; ++i) out[i] = v[i];
      break;
    case Branch::RightWorse:
      for (std::size_t i = 0; i <= c; ++i) out[i] = v[i];
      out[c + 1] = trial;
      for (std::size_t i = c + 2; i < N; ++i) out[i] = v[i - 1];
      break;
    case Branch::LeftWorse:
      for (std::size_t i = 0; i + 1 < c; ++i) out[i] = v[i + 1];
      out[c - 1] = trial;
      for (std::size_t i = c; i < N; ++i) out[i] = v[i];
      break;
  }
  return out;
}

}  // namespace kinkline
