#include "kinkline/brackets.hpp"

#include <string>

namespace kinkline {

void validate(const Bracket3& b) {
  if (!(b.xl < b.xm)) throw Error(ErrorCode::NotAscending, "xl >= xm", 1);
  if (!(b.xm < b.xr)) throw Error(ErrorCode::NotAscending, "xm >= xr", 2);
  if (!(b.fl >= b.fm && b.fm <= b.fr)) {
    throw Error(ErrorCode::NotABracket, "centre value exceeds an end value");
  }
}

template <std::size_t N>
ExtendedBracket<N> ExtendedBracket<N>::make(std::span<const double, N> points,
                                            std::span<const double, N> values,
                                            const BracketOptions& opts) {
  for (std::size_t i = 1; i < N; ++i) {
    if (!(points[i] > points[i - 1])) {
      throw Error(ErrorCode::NotAscending,
                  "abscissa " + std::to_string(i) + " does not exceed its predecessor",
                  static_cast<int>(i));
    }
  }
  const double min_gap = opts.min_gap_rel * (points[N - 1] - points[0]);
  for (std::size_t i = 1; i < N; ++i) {
    if (points[i] - points[i - 1] < min_gap) {
      throw Error(ErrorCode::DegenerateGap,
                  "gap before abscissa " + std::to_string(i) + " is below rounding scale",
                  static_cast<int>(i));
    }
  }
  constexpr std::size_t c = N / 2;
  if (!(values[c - 1] >= values[c] && values[c] <= values[c + 1])) {
    throw Error(ErrorCode::NotABracket, "f(xl1) >= f(xm) <= f(xr1) violated");
  }
  ExtendedBracket b;
  for (std::size_t i = 0; i < N; ++i) {
    b.x_[i] = points[i];
    b.f_[i] = values[i];
  }
  return b;
}

template class ExtendedBracket<5>;
template class ExtendedBracket<7>;

ExtendedBracket7 make_extended7(std::span<const double, 7> points, std::span<const double, 7> values,
                                const BracketOptions& opts) {
  return ExtendedBracket7::make(points, values, opts);
}

ExtendedBracket5 make_extended5(std::span<const double, 5> points, std::span<const double, 5> values,
                                const BracketOptions& opts) {
  return ExtendedBracket5::make(points, values, opts);
}

ExtendedBracket5 inner_five(const ExtendedBracket7& b) {
  const auto& x = b.x();
  const auto& f = b.fv();
  return ExtendedBracket5::unchecked({x[1], x[2], x[3], x[4], x[5]}, {f[1], f[2], f[3], f[4], f[5]});
}

GapVector to_gaps(const ExtendedBracket5& b) {
  const auto& x = b.x();
  return {x[1] - x[0], x[2] - x[1], x[3] - x[2], x[4] - x[3]};
}

ExtendedBracket5 from_gaps(const GapVector& p, double xm) {
  if (!(p.p1 > 0 && p.p2 > 0 && p.p3 > 0 && p.p4 > 0)) {
    throw Error(ErrorCode::NonPositiveGap, "gap vector must be strictly positive");
  }
  const double xl1 = xm - p.p2;
  const double xr1 = xm + p.p3;
  return ExtendedBracket5::unchecked({xl1 - p.p1, xl1, xm, xr1, xr1 + p.p4}, {0, 0, 0, 0, 0});
}

ExtendedBracket5 reflect(const ExtendedBracket5& b) {
  const auto& x = b.x();
  const auto& f = b.fv();
  return ExtendedBracket5::unchecked({-x[4], -x[3], -x[2], -x[1], -x[0]}, {f[4], f[3], f[2], f[1], f[0]});
}

}  // namespace kinkline
