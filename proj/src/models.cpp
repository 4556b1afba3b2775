#include "kinkline/models.hpp"

#include <algorithm>

namespace kinkline {

double divided_diff1(double fa, double fb, double a, double b) {
  if (a == b) throw Error(ErrorCode::CoincidentPoints, "first divided difference at a == b");
  return (fa - fb) / (a - b);
}

double divided_diff2(double fa, double fb, double fc, double a, double b, double c) {
  if (a == b || a == c || b == c) {
    throw Error(ErrorCode::CoincidentPoints, "second divided difference needs distinct points");
  }
  return (divided_diff1(fa, fb, a, b) - divided_diff1(fa, fc, a, c)) / (b - c);
}

double scaling_h(const ExtendedBracket7& b) {
  return std::max(b.xr(3) - b.xl(1), b.xr(1) - b.xl(3));
}

QuadModel build_model(Side side, const ExtendedBracket7& b, double alpha) {
  const bool left = side == Side::Left;
  const double x1 = left ? b.xl(1) : b.xr(1);
  const double x2 = left ? b.xl(2) : b.xr(2);
  const double x3 = left ? b.xl(3) : b.xr(3);
  const double f1 = left ? b.fl(1) : b.fr(1);
  const double f2 = left ? b.fl(2) : b.fr(2);
  const double f3 = left ? b.fl(3) : b.fr(3);

  QuadModel m;
  m.side = side;
  m.x1 = x1;
  m.x2 = x2;
  m.c0 = f1;
  m.c1 = divided_diff1(f1, f2, x1, x2);
  m.c2adj = divided_diff2(f1, f2, f3, x1, x2, x3) - alpha * scaling_h(b);
  return m;
}

}  // namespace kinkline
