#pragma once

// Independent reference computations for the tests. None of these call into
// the library's numerical code; they use textbook forms (Lagrange
// interpolation, absolute-coordinate formulas, brute-force grids) so that a
// shared mistake is unlikely.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace oracle {

// Second divided difference via the explicit symmetric formula.
inline double dd2(double xa, double xb, double xc, double fa, double fb, double fc) {
  return fa / ((xa - xb) * (xa - xc)) + fb / ((xb - xa) * (xb - xc)) + fc / ((xc - xa) * (xc - xb));
}

// Lagrange quadratic through three points, minus `shift` (x - x1)(x - x2).
inline double lagrange_model(double x, double x1, double x2, double x3, double f1, double f2, double f3,
                             double shift) {
  const double l1 = (x - x2) * (x - x3) / ((x1 - x2) * (x1 - x3));
  const double l2 = (x - x1) * (x - x3) / ((x2 - x1) * (x2 - x3));
  const double l3 = (x - x1) * (x - x2) / ((x3 - x1) * (x3 - x2));
  return f1 * l1 + f2 * l2 + f3 * l3 - shift * (x - x1) * (x - x2);
}

// Closed-form extremal step in absolute coordinates.
inline double extremal_step(double xl2, double xl1, double xr1, double xr2) {
  return (xr1 * xr2 - xl1 * xl2) / (xr1 + xr2 - xl1 - xl2);
}

// Grid argmin of g over [lo, hi] with n + 1 nodes. Returns the node.
inline double grid_argmin(const std::function<double(double)>& g, double lo, double hi, long n) {
  double best = std::numeric_limits<double>::infinity(), arg = lo;
  for (long i = 0; i <= n; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
    const double v = g(x);
    if (v < best) {
      best = v;
      arg = x;
    }
  }
  return arg;
}

// Bisection root of g on [lo, hi] assuming a sign change.
inline double bisect_root(const std::function<double(double)>& g, double lo, double hi) {
  double glo = g(lo);
  for (int i = 0; i < 200 && hi - lo > 0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double gm = g(mid);
    if ((gm < 0) == (glo < 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Appendix closed forms in gap coordinates p = (p1, p2, p3, p4).
inline double ratio_111(double p1, double p2, double p3) { return p2 / (p1 + 2 * p2 + p3); }

inline double ratio_44(double p1, double p2, double p3, double p4) {
  const double s = p2 + p3;
  const double t = p1 + p2 + p3;
  return s * t / (2 * s * t + s * s + p4 * p4 + p4 * (p1 + 3 * p2 + 3 * p3));
}

inline double ratio_143(double p1, double p2, double p3) {
  return p2 * (p1 + p2) * (p1 + p2 + p3) /
         ((p1 + 2 * p2 + p3) * (3 * p2 * p2 + 3 * p2 * p3 + p3 * p3 + p1 * (2 * p2 + p3)));
}

// (a, b, c, d) = (xr1 - xl1, xr1 - xl2, xr2 - xl1, c(X)).
inline double ratio_434(double a, double b, double c) {
  return b * c * c * (b + c) * (b + c - a) / ((a * b + b * c + c * c) * (a * b * b + 2 * b * b * c + 3 * b * c * c + c * c * c));
}

}  // namespace oracle
