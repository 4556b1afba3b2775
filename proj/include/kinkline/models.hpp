#pragma once

#include "kinkline/brackets.hpp"

namespace kinkline {

enum class Side { Left, Right };

inline char to_char(Side s) { return s == Side::Left ? 'L' : 'R'; }

/// f[a,b] = (f(a) - f(b)) / (a - b). Throws CoincidentPoints if a == b.
double divided_diff1(double fa, double fb, double a, double b);

/// f[a,b,c] = (f[a,b] - f[a,c]) / (b - c).
double divided_diff2(double fa, double fb, double fc, double a, double b, double c);

/// h(X) = max(x^R_3 - x^L_1, x^R_1 - x^L_3).
double scaling_h(const ExtendedBracket7& b);

/// Side quadratic kept in Newton form around its two nearest abscissae:
///   q(x) = c0 + c1 (x - x1) + c2adj (x - x1)(x - x2)
/// where c2adj = f[x1,x2,x3] - alpha * h(X).
struct QuadModel {
  double c0 = 0;
  double c1 = 0;
  double c2adj = 0;
  double x1 = 0;
  double x2 = 0;
  Side side = Side::Left;

  double operator()(double x) const { return c0 + c1 * (x - x1) + c2adj * (x - x1) * (x - x2); }
};

QuadModel build_model(Side side, const ExtendedBracket7& b, double alpha);

inline double eval_model(const QuadModel& m, double x) { return m(x); }

}  // namespace kinkline
