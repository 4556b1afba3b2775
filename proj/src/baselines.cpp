#include "kinkline/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "kinkline/models.hpp"
#include "kinkline/supm.hpp"
#include "upm_loop.hpp"

namespace kinkline {

namespace {

void check_config(const BaselineConfig& cfg) {
  if (!(cfg.eps > 0)) throw Error(ErrorCode::InvalidConfig, "eps must be positive");
  if (cfg.budget < 1) throw Error(ErrorCode::InvalidConfig, "budget must be at least 1");
}

struct Point {
  double x, f;
};

}  // namespace

SolverResult golden_section_minimize(const Objective& f, const Bracket3& b0, const BaselineConfig& cfg) {
  check_config(cfg);
  validate(b0);
  SolverResult r;
  Point a{b0.xl, b0.fl}, b{b0.xr, b0.fr}, best{b0.xm, b0.fm};
  r.trace.push_back(trace_row(0, b0));

  auto eval = [&](double x) {
    ++r.evaluations;
    return Point{x, f(x)};
  };
  Point c{}, d{};
  bool have_c = false, have_d = false;

  while (true) {
    if (b.x - a.x <= 2 * cfg.eps) {
      r.status = Status::Converged;
      break;
    }
    if (r.iterations >= cfg.budget) {
      r.status = Status::BudgetExhausted;
      break;
    }
    const double len = b.x - a.x;
    if (!have_c) c = eval(a.x + (1 - kGoldenRatio) * len);
    if (!have_d) d = eval(a.x + kGoldenRatio * len);
    for (const Point& p : {c, d}) {
      if (p.f < best.f) best = p;
    }
    if (best.x < d.x) {
      b = d;
      d = c;
      have_c = false;
      have_d = true;
    } else {
      a = c;
      c = d;
      have_c = true;
      have_d = false;
    }
    ++r.iterations;
    TraceEntry row = trace_row(r.iterations, {a.x, best.x, b.x, a.f, best.f, b.f});
    r.trace.push_back(row);
  }
  r.final_bracket = {a.x, best.x, b.x, a.f, best.f, b.f};
  return r;
}

SolverResult brent_minimize(const Objective& f, const Bracket3& b0, const BaselineConfig& cfg) {
  check_config(cfg);
  validate(b0);
  constexpr double cgold = 1 - kGoldenRatio;
  SolverResult r;
  r.trace.push_back(trace_row(0, b0));

  double a = b0.xl, b = b0.xr, fa = b0.fl, fb = b0.fr;
  // The bracket ends are already paid for, so they seed the parabola.
  double x = b0.xm, fx = b0.fm;
  double w = b0.fl <= b0.fr ? a : b, fw = b0.fl <= b0.fr ? fa : fb;
  double v = w == a ? b : a, fv = w == a ? fb : fa;
  double d = b - a, e = b - a;

  while (true) {
    if (b - a <= 2 * cfg.eps) {
      r.status = Status::Converged;
      break;
    }
    if (r.iterations >= cfg.budget) {
      r.status = Status::BudgetExhausted;
      break;
    }
    const double m = 0.5 * (a + b);
    const double tol1 = 0.5 * cfg.eps + 2 * kMachineEps * std::abs(x);
    const double tol2 = 2 * tol1;

    bool golden = true;
    if (std::abs(e) > tol1) {
      double rr = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * rr;
      q = 2 * (q - rr);
      if (q > 0) {
        p = -p;
      } else {
        q = -q;
      }
      rr = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * rr) && p > q * (a - x) && p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = x < m ? tol1 : -tol1;
        golden = false;
      }
    }
    if (golden) {
      e = x < m ? b - x : a - x;
      d = cgold * e;
    }
    double u = std::abs(d) >= tol1 ? x + d : x + (d > 0 ? tol1 : -tol1);
    if (!(u > a && u < b)) u = x + cgold * ((x < m ? b : a) - x);

    const double fu = f(u);
    ++r.evaluations;
    if (fu <= fx) {
      if (u < x) {
        b = x;
        fb = fx;
      } else {
        a = x;
        fa = fx;
      }
      v = w;
      fv = fw;
      w = x;
      fw = fx;
      x = u;
      fx = fu;
    } else {
      if (u < x) {
        a = u;
        fa = fu;
      } else {
        b = u;
        fb = fu;
      }
      if (fu <= fw || w == x) {
        v = w;
        fv = fw;
        w = u;
        fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
    ++r.iterations;
    TraceEntry row = trace_row(r.iterations, {a, x, b, fa, fx, fb});
    row.trial = u;
    r.trace.push_back(row);
  }
  r.final_bracket = {a, x, b, fa, fx, fb};
  return r;
}

namespace {

QuadModel five_point_model(Side side, const ExtendedBracket5& x) {
  const bool left = side == Side::Left;
  QuadModel m;
  m.side = side;
  m.x1 = left ? x.xl(1) : x.xr(1);
  m.x2 = left ? x.xl(2) : x.xr(2);
  const double f1 = left ? x.fl(1) : x.fr(1);
  const double f2 = left ? x.fl(2) : x.fr(2);
  m.c0 = f1;
  m.c1 = divided_diff1(f1, f2, m.x1, m.x2);
  m.c2adj = std::max(0.0, divided_diff2(f2, f1, x.fm(), m.x2, m.x1, x.xm()));
  return m;
}

}  // namespace

SolverResult mifflin_strodiot_minimize(const Objective& f, const ExtendedBracket5& x0, const BaselineConfig& cfg) {
  check_config(cfg);
  // Inner lengths seen at the start of each iteration, newest last.
  std::vector<double> seen;
  return detail::run_update_loop(
      f, x0, cfg.eps, 0.0, cfg.budget,
      [&seen](const ExtendedBracket5& x, double delta) {
        const double d = inner_length(x);
        double g;
        if (seen.size() >= 3 && d > 0.5 * seen[seen.size() - 3]) {
          const bool left_longer = x.xm() - x.xl(1) > x.xr(1) - x.xm();
          g = left_longer ? 0.5 * (x.xl(1) + x.xm()) : 0.5 * (x.xm() + x.xr(1));
          seen.clear();
        } else {
          g = model_argmin(five_point_model(Side::Left, x), five_point_model(Side::Right, x), x.xl(1), x.xr(1),
                           x.xm());
        }
        seen.push_back(d);
        return detail::Proposal{clamp_trial(g, x.xl(1), x.xm(), x.xr(1), delta),
                                std::numeric_limits<double>::quiet_NaN()};
      },
      [](Branch) {});
}

}  // namespace kinkline
