#include "kinkline/dupm.hpp"

#include <algorithm>
#include <cmath>

#include "kinkline/eupm.hpp"
#include "kinkline/supm.hpp"
#include "upm_loop.hpp"

namespace kinkline {

namespace {

void check_config(const DupmConfig& cfg) {
  if (!(cfg.eps > 0)) throw Error(ErrorCode::InvalidConfig, "eps must be positive");
  if (!(cfg.delta >= 0 && (cfg.delta == 0 || cfg.delta < cfg.eps))) {
    throw Error(ErrorCode::InvalidConfig, "delta must satisfy 0 < delta < eps (or 0 for the default)");
  }
  if (cfg.budget < 1) throw Error(ErrorCode::InvalidConfig, "budget must be at least 1");
  if (!(cfg.alpha0 >= 0)) throw Error(ErrorCode::InvalidConfig, "alpha0 must be non-negative");
  if (cfg.fallback_after < 1) throw Error(ErrorCode::InvalidConfig, "fallback_after must be at least 1");
  if (!(cfg.chi_tol_rel > 0)) throw Error(ErrorCode::InvalidConfig, "chi_tol_rel must be positive");
}

double side_curvature(const ExtendedBracket7& x, int k) {
  const bool left = k == 0;
  return left ? divided_diff2(x.fl(1), x.fl(2), x.fl(3), x.xl(1), x.xl(2), x.xl(3))
              : divided_diff2(x.fr(1), x.fr(2), x.fr(3), x.xr(1), x.xr(2), x.xr(3));
}

}  // namespace

DupmState make_dupm_state(const ExtendedBracket7& x, const DupmConfig& cfg) {
  DupmState s{x, cfg.alpha0, {}};
  for (int i = 0; i < cfg.fallback_after; ++i) s.history.push_back(i % 2 == 0 ? Side::Left : Side::Right);
  return s;
}

double alpha_floor(const ExtendedBracket7& x) {
  const double near_l = divided_diff2(x.fm(), x.fl(1), x.fl(2), x.xm(), x.xl(1), x.xl(2));
  const double near_r = divided_diff2(x.fm(), x.fr(1), x.fr(2), x.xm(), x.xr(1), x.xr(2));
  return std::max(side_curvature(x, 0) - near_l, side_curvature(x, 1) - near_r) / scaling_h(x);
}

double alpha_plus(const ExtendedBracket7& x) {
  return std::max(side_curvature(x, 0), side_curvature(x, 1)) / scaling_h(x);
}

bool intersection_condition(const ExtendedBracket7& x, double alpha) {
  const QuadModel ql = build_model(Side::Left, x, alpha);
  const QuadModel qr = build_model(Side::Right, x, alpha);
  const double g = model_argmin(ql, qr, x.xl(1), x.xr(1), x.xm());
  const double a = ql(g), b = qr(g);
  return std::abs(a - b) <= 1e-10 * (std::abs(a) + std::abs(b) + std::abs(x.fm()));
}

double chi(const ExtendedBracket7& x, double alpha_lo, double tol) {
  if (intersection_condition(x, alpha_lo)) return alpha_lo;
  double hi = alpha_plus(x);
  if (!(hi > alpha_lo) || !intersection_condition(x, hi)) {
    throw Error(ErrorCode::ConditionFalseAtUpper, "intersection condition fails at alpha_plus");
  }
  double lo = alpha_lo;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (intersection_condition(x, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double escalate_alpha(const ExtendedBracket7& x, double alpha, const DupmConfig& cfg) {
  double a = std::max(alpha, alpha_floor(x));
  const double ap = alpha_plus(x);
  try {
    a = std::max(a, chi(x, a, cfg.chi_tol_rel * std::max(1.0, ap)));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ConditionFalseAtUpper) throw;
    a = std::max(a, ap + 1);
  }
  return a;
}

bool fallback_due(const DupmState& s) {
  return std::all_of(s.history.begin(), s.history.end(), [&](Side u) { return u == s.history.front(); });
}

double dupm_step(const DupmState& s, double delta) {
  if (fallback_due(s)) {
    return clamp_trial(eupm_step(inner_five(s.x)), s.x.xl(1), s.x.xm(), s.x.xr(1), delta);
  }
  return supm_step(s.x, s.alpha, delta);
}

Side recorded_side(Branch b) {
  return b == Branch::LeftImproving || b == Branch::RightWorse ? Side::Right : Side::Left;
}

DupmState dupm_update(double trial, double ftrial, const DupmState& s) {
  const Branch br = classify_branch(trial, ftrial, s.x);
  DupmState out{apply_update(br, trial, ftrial, s.x), s.alpha, s.history};
  if (!out.history.empty()) {
    out.history.pop_back();
    out.history.insert(out.history.begin(), recorded_side(br));
  }
  return out;
}

SolverResult dupm_minimize(const Objective& f, const ExtendedBracket7& x0, const DupmConfig& cfg) {
  check_config(cfg);
  DupmState s = make_dupm_state(x0, cfg);
  return detail::run_update_loop(
      f, x0, cfg.eps, cfg.delta, cfg.budget,
      [&](const ExtendedBracket7& x, double delta) {
        s.x = x;
        s.alpha = escalate_alpha(x, s.alpha, cfg);
        return detail::Proposal{dupm_step(s, delta), s.alpha};
      },
      [&](Branch br) {
        s.history.pop_back();
        s.history.insert(s.history.begin(), recorded_side(br));
      });
}

}  // namespace kinkline
