#include "kinkline/supm.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "upm_loop.hpp"

namespace kinkline {

namespace {

// Coefficients of q(centre + u) = a u^2 + b u + c.
struct Monomial {
  double a, b, c;
};

Monomial shifted(const QuadModel& m, double centre) {
  const double a1 = m.x1 - centre;
  const double a2 = m.x2 - centre;
  return {m.c2adj, m.c1 - m.c2adj * (a1 + a2), m.c0 - m.c1 * a1 + m.c2adj * a1 * a2};
}

// Real roots of a u^2 + b u + c, via the cancellation-free form.
int real_roots(double a, double b, double c, double roots[2]) {
  if (a == 0) {
    if (b == 0) return 0;
    roots[0] = -c / b;
    return 1;
  }
  double disc = b * b - 4 * a * c;
  if (disc < 0) {
    if (-disc > 4 * kMachineEps * (b * b + std::abs(4 * a * c))) return 0;
    disc = 0;
  }
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  if (q == 0) {
    roots[0] = 0;
    return 1;
  }
  roots[0] = q / a;
  roots[1] = c / q;
  return 2;
}

}  // namespace

void check_config(const SupmConfig& cfg) {
  if (!(cfg.eps > 0)) throw Error(ErrorCode::InvalidConfig, "eps must be positive");
  if (!(cfg.delta >= 0 && (cfg.delta == 0 || cfg.delta < cfg.eps))) {
    throw Error(ErrorCode::InvalidConfig, "delta must satisfy 0 < delta < eps (or 0 for the default)");
  }
  if (cfg.budget < 1) throw Error(ErrorCode::InvalidConfig, "budget must be at least 1");
  if (!(cfg.alpha >= 0)) throw Error(ErrorCode::InvalidConfig, "alpha must be non-negative");
}

double model_argmin(const QuadModel& left, const QuadModel& right, double lo, double hi, double centre) {
  const auto phi = [&](double x) { return std::max(left(x), right(x)); };

  std::vector<double> cand{lo, hi};
  const Monomial l = shifted(left, centre);
  const Monomial r = shifted(right, centre);
  double roots[2];
  const int n = real_roots(r.a - l.a, r.b - l.b, r.c - l.c, roots);
  for (int i = 0; i < n; ++i) {
    const double x = centre + roots[i];
    if (x > lo && x < hi) cand.push_back(x);
  }
  for (const QuadModel* m : {&left, &right}) {
    if (m->c2adj > 0) {
      const double v = 0.5 * (m->x1 + m->x2) - m->c1 / (2 * m->c2adj);
      if (v > lo && v < hi) cand.push_back(v);
    }
  }
  std::sort(cand.begin(), cand.end());

  double best = std::numeric_limits<double>::infinity();
  for (double x : cand) best = std::min(best, phi(x));
  const double tol = 1e-14 * (std::abs(best) + 1e-300);
  std::vector<double> tied;
  for (double x : cand) {
    if (phi(x) <= best + tol) tied.push_back(x);
  }
  if (tied.size() > 1) {
    const double mid = 0.5 * (tied.front() + tied.back());
    if (phi(mid) <= best + tol) return mid;
  }
  return *std::min_element(tied.begin(), tied.end(), [&](double a, double b) {
    return std::abs(a - centre) < std::abs(b - centre);
  });
}

double clamp_trial(double x, double lo, double centre, double hi, double delta) {
  const double l0 = lo + delta, l1 = centre - delta;
  const double r0 = centre + delta, r1 = hi - delta;
  const bool left_ok = l0 <= l1;
  const bool right_ok = r0 <= r1;
  if (!left_ok && !right_ok) {
    throw Error(ErrorCode::BracketTooSmall, "bracket cannot hold a trial delta away from every point");
  }
  if (x == centre) return left_ok ? l1 : r0;
  const double pl = left_ok ? std::clamp(x, l0, l1) : std::numeric_limits<double>::quiet_NaN();
  const double pr = right_ok ? std::clamp(x, r0, r1) : std::numeric_limits<double>::quiet_NaN();
  if (!left_ok) return pr;
  if (!right_ok) return pl;
  return std::abs(pl - x) <= std::abs(pr - x) ? pl : pr;
}

double supm_raw_step(const ExtendedBracket7& b, double alpha) {
  const QuadModel ql = build_model(Side::Left, b, alpha);
  const QuadModel qr = build_model(Side::Right, b, alpha);
  return model_argmin(ql, qr, b.xl(1), b.xr(1), b.xm());
}

double supm_step(const ExtendedBracket7& b, double alpha, double delta) {
  return clamp_trial(supm_raw_step(b, alpha), b.xl(1), b.xm(), b.xr(1), delta);
}

Branch classify_branch(double trial, double ftrial, double xm, double fm) {
  if (trial == xm) throw Error(ErrorCode::TrialAtCenter, "trial coincides with the incumbent");
  if (trial < xm) return ftrial < fm ? Branch::LeftImproving : Branch::LeftWorse;
  return ftrial < fm ? Branch::RightImproving : Branch::RightWorse;
}

template <std::size_t N>
ExtendedBracket<N> apply_update(Branch branch, double trial, double ftrial, const ExtendedBracket<N>& b) {
  if (!(trial > b.xl(1) && trial < b.xr(1)) || trial == b.xm()) {
    throw Error(ErrorCode::InvariantBroken, "trial outside the open inner bracket");
  }
  if (is_left(branch) != (trial < b.xm())) {
    throw Error(ErrorCode::InvariantBroken, "branch side disagrees with trial position");
  }
  const auto x = insert_trial(b.x(), branch, trial);
  const auto f = insert_trial(b.fv(), branch, ftrial);
  ExtendedBracket<N> out;
  try {
    out = ExtendedBracket<N>::make(x, f);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvariantBroken, std::string("update produced an invalid bracket: ") + e.what());
  }
  if (!(inner_length(out) < inner_length(b))) {
    throw Error(ErrorCode::InvariantBroken, "update did not shrink the inner bracket");
  }
  return out;
}

template ExtendedBracket<5> apply_update<5>(Branch, double, double, const ExtendedBracket<5>&);
template ExtendedBracket<7> apply_update<7>(Branch, double, double, const ExtendedBracket<7>&);

SolverResult supm_minimize(const Objective& f, const ExtendedBracket7& x0, const SupmConfig& cfg) {
  check_config(cfg);
  return detail::run_update_loop(
      f, x0, cfg.eps, cfg.delta, cfg.budget,
      [&](const ExtendedBracket7& x, double delta) {
        return detail::Proposal{supm_step(x, cfg.alpha, delta), cfg.alpha};
      },
      [](Branch) {});
}

}  // namespace kinkline
