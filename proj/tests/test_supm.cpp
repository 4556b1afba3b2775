#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "kinkline/eupm.hpp"
#include "kinkline/rng.hpp"
#include "kinkline/supm.hpp"
#include "oracles.hpp"

using namespace kinkline;

namespace {

template <class F>
ExtendedBracket7 sampled(const std::array<double, 7>& x, F f) {
  std::array<double, 7> v{};
  for (int i = 0; i < 7; ++i) v[i] = f(x[i]);
  return ExtendedBracket7::make(x, v);
}

double vee(double x) { return std::max(-x, 2 * x); }

}  // namespace

TEST_CASE("affine pieces put the step on the kink") {
  const auto b = sampled({-3, -2, -1, 0.3, 1, 2, 3}, vee);
  CHECK(supm_raw_step(b, 0) == doctest::Approx(0).epsilon(1e-15));
  CHECK(std::abs(supm_step(b, 0, 1e-9)) < 1e-14);
}

TEST_CASE("a step landing on the centre moves delta to the left") {
  const auto b = sampled({-3, -2, -1, 0, 1, 2, 3}, vee);
  CHECK(supm_raw_step(b, 0) == 0);
  CHECK(supm_step(b, 0, 1e-6) == -1e-6);
}

TEST_CASE("kinked sine configuration steps near 0.005") {
  auto f = [](double x) {
    const double t = 0.5 * std::numbers::pi * x;
    return std::max(-std::sin(t), 1 - std::cos(t));
  };
  const auto b = sampled({-1, -0.9, -0.75, 0, 0.6, 0.8, 0.95}, f);
  const double g = supm_step(b, 0, 1e-9);
  CHECK(std::abs(g - 0.005) < 1e-3);
  CHECK(g == doctest::Approx(0.0050399).epsilon(1e-4));
}

TEST_CASE("flat stretch resolves to its midpoint") {
  QuadModel flat;
  flat.c0 = 1;
  flat.x1 = -1;
  flat.x2 = -2;
  QuadModel same = flat;
  same.side = Side::Right;
  CHECK(model_argmin(flat, same, -1, 3, 0.5) == 1);
}

TEST_CASE("argmin agrees with a dense grid") {
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    QuadModel l, r;
    l.x1 = -rng.uniform(0.1, 1);
    l.x2 = l.x1 - rng.uniform(0.1, 1);
    l.c0 = rng.uniform(0, 2);
    l.c1 = -rng.uniform(0.1, 3);
    l.c2adj = rng.uniform(-2, 2);
    r.side = Side::Right;
    r.x1 = rng.uniform(0.1, 1);
    r.x2 = r.x1 + rng.uniform(0.1, 1);
    r.c0 = rng.uniform(0, 2);
    r.c1 = rng.uniform(0.1, 3);
    r.c2adj = rng.uniform(-2, 2);
    auto phi = [&](double x) { return std::max(l(x), r(x)); };
    const double g = model_argmin(l, r, l.x1, r.x1, 0);
    const double grid = oracle::grid_argmin(phi, l.x1, r.x1, 20000);
    CHECK(phi(g) <= phi(grid) + 1e-12);
    CHECK(g >= l.x1);
    CHECK(g <= r.x1);
  }
}

TEST_CASE("clamp_trial") {
  CHECK(clamp_trial(0.5, 0, 1, 2, 0.1) == 0.5);
  CHECK(clamp_trial(0.01, 0, 1, 2, 0.1) == 0.1);
  CHECK(clamp_trial(1.95, 0, 1, 2, 0.1) == 1.9);
  CHECK(clamp_trial(0.97, 0, 1, 2, 0.1) == 0.9);
  CHECK(clamp_trial(1.02, 0, 1, 2, 0.1) == 1.1);
  CHECK(clamp_trial(1, 0, 1, 2, 0.1) == 0.9);
  CHECK(clamp_trial(1, 0, 1, 1.1, 0.1) == 0.9);
  CHECK(clamp_trial(0.12, 0, 0.15, 2, 0.1) == 0.25);
  CHECK_THROWS_AS(clamp_trial(0.5, 0, 0.1, 0.15, 0.1), Error);
}

TEST_CASE("branch classification") {
  CHECK(classify_branch(-0.5, -1, 0, 0) == Branch::LeftImproving);
  CHECK(classify_branch(0.5, -1, 0, 0) == Branch::RightImproving);
  CHECK(classify_branch(0.5, 0, 0, 0) == Branch::RightWorse);
  CHECK(classify_branch(-0.5, 0, 0, 0) == Branch::LeftWorse);
  try {
    classify_branch(0, 1, 0, 0);
    FAIL("expected TrialAtCenter");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TrialAtCenter);
  }
}

TEST_CASE("four-way update on seven points") {
  const auto b = sampled({1, 2, 3, 4, 5, 6, 7}, [](double x) { return std::abs(x - 4); });
  const auto u1 = apply_update(Branch::LeftImproving, 3.5, -1, b);
  CHECK(u1.x() == std::array<double, 7>{1, 2, 3, 3.5, 4, 5, 6});
  CHECK(u1.fv() == std::array<double, 7>{3, 2, 1, -1, 0, 1, 2});
  CHECK(apply_update(Branch::RightWorse, 4.5, 0.5, b).x() == std::array<double, 7>{1, 2, 3, 4, 4.5, 5, 6});
  CHECK(apply_update(Branch::RightImproving, 4.5, -1, b).x() == std::array<double, 7>{2, 3, 4, 4.5, 5, 6, 7});
  CHECK(apply_update(Branch::LeftWorse, 3.5, 0.5, b).x() == std::array<double, 7>{2, 3, 3.5, 4, 5, 6, 7});

  auto code = [&](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidConfig;
  };
  CHECK(code([&] { apply_update(Branch::RightWorse, 5.5, 1, b); }) == ErrorCode::InvariantBroken);
  CHECK(code([&] { apply_update(Branch::LeftWorse, 4.5, 1, b); }) == ErrorCode::InvariantBroken);
  CHECK(code([&] { apply_update(Branch::LeftImproving, 3.5, 1, b); }) == ErrorCode::InvariantBroken);
}

TEST_CASE("interior selection on a max of quadratics") {
  Rng rng(29);
  for (int i = 0; i < 500; ++i) {
    const double a = rng.uniform(0.2, 2), c = rng.uniform(0.2, 2), k = rng.uniform(-0.5, 0.5);
    auto fl = [&](double x) { return a * (x - k) * (x - k) - (x - k); };
    auto fr = [&](double x) { return c * (x - k) * (x - k) + (x - k); };
    auto f = [&](double x) { return std::max(fl(x), fr(x)); };
    std::array<double, 7> x{};
    x[3] = k + rng.uniform(-0.05, 0.05);
    for (int j = 1; j <= 3; ++j) {
      x[3 - j] = x[4 - j] - rng.uniform(0.1, 0.5);
      x[3 + j] = x[2 + j] + rng.uniform(0.1, 0.5);
    }
    bool on_pieces = true;
    for (int j = 0; j < 3; ++j) on_pieces = on_pieces && fl(x[j]) >= fr(x[j]) && fr(x[6 - j]) >= fl(x[6 - j]);
    if (!on_pieces) continue;
    std::array<double, 7> v{};
    for (int j = 0; j < 7; ++j) v[j] = f(x[j]);
    ExtendedBracket7 b;
    try {
      b = ExtendedBracket7::make(x, v);
    } catch (const Error&) {
      continue;
    }
    const double g = supm_raw_step(b, 0.01);
    CHECK(g > b.xl(1));
    CHECK(g < b.xr(1));
  }
}

TEST_CASE("very large alpha approaches the extremal step") {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    std::array<double, 7> x{};
    double cur = rng.uniform(-1, 0);
    for (double& v : x) {
      v = cur;
      cur += rng.uniform(0.05, 0.4);
    }
    const double m = x[3];
    std::array<double, 7> v{};
    for (int j = 0; j < 7; ++j) v[j] = std::abs(x[j] - m) * rng.uniform(0.5, 1.5);
    const auto b = ExtendedBracket7::make(x, v);
    const double ge = eupm_step(inner_five(b));
    const double d = inner_length(b);
    const double e8 = std::abs(supm_raw_step(b, 1e8) - ge) / d;
    const double e10 = std::abs(supm_raw_step(b, 1e10) - ge) / d;
    // The gap decays like 1 / alpha.
    CHECK(e8 <= 1e-6);
    CHECK(e10 <= 1e-8);
    CHECK(e10 <= 0.02 * e8 + 1e-13);
  }
}

TEST_CASE("supm_minimize on a parabola") {
  auto sq = [](double x) { return x * x; };
  const auto b = sampled({-3, -2, -1, 0.5, 1, 2, 3}, sq);
  const SolverResult r = supm_minimize(sq, b, {1.0, 1e-8, 0, 500});
  CHECK(r.status == Status::Converged);
  CHECK(r.final_bracket.length() <= 2e-8);
  CHECK(r.evaluations == r.iterations);
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    CHECK(r.trace[i].d < r.trace[i - 1].d);
    CHECK(r.trace[i].fm <= r.trace[i - 1].fm);
  }
}

TEST_CASE("large eps converges without iterating") {
  auto sq = [](double x) { return x * x; };
  const auto b = sampled({-3, -2, -1, 0.5, 1, 2, 3}, sq);
  const SolverResult r = supm_minimize(sq, b, {1.0, 1.5, 0, 500});
  CHECK(r.status == Status::Converged);
  CHECK(r.iterations == 0);
  CHECK(r.evaluations == 0);
}

TEST_CASE("configuration checks") {
  CHECK_THROWS_AS(check_config({1, 0, 0, 10}), Error);
  CHECK_THROWS_AS(check_config({1, 1e-8, 1e-7, 10}), Error);
  CHECK_THROWS_AS(check_config({1, 1e-8, 0, 0}), Error);
  CHECK_THROWS_AS(check_config({-1, 1e-8, 0, 10}), Error);
  CHECK_NOTHROW(check_config({0, 1e-8, 1e-9, 10}));
}
