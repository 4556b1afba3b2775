#include <doctest.h>

#include <array>
#include <cmath>

#include "kinkline/eupm.hpp"
#include "kinkline/harness.hpp"
#include "kinkline/rng.hpp"
#include "oracles.hpp"

using namespace kinkline;

namespace {

ExtendedBracket5 abscissae(const std::array<double, 5>& x) { return ExtendedBracket5::unchecked(x, {}); }

ExtendedBracket5 random_gaps(Rng& rng) { return from_gaps(sample_unit_gaps(rng), 0); }

}  // namespace

TEST_CASE("closed-form step") {
  CHECK(eupm_step(abscissae({-2, -1, 0, 1, 2})) == 0);
  CHECK(eupm_step(abscissae({0, 1, 1.5, 3, 4})) == 2);
  CHECK(eupm_step(abscissae({-1, -0.5, 0, 0.5, 2})) == 0.125);
  CHECK(eupm_step(abscissae({-1, -0.5, 0.3, 0.5, 2})) == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("step matches the absolute-coordinate formula") {
  Rng rng(41);
  for (int i = 0; i < 1000; ++i) {
    std::array<double, 5> x{};
    double cur = rng.uniform(-50, 50);
    for (double& v : x) {
      v = cur;
      cur += rng.uniform(0.01, 3);
    }
    const double ref = oracle::extremal_step(x[0], x[1], x[3], x[4]);
    CHECK(std::abs(eupm_step(abscissae(x)) - ref) <= 1e-12 * (std::abs(x[0]) + std::abs(x[4])));
  }
}

TEST_CASE("side check") {
  CHECK(bracket_check(abscissae({-2, -1, 0, 1, 2})) == 0);
  CHECK(bracket_check(abscissae({0, 1, 1.5, 3, 4})) == 0.5);
  Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_gaps(rng);
    CHECK(bracket_check(reflect(x)) == doctest::Approx(-bracket_check(x)).epsilon(1e-12).scale(1));
  }
}

TEST_CASE("step is translation and scale equivariant") {
  Rng rng(47);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_gaps(rng);
    const double s = std::pow(10.0, rng.uniform(-3, 3)), t = rng.uniform(-100, 100);
    std::array<double, 5> y{};
    for (int k = 0; k < 5; ++k) y[k] = s * x.x()[k] + t;
    const double expect = s * eupm_step(x) + t;
    CHECK(std::abs(eupm_step(abscissae(y)) - expect) <= 1e-12 * (std::abs(t) + s));
  }
}

TEST_CASE("update sequences") {
  const auto s = UpdateSequence::parse("4314");
  CHECK(s.size() == 4);
  CHECK(s[0] == Branch::LeftWorse);
  CHECK(s[1] == Branch::RightWorse);
  CHECK(s.str() == "4314");
  CHECK(s.successor_ok());
  CHECK_FALSE(UpdateSequence::parse("12").successor_ok());
  CHECK_FALSE(UpdateSequence::parse("4213").successor_ok());
  CHECK(UpdateSequence::parse("1423").successor_ok());
  CHECK_THROWS_AS(UpdateSequence::parse("105"), Error);

  std::vector<std::string> names;
  for (const auto& q : minimal_set()) names.push_back(q.str());
  CHECK(names == std::vector<std::string>{"44", "111", "143", "422", "414", "434", "1411", "1141", "1423", "4322",
                                          "4314", "4114"});
}

TEST_CASE("feasibility of short sequences") {
  Rng rng(53);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_gaps(rng);
    const bool left = bracket_check(x) <= 0;
    CHECK(apply_sequence(x, UpdateSequence::parse("1")).feasible == left);
    CHECK(apply_sequence(x, UpdateSequence::parse("3")).feasible == !left);
    CHECK_FALSE(apply_sequence(x, UpdateSequence::parse("12")).feasible);
    CHECK_FALSE(contraction_ratio(x, UpdateSequence::parse("21")).has_value());
  }
}

TEST_CASE("oracle-free update follows the side check") {
  Branch taken{};
  const auto x = abscissae({0, 1, 1.5, 3, 4});
  const auto y = extremal_update(x, true, &taken);
  CHECK(taken == Branch::RightImproving);
  CHECK(y.x() == std::array<double, 5>{1, 1.5, 2, 3, 4});
  extremal_update(reflect(x), false, &taken);
  CHECK(taken == Branch::LeftWorse);
  extremal_update(abscissae({-2, -1, 0, 1, 2}), true, &taken);
  CHECK(taken == Branch::LeftImproving);
}

TEST_CASE("sequence ratios against closed forms") {
  Rng rng(59);
  const auto s44 = UpdateSequence::parse("44"), s422 = UpdateSequence::parse("422");
  const auto s111 = UpdateSequence::parse("111"), s143 = UpdateSequence::parse("143");
  const auto s434 = UpdateSequence::parse("434"), s4322 = UpdateSequence::parse("4322");
  for (int i = 0; i < 2000; ++i) {
    const auto x = random_gaps(rng);
    const GapVector p = to_gaps(x);
    const double d = inner_length(x);
    auto ratio = [&](const UpdateSequence& s) { return inner_length(apply_sequence(x, s).bracket) / d; };

    const double r44 = ratio(s44);
    CHECK(r44 == doctest::Approx(oracle::ratio_44(p.p1, p.p2, p.p3, p.p4)).epsilon(1e-10));
    CHECK(r44 < 0.5);
    CHECK(std::abs(r44 - ratio(s422)) <= 1e-12);

    const double r111 = ratio(s111);
    CHECK(r111 == doctest::Approx(oracle::ratio_111(p.p1, p.p2, p.p3)).epsilon(1e-10));
    CHECK(r111 < 0.5);

    CHECK(ratio(s143) == doctest::Approx(oracle::ratio_143(p.p1, p.p2, p.p3)).epsilon(1e-10));

    const double a = p.p2 + p.p3, b = p.p1 + p.p2 + p.p3, c = p.p2 + p.p3 + p.p4;
    const double r434 = ratio(s434);
    CHECK(r434 == doctest::Approx(oracle::ratio_434(a, b, c)).epsilon(1e-10));
    CHECK(std::abs(r434 - ratio(s4322)) <= 1e-12);
  }
}

TEST_CASE("eupm_minimize") {
  auto absf = [](double x) { return std::abs(x); };
  std::array<double, 5> x = {-1.3, -0.7, 0.1, 0.4, 2.2};
  std::array<double, 5> v{};
  for (int i = 0; i < 5; ++i) v[i] = absf(x[i]);
  const auto b = make_extended5(x, v);

  const SolverResult r = eupm_minimize(absf, b, {});
  CHECK(r.status == Status::Converged);
  CHECK(std::abs(r.final_bracket.xm) < 1e-7);

  std::vector<Branch> seq;
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    seq.push_back(static_cast<Branch>(r.trace[i].branch));
    CHECK(r.trace[i].d < r.trace[i - 1].d);
  }
  CHECK(UpdateSequence(seq).successor_ok());
  const double delta = default_delta(1e-8, -1, 1);
  for (std::size_t i = 0; i + 5 < r.trace.size(); ++i) {
    CHECK(r.trace[i + 5].d <= 0.5 * r.trace[i].d + 4 * delta);
  }

  const SolverResult done = eupm_minimize(absf, b, {2.0, 0, 500});
  CHECK(done.status == Status::Converged);
  CHECK(done.iterations == 0);
}
