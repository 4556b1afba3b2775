#include "kinkline/testfuncs.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

namespace kinkline {

namespace {

using std::numbers::pi;

double su1(double x) { return -std::exp(-0.5 * x * x) / std::sqrt(std::numbers::e); }
double su2(double x) { return x * x * x * x / 24.0; }
double su3(double x) { return (-std::sin(2 * x - 0.5 * pi) - 3 * std::cos(x) - 0.5 * x) / 11.0; }
double su4(double x) {
  const double w = 5 * pi * x;
  return (0.5 * x * x - std::cos(w) / (25 * pi * pi) - x * std::sin(w) / (5 * pi)) / 2500.0;
}
double su5(double x) { return -(std::cbrt(x * x) + std::cbrt(1 - x * x)) / 250.0; }
double su6(double x) { return (std::exp(x) + 1 / std::sqrt(x)) / 6000.0; }
double su7(double x) { return -(16 * x * x - 24 * x + 5) * std::exp(-x) / 13.0; }

double nu1(double x) { return -60000.0 * std::exp(-std::abs(x) / 50.0); }
// log is undefined for x <= 0, where the reciprocal branch dominates anyway.
double nu2(double x) {
  const double r = 1 / (x + 3);
  return (x > 0 ? std::max(r, std::log(x)) : r) / 6.0;
}
double nu3(double x) { return std::max(1 / (x + 3), 1 / ((x - 3) * (x - 3))) / 24.0; }
double nu4(double x) { return std::max(1 / (x + 3), std::exp(x)) / 160.0; }
double nu5(double x) { return std::max(std::exp(-x), std::exp(x)) / 150.0; }

double sm1(double x) { return x == 0 ? 0.0 : std::pow(x, 6) / 300.0 * (2 + std::sin(1 / x)); }
double sm2(double x) { return -std::pow(std::sin(5 * pi * x), 6) / 80000.0; }
double sm3(double x) { return -std::pow(std::sin(5 * pi * (std::pow(x, 0.75) - 0.05)), 6) / 250000.0; }
double sm4(double x) {
  const double s = std::sin(16.0 / 15.0 * x - 1);
  return (s + s * s) / 5.0;
}
double sm5(double x) { return x * x / 4000.0 - std::cos(x) + 1; }
double sm6(double x) {
  const double a = std::log(x - 2), b = std::log(10 - x);
  return (a * a + b * b - std::pow(x, 0.2)) / 71.0;
}
double sm7(double x) { return (std::sin(x) + std::sin(10 * x / 3) + std::log(x) + 0.84 * x) / 40.0; }

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

const char* to_string(Category c) {
  switch (c) {
    case Category::SmoothUnimodal: return "smooth-unimodal";
    case Category::NonsmoothUnimodal: return "nonsmooth-unimodal";
    case Category::SmoothMultimodal: return "smooth-multimodal";
  }
  return "?";
}

std::string TestFunction::latex_label() const {
  return "$f^{" + id.substr(0, 2) + "}_" + id.substr(2) + "$";
}

const std::vector<TestFunction>& all_functions() {
  using C = Category;
  static const std::vector<TestFunction> fns = {
      {"SU1", C::SmoothUnimodal, -1, 1, su1, "-exp(-x^2/2)/sqrt(e)"},
      {"SU2", C::SmoothUnimodal, -1, 1, su2, "x^4/24"},
      {"SU3", C::SmoothUnimodal, -2.5, 3, su3, "(-sin(2x - pi/2) - 3cos(x) - x/2)/11"},
      {"SU4", C::SmoothUnimodal, -10, 10, su4, "(x^2/2 - cos(5 pi x)/(25 pi^2) - x sin(5 pi x)/(5 pi))/2500"},
      {"SU5", C::SmoothUnimodal, 0.1, 0.9, su5, "-(x^(2/3) + (1 - x^2)^(1/3))/250"},
      {"SU6", C::SmoothUnimodal, 0.1, 3, su6, "(exp(x) + 1/sqrt(x))/6000"},
      {"SU7", C::SmoothUnimodal, 1.3, 3.9, su7, "-(16x^2 - 24x + 5) exp(-x)/13"},
      {"NU1", C::NonsmoothUnimodal, -32, 32, nu1, "-60000 exp(-|x|/50)"},
      {"NU2", C::NonsmoothUnimodal, -2, 10, nu2, "max(1/(x+3), log(x))/6"},
      {"NU3", C::NonsmoothUnimodal, -2, 2, nu3, "max(1/(x+3), 1/(x-3)^2)/24"},
      {"NU4", C::NonsmoothUnimodal, -2, 5, nu4, "max(1/(x+3), exp(x))/160"},
      {"NU5", C::NonsmoothUnimodal, -5, 5, nu5, "max(exp(-x), exp(x))/150"},
      {"SM1", C::SmoothMultimodal, -1, 1, sm1, "x^6 (2 + sin(1/x))/300"},
      {"SM2", C::SmoothMultimodal, -1, 1, sm2, "-sin(5 pi x)^6/80000"},
      {"SM3", C::SmoothMultimodal, 0.01, 1, sm3, "-sin(5 pi (x^(3/4) - 1/20))^6/250000"},
      {"SM4", C::SmoothMultimodal, -1, 1, sm4, "(sin(16x/15 - 1) + sin(16x/15 - 1)^2)/5"},
      {"SM5", C::SmoothMultimodal, -100, 100, sm5, "x^2/4000 - cos(x) + 1"},
      {"SM6", C::SmoothMultimodal, 2.5, 9.5, sm6, "(log(x-2)^2 + log(10-x)^2 - x^(1/5))/71"},
      {"SM7", C::SmoothMultimodal, 0.5, 10, sm7, "(sin(x) + sin(10x/3) + log(x) + 21x/25)/40"},
  };
  return fns;
}

const TestFunction& get_function(std::string_view id) {
  for (const TestFunction& f : all_functions()) {
    if (lower(f.id) == lower(id)) return f;
  }
  throw Error(ErrorCode::UnknownFunction, "no test function named '" + std::string(id) + "'");
}

std::vector<const TestFunction*> suite(std::string_view name) {
  const std::string n = lower(name);
  std::vector<const TestFunction*> out;
  for (const TestFunction& f : all_functions()) {
    if (n == "all" || lower(f.id.substr(0, 2)) == n) out.push_back(&f);
  }
  if (out.empty()) throw Error(ErrorCode::UnknownFunction, "no suite named '" + std::string(name) + "'");
  return out;
}

double CountingOracle::operator()(double x) {
  if (!(x >= fn_->lo && x <= fn_->hi)) {
    throw Error(ErrorCode::OutOfDomain, fn_->id + " evaluated outside its domain at " + std::to_string(x));
  }
  if (memoize_) {
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
  }
  ++count_;
  const double v = fn_->eval(x);
  if (memoize_) memo_.emplace(x, v);
  return v;
}

}  // namespace kinkline
