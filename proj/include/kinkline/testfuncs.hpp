#pragma once

// The nineteen scaled benchmark objectives and a counting oracle.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kinkline/solver.hpp"

namespace kinkline {

enum class Category { SmoothUnimodal, NonsmoothUnimodal, SmoothMultimodal };

const char* to_string(Category c);

struct TestFunction {
  std::string id;  // SU1 .. SU7, NU1 .. NU5, SM1 .. SM7
  Category category;
  double lo, hi;
  double (*eval)(double);
  std::string formula;

  double operator()(double x) const { return eval(x); }
  /// "$f^{SU}_1$" style label.
  std::string latex_label() const;
};

/// All nineteen, in table order.
const std::vector<TestFunction>& all_functions();

/// Throws UnknownFunction.
const TestFunction& get_function(std::string_view id);

/// Functions of one suite: "su", "nu", "sm" or "all" (case-insensitive).
/// Throws UnknownFunction for anything else.
std::vector<const TestFunction*> suite(std::string_view name);

/// Counts distinct calls into the wrapped function and rejects abscissae
/// outside its domain. Not thread-safe; one per solver run.
class CountingOracle {
 public:
  explicit CountingOracle(const TestFunction& fn, bool memoize = false) : fn_(&fn), memoize_(memoize) {}

  /// Throws OutOfDomain.
  double operator()(double x);

  int count() const { return count_; }
  const TestFunction& function() const { return *fn_; }

 private:
  const TestFunction* fn_;
  bool memoize_;
  int count_ = 0;
  std::map<double, double> memo_;
};

inline double evaluate(CountingOracle& oracle, double x) { return oracle(x); }

}  // namespace kinkline
