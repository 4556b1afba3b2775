#include "kinkline/solver.hpp"

#include <algorithm>
#include <cmath>

namespace kinkline {

const char* to_string(Status s) {
  switch (s) {
    case Status::Converged: return "Converged";
    case Status::BudgetExhausted: return "BudgetExhausted";
    case Status::Stalled: return "Stalled";
  }
  return "Unknown";
}

double default_delta(double eps, double xl1, double xr1) {
  return std::max(eps / 4, 64 * kMachineEps * (std::abs(xl1) + std::abs(xr1)));
}

}  // namespace kinkline
