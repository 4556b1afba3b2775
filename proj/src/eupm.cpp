#include "kinkline/eupm.hpp"

#include "upm_loop.hpp"

namespace kinkline {

double eupm_step(const ExtendedBracket5& b) {
  const double s = b.xm();
  const double l1 = b.xl(1) - s, l2 = b.xl(2) - s;
  const double r1 = b.xr(1) - s, r2 = b.xr(2) - s;
  return s + (r1 * r2 - l1 * l2) / (r1 + r2 - l1 - l2);
}

double bracket_check(const ExtendedBracket5& b) { return eupm_step(b) - b.xm(); }

SolverResult eupm_minimize(const Objective& f, const ExtendedBracket5& x0, const EupmConfig& cfg) {
  if (!(cfg.eps > 0)) throw Error(ErrorCode::InvalidConfig, "eps must be positive");
  if (cfg.budget < 1) throw Error(ErrorCode::InvalidConfig, "budget must be at least 1");
  return detail::run_update_loop(
      f, x0, cfg.eps, cfg.delta, cfg.budget,
      [](const ExtendedBracket5& x, double delta) {
        const double t = clamp_trial(eupm_step(x), x.xl(1), x.xm(), x.xr(1), delta);
        return detail::Proposal{t, std::numeric_limits<double>::quiet_NaN()};
      },
      [](Branch) {});
}

UpdateSequence UpdateSequence::parse(std::string_view digits) {
  std::vector<Branch> steps;
  steps.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '4') {
      throw Error(ErrorCode::InvalidConfig, std::string("update index must be 1-4, got '") + c + "'");
    }
    steps.push_back(static_cast<Branch>(c - '0'));
  }
  return UpdateSequence(std::move(steps));
}

std::string UpdateSequence::str() const {
  std::string s;
  for (Branch b : steps_) s.push_back(static_cast<char>('0' + static_cast<int>(b)));
  return s;
}

bool UpdateSequence::successor_ok() const {
  for (std::size_t i = 1; i < steps_.size(); ++i) {
    const Branch prev = steps_[i - 1], next = steps_[i];
    if (prev == Branch::LeftImproving && next != Branch::LeftImproving && next != Branch::LeftWorse) {
      return false;
    }
    if (prev == Branch::RightImproving && next != Branch::RightImproving && next != Branch::RightWorse) {
      return false;
    }
  }
  return true;
}

namespace {

ExtendedBracket5 step_with(const ExtendedBracket5& x, Branch br) {
  const double t = eupm_step(x);
  const double ft = is_improving(br) ? x.fm() - 1 : x.fm() + 1;
  return ExtendedBracket5::unchecked(insert_trial(x.x(), br, t), insert_trial(x.fv(), br, ft));
}

}  // namespace

SequenceOutcome apply_sequence(const ExtendedBracket5& x, const UpdateSequence& seq) {
  SequenceOutcome out{x, seq.successor_ok()};
  for (Branch br : seq.steps()) {
    const bool left_family = bracket_check(out.bracket) <= 0;
    if (is_left(br) != left_family) out.feasible = false;
    out.bracket = step_with(out.bracket, br);
  }
  return out;
}

ExtendedBracket5 extremal_update(const ExtendedBracket5& x, bool improving, Branch* taken) {
  const bool left = bracket_check(x) <= 0;
  const Branch br = left ? (improving ? Branch::LeftImproving : Branch::LeftWorse)
                         : (improving ? Branch::RightImproving : Branch::RightWorse);
  if (taken) *taken = br;
  return step_with(x, br);
}

std::optional<double> contraction_ratio(const ExtendedBracket5& x, const UpdateSequence& seq) {
  const SequenceOutcome o = apply_sequence(x, seq);
  if (!o.feasible) return std::nullopt;
  return inner_length(o.bracket) / inner_length(x);
}

const std::vector<UpdateSequence>& minimal_set() {
  static const std::vector<UpdateSequence> set = [] {
    std::vector<UpdateSequence> v;
    for (const char* s : {"44", "111", "143", "422", "414", "434", "1411", "1141", "1423", "4322", "4314", "4114"}) {
      v.push_back(UpdateSequence::parse(s));
    }
    return v;
  }();
  return set;
}

}  // namespace kinkline
