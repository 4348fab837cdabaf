#pragma once

#include <string>
#include <vector>

namespace expcycles {

/// One runtime comparison of a pipeline quantity against the bound the
/// construction promises. slack >= 0 iff the check holds.
struct StageCheck {
  std::string stage;
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool at_least = true;  // value >= bound, otherwise value <= bound

  double slack() const { return at_least ? value - bound : bound - value; }
  bool holds() const { return slack() >= -1e-9; }
};

class CheckLog {
 public:
  const StageCheck& at_least(std::string stage, std::string name, double value, double bound) {
    checks_.push_back({std::move(stage), std::move(name), value, bound, true});
    return checks_.back();
  }
  const StageCheck& at_most(std::string stage, std::string name, double value, double bound) {
    checks_.push_back({std::move(stage), std::move(name), value, bound, false});
    return checks_.back();
  }
  bool all_hold() const {
    for (const auto& c : checks_) {
      if (!c.holds()) return false;
    }
    return true;
  }
  const std::vector<StageCheck>& checks() const noexcept { return checks_; }

 private:
  std::vector<StageCheck> checks_;
};

}  // namespace expcycles
