#pragma once

#include <string>
#include <vector>

#include "markov/kernel.hpp"

namespace markov {

struct GoldenCheck {
  std::string group;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Directory of the checked-in example kernels.
std::string default_fixture_dir();

/// True when the splittings agree after renaming the elements of T.
bool same_splitting_up_to_relabeling(const Kernel& iota_a, const Kernel& pi_a,
                                     const Kernel& iota_b, const Kernel& pi_b);

/// Classification, splitting and non-splitting checks on the worked
/// examples stored in `dir`. Never throws for fixture problems: a missing
/// or malformed file becomes a failed check.
std::vector<GoldenCheck> run_golden_suite(const std::string& dir);

}  // namespace markov
