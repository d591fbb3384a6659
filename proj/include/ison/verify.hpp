#ifndef ISON_VERIFY_HPP_
#define ISON_VERIFY_HPP_

#include <string>
#include <vector>

#include "ison/equations.hpp"

namespace ison::verify {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  long long checks = 0;   // individual assertions evaluated
  std::string detail;     // first failure, empty when passed
};

struct Options {
  EnumBounds bounds{3, 4};   // the default desk-scale window
  int max_i = 6;             // offset/exponent range for commutation rules
  int samples = 100000;      // sampled associativity triples
  unsigned seed = 0x150eed;  // sampling is deterministic
};

// ids accepted by run_check; run_all executes the acceptance set in order
std::vector<std::string> check_ids();
CheckResult run_check(const std::string& id, const Options& opt = {});
std::vector<CheckResult> run_all(const Options& opt = {});

}  // namespace ison::verify

#endif  // ISON_VERIFY_HPP_
