#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgames/machine.hpp"

namespace sgames {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::size_t stages = 10;
  std::uint64_t budget = 100000;
  std::uint64_t seed = 12345;
  std::size_t samples = 10000;
  std::size_t exhaustive_limit = 4096;
  std::size_t depth = 64;
  Numbering numbering = Numbering::Test;
};

// Suites: lemmas-finite, lemmas-omega, variants, noncomp, all.
// Check order inside a suite is fixed, independent of execution order.
std::vector<CheckResult> verify_suite(const std::string& name, const VerifyOptions& opt);

const std::vector<std::string>& verify_suite_names();

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace sgames
