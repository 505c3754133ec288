#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace sjd {

struct VerifyOptions {
  int genus = 3;
  bool deep = false;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  int exit_code = 1;  // 0 pass, 1 mismatch, 2 resource
  nlohmann::ordered_json details;
};

std::vector<std::string> verify_check_names();
CheckResult run_check(const std::string& name, const VerifyOptions& opts);
std::vector<CheckResult> run_all_checks(const VerifyOptions& opts);

}  // namespace sjd
