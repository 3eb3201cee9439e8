#pragma once

#include <string>
#include <vector>

namespace kspin {

enum class Status { pass, fail, skipped };

// One row of a verification report.
struct CheckResult {
  std::string name;
  std::string ref;  // label of the identity being checked
  Status status = Status::fail;
  std::string detail;

  bool ok() const { return status != Status::fail; }
};

inline CheckResult make_check(std::string name, std::string ref, bool pass, std::string detail = {}) {
  return {std::move(name), std::move(ref), pass ? Status::pass : Status::fail, std::move(detail)};
}

inline bool all_ok(const std::vector<CheckResult>& rows) {
  for (const auto& r : rows)
    if (!r.ok()) return false;
  return true;
}

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "fail";
}

}  // namespace kspin
