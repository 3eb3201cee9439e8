#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kspin/check.hpp"
#include "kspin/exact_linalg.hpp"

namespace kspin {

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  long elapsed_ms = 0;

  bool ok() const { return all_ok(checks); }
};

struct SuiteOptions {
  long n = 3;
  std::size_t samples = 50;
  std::uint64_t seed = 0;
  std::optional<IntVector> h;  // 6 or 8 coordinates
};

// Suites whose rows are assembled here from the module APIs.
std::vector<CheckResult> clifford_suite(std::uint64_t seed);
std::vector<CheckResult> triality_suite();
std::vector<CheckResult> fm_suite(std::uint64_t seed);

const std::vector<std::string>& suite_names();  // excluding "all"
// Throws std::invalid_argument for an unknown suite or bad options.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);
// "all" expands to every suite, run concurrently and merged in suite_names() order.
std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& opt);

// Comma- or space-separated integers.
IntVector parse_coeffs(const std::string& s);

// Elapsed times appear only when with_timing is set, so the default output is deterministic.
nlohmann::json report_json(const std::vector<SuiteReport>& reports, bool with_timing = false);
std::string render_json(const std::vector<SuiteReport>& reports, bool with_timing = false);
std::string render_text(const std::vector<SuiteReport>& reports, bool with_timing = false);
bool all_ok(const std::vector<SuiteReport>& reports);

}  // namespace kspin
