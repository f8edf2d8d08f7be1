#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rw::props {

/// Outcome of one named invariant suite.
struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few messages

  bool ok() const { return failed == 0; }
  std::size_t total() const { return passed + failed; }
};

struct Options {
  std::uint64_t seed = 12345;
};

/// Names of the fine-grained suites, in canonical order.
std::vector<std::string> suite_names();

/// Runs one suite by name (fine-grained name or a module aggregate:
/// words, index, conslen, zimin, colorings, ramsey, verifier).
SuiteResult run_suite(const std::string& name, const Options& opts = {});

std::vector<SuiteResult> run_all(const Options& opts = {});

}  // namespace rw::props
