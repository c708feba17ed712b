#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uaw {

// Knobs for the randomized parts of the suites. Degrees are capped at
// min(criterion degree, max_degree), so small caps trim runtime without
// changing which checks run.
struct VerifyOptions {
  int max_degree = 5;
  std::uint64_t seed = 12345;
};

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<VerifyCheck> checks;

  bool ok() const;
  int passed() const;
  std::string summary() const;  // one line, e.g. "6/6 variants equal; central: yes"
};

// The eight suites in their fixed reporting order ("all" is not a suite).
const std::vector<std::string>& verify_suite_names();

// Throws std::invalid_argument on an unknown suite name. Every randomized
// check reseeds from VerifyOptions::seed, so reports are reproducible.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts = {});

// All suites, possibly concurrently; the returned order is always
// verify_suite_names() order, so merged output is deterministic.
std::vector<SuiteReport> run_all_suites(const VerifyOptions& opts = {});

}  // namespace uaw
