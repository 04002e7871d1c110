#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lambdabuild {

struct SuiteOptions {
  std::size_t n = 0;        // 0 picks the suite's default dimensions
  std::uint64_t seed = 1;
  std::size_t samples = 0;  // 0 picks the suite's default count
  std::size_t first = 0;    // index of the first sample; samples are seeded independently
  std::size_t budget = 20000;
  std::size_t probes = 10;
};

struct LawCounter {
  std::string law;
  std::size_t checked = 0;
  std::size_t violated = 0;
};

struct SuiteFailure {
  std::size_t sample = 0;
  std::string law;
  std::string detail;
  std::string repro;
};

struct SuiteReport {
  std::string suite;
  std::string statement;  // the property being exercised
  SuiteOptions options;
  std::size_t samples = 0;
  std::vector<LawCounter> laws;
  std::vector<SuiteFailure> failures;
  std::vector<std::string> notes;  // logged events that are not failures
  std::vector<std::pair<std::string, std::string>> stats;
  bool passed = true;

  // Records one check of `law`; a false `ok` adds a failure with `detail`.
  void check(const std::string& law, bool ok, std::size_t sample, const std::string& detail = {});
  const LawCounter* find(const std::string& law) const;
  std::string stat(const std::string& key) const;
  void set_stat(const std::string& key, std::string value);
};

std::vector<std::string> suite_names();
bool has_suite(const std::string& name);
// Throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

std::string format_report_text(const SuiteReport& r);
std::string format_report_json(const SuiteReport& r);

// Per-sample seed: sample i of a run with seed s is reproducible alone.
std::uint64_t sample_seed(std::uint64_t seed, std::size_t index);

}  // namespace lambdabuild
