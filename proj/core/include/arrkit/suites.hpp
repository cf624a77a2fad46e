#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace arrkit {

struct SuiteCheck {
  std::string id;
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
  std::string source;
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCheck> checks;
  bool pass() const;
  int failures() const;
};

/// props4, hesse, degenerations, identities.
const std::vector<std::string>& suite_names();

/// The fixture manifest compiled into the library.
const nlohmann::json& builtin_manifest();

/// Runs every fixture of the manifest whose "suite" matches. Errors raised by
/// a fixture become failed checks. Throws std::invalid_argument on an unknown
/// suite.
SuiteResult run_suite(const std::string& suite, const nlohmann::json& manifest = builtin_manifest());

nlohmann::json to_json(const SuiteResult& r);
std::string to_text(const SuiteResult& r);

}  // namespace arrkit
