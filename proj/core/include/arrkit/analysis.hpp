#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arrkit/alexander.hpp"
#include "arrkit/arrangement.hpp"
#include "arrkit/singular.hpp"
#include "arrkit/syzfree.hpp"

namespace arrkit {

inline constexpr int kReportSchema = 1;

enum ExitCode { kExitOk = 0, kExitParse = 1, kExitUncertified = 2, kExitInfeasible = 3 };

struct AnalyzeOptions {
  SingularOptions singular;
  TjurinaMethod tau_method = TjurinaMethod::local_sum;
  TjurinaOptions tjurina;
  std::optional<std::string> delta;
  std::vector<ProjPoint> extra_points;
  bool timing = false;
};

struct AnalysisReport {
  std::string name;
  int field_order = 3;
  int d = 0;
  int r = 0;
  std::vector<std::string> labels;
  bool multiarrangement = false;

  SingularLocusReport locus;
  std::optional<int> tau;
  std::string tau_method;
  bool tau_proven = false;
  std::optional<int> mdr;
  std::optional<FreenessVerdict> freeness;
  std::optional<int> chi;

  std::optional<PencilStructure> pencil;
  std::string pencil_note;
  AlexanderBounds bounds;

  std::optional<std::string> candidate_text;
  std::optional<RootMultiset> candidate;
  std::optional<CandidateVerdict> verdict;
  std::vector<int> conjecture_orders;

  std::vector<std::string> warnings;
  std::optional<double> seconds;

  int exit_code() const;
};

/// build -> singular locus -> global invariants -> freeness -> bounds ->
/// candidate check. Throws DegreeGuardExceeded for the Hilbert method on a
/// curve above the guard unless forced, and CandidateParseError on a bad
/// candidate.
AnalysisReport analyze(const Arrangement& arr, const AnalyzeOptions& opt = {});

nlohmann::json to_json(const AnalysisReport& rep);
std::string to_text(const AnalysisReport& rep);
nlohmann::json to_json(const RootMultiset& m);

}  // namespace arrkit
