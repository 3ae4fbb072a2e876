#ifndef NBLOW_ANALYSIS_HPP
#define NBLOW_ANALYSIS_HPP

#include "nblow/fixture_io.hpp"

namespace nblow {

/// One full pipeline run: validation, stable decomposition, both torsion
/// sides, verdicts, closure orbit and the idealizer shift against the right
/// torsion extension.
struct AnalysisReport {
  std::string source;
  bool input_ok = false;  // validation passed; pipeline ran
  std::map<std::string, int> normalization_shifts;
  ValidationReport validation;
  std::optional<IdealSequence> seq;
  std::optional<StableDecomposition> decomposition;
  std::optional<TorsionComputation> right;
  std::optional<TorsionComputation> left;
  std::optional<TorsionVerdict> verdict;
  std::optional<ClosureReport> closure;
  std::optional<IdealizerReport> idealizer;
};

AnalysisReport analyze_sequence(const IdealSequence& seq, const std::string& source,
                                std::map<std::string, int> normalization_shifts = {},
                                int closure_max_iter = 6);

json report_to_json(const AnalysisReport& report);
std::string report_to_table(const AnalysisReport& report);

}  // namespace nblow

#endif
