#ifndef NBLOW_MANIFEST_HPP
#define NBLOW_MANIFEST_HPP

#include "nblow/analysis.hpp"
#include "nblow/catalog.hpp"

namespace nblow {

struct CheckOutcome {
  std::string kind;
  std::string basis;  // stated | recomputed | definitional
  std::string note;
  bool pass = false;
  std::string detail;  // mismatch explanation
};

struct ManifestRun {
  bool all_passed = false;
  std::vector<CheckOutcome> checks;
};

/// Evaluates every check in the manifest against the fixture's pipeline
/// results. Expected values live in the manifest as data; the check kinds
/// are a small expression language over ideals and orbit data.
ManifestRun run_manifest(const json& manifest, const Fixture& fixture,
                         const AnalysisReport& report);

json load_manifest(const std::string& path);

/// Directory holding the shipped fixture and manifest files: the override
/// argument, then $NBLOW_FIXTURES, then the build-time default.
std::string fixture_directory(const std::string& override_dir = "");

}  // namespace nblow

#endif
