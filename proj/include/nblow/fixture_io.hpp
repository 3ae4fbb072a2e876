#ifndef NBLOW_FIXTURE_IO_HPP
#define NBLOW_FIXTURE_IO_HPP

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

#include "nblow/sequence.hpp"

namespace nblow {

using json = nlohmann::ordered_json;

/// A parsed fixture file: vars, sequence description and declared metadata.
struct FixtureFile {
  int vars = 2;
  bool saturating = true;
  std::string kind = "naive";
  int t = 1;
  std::optional<int> horizon;
  OrbitIdealData seed{2};
  std::vector<OrbitIdealData> entries;  // table kind, indexed by n
  std::map<std::string, int> normalization_shifts;
};

FixtureFile load_fixture_file(const std::string& path);
FixtureFile parse_fixture_text(const std::string& text);

/// Builds the sequence, applying the horizon override when given, then the
/// file's horizon, then the default for the seed's stabilization threshold.
IdealSequence build_sequence(const FixtureFile& file, std::optional<int> horizon_override);

json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const json& j, int vars);

json data_to_json(const OrbitIdealData& data);
OrbitIdealData data_from_json(const json& j, int vars);

}  // namespace nblow

#endif
