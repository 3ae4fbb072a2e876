#include "nblow/fixture_io.hpp"

#include <fstream>
#include <sstream>

#include "nblow/toml_lite.hpp"

namespace nblow {

namespace {

OrbitIdealData orbits_from_toml(const toml::Value& container, int vars) {
  OrbitIdealData data(vars);
  if (!container.has("orbit")) return data;
  const auto& orbit_array = container.at("orbit").as_array();
  int anonymous = 0;
  for (const toml::Value& orbit : orbit_array) {
    std::string id = orbit.get_or("id", std::string(1, static_cast<char>('a' + anonymous)));
    ++anonymous;
    if (!orbit.has("slots")) continue;
    for (const auto& [slot_key, gens] : orbit.at("slots").table) {
      int slot = 0;
      try {
        slot = std::stoi(slot_key);
      } catch (const std::exception&) {
        throw InputError("slot key '" + slot_key + "' is not an integer");
      }
      std::vector<Monomial> monomials;
      for (const toml::Value& g : gens.as_array()) {
        monomials.push_back(parse_monomial(g.as_string(), vars));
      }
      data.set_slot(id, slot, MonomialIdeal(vars, std::move(monomials)));
    }
  }
  return data;
}

}  // namespace

FixtureFile parse_fixture_text(const std::string& text) {
  toml::Value root = toml::parse(text);
  FixtureFile out;
  out.vars = static_cast<int>(root.get_or("vars", 2LL));
  if (out.vars < 2) throw InputError("fixture needs vars >= 2");
  out.saturating = root.get_or("saturating", true);
  if (root.has("sequence")) {
    const toml::Value& seq = root.at("sequence");
    out.kind = seq.get_or("kind", std::string("naive"));
    out.t = static_cast<int>(seq.get_or("t", 1LL));
    if (seq.has("horizon")) out.horizon = static_cast<int>(seq.at("horizon").as_integer());
  }
  if (out.kind == "naive") {
    out.seed = orbits_from_toml(root, out.vars);
    out.normalization_shifts = normalize_slots(out.seed);
  } else if (out.kind == "table") {
    if (!root.has("entry")) throw InputError("table fixture needs [[entry]] blocks");
    int max_n = 0;
    std::vector<std::pair<int, OrbitIdealData>> parsed;
    for (const toml::Value& entry : root.at("entry").as_array()) {
      if (!entry.has("n")) throw InputError("[[entry]] needs its index n");
      int n = static_cast<int>(entry.at("n").as_integer());
      if (n < 0) throw InputError("entry index must be >= 0");
      max_n = std::max(max_n, n);
      parsed.emplace_back(n, orbits_from_toml(entry, out.vars));
    }
    out.entries.assign(static_cast<size_t>(max_n) + 1, OrbitIdealData(out.vars));
    for (auto& [n, data] : parsed) out.entries[static_cast<size_t>(n)] = std::move(data);
  } else {
    throw InputError("sequence kind must be \"naive\" or \"table\"");
  }
  return out;
}

FixtureFile load_fixture_file(const std::string& path) {
  toml::Value probe = toml::parse_file(path);  // reports line numbers
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_fixture_text(buffer.str());
}

IdealSequence build_sequence(const FixtureFile& file, std::optional<int> horizon_override) {
  if (file.kind == "naive") {
    int fallback = default_horizon(std::max(width(file.seed).overall, 1));
    int horizon = horizon_override.value_or(file.horizon.value_or(fallback));
    return IdealSequence::naive(file.seed, horizon, 1, file.saturating);
  }
  IdealSequence seq = IdealSequence::table(file.entries, file.t, 1, file.saturating);
  if (horizon_override && *horizon_override != seq.horizon()) {
    if (*horizon_override > seq.horizon()) {
      throw InputError("table fixture only reaches horizon " + std::to_string(seq.horizon()));
    }
    std::vector<OrbitIdealData> clipped(file.entries.begin(),
                                        file.entries.begin() + *horizon_override + 1);
    seq = IdealSequence::table(clipped, file.t, 1, file.saturating);
  }
  return seq;
}

json ideal_to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const Monomial& g : ideal.gens()) gens.push_back(g.exponents());
  return gens;
}

MonomialIdeal ideal_from_json(const json& j, int vars) {
  std::vector<Monomial> gens;
  for (const auto& g : j) {
    std::vector<int> e;
    for (const auto& x : g) e.push_back(x.get<int>());
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(vars, std::move(gens));
}

json data_to_json(const OrbitIdealData& data) {
  json orbits = json::array();
  for (const auto& [id, slots] : data.orbits()) {
    json slot_list = json::array();
    for (const auto& [j, ideal] : slots) {
      slot_list.push_back({{"slot", j}, {"gens", ideal_to_json(ideal)}});
    }
    orbits.push_back({{"orbit", id}, {"slots", slot_list}});
  }
  return orbits;
}

OrbitIdealData data_from_json(const json& j, int vars) {
  OrbitIdealData data(vars);
  for (const auto& orbit : j) {
    std::string id = orbit.at("orbit").get<std::string>();
    for (const auto& slot : orbit.at("slots")) {
      data.set_slot(id, slot.at("slot").get<int>(),
                    ideal_from_json(slot.at("gens"), vars));
    }
  }
  return data;
}

}  // namespace nblow
