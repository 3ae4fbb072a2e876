#include "nblow/orbit_data.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nblow {

OrbitIdealData::OrbitIdealData(int vars) : vars_(vars) {
  if (vars < 2) throw InputError("orbit ideal data needs v >= 2 variables");
}

OrbitIdealData::OrbitIdealData(int vars, std::map<std::string, SlotMap> orbits)
    : OrbitIdealData(vars) {
  for (auto& [id, slots] : orbits) {
    for (auto& [j, ideal] : slots) set_slot(id, j, ideal);
  }
}

MonomialIdeal OrbitIdealData::slot(const std::string& orbit, int j) const {
  auto oit = orbits_.find(orbit);
  if (oit == orbits_.end()) return MonomialIdeal::unit(vars_);
  auto sit = oit->second.find(j);
  if (sit == oit->second.end()) return MonomialIdeal::unit(vars_);
  return sit->second;
}

void OrbitIdealData::set_slot(const std::string& orbit, int j, const MonomialIdeal& ideal) {
  if (ideal.vars() != vars_) throw InputError("slot ideal variable mismatch");
  if (ideal.is_unit()) {
    auto oit = orbits_.find(orbit);
    if (oit != orbits_.end()) {
      oit->second.erase(j);
      if (oit->second.empty()) orbits_.erase(oit);
    }
    return;
  }
  if (ideal.is_zero()) throw InputError("slot ideal must be nonzero");
  if (!ideal.is_artinian()) {
    throw InputError("slot ideal " + ideal.to_string() + " is not Artinian");
  }
  orbits_[orbit][j] = ideal;
}

std::vector<std::string> OrbitIdealData::orbit_ids() const {
  std::vector<std::string> ids;
  ids.reserve(orbits_.size());
  for (const auto& [id, _] : orbits_) ids.push_back(id);
  return ids;
}

std::optional<int> OrbitIdealData::min_slot(const std::string& orbit) const {
  auto oit = orbits_.find(orbit);
  if (oit == orbits_.end() || oit->second.empty()) return std::nullopt;
  return oit->second.begin()->first;
}

std::optional<int> OrbitIdealData::max_slot(const std::string& orbit) const {
  auto oit = orbits_.find(orbit);
  if (oit == orbits_.end() || oit->second.empty()) return std::nullopt;
  return oit->second.rbegin()->first;
}

std::string OrbitIdealData::to_string() const {
  if (is_unit()) return "{unit}";
  std::ostringstream os;
  bool first_orbit = true;
  for (const auto& [id, slots] : orbits_) {
    if (!first_orbit) os << "; ";
    first_orbit = false;
    if (orbits_.size() > 1 || id != "a") os << id << ": ";
    os << '{';
    bool first = true;
    for (const auto& [j, ideal] : slots) {
      if (!first) os << ", ";
      first = false;
      os << j << ": " << ideal.to_string();
    }
    os << '}';
  }
  return os.str();
}

OrbitIdealData twist(const OrbitIdealData& d, int i) {
  OrbitIdealData out(d.vars());
  for (const auto& [id, slots] : d.orbits()) {
    for (const auto& [j, ideal] : slots) out.set_slot(id, j + i, ideal);
  }
  return out;
}

namespace {

void require_same_vars(const OrbitIdealData& a, const OrbitIdealData& b) {
  if (a.vars() != b.vars()) throw InputError("orbit data variable mismatch");
}

std::set<std::pair<std::string, int>> occupied_slots(const OrbitIdealData& a,
                                                     const OrbitIdealData& b) {
  std::set<std::pair<std::string, int>> keys;
  for (const auto& [id, slots] : a.orbits()) {
    for (const auto& [j, _] : slots) keys.emplace(id, j);
  }
  for (const auto& [id, slots] : b.orbits()) {
    for (const auto& [j, _] : slots) keys.emplace(id, j);
  }
  return keys;
}

}  // namespace

OrbitIdealData multiply_data(const OrbitIdealData& a, const OrbitIdealData& b) {
  require_same_vars(a, b);
  OrbitIdealData out(a.vars());
  for (const auto& [id, j] : occupied_slots(a, b)) {
    out.set_slot(id, j, multiply(a.slot(id, j), b.slot(id, j)));
  }
  return out;
}

OrbitIdealData colon_data(const OrbitIdealData& d, const OrbitIdealData& e) {
  require_same_vars(d, e);
  OrbitIdealData out(d.vars());
  for (const auto& [id, j] : occupied_slots(d, e)) {
    MonomialIdeal num = d.slot(id, j);
    if (num.is_unit()) continue;  // unit : anything = unit
    out.set_slot(id, j, colon(num, e.slot(id, j)));
  }
  return out;
}

OrbitIdealData naive_power(const OrbitIdealData& seed, int n, int step) {
  if (n < 0) throw InputError("negative sequence index");
  OrbitIdealData out = OrbitIdealData::unit(seed.vars());
  for (int k = 0; k < n; ++k) out = multiply_data(out, twist(seed, k * step));
  return out;
}

bool subset_data(const OrbitIdealData& a, const OrbitIdealData& b) {
  require_same_vars(a, b);
  for (const auto& [id, j] : occupied_slots(a, b)) {
    if (!a.slot(id, j).subset_of(b.slot(id, j))) return false;
  }
  return true;
}

WidthReport width(const OrbitIdealData& d) {
  WidthReport report;
  for (const auto& [id, slots] : d.orbits()) {
    if (slots.empty()) {
      report.empty_orbits.push_back(id);
      continue;
    }
    int w = slots.rbegin()->first;
    report.per_orbit[id] = w;
    report.overall = std::max(report.overall, w);
  }
  return report;
}

std::map<std::string, int> normalize_slots(OrbitIdealData& d) {
  std::map<std::string, int> shifts;
  OrbitIdealData out(d.vars());
  for (const auto& [id, slots] : d.orbits()) {
    int shift = slots.empty() ? 0 : -slots.begin()->first;
    shifts[id] = shift;
    for (const auto& [j, ideal] : slots) out.set_slot(id, j + shift, ideal);
  }
  d = out;
  return shifts;
}

}  // namespace nblow
