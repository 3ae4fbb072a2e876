#ifndef NBLOW_ORBIT_DATA_HPP
#define NBLOW_ORBIT_DATA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nblow/monomial.hpp"

namespace nblow {

/// Slot-indexed local ideals along the orbits of a finite point set.
///
/// Slot j holds the local ideal at the j-th backward translate of the
/// orbit's base point; slots that are not stored are the unit ideal.
/// Every stored ideal is proper, nonzero and Artinian.
class OrbitIdealData {
 public:
  using SlotMap = std::map<int, MonomialIdeal>;

  explicit OrbitIdealData(int vars);
  OrbitIdealData(int vars, std::map<std::string, SlotMap> orbits);

  static OrbitIdealData unit(int vars) { return OrbitIdealData(vars); }

  int vars() const { return vars_; }
  const std::map<std::string, SlotMap>& orbits() const { return orbits_; }
  bool is_unit() const { return orbits_.empty(); }

  /// Slot lookup; absent slots read as the unit ideal.
  MonomialIdeal slot(const std::string& orbit, int j) const;
  void set_slot(const std::string& orbit, int j, const MonomialIdeal& ideal);

  std::vector<std::string> orbit_ids() const;
  std::optional<int> min_slot(const std::string& orbit) const;
  std::optional<int> max_slot(const std::string& orbit) const;

  bool operator==(const OrbitIdealData& o) const {
    return vars_ == o.vars_ && orbits_ == o.orbits_;
  }
  bool operator!=(const OrbitIdealData& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  int vars_;
  std::map<std::string, SlotMap> orbits_;
};

/// Relocates every slot j to j+i. An additive group action; twist(.,0) = id.
OrbitIdealData twist(const OrbitIdealData& d, int i);

/// Slotwise ideal product; absent slots act as the unit ideal.
OrbitIdealData multiply_data(const OrbitIdealData& a, const OrbitIdealData& b);

/// Slotwise colon d[j] : e[j]; unit numerator slots stay unit, absent
/// denominator slots leave d[j] unchanged.
OrbitIdealData colon_data(const OrbitIdealData& d, const OrbitIdealData& e);

/// Product of the first n twist-translates of `seed` (n = 0 gives unit data).
/// `step` is the twist applied per factor; sequences over a power of the
/// automorphism use step > 1.
OrbitIdealData naive_power(const OrbitIdealData& seed, int n, int step = 1);

/// a[j] contained in b[j] for every orbit and slot.
bool subset_data(const OrbitIdealData& a, const OrbitIdealData& b);

struct WidthReport {
  std::map<std::string, int> per_orbit;
  int overall = 0;
  std::vector<std::string> empty_orbits;  // undefined width, reported not defaulted
};

/// Maximal occupied slot per orbit; assumes slots normalized to minimum 0.
WidthReport width(const OrbitIdealData& d);

/// Shifts each orbit so its minimal occupied slot is 0.
/// Returns the per-orbit shift that was applied.
std::map<std::string, int> normalize_slots(OrbitIdealData& d);

}  // namespace nblow

#endif
