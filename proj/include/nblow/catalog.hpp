#ifndef NBLOW_CATALOG_HPP
#define NBLOW_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "nblow/sequence.hpp"

namespace nblow {

/// A built-in worked example: the seed data plus the named local ideals
/// its expectations are phrased in.
struct Fixture {
  std::string name;
  std::string description;
  IdealSequence seq;
  std::map<std::string, MonomialIdeal> named;  // local ideals used by checks
};

std::vector<std::string> fixture_names();
bool has_fixture(const std::string& name);

/// Builds a catalog fixture at the given horizon.
Fixture make_fixture(const std::string& name, int horizon);

}  // namespace nblow

#endif
