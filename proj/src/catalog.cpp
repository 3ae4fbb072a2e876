#include "nblow/catalog.hpp"

namespace nblow {

namespace {

// Local ideals at a smooth surface point, in the coordinates (x, y).
std::map<std::string, MonomialIdeal> base_ideals() {
  std::map<std::string, MonomialIdeal> named;
  auto put = [&](const std::string& key, const std::string& text) {
    named.insert({key, parse_ideal(text, 2)});
  };
  put("m", "x, y");
  put("M", "x^2, y^2");
  put("N", "x^3, y^3");
  put("G", "x^4, x^3 y, x y^3, y^4");
  named.insert({"F", add(named.at("N"), MonomialIdeal::max_power(2, 4))});
  // the configuration with two distinct one-sided closures
  named.insert({"J3", add(parse_ideal("x^6, x^5 y, x y^5, y^6", 2),
                          MonomialIdeal::max_power(2, 7))});
  named.insert({"Q3", add(named.at("J3"), parse_ideal("x^3 y^3", 2))});
  named.insert({"I3", add(parse_ideal("x^4 y^2, x^2 y^4", 2),
                          MonomialIdeal::max_power(2, 7))});
  named.insert({"P3", add(named.at("I3"), parse_ideal("x^3 y^3", 2))});
  named.insert({"K3", add(parse_ideal("x^10 y^2, x^9 y^3, x^8 y^4, x^7 y^5, "
                                      "x^5 y^7, x^4 y^8, x^3 y^9, x^2 y^10",
                                      2),
                          MonomialIdeal::max_power(2, 13))});
  return named;
}

OrbitIdealData seed_from(const std::map<std::string, MonomialIdeal>& named,
                         const std::vector<std::string>& slot_keys) {
  OrbitIdealData seed(2);
  for (size_t j = 0; j < slot_keys.size(); ++j) {
    seed.set_slot("a", static_cast<int>(j), named.at(slot_keys[j]));
  }
  return seed;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"eg1", "eg2", "eg3", "not-naive"}; }

bool has_fixture(const std::string& name) {
  for (const auto& n : fixture_names()) {
    if (n == name) return true;
  }
  return false;
}

Fixture make_fixture(const std::string& name, int horizon) {
  std::map<std::string, MonomialIdeal> named = base_ideals();
  std::vector<std::string> slots;
  std::string description;
  if (name == "eg1") {
    slots = {"m", "M"};
    description = "two-slot seed whose right torsion extension is proper but whose "
                  "left torsion extension is trivial";
  } else if (name == "eg2") {
    slots = {"M", "m", "M"};
    description = "palindromic three-slot seed, torsion-open on both sides; both "
                  "closure orders meet at the same datum";
  } else if (name == "eg3") {
    slots = {"I3", "J3"};
    description = "seed whose right and left closures are distinct two-sided fixed points";
  } else if (name == "not-naive") {
    slots = {"M", "N", "m"};
    description = "seed whose torsion sequence needs multiplicativity constant t = 2";
  } else {
    throw InputError("unknown fixture '" + name + "'");
  }
  Fixture f{name, description, IdealSequence::naive(seed_from(named, slots), horizon),
            std::move(named)};
  return f;
}

}  // namespace nblow
