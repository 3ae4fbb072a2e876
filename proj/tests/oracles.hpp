#ifndef NBLOW_TESTS_ORACLES_HPP
#define NBLOW_TESTS_ORACLES_HPP

// Definition-level oracles for cross-checking the ideal arithmetic.
// These deliberately avoid the library's antichain/canonicalization code
// paths: everything is phrased as raw divisibility against generator lists.

#include <random>
#include <vector>

#include "nblow/monomial.hpp"

namespace oracle {

inline std::vector<nblow::Monomial> monomials_up_to(int vars, int cap) {
  std::vector<nblow::Monomial> out;
  std::vector<int> e(static_cast<size_t>(vars), 0);
  while (true) {
    long long deg = 0;
    for (int x : e) deg += x;
    if (deg <= cap) out.emplace_back(e);
    int pos = 0;
    while (pos < vars) {
      if (++e[static_cast<size_t>(pos)] <= cap) break;
      e[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == vars) break;
  }
  return out;
}

inline bool member(const nblow::MonomialIdeal& ideal, const nblow::Monomial& m) {
  for (const auto& g : ideal.gens()) {
    if (g.divides(m)) return true;
  }
  return false;
}

inline bool sum_member(const nblow::MonomialIdeal& a, const nblow::MonomialIdeal& b,
                       const nblow::Monomial& m) {
  return member(a, m) || member(b, m);
}

inline bool intersect_member(const nblow::MonomialIdeal& a, const nblow::MonomialIdeal& b,
                             const nblow::Monomial& m) {
  return member(a, m) && member(b, m);
}

// m lies in a*b iff some product of members divides it, iff some product of
// generators does.
inline bool product_member(const nblow::MonomialIdeal& a, const nblow::MonomialIdeal& b,
                           const nblow::Monomial& m) {
  for (const auto& ga : a.gens()) {
    for (const auto& gb : b.gens()) {
      if (ga.times(gb).divides(m)) return true;
    }
  }
  return false;
}

// m lies in (a : b) iff m * b is contained in a, and it is enough to
// multiply m by each generator of b.
inline bool colon_member(const nblow::MonomialIdeal& a, const nblow::MonomialIdeal& b,
                         const nblow::Monomial& m) {
  for (const auto& gb : b.gens()) {
    if (!member(a, m.times(gb))) return false;
  }
  return true;
}

inline nblow::Monomial random_monomial(std::mt19937_64& rng, int vars, int max_degree) {
  std::uniform_int_distribution<int> deg_dist(0, max_degree);
  std::vector<int> e(static_cast<size_t>(vars), 0);
  int deg = deg_dist(rng);
  std::uniform_int_distribution<int> var_dist(0, vars - 1);
  for (int i = 0; i < deg; ++i) ++e[static_cast<size_t>(var_dist(rng))];
  return nblow::Monomial(e);
}

inline nblow::MonomialIdeal random_ideal(std::mt19937_64& rng, int vars, int max_degree,
                                         int max_gens, bool allow_degenerate = true) {
  std::uniform_int_distribution<int> count_dist(allow_degenerate ? 0 : 1, max_gens);
  int count = count_dist(rng);
  std::vector<nblow::Monomial> gens;
  for (int i = 0; i < count; ++i) gens.push_back(random_monomial(rng, vars, max_degree));
  return nblow::MonomialIdeal(vars, std::move(gens));
}

// Proper Artinian ideal: pure powers of every variable plus a few extras.
inline nblow::MonomialIdeal random_artinian_ideal(std::mt19937_64& rng, int vars,
                                                  int max_degree, int extra_gens) {
  std::uniform_int_distribution<int> pow_dist(1, max_degree);
  std::vector<nblow::Monomial> gens;
  for (int v = 0; v < vars; ++v) {
    std::vector<int> e(static_cast<size_t>(vars), 0);
    e[static_cast<size_t>(v)] = pow_dist(rng);
    gens.emplace_back(e);
  }
  std::uniform_int_distribution<int> extra_dist(0, extra_gens);
  int extras = extra_dist(rng);
  for (int i = 0; i < extras; ++i) gens.push_back(random_monomial(rng, vars, max_degree));
  nblow::MonomialIdeal ideal(vars, std::move(gens));
  if (ideal.is_unit()) {
    // a random extra generator was 1; retry
    return random_artinian_ideal(rng, vars, max_degree, extra_gens);
  }
  return ideal;
}

}  // namespace oracle

#endif
