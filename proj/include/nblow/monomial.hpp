#ifndef NBLOW_MONOMIAL_HPP
#define NBLOW_MONOMIAL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nblow {

/// Thrown on malformed user input (mixed variable counts, parse errors).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an operation is applied outside its mathematical domain
/// (colon by the zero ideal, singular matrix, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A monomial in v variables, stored as its exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  int vars() const { return static_cast<int>(exp_.size()); }
  int exponent(int i) const { return exp_[static_cast<size_t>(i)]; }
  const std::vector<int>& exponents() const { return exp_; }

  long long degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;  // overflow-checked
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// this / gcd(this, other): the generator map behind monomial colon.
  Monomial quotient_by(const Monomial& other) const;

  bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
  bool operator!=(const Monomial& o) const { return exp_ != o.exp_; }
  /// Lexicographic on exponent vectors.
  bool lex_less(const Monomial& o) const { return exp_ < o.exp_; }

 private:
  std::vector<int> exp_;
};

/// A monomial ideal held by its minimal generators.
///
/// Generators always form a divisibility antichain sorted in decreasing
/// lexicographic order, so equal ideals compare and serialize identically.
/// The unit ideal is {1}; the zero ideal has no generators.
class MonomialIdeal {
 public:
  /// Empty placeholder (vars = 0); any arithmetic on it throws.
  MonomialIdeal() = default;

  /// Minimalizes and canonically orders `gens`. All gens must share `vars`.
  MonomialIdeal(int vars, std::vector<Monomial> gens);

  static MonomialIdeal unit(int vars);
  static MonomialIdeal zero(int vars);
  /// (x_1,...,x_v)^k, the k-th power of the maximal ideal at the origin.
  static MonomialIdeal max_power(int vars, int k);

  int vars() const { return vars_; }
  const std::vector<Monomial>& gens() const { return gens_; }

  bool is_unit() const;
  bool is_zero() const { return gens_.empty(); }
  bool is_proper() const { return !is_unit() && !is_zero(); }
  /// True when every variable has a pure power among the generators
  /// (equivalently the colength is finite).
  bool is_artinian() const;

  bool contains(const Monomial& m) const;
  bool subset_of(const MonomialIdeal& other) const;
  bool operator==(const MonomialIdeal& o) const {
    return vars_ == o.vars_ && gens_ == o.gens_;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

  /// Number of standard monomials, or nullopt when infinite.
  std::optional<long long> colength() const;

  std::string to_string() const;

 private:
  int vars_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// Largest H with H*b contained in a. `b` must not be the zero ideal.
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, int k);

/// Parses "x^2, y^2" (v=2: variables x,y) or "x1^2, x3" (v>2: x1..xv).
/// "1" denotes the unit monomial, "0" the empty generator list (zero ideal).
MonomialIdeal parse_ideal(const std::string& text, int vars);
Monomial parse_monomial(const std::string& text, int vars);
std::string monomial_to_string(const Monomial& m, int vars);

}  // namespace nblow

#endif
