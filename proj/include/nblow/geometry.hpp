#ifndef NBLOW_GEOMETRY_HPP
#define NBLOW_GEOMETRY_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nblow/sparse.hpp"

namespace nblow {

/// A point of projective space with a unique integer representative:
/// primitive coordinates whose first nonzero entry is positive.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<mpz_class> coords);

  int dim() const { return static_cast<int>(coords_.size()) - 1; }  // ambient P^s
  const std::vector<mpz_class>& coords() const { return coords_; }

  bool operator==(const ProjectivePoint& o) const { return coords_ == o.coords_; }
  bool operator!=(const ProjectivePoint& o) const { return !(*this == o); }
  bool operator<(const ProjectivePoint& o) const { return coords_ < o.coords_; }

  std::string to_string() const;

 private:
  std::vector<mpz_class> coords_;
};

/// An integer matrix with nonzero determinant acting on projective points.
/// Coordinates grow exponentially along orbits, hence the big integers.
class LinearAutomorphism {
 public:
  explicit LinearAutomorphism(std::vector<std::vector<mpz_class>> matrix);

  int size() const { return static_cast<int>(matrix_.size()); }
  const std::vector<std::vector<mpz_class>>& matrix() const { return matrix_; }
  const mpz_class& determinant() const { return det_; }

  ProjectivePoint apply(const ProjectivePoint& p) const;
  /// The integer adjugate, which inverts the projective action.
  LinearAutomorphism inverse() const;

 private:
  std::vector<std::vector<mpz_class>> matrix_;
  mpz_class det_;
};

/// A homogeneous form of fixed degree with integer coefficients, stored
/// sparsely as exponent tuple -> coefficient.
class HomogeneousForm {
 public:
  HomogeneousForm(int vars, int degree, std::map<std::vector<int>, mpz_class> coeffs);

  int vars() const { return vars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<std::vector<int>, mpz_class>& coeffs() const { return coeffs_; }

  mpz_class evaluate(const ProjectivePoint& p) const;
  HomogeneousForm times(const HomogeneousForm& other) const;
  std::string to_string() const;

 private:
  int vars_;
  int degree_;
  std::map<std::vector<int>, mpz_class> coeffs_;
};

/// Parses either "coeff:e0,e1,..;coeff:e0,e1,.." tuples or algebraic text
/// like "x1 - x0" / "2*x0^2 + 3*x1*x2" in variables x0..xs.
HomogeneousForm parse_form(const std::string& text, int vars);

/// The line through two distinct points of P^2 (exact nullspace).
HomogeneousForm line_through(const ProjectivePoint& a, const ProjectivePoint& b);

enum class OrbitDirection { Forward, Backward };

struct Orbit {
  std::vector<ProjectivePoint> points;
  bool repeats = false;
  int first_repeat_index = -1;  // index whose point already occurred
  int period = 0;               // distance to the earlier occurrence
};

/// The first `count` iterates of the map (or its inverse) applied to x,
/// with repetition flagged when the orbit is finite.
Orbit orbit(const ProjectivePoint& x, const LinearAutomorphism& map, int count,
            OrbitDirection direction);

/// Indices i with F(p_i) = 0, as a window set ready for the sparse checks.
SparseSetWindow incidence_set(const std::vector<ProjectivePoint>& points,
                              const HomogeneousForm& form);

/// Exact rank of an integer matrix by fraction-free elimination.
int integer_rank(std::vector<std::vector<mpz_class>> matrix);

struct SeparationCheck {
  bool ok = false;
  int failing_index = -1;  // first point in the span of the others
  int rank = 0;
};

/// Degree-D forms separate the points when dropping any single column of
/// the evaluation matrix lowers its rank.
SeparationCheck separates(const std::vector<ProjectivePoint>& points, int degree);

struct SeparationProfile {
  bool ok = false;
  std::string error;
  std::vector<int> min_degree;          // min_degree[n-1] = minimal separating D for P_n
  std::optional<int> threshold;         // smallest n0 with D(n) <= floor(delta n) beyond it
  long long delta_num = 0, delta_den = 1;
  bool translation_invariant = true;    // D(n) unchanged for sampled translates
};

/// Minimal separating degrees along the backward orbit of x, with the
/// window-level threshold for D(n) <= floor(delta n). Desk-scale evidence:
/// nothing is extrapolated beyond n_max.
SeparationProfile separation_profile(const ProjectivePoint& x, const LinearAutomorphism& map,
                                     long long delta_num, long long delta_den, int n_max,
                                     bool check_translates = false);

}  // namespace nblow

#endif
