#ifndef NBLOW_SPARSE_HPP
#define NBLOW_SPARSE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nblow/monomial.hpp"  // error types

namespace nblow {

/// A subset of the naturals whose membership is fully known on [0, horizon).
class SparseSetWindow {
 public:
  SparseSetWindow(std::vector<long long> members, long long horizon);

  const std::vector<long long>& members() const { return members_; }
  long long horizon() const { return horizon_; }

  /// |S intersect [0, n)|. Requires n <= horizon.
  long long prefix_count(long long n) const;
  bool contains(long long value) const;

  bool operator==(const SparseSetWindow& o) const {
    return members_ == o.members_ && horizon_ == o.horizon_;
  }

 private:
  std::vector<long long> members_;  // strictly increasing, inside [0, horizon)
  long long horizon_;
};

/// Closed-form or tabulated monotone bound N(m), kept as data so reports can
/// print it and the composition rules can build on it symbolically.
class BoundingFunction {
 public:
  /// c * m^k (k >= 1).
  static BoundingFunction monomial(long long coefficient, int power = 1);
  /// The bound used for a finite set of size <= e: N(m) = e * m.
  static BoundingFunction finite_set(long long size);
  static BoundingFunction table(std::vector<long long> values);  // values[m-1]
  /// N(m) = max over parts of N_i(m * d), the d-fold union rule.
  static BoundingFunction union_of(long long d, std::vector<BoundingFunction> parts);
  /// N(m) = max(3m, N_{3m}(3m)) built from per-distance bounds for the
  /// shifted self-intersections.
  static BoundingFunction derived(std::map<long long, BoundingFunction> per_distance);

  long long operator()(long long m) const;
  std::string to_string() const;

  /// Monotonicity is part of the contract; verified on a finite range.
  bool monotone_on(long long m_max) const;

 private:
  BoundingFunction() = default;
  enum class Kind { Monomial, FiniteSet, Table, Union, Derived };
  Kind kind_ = Kind::Monomial;
  long long coefficient_ = 1;
  int power_ = 1;
  std::vector<long long> values_;
  long long union_d_ = 1;
  std::vector<BoundingFunction> parts_;
  std::map<long long, BoundingFunction> per_distance_;
};

struct BoundCheck {
  bool ok = false;
  std::optional<std::pair<long long, long long>> first_failure;  // (m, n)
  long long vacuous_from_m = 0;  // 0 = fully checked; else N(m) > horizon from here on
  std::string note;
};

/// Verifies |S intersect [0,n)| <= n/m for every 1 <= m <= m_max and
/// N(m) <= n <= horizon. Out-of-window tails are reported as vacuous.
BoundCheck check_bounding(const SparseSetWindow& s, const BoundingFunction& bound,
                          long long m_max, long long horizon);

struct UnionBound {
  SparseSetWindow set;
  BoundingFunction bound;
};

/// Union of the sets with the composite bound N(m) = max N_i(m*d).
UnionBound union_bound(const std::vector<std::pair<SparseSetWindow, BoundingFunction>>& parts);

/// Members of s preceded by another member within distance d.
SparseSetWindow shifted_self(const SparseSetWindow& s, long long d);

/// The bound max(3m, N_{3m}(3m)) for s from bounds for its shifted
/// self-intersections; distances 3m for m <= m_max must all be supplied.
BoundingFunction derived_bound(const SparseSetWindow& s,
                               const std::map<long long, BoundingFunction>& per_distance,
                               long long m_max);

struct EstimatePair {
  bool complement_ok = false;  // |S^c cap N_n| >= d(|(S \ S_d) cap N_n| - 1)
  bool density_ok = false;     // (d+1)|S cap N_n| <= n + d + d|S_d cap N_n|
  std::optional<long long> first_failure_n;
};

/// Window check of the two counting inequalities behind the derived bound.
/// They are theorems: any failure is an implementation bug.
EstimatePair verify_estimates(const SparseSetWindow& s, long long d, long long horizon);

/// Built-in set generators for the CLI: "squares", "powers", "arithmetic:a,b",
/// "list:0,2,4", or "file:path" (JSON report with a "set" array).
SparseSetWindow make_set(const std::string& spec, long long horizon);

/// Parses closed forms like "m", "3*m", "4*m^2".
BoundingFunction parse_bound(const std::string& text);

}  // namespace nblow

#endif
