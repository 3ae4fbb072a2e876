#ifndef NBLOW_SEQUENCE_HPP
#define NBLOW_SEQUENCE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nblow/orbit_data.hpp"

namespace nblow {

enum class SequenceKind { Naive, Table };

/// A sequence of orbit ideal data indexed by n >= 0, either generated
/// from a seed (entry n = product of the first n twists of the seed) or
/// given as an explicit table with a declared multiplicativity constant t.
///
/// `step` is the twist applied per index increment; it is 1 for plain
/// sequences and p for Veronese subsequences.
class IdealSequence {
 public:
  static IdealSequence naive(OrbitIdealData seed, int horizon, int step = 1,
                             bool saturating = true);
  static IdealSequence table(std::vector<OrbitIdealData> entries, int t, int step = 1,
                             bool saturating = true);

  SequenceKind kind() const { return kind_; }
  int vars() const { return vars_; }
  int horizon() const { return horizon_; }
  int declared_t() const { return t_; }
  int step() const { return step_; }
  bool saturating() const { return saturating_; }
  const OrbitIdealData& seed() const { return seed_; }

  /// Entry n (0 <= n <= horizon). All entries are materialized up front,
  /// so concurrent reads are safe.
  const OrbitIdealData& at(int n) const;

 private:
  IdealSequence(SequenceKind kind, int vars, int horizon, int t, int step, bool sat,
                OrbitIdealData seed, std::vector<OrbitIdealData> entries);

  SequenceKind kind_;
  int vars_;
  int horizon_;
  int t_;
  int step_;
  bool saturating_;
  OrbitIdealData seed_;
  std::vector<OrbitIdealData> cache_;
};

struct SequenceWitness {
  int m = -1;
  int n = -1;
  std::string orbit;
  int slot = 0;
  std::string detail;
  std::string to_string() const;
};

struct ValidationReport {
  bool ok = false;
  bool trivial = false;       // entry 1 is the unit ideal sheaf
  int t_effective = 0;        // smallest t passing in the window; 0 = none
  std::optional<SequenceWitness> first_violation;
};

/// Checks entry 0 = unit, submultiplicativity everywhere, equality for
/// m, n >= t within the horizon, and that all stored ideals are proper
/// and Artinian. Reports the first violating (m, n, slot).
ValidationReport validate_gen_naive(const IdealSequence& seq);

/// max(width of entry 1, t): from this index on the entries stabilize.
int stabilization_threshold(const IdealSequence& seq);

int default_horizon(int stabilization_threshold);

struct OrbitDecomposition {
  int w = 0;
  std::vector<MonomialIdeal> head;  // slots 0..w-1, frozen
  MonomialIdeal body;               // repeated middle slot ideal, de-twisted
  std::vector<MonomialIdeal> tail;  // slots n..n+w-1, de-twisted by n
};

struct StableDecomposition {
  bool ok = false;
  std::string error;
  std::optional<SequenceWitness> witness;
  int w = 0;  // overall width
  int M = 0;  // stabilization threshold
  std::map<std::string, OrbitDecomposition> orbits;
};

/// Splits each entry n >= M into frozen head slots, a repeated body ideal
/// and a trailing block that moves with n, then verifies the recomposition
/// against every entry in the window.
StableDecomposition decompose_stable(const IdealSequence& seq);

struct TorsionComputation {
  bool ok = false;
  std::string error;
  std::optional<SequenceWitness> witness;
  std::optional<IdealSequence> seq;    // the torsion sequence, horizon H - M
  std::map<std::string, std::vector<MonomialIdeal>> tail;  // enlarged tail block
  ValidationReport seq_validation;     // gen-naive check of the torsion sequence
  bool equals_sequence = false;        // torsion entry = original entry for all n
  bool naive_with_seed = false;        // torsion table = products of its entry 1
  std::optional<IdealSequence> extended;  // re-extension to the original horizon
};

/// Maximal right torsion data: entry n is the largest ideal data H with
/// H * twist(entry m, n) inside entry n+m, for stable m. Verifies
/// m-independence at m = M and M+1 and the containment entry n <= H_n.
TorsionComputation right_torsion(const IdealSequence& seq);

/// Left-sided analogue: the largest H with entry m * twist(H, m) inside
/// entry n+m, de-twisted by m.
TorsionComputation left_torsion(const IdealSequence& seq);

struct TorsionVerdict {
  bool right_closed = false;
  bool left_closed = false;
  std::optional<SequenceWitness> right_witness;  // first differing slot
  std::optional<SequenceWitness> left_witness;
  std::string interpretation;
};

TorsionVerdict torsion_verdict(const IdealSequence& seq, const TorsionComputation& right,
                               const TorsionComputation& left);

struct ClosureStep {
  std::string op;  // "T" (right) or "Tl" (left)
  OrbitIdealData datum;
  bool changed = false;
  int horizon = 0;
};

struct ClosureReport {
  bool ok = false;
  std::string error;
  std::vector<ClosureStep> right_first;
  std::vector<ClosureStep> left_first;
  std::optional<OrbitIdealData> fixed_right_first;
  std::optional<OrbitIdealData> fixed_left_first;
  bool converged_same = false;
  std::vector<OrbitIdealData> fixed_points;  // distinct fixed data found
};

/// Applies right and left torsion alternately, from both starting orders,
/// until a datum is fixed by both or max_iter applications are exhausted.
ClosureReport closure_orbit(const IdealSequence& seq, int max_iter = 6);

struct IdealizerReport {
  bool ok = false;
  std::string error;
  int n0 = -1;  // smallest shift with T_r * twist(S_s, r) inside S_{r+s} for s >= n0
  std::optional<SequenceWitness> first_failure;
};

/// Smallest n0 such that the larger sequence multiplied into the tail of the
/// smaller one stays inside the smaller one. Requires S_n <= T_n slotwise.
IdealizerReport idealizer_check(const IdealSequence& small, const IdealSequence& large);

struct CoherenceReport {
  bool inputs_ok = false;
  std::string error;
  bool coherent = false;
  int stable_from = -1;                        // when coherent
  std::optional<SequenceWitness> strict_witness;  // when not coherent
};

/// chain[i+1] must contain chain[i] * twist(entry 1, i) and sit inside
/// entry i+1. Coherent in the window when the containment is an equality
/// from some index onward.
CoherenceReport coherence_check(const std::vector<OrbitIdealData>& chain,
                                const IdealSequence& seq);

struct VeroneseResult {
  bool ok = false;
  std::string error;
  std::optional<IdealSequence> seq;  // entries n -> original entry n*p
  bool naive_with_seed = false;
  std::optional<SequenceWitness> witness;
};

/// The p-th Veronese subsequence, with the check that it is generated by
/// its first entry (expected when p >= t).
VeroneseResult veronese(const IdealSequence& seq, int p);

/// Continues a validated sequence out to new_horizon using the
/// multiplicativity rule at its constant t, then re-verifies.
std::optional<IdealSequence> extend_sequence(const IdealSequence& seq, int new_horizon,
                                             int t_effective);

}  // namespace nblow

#endif
