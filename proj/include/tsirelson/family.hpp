#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsirelson/finite_set.hpp"
#include "tsirelson/ordinal.hpp"

namespace tsirelson {

/// Which fundamental sequence a limit-level family is built on.  Only the
/// canonical sequence (Ordinal::fundamental_step) is implemented; the knob
/// exists so alternative sequences can be plugged in without an interface
/// change.
enum class SequencePolicy { canonical };

/// How membership at a limit level finds its witness index n <= min F.
/// `nested` tests only n = min F; because each level of the hierarchy embeds
/// in the next (checked by verify_nesting and property tests), that single
/// test is equivalent to the full search.  `exhaustive` tries every
/// n <= min F and is kept as a cross-check mode.
enum class LimitWitnessMode { nested, exhaustive };

/// A compact regular family of finite sets: either the sets of cardinality
/// at most n ("A:n"), or level alpha of the recursive hierarchy generated
/// from the cardinality-1 family by admissible consecutive unions ("S:alpha").
struct FamilySpec {
  enum class Kind { arithmetic, schreier };

  Kind kind = Kind::arithmetic;
  unsigned bound = 1;  // arithmetic: n
  Ordinal level;       // schreier: alpha
  SequencePolicy policy = SequencePolicy::canonical;

  static FamilySpec arithmetic(unsigned n);
  static FamilySpec schreier(Ordinal alpha,
                             SequencePolicy policy = SequencePolicy::canonical);
  /// "A:3" or "S:w*2+1".
  static FamilySpec parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// A witness that a set belongs to a hierarchy level.
///   leaf       - the set has at most one element (base level or below);
///   successor  - the set is the union of the children's sets, which are
///                consecutive, number at most min(first part), and each carry
///                a witness one level down;
///   limit      - the set belongs to step `witness` of the level's
///                fundamental sequence (successor of the sequence ordinal),
///                with `witness` <= min of the set.
struct DecompositionTree {
  enum class Kind { leaf, successor, limit };

  Kind kind = Kind::leaf;
  FiniteSet set;
  std::vector<DecompositionTree> children;  // successor: parts; limit: one
  int witness = 0;                          // limit only
};

/// Exact membership test.
bool contains(const FamilySpec& family, const FiniteSet& set,
              LimitWitnessMode mode = LimitWitnessMode::nested);

/// Membership witness for a schreier family, or nullopt for non-members.
/// Deterministic: successor splits prefer the shortest admissible first part;
/// limit witnesses are the smallest workable n.
std::optional<DecompositionTree> decompose(const FamilySpec& family,
                                           const FiniteSet& set);

/// Re-checks a decomposition tree against the inductive definition, without
/// consulting the membership algorithm.
bool validate_decomposition(const FamilySpec& family, const FiniteSet& set,
                            const DecompositionTree& tree);

/// True when no strictly larger superset of `set` stays in the family.
/// Because families are closed under spreading, the single candidate
/// set + {max(set)+1} decides this.  `set` must be a nonempty member
/// (std::invalid_argument otherwise); the empty set is reported non-maximal.
bool is_maximal(const FamilySpec& family, const FiniteSet& set);

/// All members inside {1..universe_bound}, ordered by characteristic bitmask
/// (subsets of smaller maximum first).  When min_element is given, only
/// members with that minimum are produced (the empty set is then excluded).
std::vector<FiniteSet> enumerate_members(const FamilySpec& family,
                                         int universe_bound,
                                         std::optional<int> min_element = {});

struct RegularityReport {
  bool hereditary_pass = false;
  /// (member, missing subset) for the first hereditary violation.
  std::optional<std::pair<FiniteSet, FiniteSet>> hereditary_counterexample;
  bool spreading_pass = false;
  /// (member, missing right-shift) for the first spreading violation.
  std::optional<std::pair<FiniteSet, FiniteSet>> spreading_counterexample;
  /// Compactness in the pointwise topology has no finite-universe refutation;
  /// this note records that the check is vacuous at this scale.
  std::string compactness_note;
  int universe_bound = 0;
  bool pass() const { return hereditary_pass && spreading_pass; }
};

/// Checks hereditariness and spreading on the truncation to {1..bound}.
/// Single-element right-shifts are checked; arbitrary in-bound spreads factor
/// through those.
RegularityReport verify_regularity(const FamilySpec& family, int universe_bound);
/// Same check for an explicitly listed finite family.
RegularityReport verify_regularity(std::span<const FiniteSet> members,
                                   int universe_bound);

struct NestingReport {
  bool pass = false;
  int pairs_checked = 0;
  /// (n, set) with the set in step n's family but not step n+1's.
  std::optional<std::pair<int, FiniteSet>> violation;
};

/// Verifies, on {1..universe_bound}, that consecutive fundamental-sequence
/// steps of the limit ordinal `alpha` nest: every member at step n is a
/// member at step n+1, for n = 1..n_max.
NestingReport verify_nesting(const Ordinal& alpha, int n_max,
                             int universe_bound,
                             SequencePolicy policy = SequencePolicy::canonical);

/// Membership with a cache that persists across queries, for callers that
/// test many sets against one family (the norm search does).  Not safe for
/// concurrent use; confine an instance to one thread.
class FamilyOracle {
 public:
  explicit FamilyOracle(FamilySpec spec) : spec_(std::move(spec)) {}

  bool contains(const std::vector<int>& elements);
  const FamilySpec& spec() const { return spec_; }

  /// Families whose membership is exactly a cardinality cap: |F| <= n
  /// (arithmetic and base level) or |F| <= min F (level 1).  The norm search
  /// has a faster enumeration for these.
  struct CapRule {
    bool cap_is_min_element = false;
    int cap = 0;  // used when !cap_is_min_element
  };
  std::optional<CapRule> cap_rule() const;

 private:
  FamilySpec spec_;
  std::map<std::vector<int>, bool> cache_;
};

}  // namespace tsirelson
