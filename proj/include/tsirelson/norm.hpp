#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsirelson/family.hpp"
#include "tsirelson/rational.hpp"
#include "tsirelson/space.hpp"
#include "tsirelson/sparse_vector.hpp"

namespace tsirelson {

/// A verifiable witness for a computed norm value.
///   sup_leaf   - value is the sup norm of the vector over `leaf_set`;
///   partition  - value is theta times the sum of the children's values,
///                each child evaluated on the restriction to its part; the
///                parts are consecutive and their minima form a family member.
/// Any structurally valid certificate evaluates to a lower bound of the norm;
/// the engine's witness evaluates to the norm exactly.
struct NormCertificate {
  enum class Kind { sup_leaf, partition };

  Kind kind = Kind::sup_leaf;
  FiniteSet leaf_set;                    // sup_leaf only
  std::vector<FiniteSet> part_sets;      // partition only
  std::vector<NormCertificate> children; // partition only, parallel to parts

  static NormCertificate leaf(FiniteSet set);
  static NormCertificate split(std::vector<FiniteSet> parts,
                               std::vector<NormCertificate> children);

  int internal_nodes() const;
  /// The minima of the parts (partition nodes only).
  FiniteSet min_set() const;
};

struct NormResult {
  Rational value;
  NormCertificate witness;
};

/// Safety bounds for the norm search.  max_support == 0 selects the
/// per-family default: 24 where admissibility is a plain cardinality cap or
/// one hierarchy level above it, 16 for deeper levels.
struct NormLimits {
  int max_support = 0;
};

/// Computes norms for one space, keeping caches across calls.  Not safe for
/// concurrent use; confine an instance to one thread (the types it is built
/// from are immutable values, so distinct engines never share state).
class NormEngine {
 public:
  explicit NormEngine(SpaceSpec space, NormLimits limits = {});

  const SpaceSpec& space() const { return space_; }

  /// The norm together with an attaining certificate.  Deterministic: among
  /// optimal certificates prefers fewer internal nodes, then the
  /// lexicographically smallest root min-set.
  NormResult norm(const SparseVector& x);
  /// Value only, cached across calls by the coordinate magnitudes.
  Rational norm_value(const SparseVector& x);

  /// The partition part of the implicit norm equation: the largest value
  /// theta * sum of part norms over admissible partitions (including the
  /// single-part partition covering everything).  Requires x != 0.
  Rational t_part(const SparseVector& x);

  /// The literal truncated iteration: level 0 is the sup norm, level n+1
  /// maximises level-n values over admissible partitions.  Monotone in
  /// `level` and equal to norm_value(x) once stabilised.
  Rational iterate(const SparseVector& x, int level);
  /// Iterates until one further level changes no interval projection of x,
  /// then returns the fixed-point value.
  Rational iterate_stabilized(const SparseVector& x);

 private:
  void check_support(const SparseVector& x) const;

  SpaceSpec space_;
  int max_support_;
  FamilyOracle oracle_;
  std::map<std::string, Rational> value_cache_;
};

// One-shot conveniences over NormEngine.
NormResult tsirelson_norm(const SpaceSpec& space, const SparseVector& x,
                          NormLimits limits = {});
Rational t_part(const SpaceSpec& space, const SparseVector& x);
Rational norm_iterate(const SpaceSpec& space, const SparseVector& x, int level);

/// Validates a certificate (parts nonempty, consecutive, min-sets in the
/// family) and evaluates it against x.  Throws CertificateError naming the
/// offending node on structural violations.
Rational certificate_value(const SpaceSpec& space, const SparseVector& x,
                           const NormCertificate& certificate);

/// theta * sum of block norms, after checking that the blocks are nonzero,
/// consecutively supported, and that their support minima form a family
/// member (std::invalid_argument otherwise).  This is a certified lower
/// bound for the norm of the blocks' sum.
Rational block_lower_bound(const SpaceSpec& space,
                           std::span<const SparseVector> blocks);

/// For the level-1 family and a vector supported inside {1..ceil(1/theta)}:
/// reports whether the norm equals the sup norm (it always should; exposed
/// as a checkable predicate).  Preconditions violated -> std::invalid_argument.
bool initial_block_supnorm_check(const SpaceSpec& space, const SparseVector& x);

/// Presentation helper: when the winning certificate is partition-rooted and
/// the value is a multiple of 1/den(theta), renders it over that denominator
/// unreduced ("30/21"); otherwise renders lowest terms.
std::string raw_over_theta_denominator(const NormResult& result,
                                       const Rational& theta);

}  // namespace tsirelson
