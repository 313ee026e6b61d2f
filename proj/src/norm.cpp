#include "tsirelson/norm.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "tsirelson/errors.hpp"

namespace tsirelson {

NormCertificate NormCertificate::leaf(FiniteSet set) {
  NormCertificate node;
  node.kind = Kind::sup_leaf;
  node.leaf_set = std::move(set);
  return node;
}

NormCertificate NormCertificate::split(std::vector<FiniteSet> parts,
                                       std::vector<NormCertificate> children) {
  if (parts.size() != children.size() || parts.empty()) {
    throw std::invalid_argument("NormCertificate: parts/children mismatch");
  }
  NormCertificate node;
  node.kind = Kind::partition;
  node.part_sets = std::move(parts);
  node.children = std::move(children);
  return node;
}

int NormCertificate::internal_nodes() const {
  if (kind == Kind::sup_leaf) return 0;
  int total = 1;
  for (const NormCertificate& child : children) total += child.internal_nodes();
  return total;
}

FiniteSet NormCertificate::min_set() const {
  if (kind != Kind::partition) {
    throw std::invalid_argument("min_set: not a partition node");
  }
  std::vector<int> mins;
  for (const FiniteSet& part : part_sets) mins.push_back(part.min());
  return FiniteSet(std::move(mins));
}

namespace {

// A partition candidate before its certificate is assembled: the sum of the
// child window values, the total of the child certificates' internal nodes,
// and the part start positions in the support array.
struct Pending {
  Rational sum;
  int nodes = 0;
  std::vector<int> positions;
};

// Larger value first; ties prefer fewer internal nodes, then the
// lexicographically smallest min-set (positions map monotonically onto
// min-set elements, so position order suffices).
bool pending_better(const Pending& a, const Pending& b) {
  if (a.sum != b.sum) return a.sum > b.sum;
  if (a.nodes != b.nodes) return a.nodes < b.nodes;
  return a.positions < b.positions;
}

struct Best {
  Rational value;
  int nodes = 0;
  std::vector<int> min_set;  // empty for sup leaves
  NormCertificate cert;
};

bool best_better(const Best& a, const Best& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.nodes != b.nodes) return a.nodes < b.nodes;
  return a.min_set < b.min_set;
}

struct WindowEntry {
  Best best;                        // norm of the window projection
  std::optional<Best> best_split;  // best partition-rooted candidate
};

// Exact dynamic programme over contiguous windows of the support array.
//
// The defining supremum ranges over sequences E_1 < ... < E_d of arbitrary
// finite sets whose minima form a family member.  Three reductions make the
// search finite without losing the supremum:
//
//   * a part contributes only through the support points it meets, and
//     replacing each part by the interval of support points from its first
//     one to just before the next part keeps the min-set admissible
//     (hereditariness drops empty parts, spreading moves minima right onto
//     support points) and never decreases any |coordinate|-monotone value,
//     so min-sets drawn from the support and interval-shaped parts suffice;
//   * parts may always be extended to the right edge of the window for the
//     same reason, so only part start positions matter;
//   * at the root of each window the single part covering the whole window
//     is excluded: its value theta * ||window|| is strictly below the window
//     norm whenever that norm is nonzero (theta < 1), so it never attains
//     the supremum, and excluding it leaves only strictly smaller windows in
//     the recursion, which is what makes the programme well-founded.
//
// Leading support points may be dropped (the first minimum ranges over the
// whole window).  The literal level-by-level iteration below (IterateDp) and
// the brute-force oracles in the test suite cross-check these reductions.
class NormDp {
 public:
  NormDp(const SpaceSpec& space, FamilyOracle& oracle, const SparseVector& x)
      : theta_(space.theta), oracle_(oracle) {
    for (const auto& [index, value] : x.entries()) {
      idx_.push_back(index);
      mag_.push_back(::abs(value));
    }
    k_ = static_cast<int>(idx_.size());
    memo_.resize(static_cast<std::size_t>(k_ + 1) * (k_ + 1));
  }

  int support_count() const { return k_; }

  const WindowEntry& window(int lo, int hi) {
    auto& slot = memo_[static_cast<std::size_t>(lo) * (k_ + 1) + hi];
    if (!slot) slot = solve(lo, hi);
    return *slot;
  }

 private:
  FiniteSet slice(int lo, int hi) const {
    return FiniteSet(std::vector<int>(idx_.begin() + lo, idx_.begin() + hi));
  }

  WindowEntry solve(int lo, int hi) {
    Rational sup(0);
    for (int i = lo; i < hi; ++i) {
      if (mag_[i] > sup) sup = mag_[i];
    }
    Best leaf{sup, 0, {}, NormCertificate::leaf(slice(lo, hi))};

    std::optional<Pending> best_pending;
    auto consider = [&](Pending candidate) {
      if (!best_pending || pending_better(candidate, *best_pending)) {
        best_pending = std::move(candidate);
      }
    };
    if (auto rule = oracle_.cap_rule()) {
      chain_candidates(lo, hi, *rule, consider);
    } else {
      dfs_candidates(lo, hi, consider);
    }

    WindowEntry entry;
    if (best_pending) entry.best_split = assemble(*best_pending, hi);
    entry.best = std::move(leaf);
    if (entry.best_split && best_better(*entry.best_split, entry.best)) {
      entry.best = *entry.best_split;
    }
    return entry;
  }

  Best assemble(const Pending& pending, int hi) {
    std::vector<FiniteSet> parts;
    std::vector<NormCertificate> children;
    std::vector<int> min_set;
    int nodes = 1;
    Rational sum(0);
    for (std::size_t j = 0; j < pending.positions.size(); ++j) {
      int a = pending.positions[j];
      int b = j + 1 < pending.positions.size() ? pending.positions[j + 1] : hi;
      const Best& child = window(a, b).best;
      parts.push_back(slice(a, b));
      children.push_back(child.cert);
      min_set.push_back(idx_[a]);
      nodes += child.nodes;
      sum += child.value;
    }
    return Best{theta_ * sum, nodes, std::move(min_set),
                NormCertificate::split(std::move(parts), std::move(children))};
  }

  // Families whose admissibility is a cardinality cap (possibly the first
  // element itself) admit a chain DP over split points instead of explicit
  // min-set enumeration.
  template <typename Consider>
  void chain_candidates(int lo, int hi, FamilyOracle::CapRule rule,
                        Consider&& consider) {
    for (int f = lo; f < hi; ++f) {
      long long raw = rule.cap_is_min_element ? idx_[f] : rule.cap;
      int cap = static_cast<int>(std::min<long long>(raw, hi - f));
      if (cap < 1) continue;
      if (f > lo) {
        consider(split_best(f, cap, hi));
      } else if (cap >= 2) {
        for (int t = lo + 1; t < hi; ++t) {
          const Best& first = window(lo, t).best;
          const Pending& sub = split_best(t, cap - 1, hi);
          Pending candidate{first.value + sub.sum, first.nodes + sub.nodes, {}};
          candidate.positions.reserve(sub.positions.size() + 1);
          candidate.positions.push_back(lo);
          candidate.positions.insert(candidate.positions.end(),
                                     sub.positions.begin(),
                                     sub.positions.end());
          consider(std::move(candidate));
        }
      }
    }
  }

  // Best cover of [f, hi) by at most r consecutive parts, the first starting
  // exactly at f.
  const Pending& split_best(int f, int r, int hi) {
    r = std::min(r, hi - f);
    auto key = std::tuple(f, r, hi);
    if (auto it = split_memo_.find(key); it != split_memo_.end()) {
      return it->second;
    }
    const Best& whole = window(f, hi).best;
    Pending best{whole.value, whole.nodes, {f}};
    if (r >= 2) {
      for (int t = f + 1; t < hi; ++t) {
        const Best& first = window(f, t).best;
        const Pending& sub = split_best(t, r - 1, hi);
        Pending candidate{first.value + sub.sum, first.nodes + sub.nodes, {}};
        candidate.positions.reserve(sub.positions.size() + 1);
        candidate.positions.push_back(f);
        candidate.positions.insert(candidate.positions.end(),
                                   sub.positions.begin(), sub.positions.end());
        if (pending_better(candidate, best)) best = std::move(candidate);
      }
    }
    return split_memo_.emplace(key, std::move(best)).first->second;
  }

  // General families: depth-first enumeration of admissible min-sets.  Every
  // prefix of an admissible set is admissible (hereditariness), so pruning at
  // the first non-member prefix visits exactly the admissible sets.
  template <typename Consider>
  void dfs_candidates(int lo, int hi, Consider&& consider) {
    std::vector<int> positions;
    std::vector<int> elements;
    std::vector<Rational> sums{Rational(0)};
    std::vector<int> nodes{0};
    auto rec = [&](auto&& self, int last) -> void {
      if (!(positions.size() == 1 && positions.front() == lo)) {
        const Best& tail = window(last, hi).best;
        consider(Pending{sums.back() + tail.value, nodes.back() + tail.nodes,
                         positions});
      }
      for (int t = last + 1; t < hi; ++t) {
        elements.push_back(idx_[t]);
        if (oracle_.contains(elements)) {
          const Best& part = window(last, t).best;
          sums.push_back(sums.back() + part.value);
          nodes.push_back(nodes.back() + part.nodes);
          positions.push_back(t);
          self(self, t);
          positions.pop_back();
          sums.pop_back();
          nodes.pop_back();
        }
        elements.pop_back();
      }
    };
    for (int f = lo; f < hi; ++f) {
      elements.assign(1, idx_[f]);
      if (!oracle_.contains(elements)) continue;
      positions.assign(1, f);
      rec(rec, f);
    }
  }

  Rational theta_;
  FamilyOracle& oracle_;
  std::vector<int> idx_;
  std::vector<Rational> mag_;
  int k_ = 0;
  std::vector<std::optional<WindowEntry>> memo_;
  std::map<std::tuple<int, int, int>, Pending> split_memo_;
};

// The literal truncated iteration, used as the engine's internal
// cross-check.  Level 0 is the sup norm; level n+1 additionally maximises
// theta-weighted sums of level-n part values over admissible partitions,
// including the partition whose single part covers everything (harmless
// here, since the level index decreases).
class IterateDp {
 public:
  IterateDp(const Rational& theta, FamilyOracle& oracle, const SparseVector& x)
      : theta_(theta), oracle_(oracle) {
    for (const auto& [index, value] : x.entries()) {
      idx_.push_back(index);
      mag_.push_back(::abs(value));
    }
    k_ = static_cast<int>(idx_.size());
  }

  int support_count() const { return k_; }

  Rational value(int lo, int hi, int level) {
    if (lo == hi) return Rational(0);
    if (level == 0) {
      Rational sup(0);
      for (int i = lo; i < hi; ++i) {
        if (mag_[i] > sup) sup = mag_[i];
      }
      return sup;
    }
    auto key = std::tuple(lo, hi, level);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Rational out = value(lo, hi, level - 1);

    std::vector<int> positions;
    std::vector<int> elements;
    std::vector<Rational> sums{Rational(0)};
    auto consider = [&](int last) {
      Rational total = theta_ * (sums.back() + value(last, hi, level - 1));
      if (total > out) out = total;
    };
    auto rec = [&](auto&& self, int last) -> void {
      consider(last);
      for (int t = last + 1; t < hi; ++t) {
        elements.push_back(idx_[t]);
        if (oracle_.contains(elements)) {
          sums.push_back(sums.back() + value(last, t, level - 1));
          positions.push_back(t);
          self(self, t);
          positions.pop_back();
          sums.pop_back();
        }
        elements.pop_back();
      }
    };
    for (int f = lo; f < hi; ++f) {
      elements.assign(1, idx_[f]);
      if (!oracle_.contains(elements)) continue;
      positions.assign(1, f);
      sums.assign(1, Rational(0));
      rec(rec, f);
    }
    memo_.emplace(key, out);
    return out;
  }

 private:
  Rational theta_;
  FamilyOracle& oracle_;
  std::vector<int> idx_;
  std::vector<Rational> mag_;
  int k_ = 0;
  std::map<std::tuple<int, int, int>, Rational> memo_;
};

int default_max_support(const FamilySpec& family) {
  FamilyOracle probe(family);
  if (probe.cap_rule()) return 24;
  if (family.kind == FamilySpec::Kind::schreier &&
      family.level == Ordinal::from_natural(2)) {
    return 24;
  }
  return 16;
}

}  // namespace

NormEngine::NormEngine(SpaceSpec space, NormLimits limits)
    : space_(std::move(space)),
      max_support_(limits.max_support > 0 ? limits.max_support
                                          : default_max_support(space_.family)),
      oracle_(space_.family) {}

void NormEngine::check_support(const SparseVector& x) const {
  if (static_cast<int>(x.support_size()) > max_support_) {
    throw SafetyBoundError(
        "norm search refused: support size " +
        std::to_string(x.support_size()) + " exceeds the bound " +
        std::to_string(max_support_) + " for family " + space_.family.str());
  }
}

NormResult NormEngine::norm(const SparseVector& x) {
  if (x.is_zero()) return {Rational(0), NormCertificate::leaf(FiniteSet())};
  check_support(x);
  NormDp dp(space_, oracle_, x);
  const WindowEntry& root = dp.window(0, dp.support_count());
  value_cache_.emplace(x.abs().str(), root.best.value);
  return {root.best.value, root.best.cert};
}

Rational NormEngine::norm_value(const SparseVector& x) {
  if (x.is_zero()) return Rational(0);
  std::string key = x.abs().str();
  if (auto it = value_cache_.find(key); it != value_cache_.end()) {
    return it->second;
  }
  Rational value = norm(x).value;
  value_cache_.emplace(std::move(key), value);
  return value;
}

Rational NormEngine::t_part(const SparseVector& x) {
  if (x.is_zero()) {
    throw std::invalid_argument("t_part: x must be nonzero");
  }
  check_support(x);
  NormDp dp(space_, oracle_, x);
  const WindowEntry& root = dp.window(0, dp.support_count());
  // The partition whose single part covers the whole support is a valid
  // admissible partition (its min-set is the first support singleton); it is
  // excluded from the window search, so account for it here.
  Rational out = space_.theta * root.best.value;
  if (root.best_split && root.best_split->value > out) {
    out = root.best_split->value;
  }
  return out;
}

Rational NormEngine::iterate(const SparseVector& x, int level) {
  if (level < 0) throw std::invalid_argument("iterate: level must be >= 0");
  if (x.is_zero()) return Rational(0);
  check_support(x);
  IterateDp dp(space_.theta, oracle_, x);
  return dp.value(0, dp.support_count(), level);
}

Rational NormEngine::iterate_stabilized(const SparseVector& x) {
  if (x.is_zero()) return Rational(0);
  check_support(x);
  IterateDp dp(space_.theta, oracle_, x);
  int k = dp.support_count();
  int max_level = 2 * k + 8;
  for (int level = 1; level <= max_level; ++level) {
    bool stable = true;
    for (int lo = 0; lo < k && stable; ++lo) {
      for (int hi = lo + 1; hi <= k && stable; ++hi) {
        stable = dp.value(lo, hi, level) == dp.value(lo, hi, level - 1);
      }
    }
    if (stable) return dp.value(0, k, level);
  }
  throw std::runtime_error("iterate_stabilized: no fixed point reached");
}

NormResult tsirelson_norm(const SpaceSpec& space, const SparseVector& x,
                          NormLimits limits) {
  NormEngine engine(space, limits);
  return engine.norm(x);
}

Rational t_part(const SpaceSpec& space, const SparseVector& x) {
  NormEngine engine(space);
  return engine.t_part(x);
}

Rational norm_iterate(const SpaceSpec& space, const SparseVector& x,
                      int level) {
  NormEngine engine(space);
  return engine.iterate(x, level);
}

namespace {

Rational eval_certificate(const SpaceSpec& space, const SparseVector& x,
                          const NormCertificate& node,
                          const std::string& path) {
  if (node.kind == NormCertificate::Kind::sup_leaf) {
    Rational out(0);
    for (int i : node.leaf_set.elements()) {
      Rational magnitude = ::abs(x.at(i));
      if (magnitude > out) out = magnitude;
    }
    return out;
  }
  if (node.part_sets.empty()) {
    throw CertificateError(path, "partition node has no parts");
  }
  if (node.part_sets.size() != node.children.size()) {
    throw CertificateError(path, "parts and children differ in number");
  }
  std::vector<int> mins;
  for (std::size_t i = 0; i < node.part_sets.size(); ++i) {
    const FiniteSet& part = node.part_sets[i];
    std::string part_path = path + ".parts[" + std::to_string(i) + "]";
    if (part.empty()) throw CertificateError(part_path, "empty part");
    if (i > 0 && node.part_sets[i - 1].max() >= part.min()) {
      throw CertificateError(part_path, "parts are not consecutive");
    }
    mins.push_back(part.min());
  }
  FiniteSet min_set(mins);
  if (!contains(space.family, min_set)) {
    throw CertificateError(path, "min-set {" + min_set.str() +
                                     "} is not a member of " +
                                     space.family.str());
  }
  Rational sum(0);
  for (std::size_t i = 0; i < node.part_sets.size(); ++i) {
    sum += eval_certificate(space, x.restricted(node.part_sets[i]),
                            node.children[i],
                            path + ".parts[" + std::to_string(i) + "]");
  }
  return space.theta * sum;
}

}  // namespace

Rational certificate_value(const SpaceSpec& space, const SparseVector& x,
                           const NormCertificate& certificate) {
  return eval_certificate(space, x, certificate, "root");
}

Rational block_lower_bound(const SpaceSpec& space,
                           std::span<const SparseVector> blocks) {
  if (blocks.empty()) {
    throw std::invalid_argument("block_lower_bound: no blocks");
  }
  std::vector<int> mins;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].is_zero()) {
      throw std::invalid_argument("block_lower_bound: block " +
                                  std::to_string(i + 1) + " is zero");
    }
    if (i > 0 && blocks[i - 1].max_support() >= blocks[i].min_support()) {
      throw std::invalid_argument("block_lower_bound: blocks are not "
                                  "consecutively supported");
    }
    mins.push_back(blocks[i].min_support());
  }
  FiniteSet min_set(mins);
  if (!contains(space.family, min_set)) {
    throw std::invalid_argument("block_lower_bound: min-set {" +
                                min_set.str() + "} is not a member of " +
                                space.family.str());
  }
  NormEngine engine(space);
  Rational sum(0);
  for (const SparseVector& block : blocks) sum += engine.norm_value(block);
  return space.theta * sum;
}

std::string raw_over_theta_denominator(const NormResult& result,
                                       const Rational& theta) {
  if (result.witness.kind != NormCertificate::Kind::partition) {
    return to_string(result.value);
  }
  mpz_class den = theta.get_den();
  Rational scaled = result.value * Rational(den);
  if (scaled.get_den() == 1) {
    return scaled.get_num().get_str() + "/" + den.get_str();
  }
  return to_string(result.value);
}

bool initial_block_supnorm_check(const SpaceSpec& space,
                                 const SparseVector& x) {
  if (space.family.kind != FamilySpec::Kind::schreier ||
      space.family.level != Ordinal::from_natural(1)) {
    throw std::invalid_argument(
        "initial_block_supnorm_check: requires the level-1 family");
  }
  long block = space.initial_block();
  if (!x.is_zero() && x.max_support() > block) {
    throw std::invalid_argument(
        "initial_block_supnorm_check: support must lie in {1.." +
        std::to_string(block) + "}");
  }
  NormEngine engine(space);
  return engine.norm_value(x) == x.sup_norm();
}

}  // namespace tsirelson
