#include "tsirelson/family.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "tsirelson/errors.hpp"

namespace tsirelson {

namespace {

// Shared machinery for membership and decomposition over one fixed element
// list.  Subproblems are contiguous windows [lo, hi) of that list, tagged
// with an interned ordinal level; both are memoised.
class Solver {
 public:
  Solver(std::vector<int> elements, SequencePolicy policy,
         LimitWitnessMode mode)
      : elems_(std::move(elements)), policy_(policy), mode_(mode) {}

  bool member(const Ordinal& level) {
    return member(intern(level), 0, static_cast<int>(elems_.size()));
  }

  std::optional<DecompositionTree> decompose(const Ordinal& level) {
    return decompose(intern(level), 0, static_cast<int>(elems_.size()));
  }

 private:
  int intern(const Ordinal& o) {
    auto [it, inserted] = ids_.try_emplace(o, static_cast<int>(ords_.size()));
    if (inserted) ords_.push_back(o);
    return it->second;
  }

  FiniteSet window_set(int lo, int hi) const {
    return FiniteSet(std::vector<int>(elems_.begin() + lo, elems_.begin() + hi));
  }

  // Is the window a member of level `oid`?
  bool member(int oid, int lo, int hi) {
    if (hi == lo) return true;
    auto key = std::tuple(oid, lo, hi);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool out = false;
    // By value: recursive calls intern new levels, which can reallocate
    // ords_ while this frame still needs its own level.
    const Ordinal level = ords_[oid];
    switch (level.kind()) {
      case OrdinalKind::zero:
        out = hi - lo <= 1;
        break;
      case OrdinalKind::successor: {
        int budget = static_cast<int>(
            std::min<long long>(elems_[lo], hi - lo));
        out = cover(intern(level.predecessor()), lo, hi, budget);
        break;
      }
      case OrdinalKind::limit: {
        int n_max = elems_[lo];
        if (mode_ == LimitWitnessMode::nested) {
          out = member(intern(step_level(level, n_max)), lo, hi);
        } else {
          for (int n = 1; n <= n_max && !out; ++n) {
            out = member(intern(step_level(level, n)), lo, hi);
          }
        }
        break;
      }
    }
    memo_.emplace(key, out);
    return out;
  }

  // Can the window be covered by at most `budget` consecutive nonempty parts,
  // each a member of level `beta`?
  bool cover(int beta, int lo, int hi, int budget) {
    if (budget < 1) return false;
    auto key = std::tuple(beta, lo, hi, budget);
    if (auto it = cover_memo_.find(key); it != cover_memo_.end()) {
      return it->second;
    }
    bool out = false;
    for (int mid = lo + 1; mid <= hi && !out; ++mid) {
      if (!member(beta, lo, mid)) continue;
      out = mid == hi || (budget >= 2 && cover(beta, mid, hi, budget - 1));
    }
    cover_memo_.emplace(key, out);
    return out;
  }

  // The level tested at step n of a limit ordinal's fundamental sequence.
  Ordinal step_level(const Ordinal& limit, int n) const {
    // policy_ == SequencePolicy::canonical (the only implemented value).
    (void)policy_;
    return limit.fundamental_step(n).successor();
  }

  std::optional<DecompositionTree> decompose(int oid, int lo, int hi) {
    if (hi - lo <= 1) {
      return DecompositionTree{DecompositionTree::Kind::leaf,
                               window_set(lo, hi), {}, 0};
    }
    // By value, for the same reallocation reason as in member().
    const Ordinal level = ords_[oid];
    switch (level.kind()) {
      case OrdinalKind::zero:
        return std::nullopt;
      case OrdinalKind::successor: {
        int beta = intern(level.predecessor());
        int budget = static_cast<int>(
            std::min<long long>(elems_[lo], hi - lo));
        std::vector<std::pair<int, int>> parts;
        if (!cover_split(beta, lo, hi, budget, parts)) return std::nullopt;
        DecompositionTree node{DecompositionTree::Kind::successor,
                               window_set(lo, hi), {}, 0};
        for (auto [a, b] : parts) {
          auto child = decompose(beta, a, b);
          if (!child) return std::nullopt;  // cover() guarantees otherwise
          node.children.push_back(std::move(*child));
        }
        return node;
      }
      case OrdinalKind::limit: {
        for (int n = 1; n <= elems_[lo]; ++n) {
          int step = intern(step_level(level, n));
          if (!member(step, lo, hi)) continue;
          auto child = decompose(step, lo, hi);
          if (!child) return std::nullopt;
          return DecompositionTree{DecompositionTree::Kind::limit,
                                   window_set(lo, hi),
                                   {std::move(*child)},
                                   n};
        }
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  // Like cover(), but records the chosen split.  Tries shorter first parts
  // first, so the reported decomposition is deterministic.
  bool cover_split(int beta, int lo, int hi, int budget,
                   std::vector<std::pair<int, int>>& parts) {
    if (budget < 1) return false;
    for (int mid = lo + 1; mid <= hi; ++mid) {
      if (!member(beta, lo, mid)) continue;
      if (mid == hi) {
        parts.emplace_back(lo, hi);
        return true;
      }
      if (budget >= 2 && cover(beta, mid, hi, budget - 1)) {
        parts.emplace_back(lo, mid);
        return cover_split(beta, mid, hi, budget - 1, parts);
      }
    }
    return false;
  }

  std::vector<int> elems_;
  SequencePolicy policy_;
  LimitWitnessMode mode_;
  std::vector<Ordinal> ords_;
  std::map<Ordinal, int> ids_;
  std::map<std::tuple<int, int, int>, bool> memo_;
  std::map<std::tuple<int, int, int, int>, bool> cover_memo_;
};

constexpr int kMaxEnumerationUniverse = 20;

template <typename Member>
RegularityReport verify_regularity_impl(Member&& is_member, int bound) {
  RegularityReport report;
  report.universe_bound = bound;
  report.compactness_note =
      "closure in the pointwise topology is not empirically falsifiable on a "
      "finite universe; hereditary + spreading checked exhaustively up to the "
      "bound";

  // Collect members as bitmasks over {1..bound}.
  std::vector<std::uint32_t> members;
  std::set<std::uint32_t> member_set;
  for (std::uint32_t mask = 0; mask < (1u << bound); ++mask) {
    std::vector<int> elems;
    for (int i = 0; i < bound; ++i) {
      if (mask & (1u << i)) elems.push_back(i + 1);
    }
    if (is_member(FiniteSet(elems))) {
      members.push_back(mask);
      member_set.insert(mask);
    }
  }
  auto to_set = [&](std::uint32_t mask) {
    std::vector<int> elems;
    for (int i = 0; i < bound; ++i) {
      if (mask & (1u << i)) elems.push_back(i + 1);
    }
    return FiniteSet(elems);
  };

  report.hereditary_pass = true;
  for (std::uint32_t m : members) {
    for (std::uint32_t sub = (m - 1) & m; sub != m && report.hereditary_pass;
         sub = (sub - 1) & m) {
      if (!member_set.count(sub)) {
        report.hereditary_pass = false;
        report.hereditary_counterexample = {to_set(m), to_set(sub)};
      }
      if (sub == 0) break;
    }
    if (!report.hereditary_pass) break;
  }

  // Spreading closure reduces to single-element right-shifts: a general
  // in-bound spread is a chain of +1 bumps applied largest element first.
  report.spreading_pass = true;
  for (std::uint32_t m : members) {
    FiniteSet f = to_set(m);
    const auto& e = f.elements();
    for (std::size_t i = 0; i < e.size() && report.spreading_pass; ++i) {
      int bumped = e[i] + 1;
      if (bumped > bound) continue;
      if (i + 1 < e.size() && bumped >= e[i + 1]) continue;
      std::uint32_t shifted = (m & ~(1u << (e[i] - 1))) | (1u << (bumped - 1));
      if (!member_set.count(shifted)) {
        report.spreading_pass = false;
        report.spreading_counterexample = {f, to_set(shifted)};
      }
    }
    if (!report.spreading_pass) break;
  }
  return report;
}

}  // namespace

FamilySpec FamilySpec::arithmetic(unsigned n) {
  if (n == 0) throw std::invalid_argument("FamilySpec: cardinality bound >= 1");
  FamilySpec spec;
  spec.kind = Kind::arithmetic;
  spec.bound = n;
  return spec;
}

FamilySpec FamilySpec::schreier(Ordinal alpha, SequencePolicy policy) {
  FamilySpec spec;
  spec.kind = Kind::schreier;
  spec.level = std::move(alpha);
  spec.policy = policy;
  return spec;
}

FamilySpec FamilySpec::parse(std::string_view text) {
  if (text.size() < 2 || text[1] != ':') {
    throw ParseError("family: expected 'A:<n>' or 'S:<ordinal>', got '" +
                     std::string(text) + "'");
  }
  std::string_view arg = text.substr(2);
  if (text[0] == 'A') {
    Ordinal n = Ordinal::parse(arg);
    if (!n.is_zero() && n.terms().front().exponent != 0) {
      throw ParseError("family: 'A:' takes a natural number");
    }
    std::uint64_t value = n.is_zero() ? 0 : n.terms().front().coefficient;
    if (value == 0 || value > 1u << 20) {
      throw ParseError("family: 'A:' bound out of range");
    }
    return arithmetic(static_cast<unsigned>(value));
  }
  if (text[0] == 'S') return schreier(Ordinal::parse(arg));
  throw ParseError("family: unknown kind '" + std::string(1, text[0]) + "'");
}

std::string FamilySpec::str() const {
  if (kind == Kind::arithmetic) return "A:" + std::to_string(bound);
  return "S:" + level.str();
}

bool contains(const FamilySpec& family, const FiniteSet& set,
              LimitWitnessMode mode) {
  if (family.kind == FamilySpec::Kind::arithmetic) {
    return set.size() <= family.bound;
  }
  Solver solver(set.elements(), family.policy, mode);
  return solver.member(family.level);
}

std::optional<DecompositionTree> decompose(const FamilySpec& family,
                                           const FiniteSet& set) {
  if (family.kind != FamilySpec::Kind::schreier) {
    throw std::invalid_argument("decompose: only schreier families have "
                                "decomposition trees");
  }
  Solver solver(set.elements(), family.policy, LimitWitnessMode::nested);
  return solver.decompose(family.level);
}

namespace {

bool validate_node(const Ordinal& level, SequencePolicy policy,
                   const FiniteSet& set, const DecompositionTree& node) {
  if (node.set != set) return false;
  switch (node.kind) {
    case DecompositionTree::Kind::leaf:
      // Singletons and the empty set belong to every level.
      return set.size() <= 1;
    case DecompositionTree::Kind::successor: {
      if (!level.is_successor()) return false;
      if (node.children.empty()) return false;
      Ordinal beta = level.predecessor();
      std::vector<int> merged;
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        const FiniteSet& part = node.children[i].set;
        if (part.empty()) return false;
        if (i > 0 && !FiniteSet::entirely_before(node.children[i - 1].set, part)) {
          return false;
        }
        if (!validate_node(beta, policy, part, node.children[i])) return false;
        merged.insert(merged.end(), part.elements().begin(),
                      part.elements().end());
      }
      if (FiniteSet(merged) != set) return false;
      return static_cast<int>(node.children.size()) <=
             node.children.front().set.min();
    }
    case DecompositionTree::Kind::limit: {
      if (!level.is_limit()) return false;
      if (node.children.size() != 1) return false;
      if (set.empty()) return false;
      if (node.witness < 1 || node.witness > set.min()) return false;
      Ordinal step = level.fundamental_step(node.witness).successor();
      return validate_node(step, policy, set, node.children.front());
    }
  }
  return false;
}

}  // namespace

bool validate_decomposition(const FamilySpec& family, const FiniteSet& set,
                            const DecompositionTree& tree) {
  if (family.kind != FamilySpec::Kind::schreier) return false;
  return validate_node(family.level, family.policy, set, tree);
}

bool is_maximal(const FamilySpec& family, const FiniteSet& set) {
  if (set.empty()) return false;  // every family extends the empty set
  if (!contains(family, set)) {
    throw std::invalid_argument("is_maximal: set is not a member of " +
                                family.str());
  }
  // Spreading: if some superset with an extra element anywhere were a member,
  // shifting that element to max(set)+1 stays a member, so the single
  // candidate below decides maximality.
  return !contains(family, set.with(set.max() + 1));
}

std::vector<FiniteSet> enumerate_members(const FamilySpec& family,
                                         int universe_bound,
                                         std::optional<int> min_element) {
  if (universe_bound < 1 || universe_bound > kMaxEnumerationUniverse) {
    throw SafetyBoundError("enumerate_members: universe bound must be in [1, " +
                           std::to_string(kMaxEnumerationUniverse) + "]");
  }
  std::vector<FiniteSet> out;
  for (std::uint32_t mask = 0; mask < (1u << universe_bound); ++mask) {
    std::vector<int> elems;
    for (int i = 0; i < universe_bound; ++i) {
      if (mask & (1u << i)) elems.push_back(i + 1);
    }
    if (min_element && (elems.empty() || elems.front() != *min_element)) {
      continue;
    }
    FiniteSet set(std::move(elems));
    if (contains(family, set)) out.push_back(std::move(set));
  }
  return out;
}

RegularityReport verify_regularity(const FamilySpec& family,
                                   int universe_bound) {
  if (universe_bound < 1 || universe_bound > kMaxEnumerationUniverse) {
    throw SafetyBoundError("verify_regularity: universe bound must be in [1, " +
                           std::to_string(kMaxEnumerationUniverse) + "]");
  }
  return verify_regularity_impl(
      [&](const FiniteSet& f) { return contains(family, f); }, universe_bound);
}

RegularityReport verify_regularity(std::span<const FiniteSet> members,
                                   int universe_bound) {
  if (universe_bound < 1 || universe_bound > kMaxEnumerationUniverse) {
    throw SafetyBoundError("verify_regularity: universe bound must be in [1, " +
                           std::to_string(kMaxEnumerationUniverse) + "]");
  }
  std::set<FiniteSet> table(members.begin(), members.end());
  return verify_regularity_impl(
      [&](const FiniteSet& f) { return table.count(f) != 0; }, universe_bound);
}

NestingReport verify_nesting(const Ordinal& alpha, int n_max,
                             int universe_bound, SequencePolicy policy) {
  if (!alpha.is_limit()) {
    throw std::invalid_argument("verify_nesting: ordinal must be a limit");
  }
  if (n_max < 1) {
    throw std::invalid_argument("verify_nesting: n_max must be >= 1");
  }
  NestingReport report;
  report.pass = true;
  for (int n = 1; n <= n_max; ++n) {
    FamilySpec lower = FamilySpec::schreier(alpha.fundamental_step(n), policy);
    FamilySpec upper =
        FamilySpec::schreier(alpha.fundamental_step(n + 1), policy);
    for (const FiniteSet& member : enumerate_members(lower, universe_bound)) {
      if (!contains(upper, member)) {
        report.pass = false;
        report.violation = {n, member};
        return report;
      }
    }
    ++report.pairs_checked;
  }
  return report;
}

bool FamilyOracle::contains(const std::vector<int>& elements) {
  if (auto it = cache_.find(elements); it != cache_.end()) return it->second;
  bool out = tsirelson::contains(spec_, FiniteSet(elements));
  cache_.emplace(elements, out);
  return out;
}

std::optional<FamilyOracle::CapRule> FamilyOracle::cap_rule() const {
  if (spec_.kind == FamilySpec::Kind::arithmetic) {
    return CapRule{false, static_cast<int>(spec_.bound)};
  }
  if (spec_.level.is_zero()) return CapRule{false, 1};
  if (spec_.level == Ordinal::from_natural(1)) return CapRule{true, 0};
  return std::nullopt;
}

}  // namespace tsirelson
