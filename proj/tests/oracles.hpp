#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tsirelson/family.hpp"
#include "tsirelson/rational.hpp"
#include "tsirelson/space.hpp"
#include "tsirelson/sparse_vector.hpp"

// Independent oracles that implement the definitions as literally as
// possible.  They deliberately share no code with the library internals they
// cross-check, and they enumerate everything (exponential, tiny inputs only).

namespace oracles {

inline tsirelson::Rational rat(const char* text) {
  return tsirelson::parse_rational(text);
}

inline tsirelson::SparseVector vec(const char* text) {
  return tsirelson::SparseVector::parse(text);
}

inline tsirelson::FiniteSet set(const char* text) {
  return tsirelson::FiniteSet::parse(text);
}

/// Closed form for the level-1 family: |F| <= min F.
inline bool level1_closed_form(const tsirelson::FiniteSet& f) {
  return f.empty() || static_cast<int>(f.size()) <= f.min();
}

/// Literal recursive membership: zero level by cardinality <= 1; successor
/// level by trying every d <= min F and every split of the sorted element
/// list into d consecutive nonempty segments; limit level by trying every
/// witness n <= min F.  Memoised, but otherwise brute force.
class BruteMembership {
 public:
  bool member(const tsirelson::Ordinal& level,
              const std::vector<int>& elements) {
    auto key = std::make_pair(level.str(), elements);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = compute(level, elements);
    memo_.emplace(std::move(key), result);
    return result;
  }

  bool member(const tsirelson::Ordinal& level, const tsirelson::FiniteSet& f) {
    return member(level, f.elements());
  }

 private:
  bool compute(const tsirelson::Ordinal& level,
               const std::vector<int>& elements) {
    if (elements.empty()) return true;
    switch (level.kind()) {
      case tsirelson::OrdinalKind::zero:
        return elements.size() <= 1;
      case tsirelson::OrdinalKind::successor: {
        tsirelson::Ordinal below = level.predecessor();
        int count = static_cast<int>(elements.size());
        int gaps = count - 1;
        for (std::uint32_t cuts = 0; cuts < (1u << gaps); ++cuts) {
          int parts = __builtin_popcount(cuts) + 1;
          if (parts > elements.front()) continue;
          bool all = true;
          std::vector<int> segment;
          for (int i = 0; i < count && all; ++i) {
            segment.push_back(elements[i]);
            bool cut_here = i < gaps && (cuts & (1u << i));
            if (cut_here || i == count - 1) {
              all = member(below, segment);
              segment.clear();
            }
          }
          if (all) return true;
        }
        return false;
      }
      case tsirelson::OrdinalKind::limit: {
        for (int n = 1; n <= elements.front(); ++n) {
          tsirelson::Ordinal step = level.fundamental_step(n).successor();
          if (member(step, elements)) return true;
        }
        return false;
      }
    }
    return false;
  }

  std::map<std::pair<std::string, std::vector<int>>, bool> memo_;
};

/// Literal truncated norm for one tiny vector.  Level 0 is the sup norm;
/// level n+1 additionally maximises theta-weighted sums of level-n part
/// values over ALL partitions into consecutive, possibly non-contiguous,
/// nonempty subsets of the support whose minima the brute membership oracle
/// admits.  Partition minima beyond the support are not enumerated: parts
/// meeting no support contribute zero, and dropping them only makes the
/// min-set easier to admit (hereditariness), so they never help.
class BruteNorm {
 public:
  BruteNorm(tsirelson::SpaceSpec space, const tsirelson::SparseVector& x)
      : space_(std::move(space)) {
    for (const auto& [index, value] : x.entries()) {
      idx_.push_back(index);
      mag_.push_back(::abs(value));
    }
    if (idx_.size() > 12) {
      throw std::invalid_argument("BruteNorm: support too large");
    }
  }

  tsirelson::Rational value(int level) {
    return compute((1u << idx_.size()) - 1, level);
  }

  /// Smallest level at which one more iteration changes no submask value.
  tsirelson::Rational stabilized() {
    std::uint32_t full = (1u << idx_.size()) - 1;
    for (int level = 1; level <= 2 * static_cast<int>(idx_.size()) + 8;
         ++level) {
      bool stable = true;
      for (std::uint32_t mask = 1; mask <= full && stable; ++mask) {
        stable = compute(mask, level) == compute(mask, level - 1);
      }
      if (stable) return compute(full, level);
    }
    throw std::runtime_error("BruteNorm: no fixed point");
  }

 private:
  bool admissible(const std::vector<int>& min_set) {
    if (space_.family.kind == tsirelson::FamilySpec::Kind::arithmetic) {
      return min_set.size() <= space_.family.bound;
    }
    return members_.member(space_.family.level, min_set);
  }

  tsirelson::Rational compute(std::uint32_t mask, int level) {
    if (mask == 0) return tsirelson::Rational(0);
    auto key = std::make_pair(mask, level);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    tsirelson::Rational best(0);
    std::vector<int> positions;
    for (std::size_t i = 0; i < idx_.size(); ++i) {
      if (mask & (1u << i)) {
        positions.push_back(static_cast<int>(i));
        if (mag_[i] > best) best = mag_[i];
      }
    }
    if (level > 0) {
      best = std::max(best, compute(mask, level - 1));
      std::vector<std::uint32_t> parts;
      // Each support point in ascending order is skipped, appended to the
      // last open part, or opens a new part; this enumerates exactly the
      // partitions into consecutive nonempty subsets.
      auto dfs = [&](auto&& self, std::size_t at) -> void {
        if (at == positions.size()) {
          if (parts.empty()) return;
          std::vector<int> min_set;
          for (std::uint32_t part : parts) {
            min_set.push_back(idx_[__builtin_ctz(part)]);
          }
          if (!admissible(min_set)) return;
          tsirelson::Rational total(0);
          for (std::uint32_t part : parts) {
            total += compute(part, level - 1);
          }
          total *= space_.theta;
          if (total > best) best = total;
          return;
        }
        std::uint32_t bit = 1u << positions[at];
        self(self, at + 1);  // skip
        if (!parts.empty()) {
          parts.back() |= bit;  // extend the last part
          self(self, at + 1);
          parts.back() &= ~bit;
        }
        parts.push_back(bit);  // open a new part
        self(self, at + 1);
        parts.pop_back();
      };
      dfs(dfs, 0);
    }
    memo_.emplace(key, best);
    return best;
  }

  tsirelson::SpaceSpec space_;
  std::vector<int> idx_;
  std::vector<tsirelson::Rational> mag_;
  BruteMembership members_;
  std::map<std::pair<std::uint32_t, int>, tsirelson::Rational> memo_;
};

}  // namespace oracles
