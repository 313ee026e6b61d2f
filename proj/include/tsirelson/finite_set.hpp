#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tsirelson {

/// A finite subset of the positive integers, stored strictly increasing.
class FiniteSet {
 public:
  FiniteSet() = default;  // empty set
  /// Validates: strictly increasing, all elements >= 1.
  explicit FiniteSet(std::vector<int> elements);

  /// Parses "2,3,5"; the empty string denotes the empty set.
  static FiniteSet parse(std::string_view text);
  /// "2,3,5"; the empty set prints as "{}".
  std::string str() const;

  bool empty() const { return elements_.empty(); }
  std::size_t size() const { return elements_.size(); }
  int min() const;  // throws on empty
  int max() const;  // throws on empty
  const std::vector<int>& elements() const { return elements_; }

  bool contains(int value) const;
  bool is_subset_of(const FiniteSet& other) const;
  /// Copy with one extra element inserted (must not already be present).
  FiniteSet with(int extra) const;

  /// True when every element of `a` precedes every element of `b`.
  /// Vacuously true if either set is empty.
  static bool entirely_before(const FiniteSet& a, const FiniteSet& b);

  friend auto operator<=>(const FiniteSet&, const FiniteSet&) = default;

 private:
  std::vector<int> elements_;
};

}  // namespace tsirelson
