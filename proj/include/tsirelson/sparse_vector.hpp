#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tsirelson/finite_set.hpp"
#include "tsirelson/rational.hpp"

namespace tsirelson {

/// A finitely supported vector with exact rational coordinates, indexed from
/// 1.  Zero coordinates are never stored.
class SparseVector {
 public:
  SparseVector() = default;

  static SparseVector unit(int index);
  /// Parses "1:1,4:1,5:-2/3".  The empty string and "0" denote zero.
  static SparseVector parse(std::string_view text);
  std::string str() const;  // "1:1,4:1"; zero prints as "0"

  /// Stores value at index (index >= 1); storing zero erases the entry.
  void set(int index, const Rational& value);
  Rational at(int index) const;  // 0 when absent

  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  std::vector<int> support() const;
  int min_support() const;  // throws on zero vector
  int max_support() const;  // throws on zero vector

  Rational sup_norm() const;
  Rational l1_norm() const;

  SparseVector restricted(const FiniteSet& to) const;
  /// Restriction to indices in [lo, hi], inclusive.
  SparseVector restricted_range(int lo, int hi) const;
  /// Coordinate-wise |x|.
  SparseVector abs() const;

  const std::map<int, Rational>& entries() const { return entries_; }

  SparseVector& operator+=(const SparseVector& other);
  friend SparseVector operator+(SparseVector a, const SparseVector& b) {
    a += b;
    return a;
  }
  friend SparseVector operator*(const Rational& c, const SparseVector& x);

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::map<int, Rational> entries_;
};

}  // namespace tsirelson
