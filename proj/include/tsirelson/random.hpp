#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "tsirelson/rational.hpp"

namespace tsirelson {

/// Deterministic pseudo-random helper.  Built directly on the mt19937_64
/// output stream (which the standard pins down exactly), avoiding
/// std::uniform_int_distribution whose mapping is implementation-defined.
/// The slight modulo bias is irrelevant for test-case generation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform-ish value in [0, n).  n must be positive.
  int below(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

  /// Uniform-ish value in [lo, hi], inclusive.
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  bool flip() { return (gen_() & 1) != 0; }

  /// Nonzero rational with |numerator| in [1, max_num] and denominator in
  /// [1, max_den], canonicalised.
  Rational rational(int max_num, int max_den) {
    int num = range(1, max_num) * (flip() ? 1 : -1);
    int den = range(1, max_den);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  /// `count` distinct values from [lo, hi], sorted ascending.
  std::vector<int> distinct_sorted(int count, int lo, int hi) {
    std::vector<int> pool;
    for (int v = lo; v <= hi; ++v) pool.push_back(v);
    for (int i = 0; i < count && i < static_cast<int>(pool.size()); ++i) {
      std::swap(pool[i], pool[i + below(static_cast<int>(pool.size()) - i)]);
    }
    pool.resize(std::min<std::size_t>(count, pool.size()));
    std::sort(pool.begin(), pool.end());
    return pool;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace tsirelson
