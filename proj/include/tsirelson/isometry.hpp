#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tsirelson/norm.hpp"
#include "tsirelson/rational.hpp"
#include "tsirelson/space.hpp"
#include "tsirelson/sparse_vector.hpp"

namespace tsirelson {

// A finitely specified linear operator on finitely supported vectors.
// Either a signed permutation (finitely many moved points and sign flips,
// identity elsewhere) or an explicit matrix block acting on coordinates
// {1..block_size} and the identity beyond.
struct OperatorSpec {
  enum class Kind { signed_permutation, matrix_block };

  Kind kind = Kind::signed_permutation;
  std::map<int, int> signs;  // index -> -1 (unlisted indices keep sign +1)
  std::map<int, int> perm;   // moved points only; a bijection on its keys
  int block_size = 0;                 // matrix_block only
  std::vector<SparseVector> columns;  // columns[i] = image of e_{i+1}

  static OperatorSpec signed_permutation(std::map<int, int> perm,
                                         std::map<int, int> signs = {});
  static OperatorSpec sign_change(std::map<int, int> signs);
  static OperatorSpec transposition(int a, int b);
  static OperatorSpec matrix_block(std::vector<SparseVector> columns);
};

// Throws std::invalid_argument when the description is malformed (signs not
// in {-1,+1}, perm not a bijection of its keys, indices out of range, or a
// matrix column supported outside {1..block_size}).
void validate_operator(const OperatorSpec& op);

SparseVector apply_operator(const OperatorSpec& op, const SparseVector& x);

// When a matrix block is secretly a signed permutation (each column a single
// +-1 entry, targets a permutation of the block), returns that normal form.
// Signed permutations are returned unchanged.
std::optional<OperatorSpec> as_signed_permutation(const OperatorSpec& op);

// Does the operator act as a signed permutation whose permutation part fixes
// every index greater than ceil(1/theta)?  (Signs may flip anywhere.)
bool initial_block_form(const OperatorSpec& op, const Rational& theta);

// Is the operator a pure sign change (identity permutation)?
bool sign_change_form(const OperatorSpec& op);

// Deterministic search plan for norm-preservation testing: exhaustive small
// grids first, then seeded random rational vectors.
struct SamplePlan {
  std::vector<int> grid_levels{1, 2};  // grid of coefficients in {-L..L}
  int grid_support = 6;                // grid vectors live on {1..grid_support}
  int random_count = 200;
  int random_support_max = 8;
  int random_index_max = 12;
  int random_numerator_max = 4;
  int random_denominator_max = 4;
  std::uint64_t seed = 7;
};

struct IsometryWitness {
  SparseVector vector;
  Rational norm_before;
  Rational norm_after;
};

struct IsometryReport {
  bool pass = false;
  long samples_tested = 0;
  std::optional<IsometryWitness> witness;  // first violation found
};

// Tests ||Ux|| == ||x|| over the plan's samples, in a fixed deterministic
// order (grid levels ascending; supports by size then lexicographically;
// coefficients by magnitude, positive first).  Stops at the first violation.
IsometryReport check_isometry(const SpaceSpec& space, const OperatorSpec& op,
                              const SamplePlan& plan = {});

// The worked counterexample: theta = 10/21 on the level-1 family, where
// swapping coordinates 1 and 3 stays inside the initial block {1,2,3} yet
// fails to preserve the norm at x = e_1 + e_4 + e_5.
struct SwapCounterexample {
  SpaceSpec space;
  SparseVector x;
  SparseVector y;  // = Ux
  OperatorSpec op;
  NormResult norm_x;
  NormResult norm_y;
  Rational t_part_x;
  Rational t_part_y;
  std::string norm_x_raw;  // over the denominator of theta when possible
  std::string norm_y_raw;
  bool ux_equals_y = false;
  bool initial_block = false;  // operator fits the initial-block shape
  bool sign_change = false;    // operator is a pure sign change
  IsometryReport report;
  bool pass = false;  // every recomputed fact agrees with the expected one
};

SwapCounterexample swap_counterexample();

}  // namespace tsirelson
