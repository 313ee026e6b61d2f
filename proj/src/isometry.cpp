#include "tsirelson/isometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "tsirelson/random.hpp"

namespace tsirelson {

namespace {

void normalize_signed_permutation(OperatorSpec& op) {
  for (auto it = op.perm.begin(); it != op.perm.end();) {
    it = it->first == it->second ? op.perm.erase(it) : std::next(it);
  }
  for (auto it = op.signs.begin(); it != op.signs.end();) {
    it = it->second == 1 ? op.signs.erase(it) : std::next(it);
  }
}

}  // namespace

OperatorSpec OperatorSpec::signed_permutation(std::map<int, int> perm,
                                              std::map<int, int> signs) {
  OperatorSpec op;
  op.kind = Kind::signed_permutation;
  op.perm = std::move(perm);
  op.signs = std::move(signs);
  normalize_signed_permutation(op);
  validate_operator(op);
  return op;
}

OperatorSpec OperatorSpec::sign_change(std::map<int, int> signs) {
  return signed_permutation({}, std::move(signs));
}

OperatorSpec OperatorSpec::transposition(int a, int b) {
  if (a == b) throw std::invalid_argument("transposition: equal indices");
  return signed_permutation({{a, b}, {b, a}});
}

OperatorSpec OperatorSpec::matrix_block(std::vector<SparseVector> columns) {
  OperatorSpec op;
  op.kind = Kind::matrix_block;
  op.block_size = static_cast<int>(columns.size());
  op.columns = std::move(columns);
  validate_operator(op);
  return op;
}

void validate_operator(const OperatorSpec& op) {
  for (const auto& [index, sign] : op.signs) {
    if (index < 1) throw std::invalid_argument("operator: sign index < 1");
    if (sign != 1 && sign != -1) {
      throw std::invalid_argument("operator: sign must be -1 or +1");
    }
  }
  if (op.kind == OperatorSpec::Kind::signed_permutation) {
    if (op.block_size != 0 || !op.columns.empty()) {
      throw std::invalid_argument(
          "operator: signed permutation must not carry matrix data");
    }
    std::vector<int> keys;
    std::vector<int> images;
    for (const auto& [from, to] : op.perm) {
      if (from < 1 || to < 1) {
        throw std::invalid_argument("operator: permutation index < 1");
      }
      keys.push_back(from);
      images.push_back(to);
    }
    std::sort(images.begin(), images.end());
    if (images != keys) {
      throw std::invalid_argument(
          "operator: permutation must map its moved points onto themselves");
    }
  } else {
    if (!op.perm.empty()) {
      throw std::invalid_argument(
          "operator: matrix block must not carry a permutation");
    }
    if (!op.signs.empty()) {
      throw std::invalid_argument(
          "operator: matrix block must not carry sign flips");
    }
    if (op.block_size < 1 ||
        static_cast<int>(op.columns.size()) != op.block_size) {
      throw std::invalid_argument(
          "operator: matrix block needs one column per coordinate");
    }
    for (const SparseVector& column : op.columns) {
      if (!column.is_zero() && column.max_support() > op.block_size) {
        throw std::invalid_argument(
            "operator: matrix column supported outside the block");
      }
    }
  }
}

SparseVector apply_operator(const OperatorSpec& op, const SparseVector& x) {
  validate_operator(op);
  SparseVector out;
  if (op.kind == OperatorSpec::Kind::signed_permutation) {
    for (const auto& [index, value] : x.entries()) {
      auto moved = op.perm.find(index);
      int target = moved == op.perm.end() ? index : moved->second;
      auto flipped = op.signs.find(index);
      Rational image = flipped == op.signs.end() ? value : Rational(-value);
      out.set(target, out.at(target) + image);
    }
  } else {
    for (const auto& [index, value] : x.entries()) {
      if (index > op.block_size) {
        out.set(index, out.at(index) + value);
        continue;
      }
      for (const auto& [target, coeff] : op.columns[index - 1].entries()) {
        out.set(target, out.at(target) + value * coeff);
      }
    }
  }
  return out;
}

std::optional<OperatorSpec> as_signed_permutation(const OperatorSpec& op) {
  validate_operator(op);
  if (op.kind == OperatorSpec::Kind::signed_permutation) return op;
  std::map<int, int> perm;
  std::map<int, int> signs;
  std::set<int> targets;
  for (int i = 1; i <= op.block_size; ++i) {
    const auto& entries = op.columns[i - 1].entries();
    if (entries.size() != 1) return std::nullopt;
    const auto& [target, coeff] = *entries.begin();
    if (coeff != 1 && coeff != -1) return std::nullopt;
    if (!targets.insert(target).second) return std::nullopt;
    perm[i] = target;
    if (coeff == -1) signs[i] = -1;
  }
  // Targets are distinct and lie in {1..block_size}, hence a permutation.
  return OperatorSpec::signed_permutation(std::move(perm), std::move(signs));
}

bool initial_block_form(const OperatorSpec& op, const Rational& theta) {
  auto normal = as_signed_permutation(op);
  if (!normal) return false;
  long block = ceil_inverse(theta);
  for (const auto& [from, to] : normal->perm) {
    if (from > block || to > block) return false;
  }
  return true;
}

bool sign_change_form(const OperatorSpec& op) {
  auto normal = as_signed_permutation(op);
  return normal && normal->perm.empty();
}

namespace {

// Advances `combo` to the next size-|combo| subset of {1..n} in
// lexicographic order; false once exhausted.
bool next_combination(std::vector<int>& combo, int n) {
  int k = static_cast<int>(combo.size());
  for (int i = k - 1; i >= 0; --i) {
    if (combo[i] < n - (k - 1 - i)) {
      ++combo[i];
      for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

IsometryReport check_isometry(const SpaceSpec& space, const OperatorSpec& op,
                              const SamplePlan& plan) {
  validate_operator(op);
  NormEngine engine(space);
  IsometryReport report;
  auto holds_at = [&](const SparseVector& x) {
    ++report.samples_tested;
    Rational before = engine.norm_value(x);
    Rational after = engine.norm_value(apply_operator(op, x));
    if (before == after) return true;
    report.witness = IsometryWitness{x, before, after};
    return false;
  };

  std::vector<int> levels = plan.grid_levels;
  std::erase_if(levels, [](int level) { return level < 1; });
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  int covered = 0;  // magnitudes fully tested by earlier levels
  for (int level : levels) {
    std::vector<int> values;
    for (int magnitude = 1; magnitude <= level; ++magnitude) {
      values.push_back(magnitude);
      values.push_back(-magnitude);
    }
    for (int size = 1; size <= plan.grid_support; ++size) {
      std::vector<int> support(size);
      for (int i = 0; i < size; ++i) support[i] = i + 1;
      do {
        std::vector<int> digit(size, 0);
        while (true) {
          int peak = 0;
          for (int d : digit) peak = std::max(peak, std::abs(values[d]));
          if (peak > covered) {
            SparseVector x;
            for (int p = 0; p < size; ++p) {
              x.set(support[p], Rational(values[digit[p]]));
            }
            if (!holds_at(x)) return report;
          }
          int pos = size - 1;
          while (pos >= 0 &&
                 ++digit[pos] == static_cast<int>(values.size())) {
            digit[pos] = 0;
            --pos;
          }
          if (pos < 0) break;
        }
      } while (next_combination(support, plan.grid_support));
    }
    covered = level;
  }

  Rng rng(plan.seed);
  for (int sample = 0; sample < plan.random_count; ++sample) {
    int size = 1 + rng.below(plan.random_support_max);
    SparseVector x;
    for (int index : rng.distinct_sorted(size, 1, plan.random_index_max)) {
      x.set(index,
            rng.rational(plan.random_numerator_max, plan.random_denominator_max));
    }
    if (!holds_at(x)) return report;
  }
  report.pass = true;
  return report;
}

SwapCounterexample swap_counterexample() {
  SpaceSpec space(Rational(10, 21),
                  FamilySpec::schreier(Ordinal::from_natural(1)));
  SwapCounterexample out{.space = space,
                         .x = SparseVector::unit(1) + SparseVector::unit(4) +
                              SparseVector::unit(5),
                         .y = {},
                         .op = OperatorSpec::transposition(1, 3),
                         .norm_x = {},
                         .norm_y = {},
                         .t_part_x = {},
                         .t_part_y = {},
                         .norm_x_raw = {},
                         .norm_y_raw = {},
                         .ux_equals_y = false,
                         .initial_block = false,
                         .sign_change = false,
                         .report = {},
                         .pass = false};
  out.y = apply_operator(out.op, out.x);

  NormEngine engine(space);
  out.norm_x = engine.norm(out.x);
  out.norm_y = engine.norm(out.y);
  out.t_part_x = engine.t_part(out.x);
  out.t_part_y = engine.t_part(out.y);
  out.norm_x_raw = raw_over_theta_denominator(out.norm_x, space.theta);
  out.norm_y_raw = raw_over_theta_denominator(out.norm_y, space.theta);

  SparseVector expected_y =
      SparseVector::unit(3) + SparseVector::unit(4) + SparseVector::unit(5);
  out.ux_equals_y = out.y == expected_y;
  out.initial_block = initial_block_form(out.op, space.theta);
  out.sign_change = sign_change_form(out.op);
  out.report = check_isometry(space, out.op);

  const Rational y_norm(10, 7);  // 30/21 in lowest terms
  out.pass = out.norm_x.value == 1 && out.t_part_x == Rational(20, 21) &&
             out.norm_y.value == y_norm && out.t_part_y == y_norm &&
             out.ux_equals_y && out.initial_block && !out.sign_change &&
             !out.report.pass && out.report.witness.has_value() &&
             out.report.witness->vector == out.x &&
             out.report.witness->norm_before == 1 &&
             out.report.witness->norm_after == y_norm;
  return out;
}

}  // namespace tsirelson
