// Acceptance gate: one pass/fail line per criterion, exit 0 only when all
// pass.  Each criterion re-derives its expectations independently of the
// library code paths it exercises (oracles, closed forms, frozen values).

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tsirelson/isometry.hpp"
#include "tsirelson/norm.hpp"
#include "tsirelson/random.hpp"
#include "tsirelson/verify.hpp"

using namespace tsirelson;
using oracles::rat;

namespace {

struct Gate {
  bool all_pass = true;

  void report(int index, const std::string& label, bool pass,
              const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", index,
                label.c_str(), detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && pass;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

SpaceSpec space(const char* theta, const char* family) {
  return SpaceSpec{rat(theta), FamilySpec::parse(family)};
}

// Criterion 1: the worked swap counterexample, exactly, in under a second.
void criterion_1(Gate& gate) {
  auto start = std::chrono::steady_clock::now();
  SwapCounterexample c = swap_counterexample();
  double elapsed = seconds_since(start);

  bool pass = c.pass && c.norm_x.value == 1 && c.t_part_x == rat("20/21") &&
              c.norm_y.value == rat("10/7") && c.norm_y_raw == "30/21" &&
              !c.report.pass && c.report.witness.has_value() &&
              c.report.witness->norm_before == 1 &&
              c.report.witness->norm_after == rat("10/7") &&
              c.report.witness->vector == c.x && elapsed < 1.0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "norms (1, 30/21), t_part 20/21, witness found, %.3f s",
                elapsed);
  gate.report(1, "swap counterexample at theta 10/21 on S:1", pass, detail);
}

// Criteria 2 and 3 share one full-size run of the lemmas suite.
void criteria_2_3(Gate& gate) {
  auto start = std::chrono::steady_clock::now();
  SuiteResult lemmas = run_suite("lemmas");
  double elapsed = seconds_since(start);

  const Json& block = lemmas.report.at("unit_plus_block");
  bool pass2 = block.at("failures").empty() &&
               block.at("cases").get<long>() >= 6 * 200 && elapsed < 60.0;
  char detail2[160];
  std::snprintf(detail2, sizeof detail2,
                "%ld unit-plus-block cases across 3 thetas x 2 levels, %.2f s",
                block.at("cases").get<long>(), elapsed);
  gate.report(2, "unit-plus-block norm identity", pass2, detail2);

  const Json& indicator = lemmas.report.at("indicator_projection");
  bool pass3 = lemmas.pass && indicator.at("failures").empty() &&
               indicator.at("cases").get<long>() >= 2 * 2 * 300;
  char detail3[160];
  std::snprintf(detail3, sizeof detail3,
                "%ld indicator projections bounded by |E|-1",
                indicator.at("cases").get<long>());
  gate.report(3, "indicator projection bound", pass3, detail3);
}

// Criterion 4: block-sequence lower bounds never exceed the norm.
void criterion_4(Gate& gate) {
  SuiteResult suite = run_suite("inequalities");
  bool pass = suite.pass && suite.report.at("failures").empty() &&
              suite.report.at("cases").get<long>() >= 4 * 500;
  char detail[160];
  std::snprintf(detail, sizeof detail, "%ld admissible block sequences",
                suite.report.at("cases").get<long>());
  gate.report(4, "block lower bound vs norm", pass, detail);
}

// Criterion 5: on the initial block the norm is the sup norm, exhaustively.
void criterion_5(Gate& gate) {
  long checked = 0;
  bool pass = true;
  for (const char* theta : {"1/2", "10/21", "1/3"}) {
    SpaceSpec sp = space(theta, "S:1");
    int m = static_cast<int>(sp.initial_block());
    std::vector<int> coeff(static_cast<std::size_t>(m), -2);
    while (true) {
      SparseVector x;
      for (int j = 0; j < m; ++j) {
        x.set(j + 1, Rational(coeff[static_cast<std::size_t>(j)]));
      }
      pass = pass && initial_block_supnorm_check(sp, x);
      ++checked;
      int j = 0;
      while (j < m && coeff[static_cast<std::size_t>(j)] == 2) {
        coeff[static_cast<std::size_t>(j)] = -2;
        ++j;
      }
      if (j == m) break;
      ++coeff[static_cast<std::size_t>(j)];
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%ld grid vectors over {-2..2}^ceil(1/theta)", checked);
  gate.report(5, "initial-block sup-norm identity", pass, detail);
}

// Criterion 6: sign patterns never change the norm; sup/l1 sandwich holds.
void criterion_6(Gate& gate) {
  Rng rng(20260818);
  bool pass = true;
  long vectors = 0;
  for (const char* famtext : {"S:1", "S:2"}) {
    SpaceSpec sp = space(famtext[2] == '1' ? "1/2" : "10/21", famtext);
    for (int i = 0; i < 250; ++i) {
      SparseVector x;
      int size = 1 + rng.below(10);
      for (int index : rng.distinct_sorted(size, 1, 14)) {
        x.set(index, rng.rational(4, 4));
      }
      ++vectors;
      Rational base = NormEngine(sp).norm_value(x);
      pass = pass && x.sup_norm() <= base && base <= x.l1_norm();
      for (int p = 0; p < 8 && pass; ++p) {
        SparseVector flipped;
        for (const auto& [index, value] : x.entries()) {
          flipped.set(index, rng.flip() ? -value : value);
        }
        // A fresh engine per evaluation: no shared caches.
        pass = pass && NormEngine(sp).norm_value(flipped) == base;
      }
      if (!pass) break;
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%ld vectors x 8 sign patterns, sandwich included", vectors);
  gate.report(6, "unconditionality and sup/l1 sandwich", pass, detail);
}

// Criterion 7: the window DP agrees with the stabilised iteration.
void criterion_7(Gate& gate) {
  Rng rng(777);
  bool pass = true;
  long cases = 0;
  for (const char* theta : {"1/2", "10/21"}) {
    for (const char* famtext : {"S:1", "S:2"}) {
      NormEngine engine(space(theta, famtext));
      for (int i = 0; i < 100; ++i) {
        SparseVector x;
        int size = 1 + rng.below(8);
        for (int index : rng.distinct_sorted(size, 1, 12)) {
          x.set(index, rng.rational(4, 4));
        }
        ++cases;
        pass = pass && engine.norm_value(x) == engine.iterate_stabilized(x);
        if (!pass) break;
      }
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%ld vectors across 2 thetas x 2 levels", cases);
  gate.report(7, "dynamic program equals stabilised iteration", pass, detail);
}

// Criterion 8: membership agrees with the literal recursion on {1..12},
// and the fundamental-sequence steps nest.
void criterion_8(Gate& gate) {
  oracles::BruteMembership brute;
  bool pass = true;
  long agreements = 0;
  for (const char* famtext : {"S:1", "S:2", "S:3", "S:w"}) {
    FamilySpec family = FamilySpec::parse(famtext);
    for (std::uint32_t mask = 0; mask < (1u << 12) && pass; ++mask) {
      std::vector<int> elements;
      for (int i = 0; i < 12; ++i) {
        if (mask & (1u << i)) elements.push_back(i + 1);
      }
      FiniteSet f(elements);
      pass = contains(family, f) == brute.member(family.level, elements);
      ++agreements;
    }
  }
  NestingReport nesting = verify_nesting(Ordinal::omega(), 4, 12);
  pass = pass && nesting.pass;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%ld subsets of {1..12} across 4 levels, %d nesting pairs",
                agreements, nesting.pairs_checked);
  gate.report(8, "membership matches the literal recursion", pass, detail);
}

// Criterion 9: shape checks — sign changes always pass, the in-block swap
// passes at theta 1/2, and the counterexample operator classifies as
// (initial-block yes, sign-change no).
void criterion_9(Gate& gate) {
  bool pass = true;
  long reports = 0;

  OperatorSpec flips = OperatorSpec::sign_change({{1, -1}, {3, -1}, {6, -1}});
  for (const char* theta : {"1/2", "10/21"}) {
    for (const char* famtext : {"S:1", "S:2"}) {
      IsometryReport report = check_isometry(space(theta, famtext), flips);
      pass = pass && report.pass;
      ++reports;
    }
  }

  SamplePlan grid_only;
  grid_only.grid_levels = {1};
  grid_only.grid_support = 6;
  grid_only.random_count = 0;
  IsometryReport swap12 = check_isometry(
      space("1/2", "S:1"), OperatorSpec::transposition(1, 2), grid_only);
  pass = pass && swap12.pass && swap12.samples_tested == 728;

  OperatorSpec swap13 = OperatorSpec::transposition(1, 3);
  pass = pass && initial_block_form(swap13, rat("10/21")) &&
         !sign_change_form(swap13);
  IsometryReport caught = check_isometry(space("10/21", "S:1"), swap13);
  pass = pass && !caught.pass && caught.witness.has_value();

  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%ld sign-change reports, 728-point grid, forms (yes, no)",
                reports);
  gate.report(9, "operator shape characterisations", pass, detail);
}

}  // namespace

int main() {
  Gate gate;
  criterion_1(gate);
  criteria_2_3(gate);
  criterion_4(gate);
  criterion_5(gate);
  criterion_6(gate);
  criterion_7(gate);
  criterion_8(gate);
  criterion_9(gate);
  std::printf("%s\n", gate.all_pass ? "ACCEPTANCE: all criteria passed"
                                    : "ACCEPTANCE: FAILURES PRESENT");
  return gate.all_pass ? 0 : 1;
}
