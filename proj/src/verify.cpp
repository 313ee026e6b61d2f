#include "tsirelson/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "tsirelson/errors.hpp"
#include "tsirelson/isometry.hpp"
#include "tsirelson/norm.hpp"
#include "tsirelson/random.hpp"

namespace tsirelson {

namespace {

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t salt) {
  return seed * 1000003ULL + salt;
}

SparseVector indicator(const FiniteSet& set) {
  SparseVector x;
  for (int element : set.elements()) x.set(element, Rational(1));
  return x;
}

void record_failure(Json& failures, Json entry) {
  if (failures.size() < 5) failures.push_back(std::move(entry));
}

// An instance (i, A): A is a family member lying entirely beyond i, of size
// at least `min_size`, such that A with i prepended leaves the family.  The
// norm of e_i + sum_{j in A} e_j must then be exactly theta * |A|.
struct UnitPlusBlock {
  int prefix = 0;
  FiniteSet block;
};

UnitPlusBlock generate_level1(Rng& rng, int min_size) {
  int size = min_size + rng.below(3);
  int prefix = 1 + rng.below(size);  // size+1 > prefix, so prepending breaks it
  int start = std::max(size, prefix + 1) + rng.below(4);
  std::vector<int> elements;
  int cursor = start;
  for (int t = 0; t < size; ++t) {
    elements.push_back(cursor);
    cursor += 1 + rng.below(3);
  }
  return {prefix, FiniteSet(std::move(elements))};
}

UnitPlusBlock generate_level2(Rng& rng, const FamilySpec& family,
                              int min_size) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    int parts = 1 + rng.below(3);
    int start = std::max(parts, 2) + rng.below(3);
    std::vector<int> elements;
    int cursor = start;
    for (int p = 0; p < parts; ++p) {
      int length = 1 + rng.below(std::min(cursor, 4));
      for (int l = 0; l < length; ++l) {
        elements.push_back(cursor);
        cursor += 1 + rng.below(2);
      }
      cursor += rng.below(2);
    }
    if (static_cast<int>(elements.size()) < min_size ||
        static_cast<int>(elements.size()) > 9) {
      continue;
    }
    FiniteSet block(std::move(elements));
    if (!contains(family, block)) continue;  // construction should prevent this
    int prefix = 0;
    for (int trial = 0; trial < 8 && prefix == 0; ++trial) {
      int candidate = 1 + rng.below(block.min() - 1);
      if (!contains(family, block.with(candidate))) prefix = candidate;
    }
    if (prefix == 0 && !contains(family, block.with(1))) prefix = 1;
    if (prefix == 0) continue;
    return {prefix, std::move(block)};
  }
  throw std::runtime_error("unit-plus-block generator stalled");
}

SuiteResult suite_remark(const SuiteOptions&) {
  SwapCounterexample cx = swap_counterexample();
  SuiteResult result{"remark-l1", cx.pass, cx.report.samples_tested + 8, {}};
  result.report = to_json(cx);
  return result;
}

SuiteResult suite_lemmas(const SuiteOptions& options) {
  SuiteResult result{"lemmas", true, 0, Json::object()};
  const std::vector<Rational> block_thetas{Rational(1, 2), Rational(1, 3),
                                           Rational(10, 21)};
  const std::vector<Rational> indicator_thetas{Rational(1, 2),
                                               Rational(10, 21)};

  Json block_failures = Json::array();
  long block_cases = 0;
  for (std::size_t t = 0; t < block_thetas.size(); ++t) {
    for (int level = 1; level <= 2; ++level) {
      const Rational& theta = block_thetas[t];
      FamilySpec family = FamilySpec::schreier(Ordinal::from_natural(level));
      SpaceSpec space(theta, family);
      NormEngine engine(space);
      int min_size = static_cast<int>(ceil_inverse(theta));
      Rng rng(sub_seed(options.seed, 100 + 10 * t + level));
      for (int c = 0; c < options.unit_plus_block_cases; ++c) {
        UnitPlusBlock instance =
            level == 1 ? generate_level1(rng, min_size)
                       : generate_level2(rng, family, min_size);
        const FiniteSet& block = instance.block;
        bool well_formed =
            contains(family, block) && instance.prefix < block.min() &&
            static_cast<int>(block.size()) >= min_size &&
            !contains(family, block.with(instance.prefix));
        SparseVector x = indicator(block);
        x.set(instance.prefix, Rational(1));
        Rational expected = theta * static_cast<long>(block.size());
        Rational actual = engine.norm_value(x);
        ++block_cases;
        ++result.checks;
        if (!well_formed || actual != expected) {
          result.pass = false;
          Json entry = Json::object();
          entry["theta"] = to_string(theta);
          entry["family"] = family.str();
          entry["prefix"] = instance.prefix;
          entry["block"] = to_json(block);
          entry["expected"] = to_string(expected);
          entry["actual"] = to_string(actual);
          entry["well_formed"] = well_formed;
          record_failure(block_failures, std::move(entry));
        }
      }
    }
  }
  Json block_report = Json::object();
  block_report["cases"] = block_cases;
  block_report["failures"] = std::move(block_failures);
  result.report["unit_plus_block"] = std::move(block_report);

  Json indicator_failures = Json::array();
  long indicator_cases = 0;
  for (std::size_t t = 0; t < indicator_thetas.size(); ++t) {
    for (int level = 1; level <= 2; ++level) {
      const Rational& theta = indicator_thetas[t];
      FamilySpec family = FamilySpec::schreier(Ordinal::from_natural(level));
      NormEngine engine(SpaceSpec(theta, family));
      Rng rng(sub_seed(options.seed, 200 + 10 * t + level));
      for (int s = 0; s < options.indicator_samples; ++s) {
        int size = 1 + rng.below(options.indicator_index_bound);
        std::vector<int> support =
            rng.distinct_sorted(size, 1, options.indicator_index_bound);
        int n = static_cast<int>(support.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
          int popcount = __builtin_popcount(mask);
          if (popcount < 2) continue;
          std::vector<int> projected;
          for (int b = 0; b < n; ++b) {
            if (mask & (1u << b)) projected.push_back(support[b]);
          }
          SparseVector slice = indicator(FiniteSet(std::move(projected)));
          Rational value = engine.norm_value(slice);
          ++indicator_cases;
          ++result.checks;
          if (value > popcount - 1) {
            result.pass = false;
            Json entry = Json::object();
            entry["theta"] = to_string(theta);
            entry["family"] = family.str();
            entry["projection"] = to_json(slice);
            entry["norm"] = to_string(value);
            entry["bound"] = popcount - 1;
            record_failure(indicator_failures, std::move(entry));
          }
        }
      }
    }
  }
  Json indicator_report = Json::object();
  indicator_report["cases"] = indicator_cases;
  indicator_report["failures"] = std::move(indicator_failures);
  result.report["indicator_projection"] = std::move(indicator_report);
  return result;
}

SuiteResult suite_inequalities(const SuiteOptions& options) {
  SuiteResult result{"inequalities", true, 0, Json::object()};
  const std::vector<Rational> thetas{Rational(1, 2), Rational(10, 21)};
  Json failures = Json::array();
  long cases = 0;
  for (std::size_t t = 0; t < thetas.size(); ++t) {
    for (int level = 1; level <= 2; ++level) {
      const Rational& theta = thetas[t];
      SpaceSpec space(theta,
                      FamilySpec::schreier(Ordinal::from_natural(level)));
      NormEngine engine(space);
      Rng rng(sub_seed(options.seed, 300 + 10 * t + level));
      for (int c = 0; c < options.block_sequence_cases; ++c) {
        int parts = 1 + rng.below(3);
        int cursor = std::max(parts, 2) + rng.below(4);
        std::vector<SparseVector> blocks;
        SparseVector sum;
        for (int p = 0; p < parts; ++p) {
          int length = 1 + rng.below(3);
          SparseVector block;
          for (int l = 0; l < length; ++l) {
            block.set(cursor, rng.rational(3, 3));
            cursor += 1 + rng.below(2);
          }
          cursor += rng.below(2);
          sum += block;
          blocks.push_back(std::move(block));
        }
        Rational bound = block_lower_bound(space, blocks);
        Rational total = engine.norm_value(sum);
        ++cases;
        ++result.checks;
        if (bound > total) {
          result.pass = false;
          Json entry = Json::object();
          entry["theta"] = to_string(theta);
          entry["family"] = space.family.str();
          Json parts_json = Json::array();
          for (const SparseVector& block : blocks) {
            parts_json.push_back(to_json(block));
          }
          entry["blocks"] = std::move(parts_json);
          entry["lower_bound"] = to_string(bound);
          entry["norm"] = to_string(total);
          record_failure(failures, std::move(entry));
        }
      }
    }
  }
  result.report["cases"] = cases;
  result.report["failures"] = std::move(failures);
  return result;
}

SuiteResult suite_regularity(const SuiteOptions& options) {
  SuiteResult result{"regularity", true, 0, Json::object()};
  Json rows = Json::object();
  for (const char* text : {"S:1", "S:2", "S:3", "S:w", "A:2"}) {
    RegularityReport report =
        verify_regularity(FamilySpec::parse(text), options.regularity_bound);
    ++result.checks;
    if (!report.pass()) result.pass = false;
    rows[text] = to_json(report);
  }
  // A deliberately broken family: {} and {2} without {3}; spreading must
  // flag the missing right-shift.
  std::vector<FiniteSet> broken{FiniteSet(), FiniteSet({2})};
  RegularityReport broken_report = verify_regularity(broken, 3);
  ++result.checks;
  bool broken_detected =
      broken_report.hereditary_pass && !broken_report.spreading_pass &&
      broken_report.spreading_counterexample ==
          std::make_pair(FiniteSet({2}), FiniteSet({3}));
  if (!broken_detected) result.pass = false;
  rows["explicit:{},{2}"] = to_json(broken_report);
  result.report["families"] = std::move(rows);
  return result;
}

SuiteResult suite_nesting(const SuiteOptions& options) {
  SuiteResult result{"nesting", true, 0, Json::object()};
  NestingReport omega = verify_nesting(Ordinal::parse("w"),
                                       options.nesting_steps,
                                       options.nesting_bound);
  NestingReport omega_twice = verify_nesting(Ordinal::parse("w*2"), 3, 10);
  result.pass = omega.pass && omega_twice.pass;
  result.checks = omega.pairs_checked + omega_twice.pairs_checked;
  result.report["w"] = to_json(omega);
  result.report["w*2"] = to_json(omega_twice);
  return result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "remark-l1", "lemmas", "inequalities", "regularity", "nesting"};
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "remark-l1") return suite_remark(options);
  if (name == "lemmas") return suite_lemmas(options);
  if (name == "inequalities") return suite_inequalities(options);
  if (name == "regularity") return suite_regularity(options);
  if (name == "nesting") return suite_nesting(options);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& options) {
  std::vector<SuiteResult> results;
  for (const std::string& name : suite_names()) {
    results.push_back(run_suite(name, options));
  }
  return results;
}

}  // namespace tsirelson
