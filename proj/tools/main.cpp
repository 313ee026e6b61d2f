#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsirelson/errors.hpp"
#include "tsirelson/family.hpp"
#include "tsirelson/isometry.hpp"
#include "tsirelson/json_io.hpp"
#include "tsirelson/norm.hpp"
#include "tsirelson/verify.hpp"

namespace {

using tsirelson::Json;

// Exit codes: 0 success (member / pass), 1 negative verdict (non-member /
// isometry failure / suite failure), 2 malformed input or violated bound.

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void emit(const Json& payload, bool compact) {
  std::cout << (compact ? payload.dump() : payload.dump(2)) << '\n';
}

struct MemberArgs {
  std::string family;
  std::string set;
  bool paranoid = false;
};

int run_member(const MemberArgs& args, bool compact) {
  Stopwatch clock;
  tsirelson::FamilySpec family = tsirelson::FamilySpec::parse(args.family);
  tsirelson::FiniteSet set = tsirelson::FiniteSet::parse(args.set);
  bool member = tsirelson::contains(
      family, set,
      args.paranoid ? tsirelson::LimitWitnessMode::exhaustive
                    : tsirelson::LimitWitnessMode::nested);
  Json out = Json::object();
  out["schema"] = "tsirelson/member/1";
  out["family"] = family.str();
  out["set"] = tsirelson::to_json(set);
  out["member"] = member;
  if (member && family.kind == tsirelson::FamilySpec::Kind::schreier) {
    auto tree = tsirelson::decompose(family, set);
    out["decomposition"] = tsirelson::to_json(*tree);
    out["decomposition_valid"] =
        tsirelson::validate_decomposition(family, set, *tree);
  }
  out["elapsed_ms"] = clock.elapsed_ms();
  emit(out, compact);
  return member ? 0 : 1;
}

struct NormArgs {
  std::string theta;
  std::string family;
  std::string vector;
  bool certificate = false;
  bool t_part = false;
  std::string verify_certificate;  // path to a certificate JSON file
  int max_support = 0;
};

int run_norm(const NormArgs& args, bool compact) {
  Stopwatch clock;
  tsirelson::SpaceSpec space(tsirelson::parse_rational(args.theta),
                             tsirelson::FamilySpec::parse(args.family));
  tsirelson::SparseVector x = tsirelson::SparseVector::parse(args.vector);
  tsirelson::NormEngine engine(space,
                               tsirelson::NormLimits{args.max_support});
  tsirelson::NormResult result = engine.norm(x);

  Json out = Json::object();
  out["schema"] = "tsirelson/norm/1";
  out["theta"] = tsirelson::to_string(space.theta);
  out["family"] = space.family.str();
  out["vector"] = tsirelson::to_json(x);
  out["value"] = tsirelson::to_string(result.value);
  out["raw"] = tsirelson::raw_over_theta_denominator(result, space.theta);
  if (args.t_part) {
    out["t_part"] = x.is_zero()
                        ? tsirelson::to_string(tsirelson::Rational(0))
                        : tsirelson::to_string(engine.t_part(x));
  }
  if (args.certificate) out["certificate"] = tsirelson::to_json(result.witness);
  if (!args.verify_certificate.empty()) {
    std::ifstream in(args.verify_certificate);
    if (!in) {
      throw tsirelson::ParseError("cannot open certificate file '" +
                                  args.verify_certificate + "'");
    }
    Json parsed = Json::parse(in);
    tsirelson::NormCertificate cert = tsirelson::certificate_from_json(parsed);
    tsirelson::Rational value = tsirelson::certificate_value(space, x, cert);
    out["certificate_value"] = tsirelson::to_string(value);
    out["certificate_matches_norm"] = value == result.value;
  }
  out["elapsed_ms"] = clock.elapsed_ms();
  emit(out, compact);
  return 0;
}

struct CheckOpArgs {
  std::string theta;
  std::string family;
  std::string op_file;
  tsirelson::SamplePlan plan;
};

int run_check_op(const CheckOpArgs& args, bool compact) {
  Stopwatch clock;
  tsirelson::SpaceSpec space(tsirelson::parse_rational(args.theta),
                             tsirelson::FamilySpec::parse(args.family));
  std::ifstream in(args.op_file);
  if (!in) {
    throw tsirelson::ParseError("cannot open operator file '" + args.op_file +
                                "'");
  }
  tsirelson::OperatorSpec op =
      tsirelson::operator_from_json(Json::parse(in));
  tsirelson::IsometryReport report =
      tsirelson::check_isometry(space, op, args.plan);

  Json out = Json::object();
  out["schema"] = "tsirelson/check-op/1";
  out["theta"] = tsirelson::to_string(space.theta);
  out["family"] = space.family.str();
  out["operator"] = tsirelson::to_json(op);
  out["initial_block_form"] = tsirelson::initial_block_form(op, space.theta);
  out["sign_change_form"] = tsirelson::sign_change_form(op);
  out["isometry"] = tsirelson::to_json(report);
  out["seed"] = args.plan.seed;
  out["elapsed_ms"] = clock.elapsed_ms();
  emit(out, compact);
  return report.pass ? 0 : 1;
}

struct VerifyArgs {
  std::string suite = "all";
  tsirelson::SuiteOptions options;
};

int run_verify(const VerifyArgs& args, bool compact) {
  Stopwatch clock;
  if (args.suite != "all" && !tsirelson::is_suite_name(args.suite)) {
    throw tsirelson::ParseError("unknown suite '" + args.suite + "'");
  }
  std::vector<tsirelson::SuiteResult> results;
  if (args.suite == "all") {
    results = tsirelson::run_all_suites(args.options);
  } else {
    results.push_back(tsirelson::run_suite(args.suite, args.options));
  }
  bool pass = true;
  Json suites = Json::array();
  for (const tsirelson::SuiteResult& result : results) {
    pass = pass && result.pass;
    Json row = Json::object();
    row["suite"] = result.name;
    row["pass"] = result.pass;
    row["checks"] = result.checks;
    row["report"] = result.report;
    suites.push_back(std::move(row));
  }
  Json out = Json::object();
  out["schema"] = "tsirelson/verify/1";
  out["seed"] = args.options.seed;
  out["pass"] = pass;
  out["suites"] = std::move(suites);
  out["elapsed_ms"] = clock.elapsed_ms();
  emit(out, compact);
  return pass ? 0 : 1;
}

int fail_with(const std::string& kind, const std::string& message,
              bool compact) {
  Json out = Json::object();
  out["schema"] = "tsirelson/error/1";
  out["kind"] = kind;
  out["error"] = message;
  emit(out, compact);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact norms, families, and isometry checks for T[theta, F]"};
  app.require_subcommand(1);
  bool compact = false;
  app.add_flag("--json", compact, "compact single-line JSON");

  MemberArgs member_args;
  CLI::App* member = app.add_subcommand(
      "member", "test family membership and show the decomposition");
  member->fallthrough();  // lets the global --json follow the subcommand
  member->add_option("--family", member_args.family, "family, e.g. S:1 or A:3")
      ->required();
  member->add_option("--set", member_args.set, "set, e.g. 4,5")->required();
  member->add_flag("--paranoid", member_args.paranoid,
                   "search all limit witnesses instead of the largest");

  NormArgs norm_args;
  CLI::App* norm = app.add_subcommand("norm", "compute the exact norm");
  norm->fallthrough();
  norm->add_option("--theta", norm_args.theta, "rational in (0, 1/2]")
      ->required();
  norm->add_option("--family", norm_args.family, "family, e.g. S:1")
      ->required();
  norm->add_option("--vector", norm_args.vector, "vector, e.g. 1:1,4:1,5:1")
      ->required();
  norm->add_flag("--certificate", norm_args.certificate,
                 "include the norming certificate");
  norm->add_flag("--t-part", norm_args.t_part,
                 "include the partition part of the norm");
  norm->add_option("--verify-certificate", norm_args.verify_certificate,
                   "evaluate a certificate JSON file against the vector");
  norm->add_option("--max-support", norm_args.max_support,
                   "override the support safety bound");

  CheckOpArgs op_args;
  CLI::App* check_op =
      app.add_subcommand("check-op", "test an operator for norm preservation");
  check_op->fallthrough();
  check_op->add_option("--theta", op_args.theta, "rational in (0, 1/2]")
      ->required();
  check_op->add_option("--family", op_args.family, "family, e.g. S:1")
      ->required();
  check_op->add_option("--op", op_args.op_file, "operator JSON file")
      ->required();
  check_op->add_option("--seed", op_args.plan.seed, "random-phase seed");
  check_op->add_option("--random-samples", op_args.plan.random_count,
                       "number of random vectors");
  check_op->add_option("--random-support", op_args.plan.random_support_max,
                       "max support size of random vectors");
  check_op->add_option("--random-index-max", op_args.plan.random_index_max,
                       "largest index random vectors may use");
  check_op->add_option("--grid-support", op_args.plan.grid_support,
                       "exhaustive grids run over supports inside {1..N}");
  check_op->add_option("--grid-levels", op_args.plan.grid_levels,
                       "coefficient bounds for the exhaustive grids");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->fallthrough();
  verify->add_option("--suite", verify_args.suite,
                     "remark-l1 | lemmas | inequalities | regularity | "
                     "nesting | all");
  verify->add_option("--seed", verify_args.options.seed, "generator seed");
  verify->add_option("--bound", verify_args.options.regularity_bound,
                     "universe bound for the regularity suite");
  int cases = 0;
  verify->add_option("--cases", cases,
                     "override per-pair case counts (for quick runs)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cases > 0) {
    verify_args.options.unit_plus_block_cases = cases;
    verify_args.options.indicator_samples = cases;
    verify_args.options.block_sequence_cases = cases;
  }

  try {
    if (member->parsed()) return run_member(member_args, compact);
    if (norm->parsed()) return run_norm(norm_args, compact);
    if (check_op->parsed()) return run_check_op(op_args, compact);
    if (verify->parsed()) return run_verify(verify_args, compact);
  } catch (const tsirelson::CertificateError& e) {
    return fail_with("certificate", e.what(), compact);
  } catch (const tsirelson::SafetyBoundError& e) {
    return fail_with("safety-bound", e.what(), compact);
  } catch (const tsirelson::ParseError& e) {
    return fail_with("parse", e.what(), compact);
  } catch (const Json::parse_error& e) {
    return fail_with("json", e.what(), compact);
  } catch (const std::invalid_argument& e) {
    return fail_with("input", e.what(), compact);
  } catch (const std::exception& e) {
    return fail_with("internal", e.what(), compact);
  }
  return 2;
}
