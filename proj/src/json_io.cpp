#include "tsirelson/json_io.hpp"

#include <stdexcept>
#include <string>

#include "tsirelson/errors.hpp"

namespace tsirelson {

namespace {

Json fraction(const Rational& q) { return Json(to_string(q)); }

int int_from(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string(what) + ": expected an integer");
  }
  return j.get<int>();
}

int key_to_index(const std::string& key, const char* what) {
  try {
    std::size_t used = 0;
    int index = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return index;
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + ": bad index key '" + key + "'");
  }
}

}  // namespace

Json to_json(const FiniteSet& set) {
  Json out = Json::array();
  for (int element : set.elements()) out.push_back(element);
  return out;
}

FiniteSet finite_set_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("set: expected an array");
  std::vector<int> elements;
  for (const Json& item : j) elements.push_back(int_from(item, "set element"));
  try {
    return FiniteSet(std::move(elements));
  } catch (const std::invalid_argument& error) {
    throw ParseError(std::string("set: ") + error.what());
  }
}

Json to_json(const SparseVector& x) {
  Json out = Json::object();
  for (const auto& [index, value] : x.entries()) {
    out[std::to_string(index)] = fraction(value);
  }
  return out;
}

SparseVector sparse_vector_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("vector: expected an object");
  SparseVector out;
  for (const auto& [key, value] : j.items()) {
    int index = key_to_index(key, "vector");
    if (index < 1) throw ParseError("vector: index must be >= 1");
    if (!value.is_string()) {
      throw ParseError("vector: coordinate must be a fraction string");
    }
    if (out.at(index) != 0) throw ParseError("vector: duplicate index");
    out.set(index, parse_rational(value.get<std::string>()));
  }
  return out;
}

Json to_json(const DecompositionTree& tree) {
  Json out = Json::object();
  switch (tree.kind) {
    case DecompositionTree::Kind::leaf:
      out["kind"] = "leaf";
      out["set"] = to_json(tree.set);
      break;
    case DecompositionTree::Kind::successor: {
      out["kind"] = "successor";
      out["set"] = to_json(tree.set);
      Json children = Json::array();
      for (const DecompositionTree& child : tree.children) {
        children.push_back(to_json(child));
      }
      out["children"] = std::move(children);
      break;
    }
    case DecompositionTree::Kind::limit:
      out["kind"] = "limit";
      out["set"] = to_json(tree.set);
      out["witness"] = tree.witness;
      out["child"] = to_json(tree.children.front());
      break;
  }
  return out;
}

Json to_json(const NormCertificate& cert) {
  Json out = Json::object();
  if (cert.kind == NormCertificate::Kind::sup_leaf) {
    out["kind"] = "sup";
    out["set"] = to_json(cert.leaf_set);
    return out;
  }
  out["kind"] = "partition";
  Json parts = Json::array();
  for (const FiniteSet& part : cert.part_sets) parts.push_back(to_json(part));
  out["parts"] = std::move(parts);
  Json children = Json::array();
  for (const NormCertificate& child : cert.children) {
    children.push_back(to_json(child));
  }
  out["children"] = std::move(children);
  return out;
}

NormCertificate certificate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("certificate: expected an object with a 'kind'");
  }
  std::string kind = j["kind"].get<std::string>();
  if (kind == "sup") {
    if (!j.contains("set")) throw ParseError("certificate: sup needs a 'set'");
    return NormCertificate::leaf(finite_set_from_json(j["set"]));
  }
  if (kind != "partition") {
    throw ParseError("certificate: unknown kind '" + kind + "'");
  }
  if (!j.contains("parts") || !j.contains("children") ||
      !j["parts"].is_array() || !j["children"].is_array() ||
      j["parts"].size() != j["children"].size() || j["parts"].empty()) {
    throw ParseError(
        "certificate: partition needs matching 'parts' and 'children'");
  }
  std::vector<FiniteSet> parts;
  std::vector<NormCertificate> children;
  for (const Json& part : j["parts"]) parts.push_back(finite_set_from_json(part));
  for (const Json& child : j["children"]) {
    children.push_back(certificate_from_json(child));
  }
  return NormCertificate::split(std::move(parts), std::move(children));
}

Json to_json(const OperatorSpec& op) {
  Json out = Json::object();
  if (op.kind == OperatorSpec::Kind::signed_permutation) {
    out["kind"] = "signed_permutation";
    Json perm = Json::object();
    for (const auto& [from, to] : op.perm) perm[std::to_string(from)] = to;
    out["perm"] = std::move(perm);
    Json signs = Json::object();
    for (const auto& [index, sign] : op.signs) {
      signs[std::to_string(index)] = sign;
    }
    out["signs"] = std::move(signs);
    return out;
  }
  out["kind"] = "matrix";
  Json columns = Json::array();
  for (const SparseVector& column : op.columns) {
    columns.push_back(to_json(column));
  }
  out["columns"] = std::move(columns);
  return out;
}

OperatorSpec operator_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("operator: expected an object with a 'kind'");
  }
  std::string kind = j["kind"].get<std::string>();
  try {
    if (kind == "signed_permutation") {
      std::map<int, int> perm;
      if (j.contains("perm")) {
        if (!j["perm"].is_object()) throw ParseError("operator: bad 'perm'");
        for (const auto& [key, value] : j["perm"].items()) {
          perm[key_to_index(key, "operator perm")] =
              int_from(value, "operator perm target");
        }
      }
      std::map<int, int> signs;
      if (j.contains("signs")) {
        if (!j["signs"].is_object()) throw ParseError("operator: bad 'signs'");
        for (const auto& [key, value] : j["signs"].items()) {
          signs[key_to_index(key, "operator signs")] =
              int_from(value, "operator sign");
        }
      }
      return OperatorSpec::signed_permutation(std::move(perm),
                                              std::move(signs));
    }
    if (kind == "matrix") {
      if (!j.contains("columns") || !j["columns"].is_array() ||
          j["columns"].empty()) {
        throw ParseError("operator: matrix needs a nonempty 'columns' array");
      }
      std::vector<SparseVector> columns;
      for (const Json& column : j["columns"]) {
        columns.push_back(sparse_vector_from_json(column));
      }
      return OperatorSpec::matrix_block(std::move(columns));
    }
  } catch (const std::invalid_argument& error) {
    throw ParseError(std::string("operator: ") + error.what());
  }
  throw ParseError("operator: unknown kind '" + kind + "'");
}

Json to_json(const IsometryReport& report) {
  Json out = Json::object();
  out["pass"] = report.pass;
  out["samples_tested"] = report.samples_tested;
  if (report.witness) {
    Json witness = Json::object();
    witness["vector"] = to_json(report.witness->vector);
    witness["norm_before"] = fraction(report.witness->norm_before);
    witness["norm_after"] = fraction(report.witness->norm_after);
    out["witness"] = std::move(witness);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const SwapCounterexample& report) {
  Json out = Json::object();
  out["schema"] = "tsirelson/counterexample/1";
  Json space = Json::object();
  space["theta"] = fraction(report.space.theta);
  space["family"] = report.space.family.str();
  space["initial_block"] = report.space.initial_block();
  out["space"] = std::move(space);
  out["operator"] = to_json(report.op);
  out["x"] = to_json(report.x);
  out["y"] = to_json(report.y);
  out["ux_equals_y"] = report.ux_equals_y;
  auto norm_block = [](const NormResult& result, const std::string& raw,
                       const Rational& t_part_value) {
    Json block = Json::object();
    block["value"] = fraction(result.value);
    block["raw"] = raw;
    block["t_part"] = fraction(t_part_value);
    block["certificate"] = to_json(result.witness);
    return block;
  };
  out["norm_x"] = norm_block(report.norm_x, report.norm_x_raw, report.t_part_x);
  out["norm_y"] = norm_block(report.norm_y, report.norm_y_raw, report.t_part_y);
  out["initial_block_form"] = report.initial_block;
  out["sign_change_form"] = report.sign_change;
  out["isometry"] = to_json(report.report);
  out["pass"] = report.pass;
  return out;
}

Json to_json(const RegularityReport& report) {
  auto side = [](bool pass,
                 const std::optional<std::pair<FiniteSet, FiniteSet>>& pair,
                 const char* missing_key) {
    Json block = Json::object();
    block["pass"] = pass;
    if (pair) {
      Json counterexample = Json::object();
      counterexample["member"] = to_json(pair->first);
      counterexample[missing_key] = to_json(pair->second);
      block["counterexample"] = std::move(counterexample);
    } else {
      block["counterexample"] = nullptr;
    }
    return block;
  };
  Json out = Json::object();
  out["hereditary"] =
      side(report.hereditary_pass, report.hereditary_counterexample,
           "missing_subset");
  out["spreading"] =
      side(report.spreading_pass, report.spreading_counterexample,
           "missing_spread");
  out["compactness_note"] = report.compactness_note;
  out["universe_bound"] = report.universe_bound;
  out["pass"] = report.pass();
  return out;
}

Json to_json(const NestingReport& report) {
  Json out = Json::object();
  out["pass"] = report.pass;
  out["pairs_checked"] = report.pairs_checked;
  if (report.violation) {
    Json violation = Json::object();
    violation["step"] = report.violation->first;
    violation["set"] = to_json(report.violation->second);
    out["violation"] = std::move(violation);
  } else {
    out["violation"] = nullptr;
  }
  return out;
}

}  // namespace tsirelson
