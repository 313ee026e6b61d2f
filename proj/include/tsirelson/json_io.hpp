#pragma once

#include <json.hpp>

#include "tsirelson/family.hpp"
#include "tsirelson/finite_set.hpp"
#include "tsirelson/isometry.hpp"
#include "tsirelson/norm.hpp"
#include "tsirelson/space.hpp"
#include "tsirelson/sparse_vector.hpp"

namespace tsirelson {

/// All machine-readable output uses insertion-ordered JSON so that repeated
/// runs are byte-identical.  Rationals are rendered as fraction strings,
/// never as floating point.
using Json = nlohmann::ordered_json;

Json to_json(const FiniteSet& set);            // [2, 3, 5]
Json to_json(const SparseVector& x);           // {"1": "1", "5": "-2/3"}
Json to_json(const DecompositionTree& tree);
Json to_json(const NormCertificate& cert);
Json to_json(const OperatorSpec& op);
Json to_json(const IsometryReport& report);
Json to_json(const SwapCounterexample& report);
Json to_json(const RegularityReport& report);
Json to_json(const NestingReport& report);

/// Parsers throw ParseError on malformed input.
FiniteSet finite_set_from_json(const Json& j);
SparseVector sparse_vector_from_json(const Json& j);
NormCertificate certificate_from_json(const Json& j);
OperatorSpec operator_from_json(const Json& j);

}  // namespace tsirelson
