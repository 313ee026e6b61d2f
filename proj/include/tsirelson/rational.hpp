#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tsirelson {

/// Exact rational arithmetic.  All norm computations are carried out in
/// mpq_class; no floating point appears anywhere in a norm path.
using Rational = mpq_class;

/// Parses "p", "-p", or "p/q" (q > 0 after sign normalisation) into a
/// canonicalised rational.  Decimal notation is rejected.
Rational parse_rational(std::string_view text);

/// Canonical text form in lowest terms: "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

/// Smallest integer >= 1/q, for q > 0.
long ceil_inverse(const Rational& q);

}  // namespace tsirelson
