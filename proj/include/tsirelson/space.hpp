#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "tsirelson/family.hpp"
#include "tsirelson/rational.hpp"

namespace tsirelson {

/// The data defining one norm: a weight theta in (0, 1/2] and the regular
/// family whose members make a partition admissible.
struct SpaceSpec {
  Rational theta;
  FamilySpec family;

  SpaceSpec(Rational theta_, FamilySpec family_)
      : theta(std::move(theta_)), family(std::move(family_)) {
    if (theta <= 0 || theta > Rational(1, 2)) {
      throw std::invalid_argument("SpaceSpec: theta must lie in (0, 1/2]");
    }
  }

  /// ceil(1/theta): the length of the initial segment of unit vectors on
  /// which the norm reduces to the sup norm (for the level-1 family).
  long initial_block() const { return ceil_inverse(theta); }

  std::string str() const {
    return "theta=" + to_string(theta) + ", family=" + family.str();
  }
};

}  // namespace tsirelson
