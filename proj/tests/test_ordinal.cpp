#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tsirelson/ordinal.hpp"
#include "tsirelson/random.hpp"

using tsirelson::Ordinal;
using tsirelson::OrdinalKind;
using tsirelson::Rng;

namespace {

Ordinal ord(const char* text) { return Ordinal::parse(text); }

/// A random CNF ordinal with small exponents/coefficients.
Ordinal random_ordinal(Rng& rng) {
  int terms = rng.below(4);
  std::vector<Ordinal::Term> list;
  int exponent = 6;
  for (int i = 0; i < terms; ++i) {
    exponent = rng.range(0, exponent - 1);  // strictly decreasing
    list.push_back({static_cast<std::uint32_t>(exponent),
                    static_cast<std::uint64_t>(rng.range(1, 5))});
    if (exponent == 0) break;
  }
  return Ordinal(std::vector<Ordinal::Term>(list));
}

}  // namespace

TEST_CASE("parse and format round-trip on the grammar examples") {
  CHECK(ord("0").str() == "0");
  CHECK(ord("0").is_zero());
  CHECK(ord("5").str() == "5");
  CHECK(ord("w").str() == "w");
  CHECK(ord("w*2").str() == "w*2");
  CHECK(ord("w*2+1").str() == "w*2+1");
  CHECK(ord("w^2").str() == "w^2");
  CHECK(ord("w^2+w*3+4").str() == "w^2+w*3+4");
  CHECK(ord("w^32").str() == "w^32");
}

TEST_CASE("parsed term lists are the expected normal forms") {
  const auto a = ord("w*2+1").terms();
  REQUIRE(a.size() == 2);
  CHECK(a[0] == Ordinal::Term{1, 2});
  CHECK(a[1] == Ordinal::Term{0, 1});

  const auto b = ord("w^2+w*3+4").terms();
  REQUIRE(b.size() == 3);
  CHECK(b[0] == Ordinal::Term{2, 1});
  CHECK(b[1] == Ordinal::Term{1, 3});
  CHECK(b[2] == Ordinal::Term{0, 4});

  CHECK(ord("0").terms().empty());
  CHECK(Ordinal::from_natural(7) == ord("7"));
  CHECK(Ordinal::omega() == ord("w"));
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(Ordinal::parse(""), std::exception);
  CHECK_THROWS_AS(Ordinal::parse("w^0"), std::exception);
  CHECK_THROWS_AS(Ordinal::parse("w*0"), std::exception);
  CHECK_THROWS_AS(Ordinal::parse("w+w"), std::exception);          // equal exponents
  CHECK_THROWS_AS(Ordinal::parse("1+w"), std::exception);          // increasing
  CHECK_THROWS_AS(Ordinal::parse("w^2+w^2"), std::exception);
  CHECK(Ordinal::parse(" w + 1 ") == ord("w+1"));                  // spaces ignored
  CHECK_THROWS_AS(Ordinal::parse("w^33"), std::exception);         // above the bound
  CHECK_NOTHROW(Ordinal::parse("w^33", 40));
  CHECK_THROWS_AS(Ordinal::parse("x"), std::exception);
  CHECK_THROWS_AS(Ordinal::parse("w^"), std::exception);
  CHECK_THROWS_AS(Ordinal::parse("w*"), std::exception);
  CHECK_THROWS_AS(Ordinal::parse("3+"), std::exception);
}

TEST_CASE("constructor validates CNF shape") {
  CHECK_THROWS_AS(Ordinal({{1, 0}}), std::exception);              // zero coefficient
  CHECK_THROWS_AS(Ordinal({{1, 1}, {1, 1}}), std::exception);      // equal exponents
  CHECK_THROWS_AS(Ordinal({{0, 1}, {1, 1}}), std::exception);      // increasing
  CHECK_NOTHROW(Ordinal({{2, 3}, {0, 1}}));
}

TEST_CASE("comparison follows ordinal order") {
  CHECK(ord("w+1") < ord("w*2"));
  CHECK(ord("5") == ord("5"));
  CHECK(ord("w^2") > ord("w*100+7"));
  CHECK(ord("0") < ord("1"));
  CHECK(ord("17") < ord("w"));
  CHECK(ord("w*2+3") < ord("w*3"));
  CHECK(ord("w^3") > ord("w^2+w*9+9"));
  CHECK(compare(ord("w"), ord("w+1")) == std::strong_ordering::less);
  CHECK(compare(ord("w"), ord("w")) == std::strong_ordering::equal);
}

TEST_CASE("kind classification and predecessor/successor") {
  CHECK(ord("0").kind() == OrdinalKind::zero);
  CHECK(ord("1").kind() == OrdinalKind::successor);
  CHECK(ord("w*2+3").kind() == OrdinalKind::successor);
  CHECK(ord("w").kind() == OrdinalKind::limit);
  CHECK(ord("w^3").kind() == OrdinalKind::limit);
  CHECK(ord("w^2+w").kind() == OrdinalKind::limit);

  CHECK(ord("w*2+3").predecessor() == ord("w*2+2"));
  CHECK(ord("w*2+1").predecessor() == ord("w*2"));
  CHECK(ord("1").predecessor() == ord("0"));
  CHECK(ord("0").successor() == ord("1"));
  CHECK(ord("w").successor() == ord("w+1"));
  CHECK(ord("w*2").successor() == ord("w*2+1"));
  CHECK_THROWS_AS(ord("w").predecessor(), std::exception);
  CHECK_THROWS_AS(ord("0").predecessor(), std::exception);
}

TEST_CASE("fundamental sequence steps match the canonical choice") {
  CHECK(ord("w").fundamental_step(3) == ord("3"));
  CHECK(ord("w").fundamental_step(1) == ord("1"));
  CHECK(ord("w^2").fundamental_step(2) == ord("w*2"));
  CHECK(ord("w*2").fundamental_step(4) == ord("w+4"));
  CHECK(ord("w^3+w^2").fundamental_step(5) == ord("w^3+w*5"));
  CHECK(ord("w^2+w").fundamental_step(2) == ord("w^2+2"));
  CHECK_THROWS_AS(ord("w+1").fundamental_step(1), std::exception);
  CHECK_THROWS_AS(ord("0").fundamental_step(1), std::exception);
  CHECK_THROWS_AS(ord("w").fundamental_step(0), std::exception);
}

TEST_CASE("property: parse/str round-trip on generated ordinals") {
  Rng rng(41);
  for (int i = 0; i < 1000; ++i) {
    Ordinal a = random_ordinal(rng);
    CHECK(Ordinal::parse(a.str()) == a);
  }
}

TEST_CASE("property: comparison is a strict total order on triples") {
  Rng rng(42);
  for (int i = 0; i < 400; ++i) {
    Ordinal a = random_ordinal(rng);
    Ordinal b = random_ordinal(rng);
    Ordinal c = random_ordinal(rng);
    // antisymmetry
    CHECK((a < b) == (b > a));
    CHECK((a == b) == !(a < b || b < a));
    // transitivity
    if (a < b && b < c) CHECK(a < c);
    if (a == b && b == c) CHECK(a == c);
  }
}

TEST_CASE("property: successor and predecessor invert each other") {
  Rng rng(43);
  for (int i = 0; i < 400; ++i) {
    Ordinal a = random_ordinal(rng);
    CHECK(a.successor().predecessor() == a);
    CHECK(a < a.successor());
    CHECK(a.successor().kind() == OrdinalKind::successor);
    if (a.is_successor()) {
      CHECK(a.predecessor().successor() == a);
      CHECK(a.predecessor() < a);
    }
  }
}

TEST_CASE("property: fundamental steps increase strictly and stay below") {
  Rng rng(44);
  int limits_seen = 0;
  for (int i = 0; i < 2000 && limits_seen < 300; ++i) {
    Ordinal a = random_ordinal(rng);
    if (!a.is_limit()) continue;
    ++limits_seen;
    Ordinal prev = a.fundamental_step(1);
    CHECK(prev < a);
    for (int n = 2; n <= 6; ++n) {
      Ordinal next = a.fundamental_step(n);
      CHECK(prev < next);
      CHECK(next < a);
      CHECK(next.successor() < a);  // the successor step also stays below
      prev = next;
    }
  }
  CHECK(limits_seen == 300);
}
