#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tsirelson {

enum class OrdinalKind { zero, successor, limit };

/// An ordinal below w^w in Cantor normal form: a sum of terms w^e * c with
/// strictly decreasing finite exponents e and coefficients c >= 1.  The empty
/// sum is 0.  Values are immutable after construction.
///
/// Text grammar (no whitespace): term ("+" term)*, where
///   term := "w^" K "*" C | "w^" K | "w*" C | "w" | N
/// with K >= 1, C >= 1, N >= 0 ("0" only as the whole expression).  Terms must
/// appear in strictly decreasing exponent order, so parse/format round-trip.
class Ordinal {
 public:
  struct Term {
    std::uint32_t exponent = 0;
    std::uint64_t coefficient = 0;
    friend auto operator<=>(const Term&, const Term&) = default;
  };

  /// Largest exponent the default parser accepts; keeps accidental
  /// pathological inputs (and the recursions they would seed) out.
  static constexpr std::uint32_t kDefaultMaxExponent = 32;

  Ordinal() = default;  // zero
  /// Validates CNF shape: strictly decreasing exponents, coefficients >= 1.
  explicit Ordinal(std::vector<Term> terms);

  static Ordinal from_natural(std::uint64_t n);
  static Ordinal omega();

  static Ordinal parse(std::string_view text,
                       std::uint32_t max_exponent = kDefaultMaxExponent);
  std::string str() const;

  OrdinalKind kind() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_successor() const { return kind() == OrdinalKind::successor; }
  bool is_limit() const { return kind() == OrdinalKind::limit; }

  /// The ordinal b with b + 1 == *this.  Requires kind() == successor.
  Ordinal predecessor() const;
  /// *this + 1.
  Ordinal successor() const;

  /// Step n >= 1 of the canonical fundamental sequence of a limit ordinal:
  /// writing *this = g + w^e (e >= 1), returns g + w^(e-1) * n.  The steps
  /// increase strictly with n and converge to *this from below.
  Ordinal fundamental_step(int n) const;

  const std::vector<Term>& terms() const { return terms_; }

  /// CNF order: lexicographic on the term list; a proper prefix is smaller.
  friend auto operator<=>(const Ordinal&, const Ordinal&) = default;

 private:
  std::vector<Term> terms_;
};

inline std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  return a <=> b;
}

}  // namespace tsirelson
