#include "tsirelson/ordinal.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "tsirelson/errors.hpp"

namespace tsirelson {

namespace {

std::uint64_t parse_natural(std::string_view s, std::string_view what) {
  if (s.empty()) throw ParseError("ordinal: missing " + std::string(what));
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("ordinal: bad " + std::string(what) + " '" +
                       std::string(s) + "'");
    }
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("ordinal: " + std::string(what) + " '" + std::string(s) +
                     "' out of range");
  }
  return value;
}

// One term of the grammar; see the header.
Ordinal::Term parse_term(std::string_view s, std::uint32_t max_exponent) {
  if (s.empty()) throw ParseError("ordinal: empty term");
  if (s.front() != 'w') {
    std::uint64_t n = parse_natural(s, "natural");
    if (n == 0) throw ParseError("ordinal: term '0' is only valid alone");
    return {0, n};
  }
  s.remove_prefix(1);
  std::uint64_t exponent = 1;
  if (!s.empty() && s.front() == '^') {
    s.remove_prefix(1);
    auto star = s.find('*');
    exponent = parse_natural(s.substr(0, star), "exponent");
    if (exponent == 0) {
      throw ParseError("ordinal: write plain naturals instead of w^0");
    }
    s = star == std::string_view::npos ? std::string_view{} : s.substr(star);
  }
  if (exponent > max_exponent) {
    throw ParseError("ordinal: exponent " + std::to_string(exponent) +
                     " exceeds the configured bound " +
                     std::to_string(max_exponent));
  }
  std::uint64_t coefficient = 1;
  if (!s.empty()) {
    if (s.front() != '*') throw ParseError("ordinal: expected '*' in term");
    coefficient = parse_natural(s.substr(1), "coefficient");
    if (coefficient == 0) throw ParseError("ordinal: zero coefficient");
  }
  return {static_cast<std::uint32_t>(exponent), coefficient};
}

}  // namespace

Ordinal::Ordinal(std::vector<Term> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coefficient == 0) {
      throw std::invalid_argument("Ordinal: zero coefficient");
    }
    if (i > 0 && terms_[i - 1].exponent <= terms_[i].exponent) {
      throw std::invalid_argument(
          "Ordinal: exponents must strictly decrease");
    }
  }
}

Ordinal Ordinal::from_natural(std::uint64_t n) {
  if (n == 0) return {};
  return Ordinal({{0, n}});
}

Ordinal Ordinal::omega() { return Ordinal({{1, 1}}); }

Ordinal Ordinal::parse(std::string_view text, std::uint32_t max_exponent) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
  }
  if (cleaned.empty()) throw ParseError("ordinal: empty input");
  if (cleaned == "0") return {};

  std::vector<Term> terms;
  std::string_view rest = cleaned;
  while (true) {
    auto plus = rest.find('+');
    terms.push_back(parse_term(rest.substr(0, plus), max_exponent));
    if (terms.size() > 1 &&
        terms[terms.size() - 2].exponent <= terms.back().exponent) {
      throw ParseError("ordinal '" + cleaned +
                       "': exponents must strictly decrease");
    }
    if (plus == std::string_view::npos) break;
    rest = rest.substr(plus + 1);
  }
  return Ordinal(std::move(terms));
}

std::string Ordinal::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += '+';
    if (t.exponent == 0) {
      out += std::to_string(t.coefficient);
    } else {
      out += 'w';
      if (t.exponent > 1) out += '^' + std::to_string(t.exponent);
      if (t.coefficient > 1) out += '*' + std::to_string(t.coefficient);
    }
  }
  return out;
}

OrdinalKind Ordinal::kind() const {
  if (terms_.empty()) return OrdinalKind::zero;
  return terms_.back().exponent == 0 ? OrdinalKind::successor
                                     : OrdinalKind::limit;
}

Ordinal Ordinal::predecessor() const {
  if (kind() != OrdinalKind::successor) {
    throw std::invalid_argument("predecessor: ordinal is not a successor");
  }
  std::vector<Term> terms = terms_;
  if (--terms.back().coefficient == 0) terms.pop_back();
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

Ordinal Ordinal::successor() const {
  std::vector<Term> terms = terms_;
  if (!terms.empty() && terms.back().exponent == 0) {
    ++terms.back().coefficient;
  } else {
    terms.push_back({0, 1});
  }
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

Ordinal Ordinal::fundamental_step(int n) const {
  if (kind() != OrdinalKind::limit) {
    throw std::invalid_argument("fundamental_step: ordinal is not a limit");
  }
  if (n < 1) throw std::invalid_argument("fundamental_step: n must be >= 1");
  // Split off one copy of the final w^e term, then append w^(e-1) * n.
  std::vector<Term> terms = terms_;
  std::uint32_t e = terms.back().exponent;
  if (--terms.back().coefficient == 0) terms.pop_back();
  terms.push_back({e - 1, static_cast<std::uint64_t>(n)});
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

}  // namespace tsirelson
