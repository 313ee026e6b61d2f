#include "tsirelson/rational.hpp"

#include <cctype>

#include "tsirelson/errors.hpp"

namespace tsirelson {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::string_view num = rest;
  std::string_view den = "1";
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num = rest.substr(0, slash);
    den = rest.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("bad rational '" + std::string(text) +
                     "': expected p, -p, or p/q");
  }
  Rational q(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
  if (q.get_den() == 0) {
    throw ParseError("bad rational '" + std::string(text) +
                     "': zero denominator");
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  // mpq_class::get_str on a canonical value already prints lowest terms and
  // drops the "/1" of integers.
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

long ceil_inverse(const Rational& q) {
  if (q <= 0) throw std::invalid_argument("ceil_inverse: argument must be > 0");
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_den().get_mpz_t(), q.get_num().get_mpz_t());
  if (!out.fits_slong_p()) {
    throw std::invalid_argument("ceil_inverse: result does not fit in long");
  }
  return out.get_si();
}

}  // namespace tsirelson
