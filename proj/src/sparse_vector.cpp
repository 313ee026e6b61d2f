#include "tsirelson/sparse_vector.hpp"

#include <charconv>
#include <stdexcept>

#include "tsirelson/errors.hpp"

namespace tsirelson {

SparseVector SparseVector::unit(int index) {
  SparseVector x;
  x.set(index, 1);
  return x;
}

SparseVector SparseVector::parse(std::string_view text) {
  SparseVector x;
  if (text.empty() || text == "0") return x;
  std::string_view rest = text;
  while (true) {
    auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    auto colon = tok.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("vector: expected 'index:value' in '" +
                       std::string(tok) + "'");
    }
    std::string_view idx_text = tok.substr(0, colon);
    int index = 0;
    auto [ptr, ec] =
        std::from_chars(idx_text.data(), idx_text.data() + idx_text.size(), index);
    if (ec != std::errc() || ptr != idx_text.data() + idx_text.size() ||
        index < 1) {
      throw ParseError("vector: bad index '" + std::string(idx_text) + "'");
    }
    if (x.entries_.count(index)) {
      throw ParseError("vector: duplicate index " + std::to_string(index));
    }
    x.set(index, parse_rational(tok.substr(colon + 1)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return x;
}

std::string SparseVector::str() const {
  if (entries_.empty()) return "0";
  std::string out;
  for (const auto& [i, v] : entries_) {
    if (!out.empty()) out += ',';
    out += std::to_string(i) + ':' + to_string(v);
  }
  return out;
}

void SparseVector::set(int index, const Rational& value) {
  if (index < 1) throw std::invalid_argument("SparseVector: index must be >= 1");
  if (value == 0) {
    entries_.erase(index);
  } else {
    entries_[index] = value;
  }
}

Rational SparseVector::at(int index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? Rational(0) : it->second;
}

std::vector<int> SparseVector::support() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const auto& [i, v] : entries_) out.push_back(i);
  return out;
}

int SparseVector::min_support() const {
  if (entries_.empty()) throw std::invalid_argument("min_support of zero vector");
  return entries_.begin()->first;
}

int SparseVector::max_support() const {
  if (entries_.empty()) throw std::invalid_argument("max_support of zero vector");
  return entries_.rbegin()->first;
}

Rational SparseVector::sup_norm() const {
  Rational out(0);
  for (const auto& [i, v] : entries_) {
    Rational m = ::abs(v);
    if (m > out) out = m;
  }
  return out;
}

Rational SparseVector::l1_norm() const {
  Rational out(0);
  for (const auto& [i, v] : entries_) out += ::abs(v);
  return out;
}

SparseVector SparseVector::restricted(const FiniteSet& to) const {
  SparseVector out;
  for (int i : to.elements()) {
    if (auto it = entries_.find(i); it != entries_.end()) {
      out.entries_.emplace(i, it->second);
    }
  }
  return out;
}

SparseVector SparseVector::restricted_range(int lo, int hi) const {
  SparseVector out;
  for (auto it = entries_.lower_bound(lo);
       it != entries_.end() && it->first <= hi; ++it) {
    out.entries_.insert(*it);
  }
  return out;
}

SparseVector SparseVector::abs() const {
  SparseVector out;
  for (const auto& [i, v] : entries_) out.entries_.emplace(i, ::abs(v));
  return out;
}

SparseVector& SparseVector::operator+=(const SparseVector& other) {
  for (const auto& [i, v] : other.entries_) set(i, at(i) + v);
  return *this;
}

SparseVector operator*(const Rational& c, const SparseVector& x) {
  SparseVector out;
  if (c == 0) return out;
  for (const auto& [i, v] : x.entries_) out.entries_.emplace(i, c * v);
  return out;
}

}  // namespace tsirelson
