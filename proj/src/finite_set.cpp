#include "tsirelson/finite_set.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "tsirelson/errors.hpp"

namespace tsirelson {

FiniteSet::FiniteSet(std::vector<int> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1) {
      throw std::invalid_argument("FiniteSet: elements must be >= 1");
    }
    if (i > 0 && elements_[i - 1] >= elements_[i]) {
      throw std::invalid_argument("FiniteSet: elements must strictly increase");
    }
  }
}

FiniteSet FiniteSet::parse(std::string_view text) {
  std::vector<int> elements;
  std::string_view rest = text;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("set: bad element '" + std::string(tok) + "'");
    }
    elements.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  try {
    return FiniteSet(std::move(elements));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("set: ") + e.what());
  }
}

std::string FiniteSet::str() const {
  if (elements_.empty()) return "{}";
  std::string out;
  for (int v : elements_) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

int FiniteSet::min() const {
  if (elements_.empty()) throw std::invalid_argument("min of empty set");
  return elements_.front();
}

int FiniteSet::max() const {
  if (elements_.empty()) throw std::invalid_argument("max of empty set");
  return elements_.back();
}

bool FiniteSet::contains(int value) const {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

bool FiniteSet::is_subset_of(const FiniteSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

FiniteSet FiniteSet::with(int extra) const {
  std::vector<int> elements = elements_;
  elements.insert(std::upper_bound(elements.begin(), elements.end(), extra),
                  extra);
  return FiniteSet(std::move(elements));
}

bool FiniteSet::entirely_before(const FiniteSet& a, const FiniteSet& b) {
  if (a.empty() || b.empty()) return true;
  return a.max() < b.min();
}

}  // namespace tsirelson
