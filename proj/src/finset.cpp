#include "rw/finset.hpp"

#include <algorithm>
#include <ostream>

namespace rw {

static void validate(const std::vector<std::uint32_t>& elems) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 1) throw PreconditionViolated("FinSet elements are positive");
    if (i > 0 && elems[i] <= elems[i - 1])
      throw PreconditionViolated("FinSet elements must be strictly increasing");
  }
}

FinSet::FinSet(std::initializer_list<std::uint32_t> elems)
    : FinSet(std::vector<std::uint32_t>(elems)) {}

FinSet::FinSet(std::vector<std::uint32_t> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  validate(elems_);
}

FinSet FinSet::interval(std::uint32_t lo, std::uint32_t hi) {
  FinSet s;
  for (std::uint32_t i = lo; i < hi; ++i) s.elems_.push_back(i);
  validate(s.elems_);
  return s;
}

FinSet FinSet::parse(std::string_view text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '{' && c != '}') t.push_back(c);
  std::vector<std::uint32_t> elems;
  std::size_t pos = 0;
  while (pos < t.size()) {
    std::size_t comma = t.find(',', pos);
    std::string tok = t.substr(pos, comma == std::string::npos ? comma
                                                               : comma - pos);
    if (!tok.empty())
      elems.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return FinSet(std::move(elems));
}

bool FinSet::contains(std::uint32_t x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::uint32_t FinSet::min() const {
  if (empty()) throw PreconditionViolated("min of empty set");
  return elems_.front();
}

std::uint32_t FinSet::max() const {
  if (empty()) throw PreconditionViolated("max of empty set");
  return elems_.back();
}

bool FinSet::is_interval() const {
  if (empty()) return false;
  return elems_.back() - elems_.front() + 1 == elems_.size();
}

bool FinSet::subset_of(const FinSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(),
                       elems_.begin(), elems_.end());
}

FinSet FinSet::unite(const FinSet& other) const {
  std::vector<std::uint32_t> out;
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                 other.elems_.end(), std::back_inserter(out));
  FinSet s;
  s.elems_ = std::move(out);
  return s;
}

FinSet FinSet::intersect(const FinSet& other) const {
  std::vector<std::uint32_t> out;
  std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(),
                        other.elems_.end(), std::back_inserter(out));
  FinSet s;
  s.elems_ = std::move(out);
  return s;
}

FinSet FinSet::minus(const FinSet& other) const {
  std::vector<std::uint32_t> out;
  std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(),
                      other.elems_.end(), std::back_inserter(out));
  FinSet s;
  s.elems_ = std::move(out);
  return s;
}

FinSet FinSet::restrict_to(std::uint32_t lo, std::uint32_t hi) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x : elems_)
    if (x >= lo && x < hi) out.push_back(x);
  FinSet s;
  s.elems_ = std::move(out);
  return s;
}

FinSet FinSet::complement_in(std::uint32_t lo, std::uint32_t hi) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = lo; x < hi; ++x)
    if (!contains(x)) out.push_back(x);
  FinSet s;
  s.elems_ = std::move(out);
  return s;
}

std::uint64_t FinSet::binary_weight() const {
  std::uint64_t w = 0;
  for (std::uint32_t x : elems_) {
    if (x > 63) throw CapExceeded("binary weight overflows 64 bits");
    w += 1ull << (x - 1);
  }
  return w;
}

FinSet FinSet::from_binary_weight(std::uint64_t weight) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t bit = 0; bit < 64; ++bit)
    if (weight & (1ull << bit)) out.push_back(bit + 1);
  FinSet s;
  s.elems_ = std::move(out);
  return s;
}

std::string FinSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(elems_[i]);
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const FinSet& s) {
  return os << s.str();
}

}  // namespace rw
