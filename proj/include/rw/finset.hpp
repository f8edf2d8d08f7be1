#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "rw/errors.hpp"

namespace rw {

/// A finite set of positive integers, kept strictly increasing.
class FinSet {
public:
  FinSet() = default;
  FinSet(std::initializer_list<std::uint32_t> elems);
  explicit FinSet(std::vector<std::uint32_t> elems);

  /// The half-open interval [lo, hi).
  static FinSet interval(std::uint32_t lo, std::uint32_t hi);
  /// Accepts "{1,3,4}" or "{}" (and the bare "1,3,4" form).
  static FinSet parse(std::string_view text);

  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  bool contains(std::uint32_t x) const;
  std::uint32_t min() const;
  std::uint32_t max() const;
  const std::vector<std::uint32_t>& elements() const { return elems_; }

  bool is_interval() const;
  bool subset_of(const FinSet& other) const;

  FinSet unite(const FinSet& other) const;
  FinSet intersect(const FinSet& other) const;
  FinSet minus(const FinSet& other) const;
  /// Intersection with [lo, hi).
  FinSet restrict_to(std::uint32_t lo, std::uint32_t hi) const;
  /// [lo, hi) minus this set.
  FinSet complement_in(std::uint32_t lo, std::uint32_t hi) const;

  /// Sum of 2^(i-1) over elements; the length of u_A (and of v_A).
  std::uint64_t binary_weight() const;
  /// Inverse of binary_weight: the unique set with the given weight.
  static FinSet from_binary_weight(std::uint64_t weight);

  bool operator==(const FinSet&) const = default;
  auto operator<=>(const FinSet&) const = default;

  std::string str() const;

private:
  std::vector<std::uint32_t> elems_;
};

std::ostream& operator<<(std::ostream& os, const FinSet& s);

}  // namespace rw
