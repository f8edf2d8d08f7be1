#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rw/finset.hpp"
#include "rw/words.hpp"

namespace rw {

class FactorIndex;

/// The canonical form u_A x_k v_B of a factor of the Zimin word
/// (A, B subsets of [1, k)).
struct CanonicalFactor {
  FinSet A;
  std::uint32_t k = 1;
  FinSet B;

  CanonicalFactor() = default;
  CanonicalFactor(FinSet a, std::uint32_t k, FinSet b);

  std::uint64_t length() const {
    return A.binary_weight() + 1 + B.binary_weight();
  }
  bool operator==(const CanonicalFactor&) const = default;
  std::string str() const;  // e.g. "u{1,2} x3 v{1}"
};

std::ostream& operator<<(std::ostream& os, const CanonicalFactor& c);

constexpr std::uint64_t un_length(std::uint32_t n) { return 1ull << (n - 1); }
constexpr std::uint64_t zn_length(std::uint32_t n) { return (1ull << n) - 1; }

/// Builders for the u_n / v_n / Z_n families and their set-indexed products.
/// u_A concatenates in increasing index order, v_B in decreasing order.
Word build_un(std::uint32_t n, std::uint32_t k_max = kDefaultKmax);
Word build_vn(std::uint32_t n, std::uint32_t k_max = kDefaultKmax);
Word build_zn(std::uint32_t n, std::uint32_t k_max = kDefaultKmax);
Word build_u(const FinSet& A, std::uint32_t k_max = kDefaultKmax);
Word build_v(const FinSet& B, std::uint32_t k_max = kDefaultKmax);
Word build(const CanonicalFactor& c, std::uint32_t k_max = kDefaultKmax);

/// The unique (A, k, B) with w = u_A x_k v_B; rejects words that are not
/// factors of Z.  Linear in |w|.
CanonicalFactor parse_factor(const Word& w);

/// Exact factor-of-Z membership (parse without the canonical form).
bool is_zimin_factor(const Word& w);

/// k(u) and eta(u) = max([1,k) \ A), 0 when A = [1,k).
std::uint32_t eta(const CanonicalFactor& c);

/// uv is a factor of Z iff k(u) is not in A_2 and
/// B_1 = [1,k(u)) \ (A_2 cap [1,k(u))).  Requires k(u) < k(v).
bool concat_is_factor(const CanonicalFactor& c1, const CanonicalFactor& c2);

/// The canonical form of uv.  Requires concat_is_factor.
CanonicalFactor concat_canonical(const CanonicalFactor& c1,
                                 const CanonicalFactor& c2);

/// u is a suffix of v iff k(u) is in B_2 and
/// B_2 cap [1,k(u)) = B_1.  Requires k(u) < k(v).
bool suffix_test(const CanonicalFactor& c1, const CanonicalFactor& c2);

/// Greedy leading-letter peel of T^k(Z):
/// the unique m_1 < m_2 < ... with T^k(Z) = u_{m_1} u_{m_2} ...
std::vector<std::uint32_t> suffix_decomposition_M(
    std::uint64_t k, std::size_t depth, std::uint32_t k_max = kDefaultKmax);

/// The slice of Z at [pos, pos+len), computed letterwise.
Word zimin_slice(std::uint64_t pos, std::size_t len);

/// W(u): the psi-preimage of a factor u of D with minimal first occurrence
/// in Z, i.e. the Z slice of length |u| at A_D(u).  idxD must index the
/// period-doubling word itself (offset 0).
CanonicalFactor lift_W(const Word& u, const FactorIndex& idxD);

}  // namespace rw
