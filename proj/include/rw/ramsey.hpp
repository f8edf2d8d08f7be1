#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rw/colorings.hpp"
#include "rw/index.hpp"

namespace rw {

/// A finite Hindman witness: elements m_1 < ... < m_r whose nonempty
/// distinct-subset sums are pairwise distinct, bounded by N and all of one
/// color.
struct IPWitness {
  std::vector<std::uint64_t> elements;
  int color = 0;

  /// The 2^r - 1 subset sums, in binary counting order of the subsets.
  std::vector<std::uint64_t> subset_sums() const;
};

/// Lexicographically least witness of size r within [1, N], or nullopt:
/// Hindman guarantees existence only as N grows, so NotFound is a
/// first-class outcome.
std::optional<IPWitness> find_finite_sums_mono(
    const std::function<int(std::uint64_t)>& coloring, std::size_t r,
    std::uint64_t N);

/// Re-colors every subset sum; true iff the witness is genuinely
/// monochromatic (and distinct and within bound).
bool verify_ip_witness(const IPWitness& w,
                       const std::function<int(std::uint64_t)>& coloring,
                       std::uint64_t N);

/// Parts v^{m_1}, ..., v^{m_r} of the suffix of u v^omega whose subset
/// concatenations are all v-powers of one color.
struct PeriodicConstruction {
  std::vector<std::uint64_t> exponents;
  std::vector<Word> parts;
  Color color;
};

std::optional<PeriodicConstruction> build_periodic_super_mono(
    const Word& u, const Word& v, const ColorFn& coloring, std::size_t r,
    std::uint64_t exponent_bound);

/// Convenience overload: colors v^i with the given spec against an index
/// over u v^omega (window sized to cover v^N).
std::optional<PeriodicConstruction> build_periodic_super_mono(
    const Word& u, const Word& v, const ColoringSpec& spec, std::size_t r,
    std::uint64_t exponent_bound);

/// The suffix-property chain of a recurrent word: u_1 ... u_n is a suffix of
/// u_{n+1} and every product u_1 ... u_n is a factor (both checked).
/// Construction: locate a disjoint reoccurrence of u_1 ... u_n and prepend
/// the gap.  Throws WindowExhausted when recurrence is not witnessed within
/// the window.
std::vector<Word> build_suffix_chain(const FactorIndex& idx, const Word& u1,
                                     std::size_t depth);

/// Disjoint ordered index blocks A_1 < ... < A_r over a suffix chain whose
/// union products are monochromatic factors.
struct SubshiftConstruction {
  std::vector<std::vector<std::uint32_t>> blocks;  // 1-based chain indices
  std::vector<Word> parts;                         // u_{A_1}, ..., u_{A_r}
  Color color;
};

/// Enumerates blocks in ascending bitmask order (deterministic); each block
/// has at most max_block_size elements.
std::optional<SubshiftConstruction> subshift_super_mono(
    const FactorIndex& idx, const ColorFn& coloring,
    const std::vector<Word>& chain, std::size_t r, std::size_t max_block_size);

std::optional<SubshiftConstruction> subshift_super_mono(
    const FactorIndex& idx, const ColoringSpec& spec,
    const std::vector<Word>& chain, std::size_t r, std::size_t max_block_size);

}  // namespace rw
