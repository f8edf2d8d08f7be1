#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rw/index.hpp"

namespace rw {

/// A consecutive decomposition of a factor: interior cut offsets
/// 0 < c_1 < ... < c_{l-1} < |u|; every chunk u[c_{i-1}, c_i) has its first
/// occurrence exactly at A(u) + c_{i-1}.
struct ConsecutiveDecomposition {
  Word base;
  std::size_t base_occurrence = 0;  // A(base)
  std::vector<std::size_t> cuts;    // interior offsets, strictly increasing

  std::size_t terms() const { return cuts.size() + 1; }
  std::vector<Word> chunks() const;
};

/// True iff every chunk's first occurrence sits at its slot inside u's first
/// occurrence (equivalent to the A/B chain conditions).
bool is_consecutive(const FactorIndex& idx, const Word& u,
                    const std::vector<std::size_t>& cuts);

/// L(u): the maximum number of terms over consecutive decompositions of u.
std::size_t consecutive_length(const FactorIndex& idx, const Word& u);

/// One decomposition achieving L(u); ties broken toward the shortest first
/// chunk.  Every chunk is irreducible (checked).
ConsecutiveDecomposition maximal_decomposition(const FactorIndex& idx,
                                               const Word& u);

bool is_irreducible(const FactorIndex& idx, const Word& u);

/// A factor u with A(u) = k and L(u) = l, grown chunk by chunk and then
/// truncated.  Throws WindowExhausted when the window runs out first.
Word find_factor_with_length(const FactorIndex& idx, std::size_t k,
                             std::size_t l);

enum class Boundary { lambda_plus, lambda_minus, rho_plus, rho_minus };

/// The lambda/rho boundary sets.  lambda candidates are the slices ending
/// where u's first occurrence starts (the only words v with B(vu) = B(u));
/// rho candidates are the suffixes of u.  Results are sorted by length.
std::vector<Word> boundary_set(const FactorIndex& idx, const Word& u,
                               Boundary which);

struct BoundarySets {
  std::vector<Word> lambda_plus, lambda_minus, rho_plus, rho_minus;
};

BoundarySets boundary_sets(const FactorIndex& idx, const Word& u);

}  // namespace rw
