#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rw/colorings.hpp"
#include "rw/index.hpp"

namespace rw {

/// A finite prefix of a candidate factorisation of T^k(x), plus the
/// structural constraints it is required to satisfy.
struct FactorisationCandidate {
  std::uint64_t suffix_offset = 0;
  std::vector<Word> parts;
  bool consecutive = false;      // A(u_1) = k and B(u_i) = A(u_{i+1})
  bool suffix_property = false;  // u_1...u_n is a suffix of u_{n+1}
  bool factor_closed = false;    // every subset concatenation is a factor

  /// Cumulative end offsets of the parts within T^k.
  std::vector<std::size_t> cuts() const;
};

/// All 2^m - 1 ordered-subset concatenations, in binary counting order of
/// the subsets (part 1 = lowest bit).  Throws TooManyParts for m > 20.
std::vector<Word> subset_concats(const std::vector<Word>& parts);

struct ColoredWord {
  std::uint64_t subset_mask = 0;
  Word word;
  std::string color;  // display name
};

struct BichromaticPair {
  ColoredWord first, second;
};

/// nullopt when the whole family shares one color; otherwise a specific
/// bichromatic pair (the family's first word with the established color
/// versus the first word that deviates).
std::optional<BichromaticPair> find_bichromatic(const ColorFn& coloring,
                                                const std::vector<Word>& parts);

std::optional<BichromaticPair> is_super_mono_prefix(
    const ColoringSpec& spec, const FactorIndex& idx,
    const FactorisationCandidate& cand);

/// Plain monochromatic check over the parts alone (no subset closure).
bool check_monochromatic_factorisation(const ColoringSpec& spec,
                                       const FactorIndex& idx,
                                       const FactorisationCandidate& cand);

struct ProbeParams {
  std::uint64_t k_lo = 0;
  std::uint64_t k_hi = 0;
  std::size_t m_max = 3;
  std::size_t len_max = 64;
  bool consecutive = false;
  bool suffix_property = false;
  bool factor_closed = false;
  /// Sample caps for the survivors/kills lists; the histogram counts are
  /// always complete.
  std::size_t max_recorded = 32;
};

/// Outcome of a bounded conjecture probe.  Evidence, never a proof.
struct SearchReport {
  struct Survivor {
    std::uint64_t k = 0;
    std::vector<std::size_t> cuts;
    std::vector<std::string> colors;  // per-part colors (all equal)
    bool operator==(const Survivor&) const = default;
  };
  struct Kill {
    std::uint64_t k = 0;
    std::vector<std::size_t> cuts;
    ColoredWord first, second;  // the bichromatic pair
  };

  nlohmann::json params;
  std::vector<std::uint64_t> depth_histogram;  // [d-1] = survivors at depth d
  std::size_t max_depth_reached = 0;
  std::uint64_t kill_count = 0;
  std::vector<Survivor> survivors;  // sampled, deterministic DFS order
  std::vector<Kill> kills;
  double wall_time_ms = 0;

  nlohmann::json to_json() const;
  static SearchReport from_json(const nlohmann::json& j);
  /// Equality modulo the wall-time field.
  bool operator==(const SearchReport& other) const;
};

/// Depth-first enumeration of factorisation prefixes of T^k(x) for k in
/// [k_lo, k_hi], pruning a branch the moment its subset-concatenation family
/// is bichromatic.  Parallel over k when RW_THREADS allows; the merged
/// report is deterministic.
SearchReport probe_conjecture(const InfiniteWordSource& source,
                              const ColoringSpec& spec,
                              const ProbeParams& params);

enum class Theorem { T3, T4, T5 };

struct TraceStep {
  std::string name;
  int n = 0;  // part index the step talks about, -1 = global
  bool ok = false;
  std::string detail;
};

/// Replay of the proof steps of Theorems 3/4/5 on one concrete candidate.
struct ProofTrace {
  std::string theorem;
  std::vector<TraceStep> steps;
  bool refuted = false;  // the candidate was shown non-super-monochromatic
  bool passed = false;   // every step matched the proof's prediction
  nlohmann::json to_json() const;
  static ProofTrace from_json(const nlohmann::json& j);
  bool operator==(const ProofTrace&) const;
};

ProofTrace proof_trace(Theorem theorem, const FactorisationCandidate& cand,
                       const ColoringSpec& spec, const FactorIndex& idx);

}  // namespace rw
