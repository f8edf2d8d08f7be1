#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "rw/words.hpp"

namespace rw {

enum class FactorAnswer { yes, no, unknown_beyond_window };

std::string factor_answer_name(FactorAnswer a);

/// Windowed first-occurrence engine over a materialized prefix of a source.
/// All answers are exact restricted to occurrences starting (and ending)
/// inside the window; nothing is extrapolated.  For sources with an exact
/// membership decider (the Zimin word, eventually periodic words, the
/// period-doubling word) a definitive "no" is certified through it.
///
/// Queries are read-only and safe to issue concurrently; rebuild() is an
/// exclusive operation.
class FactorIndex {
public:
  FactorIndex(InfiniteWordSource source, std::size_t window);
  ~FactorIndex();
  FactorIndex(const FactorIndex&) = delete;
  FactorIndex& operator=(const FactorIndex&) = delete;
  FactorIndex(FactorIndex&&) noexcept;
  FactorIndex& operator=(FactorIndex&&) noexcept;

  const InfiniteWordSource& source() const { return source_; }
  std::size_t window() const { return window_; }
  std::uint32_t letter_at(std::size_t pos) const;
  Word slice(std::size_t pos, std::size_t len) const;

  /// A(u): least k with u occurring at k and k + |u| <= window.
  /// Throws NotAFactorInWindow otherwise.
  std::size_t first_occurrence(const Word& u) const;
  /// B(u) = A(u) + |u|.
  std::size_t first_occurrence_end(const Word& u) const;
  std::optional<std::size_t> try_first_occurrence(const Word& u) const;

  FactorAnswer is_factor(const Word& u) const;

  /// First min(limit, available) occurrence start positions in the window.
  std::vector<std::size_t> occurrences_up_to(const Word& u,
                                             std::size_t limit) const;

  /// Least N <= n_max such that A(P_n(T^k)) = k for all n in [N, n_max],
  /// i.e. from length N on, prefixes of T^k first occur where T^k starts.
  /// Throws NotPinnedWithinBound when no such N exists within the bound.
  std::size_t pinned_prefix_length(std::size_t k, std::size_t n_max) const;

  /// For a certified non-factor u: a split position with both halves factors,
  /// or nullopt when every split fails.
  std::optional<std::size_t> two_factor_split(const Word& u) const;

  /// Exact membership via the source's decider, ignoring the window.
  /// nullopt for opaque sources.
  std::optional<bool> certified_factor(const Word& u) const;

  /// Exclusive: grows (or shrinks) the window and reindexes.
  void rebuild(std::size_t new_window);

  /// Incremental matcher: extends a factor query one letter at a time and
  /// reports the first occurrence of the matched word.
  class Cursor {
  public:
    /// False once the extended word is no longer a factor of the window.
    bool advance(std::uint32_t letter);
    std::size_t matched_length() const { return length_; }
    /// A(matched word); only valid while matching succeeded.
    std::size_t first_occurrence() const;

  private:
    friend class FactorIndex;
    const FactorIndex* idx_ = nullptr;
    int state_ = 0;
    std::size_t length_ = 0;
  };
  Cursor cursor() const;

private:
  struct Impl;
  InfiniteWordSource source_;
  std::size_t window_ = 0;
  std::vector<std::uint32_t> text_;
  std::unique_ptr<Impl> impl_;

  void check_query(const Word& u) const;
};

}  // namespace rw
