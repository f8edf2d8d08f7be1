#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rw/errors.hpp"

namespace rw {

/// Alphabets used throughout: {0,1}, {a,b,c} (stored as 0,1,2) and the
/// unbounded indexed alphabet x1, x2, x3, ...
enum class Alphabet { binary, ternary, zimin };

std::string alphabet_name(Alphabet a);

/// Letter indices above this cap are rejected by the generators and by the
/// Zimin calculus.  Desk-scale experiments stay far below it.
inline constexpr std::uint32_t kDefaultKmax = 64;

struct Letter {
  std::uint32_t index = 0;
  Alphabet tag = Alphabet::binary;

  Letter() = default;
  Letter(std::uint32_t index, Alphabet tag);

  bool operator==(const Letter&) const = default;
  std::string str() const;
};

/// An immutable finite sequence of letters over a single alphabet.
class Word {
public:
  Word() = default;
  explicit Word(Alphabet tag) : tag_(tag) {}
  Word(Alphabet tag, std::vector<std::uint32_t> letters);

  /// Accepts "x1 x2 x1", "x1x2x1", "0100", "012" or "abcacb".
  static Word parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Alphabet alphabet() const { return tag_; }
  std::uint32_t operator[](std::size_t i) const { return letters_[i]; }
  Letter letter(std::size_t i) const { return Letter(letters_[i], tag_); }
  const std::vector<std::uint32_t>& letters() const { return letters_; }

  Word slice(std::size_t pos, std::size_t len) const;
  Word operator+(const Word& other) const;

  bool is_prefix_of(const Word& other) const;
  bool is_suffix_of(const Word& other) const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

  std::string str() const;

private:
  Alphabet tag_ = Alphabet::binary;
  std::vector<std::uint32_t> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Orders words by length first, then lexicographically.  Used wherever a
/// deterministic enumeration of word sets is reported.
bool shorter_then_lex(const Word& a, const Word& b);

enum class RepeatPolicy { none, cycle_suffix };

/// Descriptor of the underlying stream, used by the factor index to pick an
/// exact membership decider when one exists.
struct SourceInfo {
  enum class Kind {
    ultimately_periodic,
    zimin,
    period_doubling,
    squarefree_ternary,
    from_file
  };
  Kind kind = Kind::zimin;
  Alphabet alphabet = Alphabet::zimin;
  int zimin_definition = 0;  // 1..3 when kind == zimin
  std::uint32_t k_max = kDefaultKmax;
  /// Set when the stream is exactly u v^omega (ultimately_periodic sources,
  /// and file sources with the cycle_suffix policy).
  bool eventually_periodic = false;
  std::vector<std::uint32_t> preperiod;
  std::vector<std::uint32_t> period;
  std::string path;  // from_file
};

namespace detail {
class Stream {
public:
  virtual ~Stream() = default;
  virtual std::uint32_t at(std::uint64_t pos) const = 0;  // thread-safe
  virtual const SourceInfo& info() const = 0;
  virtual std::string describe() const = 0;
};
}  // namespace detail

/// A deterministic, prefix-consistent stream of letters.  Value type: copies
/// share the underlying stream; suffix views compose by offset addition.
/// Concurrent prefix() calls are safe; internal caching is transparent.
class InfiniteWordSource {
public:
  InfiniteWordSource(std::shared_ptr<const detail::Stream> impl,
                     std::uint64_t offset = 0)
      : impl_(std::move(impl)), offset_(offset) {}

  Alphabet alphabet() const { return impl_->info().alphabet; }
  std::uint64_t base_offset() const { return offset_; }
  const SourceInfo& info() const { return impl_->info(); }

  std::uint32_t letter_index_at(std::uint64_t pos) const {
    return impl_->at(offset_ + pos);
  }
  Letter letter_at(std::uint64_t pos) const {
    return Letter(letter_index_at(pos), alphabet());
  }

  /// P_n of this stream.  prefix(m) is a prefix of prefix(n) for m <= n.
  Word prefix(std::uint64_t n) const;

  /// The stream T^k of this one; offsets compose additively.
  InfiniteWordSource suffix_view(std::uint64_t k) const {
    return InfiniteWordSource(impl_, offset_ + k);
  }

  std::string describe() const;

private:
  std::shared_ptr<const detail::Stream> impl_;
  std::uint64_t offset_ = 0;
};

/// The three equivalent definitions of the Zimin word: 1 = the Z_n doubling
/// recursion, 2 = the 2-adic valuation formula, 3 = the fixed point of
/// x_i -> x1 x_{i+1}.  They are distinct generators and are tested to agree.
InfiniteWordSource zimin_source(int definition_id,
                                std::uint32_t k_max = kDefaultKmax);

/// The period-doubling word, generated letterwise.
InfiniteWordSource period_doubling_source();

/// Fixed point of a -> abc, b -> ac, c -> b from seed a; squarefree.
InfiniteWordSource squarefree_source();

/// The word u v v v ...; v must be nonempty.
InfiniteWordSource ultimately_periodic_source(const Word& u, const Word& v);

/// Word data read from a text file: either whitespace-separated integer
/// tokens or one contiguous string over {0,1,2,a,b,c}.  With policy none the
/// stream ends with the file (prefix beyond it raises InsufficientData);
/// with cycle_suffix the tail from preperiod_len onward repeats forever.
InfiniteWordSource from_file_source(const std::string& path,
                                    RepeatPolicy policy,
                                    std::size_t preperiod_len = 0);

/// Letter of the Zimin word at a 0-based position (2-adic valuation rule).
std::uint32_t zimin_letter_at(std::uint64_t pos);

/// The parity morphism: x_n -> 0 for odd n, 1 for even n.
Word psi(const Word& w);

/// Maximum total length 2L of a square factor ww of w; 0 when w is
/// squarefree.  Plain O(n^2) scan, also used as the oracle in tests.
std::size_t largest_square_in(const Word& w);

/// Exact factor membership for the period-doubling word, via desubstitution
/// of the 2-uniform morphism 0 -> 01, 1 -> 00.  nullopt beyond the decider's
/// length cap.
std::optional<bool> period_doubling_factor_decision(const Word& u);

}  // namespace rw
