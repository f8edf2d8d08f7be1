#include "rw/index.hpp"

#include <algorithm>
#include <unordered_map>

#include "rw/zimin.hpp"

namespace rw {

std::string factor_answer_name(FactorAnswer a) {
  switch (a) {
    case FactorAnswer::yes: return "yes";
    case FactorAnswer::no: return "no";
    case FactorAnswer::unknown_beyond_window: return "unknown_beyond_window";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Suffix automaton over the window, with first-occurrence end positions.
// ---------------------------------------------------------------------------

struct FactorIndex::Impl {
  struct State {
    int link = -1;
    int len = 0;
    int fe = 0;  // exclusive end of the first occurrence of the longest string
  };

  std::vector<State> st;
  std::vector<int> trans;  // st.size() x sigma, -1 = none
  std::unordered_map<std::uint32_t, int> sym_id;
  int sigma = 0;
  int last = 0;

  int& next(int s, int c) { return trans[static_cast<std::size_t>(s) * sigma + c]; }
  int next_of(int s, int c) const {
    return trans[static_cast<std::size_t>(s) * sigma + c];
  }

  int step(int s, std::uint32_t letter) const {
    auto it = sym_id.find(letter);
    if (it == sym_id.end()) return -1;
    return next_of(s, it->second);
  }

  explicit Impl(const std::vector<std::uint32_t>& text) {
    for (std::uint32_t l : text)
      if (!sym_id.count(l)) {
        int id = static_cast<int>(sym_id.size());
        sym_id.emplace(l, id);
      }
    sigma = std::max<int>(1, static_cast<int>(sym_id.size()));

    std::size_t cap = 2 * text.size() + 2;
    st.reserve(cap);
    trans.reserve(cap * sigma);
    auto new_state = [&]() {
      st.push_back(State{});
      trans.resize(st.size() * sigma, -1);
      return static_cast<int>(st.size()) - 1;
    };

    new_state();  // root
    last = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      int c = sym_id.at(text[i]);
      int cur = new_state();
      st[cur].len = st[last].len + 1;
      st[cur].fe = static_cast<int>(i) + 1;
      int p = last;
      while (p != -1 && next_of(p, c) == -1) {
        next(p, c) = cur;
        p = st[p].link;
      }
      if (p == -1) {
        st[cur].link = 0;
      } else {
        int q = next_of(p, c);
        if (st[p].len + 1 == st[q].len) {
          st[cur].link = q;
        } else {
          int clone = new_state();
          st[clone].len = st[p].len + 1;
          st[clone].link = st[q].link;
          st[clone].fe = st[q].fe;
          for (int a = 0; a < sigma; ++a) next(clone, a) = next_of(q, a);
          while (p != -1 && next_of(p, c) == q) {
            next(p, c) = clone;
            p = st[p].link;
          }
          st[q].link = clone;
          st[cur].link = clone;
        }
      }
      last = cur;
    }
  }
};

FactorIndex::FactorIndex(InfiniteWordSource source, std::size_t window)
    : source_(std::move(source)), window_(window) {
  if (window < 1) throw PreconditionViolated("window must be >= 1");
  text_.reserve(window);
  for (std::size_t i = 0; i < window; ++i)
    text_.push_back(source_.letter_index_at(i));
  impl_ = std::make_unique<Impl>(text_);
}

FactorIndex::~FactorIndex() = default;
FactorIndex::FactorIndex(FactorIndex&&) noexcept = default;
FactorIndex& FactorIndex::operator=(FactorIndex&&) noexcept = default;

void FactorIndex::rebuild(std::size_t new_window) {
  if (new_window < 1) throw PreconditionViolated("window must be >= 1");
  std::vector<std::uint32_t> text;
  text.reserve(new_window);
  for (std::size_t i = 0; i < new_window; ++i)
    text.push_back(source_.letter_index_at(i));
  auto impl = std::make_unique<Impl>(text);
  window_ = new_window;
  text_ = std::move(text);
  impl_ = std::move(impl);
}

std::uint32_t FactorIndex::letter_at(std::size_t pos) const {
  if (pos >= window_) throw WindowInsufficient("position beyond window");
  return text_[pos];
}

Word FactorIndex::slice(std::size_t pos, std::size_t len) const {
  if (pos + len > window_) throw WindowInsufficient("slice beyond window");
  return Word(source_.alphabet(),
              std::vector<std::uint32_t>(text_.begin() + pos,
                                         text_.begin() + pos + len));
}

void FactorIndex::check_query(const Word& u) const {
  if (u.empty()) throw PreconditionViolated("query word must be nonempty");
  if (u.alphabet() != source_.alphabet())
    throw PreconditionViolated("query alphabet does not match the source");
}

std::optional<std::size_t> FactorIndex::try_first_occurrence(
    const Word& u) const {
  check_query(u);
  int s = 0;
  for (std::uint32_t l : u.letters()) {
    s = impl_->step(s, l);
    if (s < 0) return std::nullopt;
  }
  return static_cast<std::size_t>(impl_->st[s].fe) - u.size();
}

std::size_t FactorIndex::first_occurrence(const Word& u) const {
  auto a = try_first_occurrence(u);
  if (!a)
    throw NotAFactorInWindow(
        "\"" + u.str() + "\" does not occur in the first " +
            std::to_string(window_) + " letters of " + source_.describe(),
        window_);
  return *a;
}

std::size_t FactorIndex::first_occurrence_end(const Word& u) const {
  return first_occurrence(u) + u.size();
}

std::optional<bool> FactorIndex::certified_factor(const Word& u) const {
  check_query(u);
  const SourceInfo& info = source_.info();
  switch (info.kind) {
    case SourceInfo::Kind::zimin:
      // factors of any suffix of Z = factors of Z (Z is recurrent)
      return is_zimin_factor(u);
    case SourceInfo::Kind::period_doubling:
      return period_doubling_factor_decision(u);
    default:
      break;
  }
  if (info.eventually_periodic) {
    // Positions past the preperiod repeat with the period; any occurrence
    // can be shifted down below preperiod + period.
    std::uint64_t off = source_.base_offset();
    std::uint64_t pre =
        info.preperiod.size() > off ? info.preperiod.size() - off : 0;
    std::uint64_t scan = pre + info.period.size();
    for (std::uint64_t p = 0; p < scan; ++p) {
      bool match = true;
      for (std::size_t i = 0; i < u.size() && match; ++i)
        match = source_.letter_index_at(p + i) == u[i];
      if (match) return true;
    }
    return false;
  }
  return std::nullopt;
}

FactorAnswer FactorIndex::is_factor(const Word& u) const {
  check_query(u);
  if (try_first_occurrence(u)) return FactorAnswer::yes;
  auto certified = certified_factor(u);
  if (certified.has_value())
    return *certified ? FactorAnswer::yes : FactorAnswer::no;
  return FactorAnswer::unknown_beyond_window;
}

std::vector<std::size_t> FactorIndex::occurrences_up_to(
    const Word& u, std::size_t limit) const {
  check_query(u);
  if (limit < 1) throw PreconditionViolated("limit must be >= 1");
  std::vector<std::size_t> out;
  if (u.size() > window_) return out;

  // KMP over the window
  const auto& pat = u.letters();
  std::vector<std::size_t> fail(pat.size(), 0);
  for (std::size_t i = 1; i < pat.size(); ++i) {
    std::size_t j = fail[i - 1];
    while (j > 0 && pat[i] != pat[j]) j = fail[j - 1];
    if (pat[i] == pat[j]) ++j;
    fail[i] = j;
  }
  std::size_t j = 0;
  for (std::size_t i = 0; i < text_.size(); ++i) {
    while (j > 0 && text_[i] != pat[j]) j = fail[j - 1];
    if (text_[i] == pat[j]) ++j;
    if (j == pat.size()) {
      out.push_back(i + 1 - pat.size());
      if (out.size() >= limit) break;
      j = fail[j - 1];
    }
  }
  return out;
}

std::size_t FactorIndex::pinned_prefix_length(std::size_t k,
                                              std::size_t n_max) const {
  if (n_max < 1) throw PreconditionViolated("n_max must be >= 1");
  if (k + n_max > window_)
    throw WindowInsufficient("window too small for k + n_max");
  // A(P_n(T^k)) is non-decreasing in n and bounded by k; once it reaches k
  // it stays there.
  Cursor c = cursor();
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (!c.advance(text_[k + n - 1]))
      throw Error("internal: window slice must be a factor");
    if (c.first_occurrence() == k) return n;
  }
  throw NotPinnedWithinBound(
      "prefixes of T^" + std::to_string(k) + " keep reoccurring earlier up to n_max=" +
      std::to_string(n_max));
}

std::optional<std::size_t> FactorIndex::two_factor_split(const Word& u) const {
  check_query(u);
  FactorAnswer ans = is_factor(u);
  if (ans == FactorAnswer::yes)
    throw PreconditionViolated("two_factor_split requires a non-factor");
  if (ans == FactorAnswer::unknown_beyond_window)
    throw PreconditionViolated(
        "two_factor_split requires certified non-factorhood");
  for (std::size_t p = 1; p < u.size(); ++p) {
    if (is_factor(u.slice(0, p)) == FactorAnswer::yes &&
        is_factor(u.slice(p, u.size() - p)) == FactorAnswer::yes)
      return p;
  }
  return std::nullopt;
}

FactorIndex::Cursor FactorIndex::cursor() const {
  Cursor c;
  c.idx_ = this;
  c.state_ = 0;
  c.length_ = 0;
  return c;
}

bool FactorIndex::Cursor::advance(std::uint32_t letter) {
  if (state_ < 0) return false;
  state_ = idx_->impl_->step(state_, letter);
  if (state_ < 0) return false;
  ++length_;
  return true;
}

std::size_t FactorIndex::Cursor::first_occurrence() const {
  if (state_ < 0 || length_ == 0)
    throw PreconditionViolated("cursor is not on a matched word");
  return static_cast<std::size_t>(idx_->impl_->st[state_].fe) - length_;
}

}  // namespace rw
