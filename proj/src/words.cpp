#include "rw/words.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>

namespace rw {

std::string alphabet_name(Alphabet a) {
  switch (a) {
    case Alphabet::binary: return "binary";
    case Alphabet::ternary: return "ternary";
    case Alphabet::zimin: return "zimin";
  }
  return "?";
}

static void check_letter(std::uint32_t index, Alphabet tag) {
  switch (tag) {
    case Alphabet::binary:
      if (index > 1) throw PreconditionViolated("binary letter out of range");
      break;
    case Alphabet::ternary:
      if (index > 2) throw PreconditionViolated("ternary letter out of range");
      break;
    case Alphabet::zimin:
      if (index < 1) throw PreconditionViolated("zimin letters start at x1");
      break;
  }
}

Letter::Letter(std::uint32_t index, Alphabet tag) : index(index), tag(tag) {
  check_letter(index, tag);
}

std::string Letter::str() const {
  switch (tag) {
    case Alphabet::binary: return std::string(1, char('0' + index));
    case Alphabet::ternary: return std::string(1, char('a' + index));
    case Alphabet::zimin: return "x" + std::to_string(index);
  }
  return "?";
}

Word::Word(Alphabet tag, std::vector<std::uint32_t> letters)
    : tag_(tag), letters_(std::move(letters)) {
  for (std::uint32_t l : letters_) check_letter(l, tag_);
}

Word Word::parse(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty()) throw PreconditionViolated("empty word text");

  std::vector<std::uint32_t> letters;
  if (compact.find('x') != std::string::npos) {
    std::size_t i = 0;
    while (i < compact.size()) {
      if (compact[i] != 'x')
        throw PreconditionViolated("bad zimin word syntax: " +
                                   std::string(text));
      std::size_t j = i + 1;
      while (j < compact.size() &&
             std::isdigit(static_cast<unsigned char>(compact[j])))
        ++j;
      if (j == i + 1)
        throw PreconditionViolated("bad zimin word syntax: " +
                                   std::string(text));
      letters.push_back(
          static_cast<std::uint32_t>(std::stoul(compact.substr(i + 1, j - i - 1))));
      i = j;
    }
    return Word(Alphabet::zimin, std::move(letters));
  }

  bool has2 = false, alpha = false;
  for (char c : compact) {
    if (c == 'a' || c == 'b' || c == 'c') {
      alpha = true;
      letters.push_back(static_cast<std::uint32_t>(c - 'a'));
    } else if (c == '0' || c == '1' || c == '2') {
      if (c == '2') has2 = true;
      letters.push_back(static_cast<std::uint32_t>(c - '0'));
    } else {
      throw PreconditionViolated("unrecognized letter '" + std::string(1, c) +
                                 "'");
    }
  }
  Alphabet tag = (alpha || has2) ? Alphabet::ternary : Alphabet::binary;
  return Word(tag, std::move(letters));
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  if (pos + len > letters_.size())
    throw PreconditionViolated("slice out of range");
  return Word(tag_, std::vector<std::uint32_t>(letters_.begin() + pos,
                                               letters_.begin() + pos + len));
}

Word Word::operator+(const Word& other) const {
  if (empty()) return other;
  if (other.empty()) return *this;
  if (tag_ != other.tag_)
    throw PreconditionViolated("cannot concatenate words over different alphabets");
  std::vector<std::uint32_t> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(tag_, std::move(out));
}

bool Word::is_prefix_of(const Word& other) const {
  if (size() > other.size()) return false;
  return std::equal(letters_.begin(), letters_.end(), other.letters_.begin());
}

bool Word::is_suffix_of(const Word& other) const {
  if (size() > other.size()) return false;
  return std::equal(letters_.rbegin(), letters_.rend(),
                    other.letters_.rbegin());
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (tag_ == Alphabet::zimin && i > 0) out += ' ';
    out += Letter(letters_[i], tag_).str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << w.str();
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.alphabet()) * 0x9e3779b97f4a7c15ull;
  for (std::uint32_t l : w.letters()) h = h * 1099511628211ull ^ l;
  return h;
}

bool shorter_then_lex(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters() < b.letters();
}

// ---------------------------------------------------------------------------
// Streams
// ---------------------------------------------------------------------------

Word InfiniteWordSource::prefix(std::uint64_t n) const {
  std::vector<std::uint32_t> letters;
  letters.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < n; ++i)
    letters.push_back(impl_->at(offset_ + i));
  return Word(alphabet(), std::move(letters));
}

std::string InfiniteWordSource::describe() const {
  std::string d = impl_->describe();
  if (offset_ > 0) d = "T^" + std::to_string(offset_) + "(" + d + ")";
  return d;
}

std::uint32_t zimin_letter_at(std::uint64_t pos) {
  return static_cast<std::uint32_t>(std::countr_zero(pos + 1)) + 1;
}

namespace {

/// Caching base for streams materialized by morphism iteration.  The buffer
/// only ever grows; readers take the lock briefly per letter.
class BufferedStream : public detail::Stream {
public:
  std::uint32_t at(std::uint64_t pos) const override {
    std::lock_guard<std::mutex> lock(mu_);
    while (buf_.size() <= pos) extend(buf_);
    return buf_[static_cast<std::size_t>(pos)];
  }

protected:
  virtual void extend(std::vector<std::uint32_t>& buf) const = 0;

private:
  mutable std::mutex mu_;
  mutable std::vector<std::uint32_t> buf_;
};

class ZiminRecursive final : public BufferedStream {
public:
  explicit ZiminRecursive(std::uint32_t k_max) {
    info_.kind = SourceInfo::Kind::zimin;
    info_.alphabet = Alphabet::zimin;
    info_.zimin_definition = 1;
    info_.k_max = k_max;
  }
  const SourceInfo& info() const override { return info_; }
  std::string describe() const override { return "zimin(def1)"; }

protected:
  // Z_{n+1} = Z_n x_{n+1} Z_n
  void extend(std::vector<std::uint32_t>& buf) const override {
    if (buf.empty()) {
      buf = {1};
      return;
    }
    std::uint32_t next = 0;
    for (std::uint32_t l : buf) next = std::max(next, l);
    ++next;
    if (next > info_.k_max)
      throw CapExceeded("zimin generation beyond x" +
                        std::to_string(info_.k_max));
    std::size_t n = buf.size();
    buf.push_back(next);
    for (std::size_t i = 0; i < n; ++i) buf.push_back(buf[i]);
  }

private:
  SourceInfo info_;
};

class ZiminValuation final : public detail::Stream {
public:
  explicit ZiminValuation(std::uint32_t k_max) {
    info_.kind = SourceInfo::Kind::zimin;
    info_.alphabet = Alphabet::zimin;
    info_.zimin_definition = 2;
    info_.k_max = k_max;
  }
  std::uint32_t at(std::uint64_t pos) const override {
    std::uint32_t l = zimin_letter_at(pos);
    if (l > info_.k_max)
      throw CapExceeded("zimin letter beyond x" + std::to_string(info_.k_max));
    return l;
  }
  const SourceInfo& info() const override { return info_; }
  std::string describe() const override { return "zimin(def2)"; }

private:
  SourceInfo info_;
};

class ZiminMorphic final : public BufferedStream {
public:
  explicit ZiminMorphic(std::uint32_t k_max) {
    info_.kind = SourceInfo::Kind::zimin;
    info_.alphabet = Alphabet::zimin;
    info_.zimin_definition = 3;
    info_.k_max = k_max;
  }
  const SourceInfo& info() const override { return info_; }
  std::string describe() const override { return "zimin(def3)"; }

protected:
  // fixed point of x_i -> x1 x_{i+1}
  void extend(std::vector<std::uint32_t>& buf) const override {
    if (buf.empty()) {
      buf = {1};
      return;
    }
    std::vector<std::uint32_t> next;
    next.reserve(buf.size() * 2);
    for (std::uint32_t l : buf) {
      if (l + 1 > info_.k_max)
        throw CapExceeded("zimin generation beyond x" +
                          std::to_string(info_.k_max));
      next.push_back(1);
      next.push_back(l + 1);
    }
    buf = std::move(next);
  }

private:
  SourceInfo info_;
};

class PeriodDoubling final : public detail::Stream {
public:
  PeriodDoubling() {
    info_.kind = SourceInfo::Kind::period_doubling;
    info_.alphabet = Alphabet::binary;
  }
  std::uint32_t at(std::uint64_t pos) const override {
    // psi(x_n) with n = val2(pos+1)+1: 1 exactly when n is even
    return zimin_letter_at(pos) % 2 == 0 ? 1u : 0u;
  }
  const SourceInfo& info() const override { return info_; }
  std::string describe() const override { return "period_doubling"; }

private:
  SourceInfo info_;
};

class SquarefreeTernary final : public BufferedStream {
public:
  SquarefreeTernary() {
    info_.kind = SourceInfo::Kind::squarefree_ternary;
    info_.alphabet = Alphabet::ternary;
  }
  const SourceInfo& info() const override { return info_; }
  std::string describe() const override { return "squarefree"; }

protected:
  void extend(std::vector<std::uint32_t>& buf) const override {
    if (buf.empty()) {
      buf = {0};
      return;
    }
    static const std::vector<std::uint32_t> images[3] = {
        {0, 1, 2}, {0, 2}, {1}};
    std::vector<std::uint32_t> next;
    next.reserve(buf.size() * 3);
    for (std::uint32_t l : buf)
      next.insert(next.end(), images[l].begin(), images[l].end());
    buf = std::move(next);
  }

private:
  SourceInfo info_;
};

class UltimatelyPeriodic final : public detail::Stream {
public:
  UltimatelyPeriodic(const Word& u, const Word& v) {
    if (v.empty()) throw PreconditionViolated("period must be nonempty");
    if (!u.empty() && u.alphabet() != v.alphabet())
      throw PreconditionViolated("preperiod and period alphabets differ");
    info_.kind = SourceInfo::Kind::ultimately_periodic;
    info_.alphabet = v.alphabet();
    info_.eventually_periodic = true;
    info_.preperiod = u.letters();
    info_.period = v.letters();
  }
  std::uint32_t at(std::uint64_t pos) const override {
    if (pos < info_.preperiod.size())
      return info_.preperiod[static_cast<std::size_t>(pos)];
    return info_.period[static_cast<std::size_t>((pos - info_.preperiod.size()) %
                                                 info_.period.size())];
  }
  const SourceInfo& info() const override { return info_; }
  std::string describe() const override {
    Word u(info_.alphabet, info_.preperiod), v(info_.alphabet, info_.period);
    return u.str() + "(" + v.str() + ")^w";
  }

private:
  SourceInfo info_;
};

class FileStream final : public detail::Stream {
public:
  FileStream(const std::string& path, RepeatPolicy policy,
             std::size_t preperiod_len) {
    std::ifstream in(path);
    if (!in) throw InsufficientData("cannot open word file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string content = ss.str();

    bool has_space = content.find_first_of(" \t\r\n") != std::string::npos;
    std::vector<std::uint32_t> letters;
    Alphabet tag;
    if (has_space) {
      std::istringstream tok(content);
      long long t;
      std::uint32_t mx = 0;
      bool any_zero = false;
      while (tok >> t) {
        if (t < 0) throw PreconditionViolated("negative letter in " + path);
        if (t == 0) any_zero = true;
        mx = std::max<std::uint32_t>(mx, static_cast<std::uint32_t>(t));
        letters.push_back(static_cast<std::uint32_t>(t));
      }
      // tokens containing 0 cannot be zimin letters; otherwise they are
      tag = any_zero ? (mx <= 1 ? Alphabet::binary : Alphabet::ternary)
                     : Alphabet::zimin;
      if (tag == Alphabet::ternary && mx > 2)
        throw PreconditionViolated("letters out of range in " + path);
    } else {
      Word w = Word::parse(content);
      tag = w.alphabet();
      letters = w.letters();
    }
    if (letters.empty()) throw InsufficientData("empty word file: " + path);

    info_.kind = SourceInfo::Kind::from_file;
    info_.alphabet = tag;
    info_.path = path;
    if (policy == RepeatPolicy::cycle_suffix) {
      if (preperiod_len >= letters.size())
        throw PreconditionViolated("cycle_suffix leaves an empty period");
      info_.eventually_periodic = true;
      info_.preperiod.assign(letters.begin(), letters.begin() + preperiod_len);
      info_.period.assign(letters.begin() + preperiod_len, letters.end());
    } else {
      data_ = std::move(letters);
    }
  }

  std::uint32_t at(std::uint64_t pos) const override {
    if (info_.eventually_periodic) {
      if (pos < info_.preperiod.size())
        return info_.preperiod[static_cast<std::size_t>(pos)];
      return info_.period[static_cast<std::size_t>(
          (pos - info_.preperiod.size()) % info_.period.size())];
    }
    if (pos >= data_.size())
      throw InsufficientData("file word has only " +
                             std::to_string(data_.size()) + " letters");
    return data_[static_cast<std::size_t>(pos)];
  }
  const SourceInfo& info() const override { return info_; }
  std::string describe() const override { return "file(" + info_.path + ")"; }

private:
  SourceInfo info_;
  std::vector<std::uint32_t> data_;
};

}  // namespace

InfiniteWordSource zimin_source(int definition_id, std::uint32_t k_max) {
  switch (definition_id) {
    case 1: return InfiniteWordSource(std::make_shared<ZiminRecursive>(k_max));
    case 2: return InfiniteWordSource(std::make_shared<ZiminValuation>(k_max));
    case 3: return InfiniteWordSource(std::make_shared<ZiminMorphic>(k_max));
    default:
      throw PreconditionViolated("zimin definition_id must be 1, 2 or 3");
  }
}

InfiniteWordSource period_doubling_source() {
  return InfiniteWordSource(std::make_shared<PeriodDoubling>());
}

InfiniteWordSource squarefree_source() {
  return InfiniteWordSource(std::make_shared<SquarefreeTernary>());
}

InfiniteWordSource ultimately_periodic_source(const Word& u, const Word& v) {
  return InfiniteWordSource(std::make_shared<UltimatelyPeriodic>(u, v));
}

InfiniteWordSource from_file_source(const std::string& path,
                                    RepeatPolicy policy,
                                    std::size_t preperiod_len) {
  return InfiniteWordSource(
      std::make_shared<FileStream>(path, policy, preperiod_len));
}

Word psi(const Word& w) {
  if (!w.empty() && w.alphabet() != Alphabet::zimin)
    throw PreconditionViolated("psi expects a zimin word");
  std::vector<std::uint32_t> out;
  out.reserve(w.size());
  for (std::uint32_t l : w.letters()) out.push_back(l % 2 == 0 ? 1u : 0u);
  return Word(Alphabet::binary, std::move(out));
}

std::size_t largest_square_in(const Word& w) {
  const auto& s = w.letters();
  std::size_t n = s.size(), best = 0;
  for (std::size_t period = n / 2; period >= 1; --period) {
    std::size_t run = 0;
    for (std::size_t i = 0; i + period < n; ++i) {
      if (s[i] == s[i + period]) {
        if (++run >= period) {
          best = 2 * period;
          break;
        }
      } else {
        run = 0;
      }
    }
    if (best) break;  // periods scanned in decreasing order
  }
  return best;
}

// ---------------------------------------------------------------------------
// Period-doubling membership
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kPdDeciderCap = 4096;

// Exact sets of length-m factors of D, via the desubstitution
// F(m) = substrings of sigma(F(ceil((m+1)/2))), sigma: 0 -> 01, 1 -> 00.
// Base cases: every even position of a sigma-image is a block start and
// holds 0, so "11" never occurs.
const std::set<std::string>& pd_factors(std::size_t m) {
  static std::mutex mu;
  static std::map<std::size_t, std::set<std::string>> cache;
  std::lock_guard<std::mutex> lock(mu);

  std::vector<std::size_t> todo{m};
  while (!todo.empty()) {
    std::size_t len = todo.back();
    if (cache.count(len)) {
      todo.pop_back();
      continue;
    }
    if (len <= 2) {
      cache[1] = {"0", "1"};
      cache[2] = {"00", "01", "10"};
      todo.pop_back();
      continue;
    }
    std::size_t h = (len + 2) / 2;  // ceil((len+1)/2), < len for len >= 3
    auto it = cache.find(h);
    if (it == cache.end()) {
      todo.push_back(h);
      continue;
    }
    std::set<std::string> out;
    for (const std::string& parent : it->second) {
      std::string img;
      img.reserve(parent.size() * 2);
      for (char c : parent) img += (c == '0') ? "01" : "00";
      for (std::size_t p = 0; p + len <= img.size(); ++p)
        out.insert(img.substr(p, len));
    }
    cache[len] = std::move(out);
    todo.pop_back();
  }
  return cache[m];
}

}  // namespace

std::optional<bool> period_doubling_factor_decision(const Word& u) {
  if (u.empty() || u.alphabet() != Alphabet::binary) return false;
  if (u.size() > kPdDeciderCap) return std::nullopt;
  std::string s;
  s.reserve(u.size());
  for (std::uint32_t l : u.letters()) s += char('0' + l);
  return pd_factors(u.size()).count(s) > 0;
}

}  // namespace rw
