#include "rw/props.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "rw/conslen.hpp"
#include "rw/ramsey.hpp"
#include "rw/verifier.hpp"
#include "rw/zimin.hpp"

namespace rw::props {

namespace {

struct Checker {
  SuiteResult res;

  void check(bool cond, const std::string& msg) {
    if (cond) {
      ++res.passed;
    } else {
      ++res.failed;
      if (res.failures.size() < 10) res.failures.push_back(msg);
    }
  }
};

using SuiteFn = std::function<void(Checker&, const Options&)>;

// -------------------------------------------------------------- oracles ----

std::optional<std::size_t> naive_first(const std::vector<std::uint32_t>& text,
                                       const Word& u) {
  if (u.size() > text.size()) return std::nullopt;
  for (std::size_t p = 0; p + u.size() <= text.size(); ++p) {
    bool match = true;
    for (std::size_t i = 0; i < u.size() && match; ++i)
      match = text[p + i] == u[i];
    if (match) return p;
  }
  return std::nullopt;
}

std::vector<Word> distinct_factors(const FactorIndex& idx, std::size_t window,
                                   std::size_t max_len) {
  std::set<Word> seen;
  for (std::size_t p = 0; p < window; ++p)
    for (std::size_t l = 1; l <= max_len && p + l <= window; ++l)
      seen.insert(idx.slice(p, l));
  return std::vector<Word>(seen.begin(), seen.end());
}

// slice validity table: valid(p,q) iff A(u[p..q)) == a0 + p
std::vector<std::uint8_t> slot_table(const FactorIndex& idx, const Word& u,
                                     std::size_t a0) {
  std::size_t n = u.size();
  std::vector<std::uint8_t> valid((n + 1) * (n + 1), 0);
  for (std::size_t p = 0; p < n; ++p) {
    auto c = idx.cursor();
    for (std::size_t q = p + 1; q <= n; ++q) {
      if (!c.advance(u[q - 1])) break;
      valid[p * (n + 1) + q] = c.first_occurrence() == a0 + p;
    }
  }
  return valid;
}

// brute force over every cut set (compared against the DP)
std::size_t brute_consecutive_length(const FactorIndex& idx, const Word& u) {
  std::size_t a0 = idx.first_occurrence(u);
  std::size_t n = u.size();
  auto valid = slot_table(idx, u, a0);
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::size_t prev = 0, terms = 0;
    bool ok = true;
    for (std::size_t c = 1; c <= n && ok; ++c) {
      bool cut = c == n || ((mask >> (c - 1)) & 1);
      if (!cut) continue;
      ok = valid[prev * (n + 1) + c];
      prev = c;
      ++terms;
    }
    if (ok) best = std::max(best, terms);
  }
  return best;
}

struct LMemo {
  const FactorIndex& idx;
  std::unordered_map<Word, std::size_t, WordHash> memo;

  std::size_t operator()(const Word& u) {
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    std::size_t l = consecutive_length(idx, u);
    memo.emplace(u, l);
    return l;
  }
};

std::vector<std::pair<CanonicalFactor, Word>> canonicals_up_to(
    std::uint32_t k_cap) {
  std::vector<std::pair<CanonicalFactor, Word>> out;
  for (std::uint32_t k = 1; k <= k_cap; ++k) {
    std::uint64_t side = 1ull << (k - 1);
    for (std::uint64_t am = 0; am < side; ++am)
      for (std::uint64_t bm = 0; bm < side; ++bm) {
        CanonicalFactor c(FinSet::from_binary_weight(am), k,
                          FinSet::from_binary_weight(bm));
        Word w = build(c);
        out.emplace_back(std::move(c), std::move(w));
      }
  }
  return out;
}

// ------------------------------------------------------------ suites -------

void suite_prefix_consistency(Checker& ck, const Options&) {
  struct Case {
    InfiniteWordSource src;
    std::size_t n;
  };
  std::vector<Case> cases;
  cases.push_back({zimin_source(1), 100000});
  cases.push_back({zimin_source(2), 100000});
  cases.push_back({zimin_source(3), 100000});
  cases.push_back({period_doubling_source(), 100000});
  cases.push_back({squarefree_source(), 100000});
  cases.push_back({ultimately_periodic_source(Word::parse("0"),
                                              Word::parse("011")),
                   100000});
  for (const auto& c : cases) {
    Word full = c.src.prefix(c.n);
    bool ok = true;
    for (std::size_t m : {std::size_t(0), std::size_t(1), std::size_t(2),
                          std::size_t(17), std::size_t(100), std::size_t(999),
                          c.n / 2, c.n - 1, c.n}) {
      if (c.src.prefix(m) != full.slice(0, m)) ok = false;
    }
    ck.check(ok, "prefix consistency fails for " + c.src.describe());

    // shift composition and slicing
    auto v1 = c.src.suffix_view(2).suffix_view(3);
    auto v2 = c.src.suffix_view(5);
    ck.check(v1.prefix(10000) == v2.prefix(10000),
             "T^3 T^2 != T^5 for " + c.src.describe());
    ck.check(v1.base_offset() == 5, "offsets must compose additively");
    ck.check(c.src.suffix_view(7).prefix(64) == full.slice(7, 64),
             "suffix view disagrees with slicing for " + c.src.describe());
  }
}

void suite_zimin_defs(Checker& ck, const Options&) {
  std::size_t n = 1 << 14;
  Word a = zimin_source(1).prefix(n);
  Word b = zimin_source(2).prefix(n);
  Word c = zimin_source(3).prefix(n);
  ck.check(a == b, "definitions 1 and 2 disagree");
  ck.check(a == c, "definitions 1 and 3 disagree");
  ck.check(zimin_source(2).prefix(8) ==
               Word::parse("x1 x2 x1 x3 x1 x2 x1 x4"),
           "Z prefix(8) mismatch");
}

void suite_psi_pd(Checker& ck, const Options&) {
  std::size_t n = 10000;
  ck.check(psi(zimin_source(2).prefix(n)) ==
               period_doubling_source().prefix(n),
           "psi(Z) != D on prefix " + std::to_string(n));
  ck.check(period_doubling_source().prefix(23) ==
               Word::parse("01000101010001000100010"),
           "D prefix(23) mismatch");
}

void suite_squarefree(Checker& ck, const Options&) {
  auto sf = squarefree_source();
  ck.check(sf.prefix(6) == Word::parse("abcacb"), "sf prefix(6) mismatch");
  ck.check(sf.prefix(12) == Word::parse("abcacbabcbac"),
           "sf prefix(12) mismatch");
  ck.check(largest_square_in(sf.prefix(2000)) == 0,
           "squarefree prefix(2000) contains a square");
  ck.check(largest_square_in(Word::parse("0101")) == 4, "square (01)^2");
  ck.check(largest_square_in(Word::parse("00100")) == 2, "square 00");
}

void suite_zn_lengths(Checker& ck, const Options&) {
  for (std::uint32_t n = 1; n <= 20; ++n) {
    Word z = build_zn(n), u = build_un(n);
    ck.check(z.size() == zn_length(n),
             "|Z_" + std::to_string(n) + "| != 2^n - 1");
    ck.check(u.size() == un_length(n),
             "|u_" + std::to_string(n) + "| != 2^(n-1)");
    if (n > 1) {
      Word prev = build_zn(n - 1);
      ck.check(z.size() == 2 * prev.size() + 1,
               "Z_n recursion length fails at " + std::to_string(n));
    }
  }
}

void suite_ab_relation(Checker& ck, const Options& opts) {
  std::mt19937_64 rng(opts.seed);
  for (auto src : {zimin_source(2), squarefree_source()}) {
    FactorIndex idx(src, 256);
    for (int t = 0; t < 200; ++t) {
      std::size_t p = rng() % 200, l = 1 + rng() % 24;
      Word u = idx.slice(p, l);
      std::size_t a = idx.first_occurrence(u);
      ck.check(idx.first_occurrence_end(u) - a == u.size(),
               "B(u) - A(u) != |u|");
    }
  }
}

void suite_ab_monotonicity(Checker& ck, const Options&) {
  FactorIndex idx(zimin_source(2), 255);
  std::size_t n = 255;
  // A-value table for all slices
  std::vector<std::ptrdiff_t> a((n + 1) * (n + 1), -1);
  for (std::size_t p = 0; p < n; ++p) {
    auto c = idx.cursor();
    for (std::size_t q = p + 1; q <= n; ++q) {
      if (!c.advance(idx.letter_at(q - 1))) break;
      a[p * (n + 1) + q] = static_cast<std::ptrdiff_t>(c.first_occurrence());
    }
  }
  bool prefix_ok = true, suffix_ok = true;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 2; q <= n; ++q) {
      // v = u[p..q') prefix of u = u[p..q): A(v) <= A(u)
      for (std::size_t q2 = p + 1; q2 < q; ++q2)
        if (a[p * (n + 1) + q2] > a[p * (n + 1) + q]) prefix_ok = false;
      // v = u[p'..q) suffix of u: B(v) <= B(u)
      std::ptrdiff_t bu = a[p * (n + 1) + q] + static_cast<std::ptrdiff_t>(q - p);
      for (std::size_t p2 = p + 1; p2 < q; ++p2)
        if (a[p2 * (n + 1) + q] + static_cast<std::ptrdiff_t>(q - p2) > bu)
          suffix_ok = false;
    }
  ck.check(prefix_ok, "prefix monotonicity A(v) <= A(u) fails");
  ck.check(suffix_ok, "suffix monotonicity B(v) <= B(u) fails");
}

void suite_index_oracle(Checker& ck, const Options& opts) {
  std::mt19937_64 rng(opts.seed);
  std::vector<InfiniteWordSource> sources = {
      zimin_source(2), period_doubling_source(), squarefree_source(),
      ultimately_periodic_source(Word::parse("0"), Word::parse("01"))};
  for (const auto& src : sources) {
    std::size_t w = 512;
    FactorIndex idx(src, w);
    std::vector<std::uint32_t> text;
    for (std::size_t i = 0; i < w; ++i) text.push_back(idx.letter_at(i));
    std::size_t agree = 0;
    for (int t = 0; t < 1000; ++t) {
      std::size_t p = rng() % (w - 32), l = 1 + rng() % 24;
      Word u = idx.slice(p, l);
      if (t % 3 == 0 && src.alphabet() != Alphabet::zimin) {
        // mutate one letter so non-factors get exercised too
        auto letters = u.letters();
        std::uint32_t lim = src.alphabet() == Alphabet::binary ? 2 : 3;
        letters[rng() % letters.size()] = static_cast<std::uint32_t>(rng() % lim);
        u = Word(src.alphabet(), letters);
      }
      if (idx.try_first_occurrence(u) == naive_first(text, u)) ++agree;
    }
    ck.check(agree == 1000,
             "index disagrees with the naive scan for " + src.describe());
  }
}

void suite_dp_oracle(Checker& ck, const Options&) {
  for (auto src : {zimin_source(2), squarefree_source()}) {
    FactorIndex idx(src, 256);
    auto factors = distinct_factors(idx, 128, 16);
    bool all = true;
    for (const Word& u : factors)
      if (consecutive_length(idx, u) != brute_consecutive_length(idx, u))
        all = false;
    ck.check(all, "DP disagrees with brute force for " + src.describe());
    ck.check(factors.size() > 50, "factor enumeration came up short");
  }
}

void suite_prop11(Checker& ck, const Options&) {
  for (auto src : {zimin_source(2), squarefree_source()}) {
    FactorIndex idx(src, 256);
    auto factors = distinct_factors(idx, 128, 12);
    bool chunks_ok = true, ranges_ok = true;
    for (const Word& u : factors) {
      std::vector<Word> chunks;
      try {
        chunks = maximal_decomposition(idx, u).chunks();
      } catch (const Error&) {
        chunks_ok = false;  // irreducibility is checked inside
        continue;
      }
      for (std::size_t i = 0; i < chunks.size() && ranges_ok; ++i) {
        Word acc(u.alphabet());
        for (std::size_t j = i; j < chunks.size(); ++j) {
          acc = acc + chunks[j];
          if (consecutive_length(idx, acc) != j - i + 1) ranges_ok = false;
        }
      }
    }
    ck.check(chunks_ok, "a maximal decomposition chunk is reducible for " +
                            src.describe());
    ck.check(ranges_ok,
             "L(v_i...v_j) != j-i+1 inside a maximal decomposition for " +
                 src.describe());
  }
}

void suite_prop12(Checker& ck, const Options&) {
  for (auto src : {zimin_source(2), squarefree_source()}) {
    FactorIndex idx(src, 280);
    auto factors = distinct_factors(idx, 256, 24);
    LMemo L{idx, {}};
    std::map<std::size_t, std::vector<const Word*>> by_a;
    std::unordered_map<const Word*, std::size_t> b_of;
    for (const Word& u : factors) {
      std::size_t a = idx.first_occurrence(u);
      by_a[a].push_back(&u);
      b_of[&u] = a + u.size();
    }
    std::size_t pairs = 0;
    bool ok = true;
    for (const Word& u : factors) {
      auto it = by_a.find(b_of[&u]);
      if (it == by_a.end()) continue;
      for (const Word* v : it->second) {
        std::size_t lu = L(u), lv = L(*v), luv = L(u + *v);
        if (!(lu + lv <= luv && luv <= lu + lv + 1)) ok = false;
        ++pairs;
      }
    }
    ck.check(ok, "subadditivity band violated for " + src.describe());
    ck.check(pairs > 100, "too few consecutive pairs enumerated");
  }
}

void suite_def4_bridge(Checker& ck, const Options&) {
  for (auto src : {zimin_source(2), squarefree_source()}) {
    FactorIndex idx(src, 256);
    ColoringSpec spec = ColoringSpec::firstocc_split();
    auto factors = distinct_factors(idx, 128, 128);
    bool ok = true;
    for (const Word& u : factors) {
      std::size_t a0 = idx.first_occurrence(u);
      bool split = false;
      for (std::size_t s = 1; s < u.size() && !split; ++s) {
        auto av = idx.try_first_occurrence(u.slice(0, s));
        auto aw = idx.try_first_occurrence(u.slice(s, u.size() - s));
        // B(v2) = B(u) <=> A(v2) = A(u) + s
        split = av && *av == a0 && aw && *aw == a0 + s;
      }
      bool l2 = consecutive_length(idx, u) >= 2;
      bool red = color(spec, idx, u) == Color::atom("rb", kRed);
      if (split != l2 || red != split) ok = false;
    }
    ck.check(ok, "split rule <=> L >= 2 bridge fails for " + src.describe());
  }
}

void suite_prop7(Checker& ck, const Options&) {
  for (std::uint32_t n = 1; n <= 10; ++n) {
    Word un = build_un(n);
    std::set<Word> suffixes;
    for (std::size_t l = 1; l < un.size(); ++l)
      suffixes.insert(un.slice(un.size() - l, l));
    std::set<Word> ua;
    for (std::uint64_t mask = 1; mask < (1ull << (n - 1)); ++mask)
      ua.insert(build_u(FinSet::from_binary_weight(mask)));
    ck.check(suffixes == ua,
             "proper suffixes of u_" + std::to_string(n) + " != {u_A}");

    if (n >= 2) {
      Word zn1 = build_zn(n - 1);
      bool ok = true;
      for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
        FinSet A = FinSet::from_binary_weight(mask);
        Word w = build_v(A.complement_in(1, n)) + build_u(A);
        if (w != zn1) ok = false;
        Word xn(Alphabet::zimin, {n});
        if (xn + w != un) ok = false;
      }
      ck.check(ok, "Z_{n-1} = v_complement u_A fails at n=" + std::to_string(n));
    }
  }
}

void suite_prop8(Checker& ck, const Options&) {
  // parse . build = id on the u_A family
  bool ua_ok = true;
  for (std::uint64_t mask = 1; mask < (1ull << 8); ++mask) {
    FinSet A = FinSet::from_binary_weight(mask);
    Word w = build_u(A);
    CanonicalFactor c = parse_factor(w);
    if (build(c) != w) ua_ok = false;
    if (c.k != A.max()) ua_ok = false;
  }
  ck.check(ua_ok, "parse/build round trip fails on u_A words");

  // parse succeeds on every distinct substring of Z_8 and round-trips
  Word z8 = build_zn(8);
  std::set<Word> seen;
  bool sub_ok = true;
  std::size_t count = 0;
  for (std::size_t p = 0; p < z8.size(); ++p)
    for (std::size_t l = 1; p + l <= z8.size(); ++l) {
      Word w = z8.slice(p, l);
      if (!seen.insert(w).second) continue;
      ++count;
      try {
        CanonicalFactor c = parse_factor(w);
        if (build(c) != w) sub_ok = false;
        std::uint32_t mx = 0;
        for (auto letter : w.letters()) mx = std::max(mx, letter);
        if (c.k != mx) sub_ok = false;
      } catch (const NotAZiminFactor&) {
        sub_ok = false;
      }
    }
  ck.check(sub_ok, "parse fails on a substring of Z_8");
  ck.check(count > 10000, "substring enumeration came up short");
  ck.check(!is_zimin_factor(Word::parse("x1 x1")), "x1 x1 must not parse");
}

void suite_prop9(Checker& ck, const Options&) {
  auto canon = canonicals_up_to(7);
  FactorIndex idx(zimin_source(2), 1024);

  // factors with k <= 7 occur inside Z_7, so window search is an exact oracle
  std::vector<FactorIndex::Cursor> after;
  std::vector<bool> in_window;
  after.reserve(canon.size());
  for (const auto& [c, w] : canon) {
    auto cur = idx.cursor();
    bool ok = true;
    for (std::uint32_t l : w.letters())
      if (!cur.advance(l)) {
        ok = false;
        break;
      }
    after.push_back(cur);
    in_window.push_back(ok);
  }

  std::size_t concat_bad = 0, suffix_bad = 0, formula_bad = 0;
  for (std::size_t i = 0; i < canon.size(); ++i) {
    const auto& [cu, wu] = canon[i];
    for (std::size_t j = 0; j < canon.size(); ++j) {
      const auto& [cv, wv] = canon[j];
      if (cu.k >= cv.k) continue;

      bool calc = concat_is_factor(cu, cv);
      bool lit = in_window[i];
      if (lit) {
        auto cur = after[i];
        for (std::uint32_t l : wv.letters())
          if (!cur.advance(l)) {
            lit = false;
            break;
          }
      }
      if (calc != lit) ++concat_bad;
      if (calc) {
        CanonicalFactor cc = concat_canonical(cu, cv);
        if (build(cc) != wu + wv) ++formula_bad;
      }

      bool scalc = suffix_test(cu, cv);
      bool slit = wu.is_suffix_of(wv);
      if (scalc != slit) ++suffix_bad;
    }
  }
  ck.check(concat_bad == 0, "concat predicate disagrees with the string oracle on " +
                                std::to_string(concat_bad) + " pairs");
  ck.check(formula_bad == 0, "concat canonical formula fails on " +
                                 std::to_string(formula_bad) + " pairs");
  ck.check(suffix_bad == 0, "suffix predicate disagrees with literal suffixes on " +
                                std::to_string(suffix_bad) + " pairs");
}

void suite_corollary1(Checker& ck, const Options& opts) {
  std::mt19937_64 rng(opts.seed);
  auto canon = canonicals_up_to(7);
  std::map<std::uint32_t, std::vector<std::size_t>> by_k;
  for (std::size_t i = 0; i < canon.size(); ++i)
    by_k[canon[i].first.k].push_back(i);

  std::size_t closure_bad = 0, suffix_bad = 0, tested = 0;
  for (int t = 0; t < 20000; ++t) {
    std::uint32_t k1 = 1 + rng() % 5;
    std::uint32_t k2 = k1 + 1 + rng() % (6 - k1);
    std::uint32_t k3 = k2 + 1 + rng() % (7 - k2 + 1);
    if (k3 > 7) continue;
    const auto& [cu, wu] = canon[by_k[k1][rng() % by_k[k1].size()]];
    const auto& [cv, wv] = canon[by_k[k2][rng() % by_k[k2].size()]];
    const auto& [cw, ww] = canon[by_k[k3][rng() % by_k[k3].size()]];
    ++tested;
    if (concat_is_factor(cu, cv) && concat_is_factor(cv, cw)) {
      CanonicalFactor cuv = concat_canonical(cu, cv);
      if (!concat_is_factor(cuv, cw)) ++closure_bad;
    }
    if (concat_is_factor(cu, cw) && concat_is_factor(cv, cw)) {
      if (!suffix_test(cu, cv)) ++suffix_bad;
    }
  }
  ck.check(closure_bad == 0, "Corollary 1(1) fails");
  ck.check(suffix_bad == 0, "Corollary 1(2) fails");
  ck.check(tested > 10000, "too few triples sampled");
}

void suite_lemma1(Checker& ck, const Options&) {
  std::size_t probe = 1 << 12;
  // eventually chained intervals: A_1 = {1,3}, then {4,5}, {6}, {7}, ...
  {
    std::vector<FinSet> blocks{FinSet{1, 3}, FinSet{4, 5}};
    for (std::uint32_t i = 6; i <= 14; ++i) blocks.push_back(FinSet{i});
    Word y(Alphabet::zimin);
    FinSet covered;
    for (const auto& b : blocks) {
      y = y + build_u(b);
      covered = covered.unite(b);
    }
    ck.check(y.size() >= probe, "lemma1 positive word too short");
    // the complement of the covered tail determines the suffix offset
    std::uint64_t offset = covered.complement_in(1, 15).binary_weight();
    bool match = true;
    for (std::size_t i = 0; i < probe && match; ++i)
      match = y[i] == zimin_letter_at(offset + i);
    ck.check(match, "chained-interval product is not the expected suffix T^" +
                        std::to_string(offset));
  }
  // skipping every other index forever: never a suffix
  {
    Word y(Alphabet::zimin);
    for (std::uint32_t i = 2; i <= 14; i += 2) y = y + build_un(i);
    ck.check(y.size() >= probe, "lemma1 negative word too short");
    bool some_match = false;
    for (std::uint64_t m = 0; m <= probe && !some_match; ++m) {
      bool match = true;
      for (std::size_t i = 0; i < probe && match; ++i)
        match = y[i] == zimin_letter_at(m + i);
      some_match = match;
    }
    ck.check(!some_match, "skipping product matched a suffix of Z");
  }
}

void suite_prop10(Checker& ck, const Options&) {
  ColoringSpec cz = ColoringSpec::zimin_cz();
  FactorIndex idx(zimin_source(2), 64);  // unused by zimin_cz
  for (std::uint64_t mask = 1; mask < (1ull << 8); ++mask) {
    FinSet A = FinSet::from_binary_weight(mask);
    Word w = build_u(A);
    bool red = color(cz, idx, w) == Color::atom("rb", kRed);
    ck.check(red == A.is_interval(),
             "u_" + A.str() + " should be " +
                 (A.is_interval() ? "red" : "blue"));
  }
}

void suite_cnf_splits(Checker& ck, const Options& opts) {
  std::mt19937_64 rng(opts.seed);
  FactorIndex idx(zimin_source(2), 512);
  ColoringSpec cz = ColoringSpec::zimin_cz();
  std::size_t tested = 0;
  for (int attempt = 0; attempt < 20000 && tested < 200; ++attempt) {
    // mutate a substring of Z so that it is usually a non-factor
    std::size_t p = rng() % 200, l = 2 + rng() % 12;
    auto letters = idx.slice(p, l).letters();
    letters[rng() % letters.size()] = 1 + rng() % 4;
    Word w(Alphabet::zimin, letters);
    if (is_zimin_factor(w)) continue;
    ++tested;
    bool red = color(cz, idx, w) == Color::atom("rb", kRed);
    auto split = idx.two_factor_split(w);
    ck.check(red == !split.has_value(),
             "C_NF color disagrees with two_factor_split on \"" + w.str() +
                 "\"");
  }
  ck.check(tested == 200, "could not sample 200 non-factors of Z");
}

void suite_determinism(Checker& ck, const Options&) {
  FactorIndex zi(zimin_source(2), 512);
  FactorIndex sf(squarefree_source(), 512);
  ColoringSpec cz = ColoringSpec::zimin_cz();
  ColoringSpec s3 = ColoringSpec::squarefree3(256);
  ColoringSpec prod = ColoringSpec::product(
      {ColoringSpec::firstocc_split(), ColoringSpec::squarefree3(256)});
  bool same = true;
  for (int t = 0; t < 1000; ++t) {
    Word u = zi.slice(t % 200, 1 + t % 12);
    if (color(cz, zi, u) != color(cz, zi, u)) same = false;
    Word v = sf.slice(t % 200, 1 + t % 12);
    if (color(s3, sf, v) != color(s3, sf, v)) same = false;
    if (color(prod, sf, v) != color(prod, sf, v)) same = false;
  }
  ck.check(same, "repeated evaluations are not bit-identical");
  ck.check(prod.palette_size() == 6, "product palette size must be 6");
}

void suite_boundary_nonempty(Checker& ck, const Options& opts) {
  std::mt19937_64 rng(opts.seed);
  FactorIndex idx(squarefree_source(), 512);

  // lambda_+ is nonempty for every factor with A(u) >= 1
  std::size_t tested = 0;
  bool lam_ok = true;
  for (int attempt = 0; attempt < 20000 && tested < 200; ++attempt) {
    std::size_t p = 1 + rng() % 200, l = 1 + rng() % 16;
    Word u = idx.slice(p, l);
    if (idx.first_occurrence(u) < 1) continue;
    ++tested;
    if (boundary_set(idx, u, Boundary::lambda_plus).empty()) lam_ok = false;
  }
  ck.check(tested == 200, "could not sample 200 factors with A(u) >= 1");
  ck.check(lam_ok, "lambda_+(u) empty for a factor with A(u) >= 1");

  // rho_+ is nonempty for parts sitting in a consecutive suffix chain
  std::size_t found = 0;
  bool rho_ok = true;
  for (std::size_t k = 0; k < 6; ++k) {
    for (std::size_t c1 = k + 1; c1 <= k + 12; ++c1) {
      Word u1 = idx.slice(k, c1 - k);
      if (idx.first_occurrence(u1) != k) continue;
      for (std::size_t c2 = c1 + u1.size(); c2 <= c1 + 40 && c2 < 256; ++c2) {
        Word u2 = idx.slice(c1, c2 - c1);
        if (idx.first_occurrence(u2) != c1) continue;
        if (!u1.is_suffix_of(u2)) continue;
        ++found;
        if (boundary_set(idx, u2, Boundary::rho_plus).empty()) rho_ok = false;
        if (boundary_set(idx, u2, Boundary::lambda_plus).empty()) rho_ok = false;
      }
    }
  }
  ck.check(rho_ok, "rho_+(u_{n+1}) empty in a consecutive suffix chain");
  ck.check(found >= 3, "no chain parts found to test rho_+");
}

void suite_lambda_complete(Checker& ck, const Options& opts) {
  std::mt19937_64 rng(opts.seed);
  FactorIndex idx(squarefree_source(), 256);
  auto all = distinct_factors(idx, 256, 14);
  LMemo L{idx, {}};

  std::size_t tested = 0;
  bool ok = true;
  for (int attempt = 0; attempt < 20000 && tested < 40; ++attempt) {
    std::size_t p = 1 + rng() % 128, l = 1 + rng() % 10;
    Word u = idx.slice(p, l);
    std::size_t a0 = idx.first_occurrence(u);
    if (a0 < 1 || a0 > 14) continue;
    ++tested;
    std::size_t b0 = a0 + u.size();
    // definition-level enumeration over every candidate factor v
    std::set<Word> lp, lm;
    for (const Word& v : all) {
      if (v.size() > a0) continue;
      auto avu = idx.try_first_occurrence(v + u);
      if (!avu || *avu + v.size() + u.size() != b0) continue;  // B(vu) = B(u)
      if (L(v) != 1) continue;
      std::size_t bv = idx.first_occurrence(v) + v.size();
      if (bv == a0) lp.insert(v);
      else if (bv < a0) lm.insert(v);
    }
    auto got_p = boundary_set(idx, u, Boundary::lambda_plus);
    auto got_m = boundary_set(idx, u, Boundary::lambda_minus);
    if (std::set<Word>(got_p.begin(), got_p.end()) != lp) ok = false;
    if (std::set<Word>(got_m.begin(), got_m.end()) != lm) ok = false;
  }
  ck.check(tested >= 20, "too few factors sampled for lambda completeness");
  ck.check(ok, "slice enumeration misses a lambda candidate");
}

void suite_consecutive_equiv(Checker& ck, const Options& opts) {
  std::mt19937_64 rng(opts.seed);
  FactorIndex idx(zimin_source(2), 256);
  bool ok = true;
  for (int t = 0; t < 500; ++t) {
    std::size_t p = rng() % 128, l = 2 + rng() % 10;
    Word u = idx.slice(p, l);
    std::size_t a0 = idx.first_occurrence(u);
    // random cut set
    std::vector<std::size_t> cuts;
    for (std::size_t c = 1; c < l; ++c)
      if (rng() % 3 == 0) cuts.push_back(c);

    bool slot = is_consecutive(idx, u, cuts);

    // the chained A/B formulation
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    std::size_t prev = 0;
    for (std::size_t c : cuts) {
      spans.emplace_back(prev, c);
      prev = c;
    }
    spans.emplace_back(prev, l);
    auto a_of = [&](std::size_t from, std::size_t to) {
      return idx.try_first_occurrence(u.slice(from, to - from));
    };
    bool chained = true;
    auto a1 = a_of(spans.front().first, spans.front().second);
    chained = a1 && *a1 == a0;
    auto al = a_of(spans.back().first, spans.back().second);
    chained = chained && al &&
            *al + (spans.back().second - spans.back().first) == a0 + l;
    for (std::size_t i = 0; i + 1 < spans.size() && chained; ++i) {
      auto ai = a_of(spans[i].first, spans[i].second);
      auto an = a_of(spans[i + 1].first, spans[i + 1].second);
      chained = ai && an &&
              *ai + (spans[i].second - spans[i].first) == *an;
    }
    if (slot != chained) ok = false;
  }
  ck.check(ok, "slot condition differs from the chained A/B conditions");
}

void suite_finite_sums(Checker& ck, const Options&) {
  bool all = true;
  for (std::uint32_t mask = 0; mask < 512; ++mask) {
    auto coloring = [mask](std::uint64_t i) {
      return static_cast<int>((mask >> (i - 1)) & 1);
    };
    auto w = find_finite_sums_mono(coloring, 2, 9);
    if (!w || !verify_ip_witness(*w, coloring, 9)) all = false;
  }
  ck.check(all, "a 2-coloring of [1..9] has no verified r=2 witness");

  auto constant = [](std::uint64_t) { return 0; };
  auto w = find_finite_sums_mono(constant, 3, 10);
  ck.check(w && w->elements == std::vector<std::uint64_t>({1, 2, 4}),
           "constant coloring r=3 witness should be {1,2,4}");
  auto parity = [](std::uint64_t i) { return static_cast<int>(i % 2); };
  auto w2 = find_finite_sums_mono(parity, 2, 9);
  ck.check(w2 && w2->elements == std::vector<std::uint64_t>({2, 4}),
           "parity coloring r=2 witness should be {2,4}");
}

void suite_suffix_chain(Checker& ck, const Options&) {
  FactorIndex idx(zimin_source(2), 256);
  auto chain = build_suffix_chain(idx, Word::parse("x1"), 6);
  ck.check(chain.size() == 6, "chain depth mismatch");
  Word prod = chain[0];
  bool suffix_ok = true, factor_ok = true, defs_ok = true;
  for (std::size_t n = 1; n < chain.size(); ++n) {
    if (!prod.is_suffix_of(chain[n])) suffix_ok = false;
    prod = prod + chain[n];
    if (idx.is_factor(prod) != FactorAnswer::yes) factor_ok = false;
  }
  for (std::size_t n = 0; n < chain.size(); ++n)
    if (chain[n] != build_un(static_cast<std::uint32_t>(n + 1)))
      defs_ok = false;
  ck.check(suffix_ok, "suffix property fails literally");
  ck.check(factor_ok, "chain products are not factors");
  ck.check(defs_ok, "chain differs from the u_n family");
}

void suite_reverify(Checker& ck, const Options& opts) {
  std::mt19937_64 rng(opts.seed);
  bool ok = true;
  for (int t = 0; t < 50; ++t) {
    std::uint64_t bits = rng();
    auto coloring = [bits](std::uint64_t i) {
      return static_cast<int>((bits >> (i % 64)) & 1);
    };
    auto w = find_finite_sums_mono(coloring, 2, 24);
    if (w && !verify_ip_witness(*w, coloring, 24)) ok = false;
  }
  ck.check(ok, "an IP witness failed re-verification");

  // periodic construction on (01)^omega with the exponent-parity coloring
  Word u = Word::parse("0"), v = Word::parse("01");
  auto parity_fn = [&](const Word& w) {
    return Color::atom("rb", static_cast<int>((w.size() / v.size()) % 2));
  };
  auto parts = build_periodic_super_mono(u, v, parity_fn, 2, 16);
  ck.check(parts.has_value(), "periodic construction not found");
  if (parts) {
    ck.check(parts->exponents == std::vector<std::uint64_t>({2, 4}),
             "periodic exponents should be {2,4}");
    bool verified = true;
    for (std::uint64_t mask = 1; mask < 4; ++mask) {
      Word cat(v.alphabet());
      for (std::size_t i = 0; i < 2; ++i)
        if (mask & (1ull << i)) cat = cat + parts->parts[i];
      if (parity_fn(cat) != parts->color) verified = false;
    }
    ck.check(verified, "periodic parts fail re-coloring");
  }
}

void suite_pruning(Checker& ck, const Options&) {
  ProbeParams params;
  params.k_lo = 0;
  params.k_hi = 1;
  params.m_max = 3;
  params.len_max = 16;
  params.consecutive = true;
  params.max_recorded = 64;
  auto rep = probe_conjecture(zimin_source(2), ColoringSpec::zimin_cz(), params);

  FactorIndex idx(zimin_source(2), 64);
  ColoringSpec cz = ColoringSpec::zimin_cz();
  bool kills_ok = !rep.kills.empty();
  for (const auto& kill : rep.kills) {
    Color c1 = color(cz, idx, kill.first.word);
    Color c2 = color(cz, idx, kill.second.word);
    if (c1.name() != kill.first.color || c2.name() != kill.second.color)
      kills_ok = false;
    if (c1 == c2) kills_ok = false;
  }
  ck.check(kills_ok, "a recorded kill witness failed re-verification");
  ck.check(rep.kill_count >= rep.kills.size(), "kill bookkeeping inconsistent");

  // survivors' structural flags hold literally, rechecked from the cuts
  ProbeParams both = params;
  both.suffix_property = true;
  auto rep2 = probe_conjecture(zimin_source(2), ColoringSpec::zimin_cz(), both);
  bool flags_ok = true;
  for (const auto& s : rep2.survivors) {
    std::size_t prev = 0;
    Word whole(Alphabet::zimin);
    for (std::size_t c : s.cuts) {
      Word part = idx.slice(static_cast<std::size_t>(s.k) + prev, c - prev);
      auto a = idx.try_first_occurrence(part);
      if (!a || *a != s.k + prev) flags_ok = false;
      if (!whole.empty() && !whole.is_suffix_of(part)) flags_ok = false;
      whole = whole + part;
      prev = c;
    }
  }
  ck.check(flags_ok, "a survivor violates its structural flags");
}

void suite_probe_floor(Checker& ck, const Options&) {
  // recurrence with threshold 1 colors every word blue: a constant coloring
  ProbeParams params;
  params.k_lo = 0;
  params.k_hi = 0;
  params.m_max = 3;
  params.len_max = 8;
  auto rep = probe_conjecture(
      ultimately_periodic_source(Word(Alphabet::binary), Word::parse("01")),
      ColoringSpec::recurrence(64, 1), params);
  bool ok = rep.max_depth_reached == 3;
  for (std::size_t d = 0; d < 3; ++d)
    if (rep.depth_histogram[d] == 0) ok = false;
  ck.check(ok, "constant coloring probe lacks survivors at some depth");
  ck.check(rep.kill_count == 0, "constant coloring probe produced kills");
}

void suite_probe_determinism(Checker& ck, const Options&) {
  ProbeParams params;
  params.k_lo = 0;
  params.k_hi = 2;
  params.m_max = 3;
  params.len_max = 24;
  params.consecutive = true;

  const char* saved = std::getenv("RW_THREADS");
  std::string saved_value = saved ? saved : "";

  setenv("RW_THREADS", "1", 1);
  auto a = probe_conjecture(zimin_source(2), ColoringSpec::zimin_cz(), params);
  setenv("RW_THREADS", "3", 1);
  auto b = probe_conjecture(zimin_source(2), ColoringSpec::zimin_cz(), params);
  if (saved)
    setenv("RW_THREADS", saved_value.c_str(), 1);
  else
    unsetenv("RW_THREADS");

  ck.check(a == b, "probe reports differ across thread counts");
}

void suite_json_roundtrip(Checker& ck, const Options&) {
  ProbeParams params;
  params.k_lo = 0;
  params.k_hi = 1;
  params.m_max = 2;
  params.len_max = 12;
  params.consecutive = true;
  auto rep = probe_conjecture(zimin_source(2), ColoringSpec::zimin_cz(), params);
  auto back = SearchReport::from_json(rep.to_json());
  ck.check(back == rep, "SearchReport JSON round trip failed");

  for (const auto& spec :
       {ColoringSpec::zimin_cz(), ColoringSpec::recurrence(128, 2),
        ColoringSpec::squarefree3(256),
        ColoringSpec::product({ColoringSpec::firstocc_split(),
                               ColoringSpec::squarefree3(64)}),
        ColoringSpec::nonfactor_nf(ColoringSpec::zimin_cz())}) {
    auto again = ColoringSpec::from_json(spec.to_json());
    ck.check(again.to_json() == spec.to_json(),
             "ColoringSpec JSON round trip failed for " + spec.display());
  }
}

// ----------------------------------------------------------- registry ------

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"prefix-consistency", suite_prefix_consistency},
      {"zimin-defs", suite_zimin_defs},
      {"psi-pd", suite_psi_pd},
      {"squarefree", suite_squarefree},
      {"zn-lengths", suite_zn_lengths},
      {"ab-relation", suite_ab_relation},
      {"ab-monotonicity", suite_ab_monotonicity},
      {"index-oracle", suite_index_oracle},
      {"dp-oracle", suite_dp_oracle},
      {"prop11", suite_prop11},
      {"prop12", suite_prop12},
      {"def4-bridge", suite_def4_bridge},
      {"prop7", suite_prop7},
      {"prop8", suite_prop8},
      {"prop9", suite_prop9},
      {"corollary1", suite_corollary1},
      {"lemma1", suite_lemma1},
      {"prop10", suite_prop10},
      {"cnf-splits", suite_cnf_splits},
      {"determinism", suite_determinism},
      {"boundary-nonempty", suite_boundary_nonempty},
      {"lambda-complete", suite_lambda_complete},
      {"consecutive-equiv", suite_consecutive_equiv},
      {"finite-sums", suite_finite_sums},
      {"suffix-chain", suite_suffix_chain},
      {"reverify", suite_reverify},
      {"pruning", suite_pruning},
      {"probe-floor", suite_probe_floor},
      {"probe-determinism", suite_probe_determinism},
      {"json-roundtrip", suite_json_roundtrip},
  };
  return reg;
}

const std::map<std::string, std::vector<std::string>>& aggregates() {
  static const std::map<std::string, std::vector<std::string>> agg = {
      {"words",
       {"prefix-consistency", "zimin-defs", "psi-pd", "squarefree",
        "zn-lengths"}},
      {"index", {"ab-relation", "ab-monotonicity", "index-oracle"}},
      {"conslen",
       {"dp-oracle", "prop11", "prop12", "def4-bridge", "lambda-complete",
        "consecutive-equiv", "boundary-nonempty"}},
      {"zimin", {"prop7", "prop8", "prop9", "corollary1", "lemma1"}},
      {"colorings", {"prop10", "cnf-splits", "determinism"}},
      {"ramsey", {"finite-sums", "suffix-chain", "reverify"}},
      {"verifier",
       {"pruning", "probe-floor", "probe-determinism", "json-roundtrip"}},
  };
  return agg;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

SuiteResult run_suite(const std::string& name, const Options& opts) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) {
      Checker ck;
      ck.res.name = name;
      fn(ck, opts);
      return ck.res;
    }
  }
  auto agg = aggregates().find(name);
  if (agg != aggregates().end()) {
    SuiteResult merged;
    merged.name = name;
    for (const auto& sub : agg->second) {
      SuiteResult r = run_suite(sub, opts);
      merged.passed += r.passed;
      merged.failed += r.failed;
      for (const auto& f : r.failures)
        if (merged.failures.size() < 10)
          merged.failures.push_back("[" + sub + "] " + f);
    }
    return merged;
  }
  throw PreconditionViolated("unknown props suite: " + name);
}

std::vector<SuiteResult> run_all(const Options& opts) {
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : registry()) out.push_back(run_suite(name, opts));
  return out;
}

}  // namespace rw::props
