#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rw/index.hpp"
#include "rw/zimin.hpp"

using namespace rw;

TEST_CASE("finite set operations") {
  FinSet a{1, 3, 4};
  CHECK(a.str() == "{1,3,4}");
  CHECK(FinSet::parse("{1,3,4}") == a);
  CHECK(FinSet::parse("{}").empty());
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(2));
  CHECK_FALSE(a.is_interval());
  CHECK(FinSet({2, 3, 4}).is_interval());
  CHECK(a.complement_in(1, 5) == FinSet{2});
  CHECK(a.unite(FinSet{2}) == FinSet{1, 2, 3, 4});
  CHECK(a.intersect(FinSet{3, 5}) == FinSet{3});
  CHECK(a.restrict_to(2, 4) == FinSet{3});
  CHECK(a.binary_weight() == 1 + 4 + 8);
  CHECK(FinSet::from_binary_weight(13) == FinSet{1, 3, 4});
  CHECK_THROWS_AS(FinSet{0}, PreconditionViolated);
}

TEST_CASE("builders follow the defining recursions") {
  CHECK(build_un(3) == Word::parse("x3 x1 x2 x1"));
  CHECK(build_vn(3) == Word::parse("x1 x2 x1 x3"));
  CHECK(build_zn(3) == Word::parse("x1 x2 x1 x3 x1 x2 x1"));
  CHECK(build_u(FinSet{1, 3}) == Word::parse("x1 x3 x1 x2 x1"));
  CHECK(build_u(FinSet{1, 3}).size() == 5);
  CHECK(build_u(FinSet{}) == Word(Alphabet::zimin));
  CHECK(build_v(FinSet{1, 2}) == Word::parse("x1 x2 x1"));  // v_2 v_1
  for (std::uint32_t n = 1; n <= 12; ++n) {
    CHECK(build_un(n).size() == un_length(n));
    CHECK(build_zn(n).size() == zn_length(n));
  }
  CHECK_THROWS_AS(build_un(70), CapExceeded);
  CHECK_THROWS_AS(build_un(40), CapExceeded);  // materialization guard
}

TEST_CASE("parse_factor recovers the canonical triple") {
  CanonicalFactor c = parse_factor(Word::parse("x1 x2 x1 x3 x1"));
  CHECK(c.A == FinSet{1, 2});
  CHECK(c.k == 3);
  CHECK(c.B == FinSet{1});
  CHECK(build(c) == Word::parse("x1 x2 x1 x3 x1"));

  CanonicalFactor single = parse_factor(Word::parse("x1"));
  CHECK(single.A.empty());
  CHECK(single.k == 1);
  CHECK(single.B.empty());

  CHECK_THROWS_AS(parse_factor(Word::parse("x1 x1")), NotAZiminFactor);
  CHECK_THROWS_AS(parse_factor(Word::parse("x2 x2")), NotAZiminFactor);
  CHECK_THROWS_AS(parse_factor(Word(Alphabet::zimin)), PreconditionViolated);
  CHECK_THROWS_AS(CanonicalFactor(FinSet{3}, 3, FinSet{}),
                  PreconditionViolated);
}

TEST_CASE("canonical concatenation conditions and formula") {
  CanonicalFactor x1 = parse_factor(Word::parse("x1"));
  CanonicalFactor x2x1 = parse_factor(Word::parse("x2 x1"));
  CanonicalFactor x1x2 = parse_factor(Word::parse("x1 x2"));

  CHECK(concat_is_factor(x1, x2x1));
  CHECK_FALSE(concat_is_factor(x1, x1x2));  // k(u) = 1 lies in A_2

  CanonicalFactor cat = concat_canonical(x1, x2x1);
  CHECK(cat.A == FinSet{1});
  CHECK(cat.k == 2);
  CHECK(cat.B == FinSet{1});
  CHECK(build(cat) == Word::parse("x1 x2 x1"));

  CHECK_THROWS_AS(concat_is_factor(x2x1, x1), HypothesisViolated);
  CHECK_THROWS_AS(concat_canonical(x1, x1x2), NotAZiminFactor);

  // rebuilt concatenations equal literal ones on random valid pairs
  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 500) {
    std::uint32_t k1 = 1 + rng() % 9, k2 = k1 + 1 + rng() % (10 - k1);
    CanonicalFactor c1(FinSet::from_binary_weight(rng() & ((1ull << (k1 - 1)) - 1)),
                       k1,
                       FinSet::from_binary_weight(rng() & ((1ull << (k1 - 1)) - 1)));
    CanonicalFactor c2(FinSet::from_binary_weight(rng() & ((1ull << (k2 - 1)) - 1)),
                       k2,
                       FinSet::from_binary_weight(rng() & ((1ull << (k2 - 1)) - 1)));
    if (!concat_is_factor(c1, c2)) continue;
    ++checked;
    CHECK(build(concat_canonical(c1, c2)) == build(c1) + build(c2));
  }
}

TEST_CASE("canonical suffix test") {
  CanonicalFactor x1 = parse_factor(Word::parse("x1"));
  CanonicalFactor x2x1 = parse_factor(Word::parse("x2 x1"));
  CanonicalFactor big = parse_factor(Word::parse("x1 x2 x1 x3"));
  CHECK(suffix_test(x1, x2x1));
  CHECK_FALSE(suffix_test(x1, big));

  // agreement with literal suffix comparison for all canonical pairs k <= 4
  std::vector<std::pair<CanonicalFactor, Word>> all;
  for (std::uint32_t k = 1; k <= 4; ++k)
    for (std::uint64_t am = 0; am < (1ull << (k - 1)); ++am)
      for (std::uint64_t bm = 0; bm < (1ull << (k - 1)); ++bm) {
        CanonicalFactor c(FinSet::from_binary_weight(am), k,
                          FinSet::from_binary_weight(bm));
        Word w = build(c);
        all.emplace_back(std::move(c), std::move(w));
      }
  for (const auto& [cu, wu] : all)
    for (const auto& [cv, wv] : all) {
      if (cu.k >= cv.k) continue;
      CHECK(suffix_test(cu, cv) == wu.is_suffix_of(wv));
    }
}

TEST_CASE("eta") {
  CHECK(eta(CanonicalFactor(FinSet{2}, 3, FinSet{})) == 1);
  CHECK(eta(CanonicalFactor(FinSet{1}, 3, FinSet{})) == 2);
  CHECK(eta(CanonicalFactor(FinSet{1, 2}, 3, FinSet{})) == 0);
  CHECK(eta(CanonicalFactor(FinSet{}, 1, FinSet{})) == 0);
}

TEST_CASE("greedy suffix decomposition of T^k(Z)") {
  CHECK(suffix_decomposition_M(0, 6) ==
        std::vector<std::uint32_t>{1, 2, 3, 4, 5, 6});
  CHECK(suffix_decomposition_M(1, 3) == std::vector<std::uint32_t>{2, 3, 4});
  CHECK(suffix_decomposition_M(2, 2) == std::vector<std::uint32_t>{1, 3});

  // peeled terms literally tile the suffix
  for (std::uint64_t k : {0ull, 1ull, 2ull, 5ull, 11ull}) {
    auto m = suffix_decomposition_M(k, 5);
    Word tiled(Alphabet::zimin);
    for (std::uint32_t i : m) tiled = tiled + build_un(i);
    CHECK(tiled == zimin_slice(k, tiled.size()));
    for (std::size_t i = 1; i < m.size(); ++i) CHECK(m[i - 1] < m[i]);
  }
  CHECK_THROWS_AS(suffix_decomposition_M(0, 80), CapExceeded);
}

TEST_CASE("lift_W picks the minimal preimage") {
  FactorIndex idx(period_doubling_source(), 128);
  CHECK(build(lift_W(Word::parse("01"), idx)) == Word::parse("x1 x2"));
  CHECK(build(lift_W(Word::parse("1"), idx)) == Word::parse("x2"));
  CHECK(build(lift_W(Word::parse("00"), idx)) == Word::parse("x1 x3"));
  CHECK_THROWS_AS(lift_W(Word::parse("11"), idx), NotAFactorInWindow);

  FactorIndex zi(zimin_source(2), 128);
  CHECK_THROWS_AS(lift_W(Word::parse("01"), zi), PreconditionViolated);
}
