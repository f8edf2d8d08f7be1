#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rw/index.hpp"

using namespace rw;

TEST_CASE("first occurrences in the Zimin window") {
  FactorIndex idx(zimin_source(2), 64);
  CHECK(idx.first_occurrence(Word::parse("x2")) == 1);
  CHECK(idx.first_occurrence(Word::parse("x1")) == 0);
  CHECK(idx.first_occurrence(Word::parse("x3 x1 x2")) == 3);
  CHECK(idx.first_occurrence_end(Word::parse("x3 x1 x2")) == 6);

  try {
    idx.first_occurrence(Word::parse("x9"));
    CHECK(false);
  } catch (const NotAFactorInWindow& e) {
    CHECK(e.window() == 64);
  }
}

TEST_CASE("is_factor certifies through the deciders") {
  FactorIndex zi(zimin_source(2), 255);
  CHECK(zi.is_factor(Word::parse("x1 x1")) == FactorAnswer::no);
  CHECK(zi.is_factor(Word::parse("x1")) == FactorAnswer::yes);
  // a genuine factor beyond the window is still certified yes
  CHECK(zi.is_factor(Word::parse("x9")) == FactorAnswer::yes);

  FactorIndex pd(period_doubling_source(), 64);
  CHECK(pd.is_factor(Word::parse("11")) == FactorAnswer::no);
  CHECK(pd.is_factor(Word::parse("010")) == FactorAnswer::yes);

  // opaque source: absence is never upgraded to "no"
  FactorIndex sf(squarefree_source(), 64);
  CHECK(sf.is_factor(Word::parse("aa")) == FactorAnswer::unknown_beyond_window);

  FactorIndex pe(
      ultimately_periodic_source(Word(Alphabet::binary), Word::parse("01")),
      32);
  CHECK(pe.is_factor(Word::parse("11")) == FactorAnswer::no);
  CHECK(pe.is_factor(Word::parse("10")) == FactorAnswer::yes);
}

TEST_CASE("occurrences_up_to lists ascending starts") {
  FactorIndex idx(zimin_source(2), 15);
  CHECK(idx.occurrences_up_to(Word::parse("x1"), 4) ==
        std::vector<std::size_t>{0, 2, 4, 6});
  CHECK(idx.occurrences_up_to(Word::parse("x4"), 4) ==
        std::vector<std::size_t>{7});
  CHECK(idx.occurrences_up_to(Word::parse("x9"), 4).empty());
}

TEST_CASE("pinned prefix lengths") {
  FactorIndex idx(zimin_source(2), 64);
  CHECK(idx.pinned_prefix_length(1, 8) == 1);
  CHECK(idx.pinned_prefix_length(2, 8) == 2);
  CHECK(idx.pinned_prefix_length(0, 8) == 1);

  FactorIndex pe(
      ultimately_periodic_source(Word(Alphabet::binary), Word::parse("01")),
      64);
  CHECK_THROWS_AS(pe.pinned_prefix_length(2, 32), NotPinnedWithinBound);
  CHECK_THROWS_AS(idx.pinned_prefix_length(60, 8), WindowInsufficient);
}

TEST_CASE("two_factor_split on certified non-factors") {
  FactorIndex zi(zimin_source(2), 255);
  CHECK(zi.two_factor_split(Word::parse("x1 x1")) == std::size_t(1));
  CHECK(!zi.two_factor_split(Word::parse("x1 x1 x2 x2")).has_value());
  CHECK_THROWS_AS(zi.two_factor_split(Word::parse("x1 x2")),
                  PreconditionViolated);

  FactorIndex pd(period_doubling_source(), 64);
  CHECK(!pd.two_factor_split(Word::parse("111")).has_value());
}

TEST_CASE("rebuild grows the window") {
  FactorIndex idx(zimin_source(2), 7);
  CHECK_THROWS_AS(idx.first_occurrence(Word::parse("x4")),
                  NotAFactorInWindow);
  idx.rebuild(16);
  CHECK(idx.window() == 16);
  CHECK(idx.first_occurrence(Word::parse("x4")) == 7);
}

TEST_CASE("cursor matches incremental first occurrences") {
  FactorIndex idx(zimin_source(2), 64);
  auto c = idx.cursor();
  CHECK(c.advance(3));  // x3
  CHECK(c.first_occurrence() == 3);
  CHECK(c.advance(1));
  CHECK(c.first_occurrence() == 3);  // x3 x1
  CHECK_FALSE(c.advance(3));         // x3 x1 x3 never occurs
}

TEST_CASE("queries reject mismatched alphabets and empty words") {
  FactorIndex idx(zimin_source(2), 32);
  CHECK_THROWS_AS(idx.is_factor(Word::parse("01")), PreconditionViolated);
  CHECK_THROWS_AS(idx.is_factor(Word(Alphabet::zimin)), PreconditionViolated);
}
