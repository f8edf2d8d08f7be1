#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rw/colorings.hpp"
#include "rw/zimin.hpp"

using namespace rw;

namespace {
const Color kRedRb = Color::atom("rb", kRed);
const Color kBlueRb = Color::atom("rb", kBlue);
}  // namespace

TEST_CASE("zimin coloring follows the interval rule") {
  ColoringSpec cz = ColoringSpec::zimin_cz();
  FactorIndex idx(zimin_source(2), 64);
  CHECK(color(cz, idx, build_u(FinSet{2, 3})) == kRedRb);
  CHECK(color(cz, idx, build_u(FinSet{1, 3})) == kBlueRb);
  CHECK(color(cz, idx, Word::parse("x1")) == kRedRb);

  // non-factors of Z fall back to C_NF
  CHECK(color(cz, idx, Word::parse("x1 x1")) == kBlueRb);      // x1 | x1
  CHECK(color(cz, idx, Word::parse("x1 x1 x2 x2")) == kRedRb); // no 2-split
}

TEST_CASE("firstocc_split coloring finds pinned splits directly") {
  ColoringSpec spec = ColoringSpec::firstocc_split();
  FactorIndex idx(zimin_source(2), 64);
  CHECK(color(spec, idx, Word::parse("x1 x2 x1")) == kRedRb);
  CHECK(color(spec, idx, Word::parse("x2 x1")) == kBlueRb);
  CHECK(color(spec, idx, Word::parse("x1 x1")) == kBlueRb);  // C_NF fallback
}

TEST_CASE("recurrence coloring with window and threshold") {
  ColoringSpec spec = ColoringSpec::recurrence(64, 2);
  FactorIndex idx(zimin_source(2), 64);
  CHECK(color(spec, idx, Word::parse("x1")) == kBlueRb);  // recurrent enough
  CHECK(color(spec, idx, Word::parse("x7")) == kRedRb);   // seen once
  CHECK(color(spec, idx, Word::parse("x9")) == kBlueRb);  // not seen at all

  FactorIndex small(zimin_source(2), 32);
  CHECK_THROWS_AS(color(spec, small, Word::parse("x1")), WindowInsufficient);
}

TEST_CASE("squarefree3 coloring") {
  ColoringSpec spec = ColoringSpec::squarefree3(256);
  FactorIndex idx(squarefree_source(), 512);
  const Color green = Color::atom("rbg", kGreen);
  const Color red = Color::atom("rbg", kRed);
  const Color blue = Color::atom("rbg", kBlue);
  CHECK(color(spec, idx, Word::parse("a")) == green);
  CHECK(color(spec, idx, Word::parse("ab")) == red);
  CHECK(color(spec, idx, Word::parse("bca")) == red);
  CHECK(color(spec, idx, Word::parse("bc")) == blue);
  CHECK(color(spec, idx, Word::parse("cac")) == blue);
  CHECK(spec.palette_size() == 3);
}

TEST_CASE("period-doubling coloring lifts through W") {
  ColoringSpec spec = ColoringSpec::period_doubling_cw();
  FactorIndex idx(period_doubling_source(), 256);
  CHECK(color(spec, idx, Word::parse("10")) == kRedRb);
  CHECK(color(spec, idx, Word::parse("00010")) == kBlueRb);
  CHECK(color(spec, idx, Word::parse("11")) == kBlueRb);  // C_NF: 1 | 1
  FactorIndex zi(zimin_source(2), 64);
  CHECK_THROWS_AS(color(spec, zi, Word::parse("10")), PreconditionViolated);
}

TEST_CASE("nonfactor_nf wraps an inner coloring") {
  ColoringSpec spec = ColoringSpec::nonfactor_nf(ColoringSpec::zimin_cz());
  FactorIndex idx(zimin_source(2), 128);
  CHECK(color(spec, idx, build_u(FinSet{1, 3})) == kBlueRb);  // inner
  CHECK(color(spec, idx, Word::parse("x1 x1")) == kBlueRb);   // C_NF
  CHECK(color(spec, idx, Word::parse("x1 x1 x2 x2")) == kRedRb);
}

TEST_CASE("products have cartesian palettes") {
  ColoringSpec prod = ColoringSpec::product(
      {ColoringSpec::firstocc_split(), ColoringSpec::squarefree3(128)});
  CHECK(prod.palette_size() == 6);
  ColoringSpec small = ColoringSpec::product(
      {ColoringSpec::zimin_cz(), ColoringSpec::zimin_cz()});
  CHECK(small.palette_size() == 4);

  FactorIndex idx(zimin_source(2), 128);
  Color c = color(small, idx, Word::parse("x1 x2 x1"));
  CHECK(c.indices() == std::vector<int>{kRed, kRed});  // diagonal
  CHECK(c.name() == "(red,red)");
  CHECK_THROWS_AS(ColoringSpec::product({ColoringSpec::zimin_cz()}),
                  PreconditionViolated);
}

TEST_CASE("colors from different palettes refuse comparison") {
  Color a = Color::atom("rb", kRed), b = Color::atom("rbg", kRed);
  CHECK_THROWS_AS((void)(a == b), PaletteMismatch);
  CHECK(Color::atom("rb", kRed).name() == "red");
  CHECK(Color::atom("rbg", kGreen).name() == "green");
}

TEST_CASE("spec parsing accepts names and JSON") {
  CHECK(ColoringSpec::parse("zimin_cz").display() == "zimin_cz");
  CHECK(ColoringSpec::parse("squarefree3:77").search_window() == 77);
  CHECK(ColoringSpec::parse("recurrence:128:3").threshold() == 3);
  auto j = ColoringSpec::squarefree3(99).to_json();
  CHECK(ColoringSpec::parse(j.dump()).search_window() == 99);
}
