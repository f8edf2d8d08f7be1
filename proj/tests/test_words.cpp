#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <thread>
#include <unistd.h>

#include "rw/words.hpp"

using namespace rw;

namespace {
struct TempWordFile {
  std::string path;
  explicit TempWordFile(const std::string& content) {
    char name[] = "/tmp/rw_word_XXXXXX";
    int fd = mkstemp(name);
    REQUIRE(fd >= 0);
    close(fd);
    path = name;
    std::ofstream(path) << content;
  }
  ~TempWordFile() { std::remove(path.c_str()); }
};
}  // namespace

TEST_CASE("zimin prefixes match the recursive expansion") {
  for (int def : {1, 2, 3}) {
    auto z = zimin_source(def);
    CHECK(z.prefix(8) == Word::parse("x1 x2 x1 x3 x1 x2 x1 x4"));
    CHECK(z.prefix(0) == Word(Alphabet::zimin));
  }
  // Z_3 is the length-7 prefix under the doubling definition
  CHECK(zimin_source(1).prefix(7) == Word::parse("x1 x2 x1 x3 x1 x2 x1"));
  // letter rule: position 4 (1-based) carries x_{val2(4)+1} = x3
  CHECK(zimin_letter_at(3) == 3);
}

TEST_CASE("suffix views shift and compose") {
  auto z = zimin_source(2);
  CHECK(z.suffix_view(0).prefix(16) == z.prefix(16));
  CHECK(z.suffix_view(1).prefix(3) == Word::parse("x2 x1 x3"));
  CHECK(z.suffix_view(2).suffix_view(3).prefix(100) ==
        z.suffix_view(5).prefix(100));
  CHECK(z.suffix_view(2).suffix_view(3).base_offset() == 5);
}

TEST_CASE("period-doubling prefix matches the printed word") {
  CHECK(period_doubling_source().prefix(23) ==
        Word::parse("01000101010001000100010"));
  CHECK(psi(zimin_source(1).prefix(10000)) ==
        period_doubling_source().prefix(10000));
}

TEST_CASE("psi maps letter parity") {
  CHECK(psi(Word::parse("x1")) == Word::parse("0"));
  CHECK(psi(Word(Alphabet::zimin)) == Word(Alphabet::binary));
  CHECK(psi(Word::parse("x1 x2 x1 x3")) == Word::parse("0100"));
}

TEST_CASE("squarefree generator") {
  auto sf = squarefree_source();
  CHECK(sf.prefix(6) == Word::parse("abcacb"));
  CHECK(sf.prefix(12) == Word::parse("abcacbabcbac"));
  CHECK(largest_square_in(sf.prefix(1000)) == 0);
}

TEST_CASE("largest square by brute scan") {
  CHECK(largest_square_in(Word::parse("0101")) == 4);
  CHECK(largest_square_in(Word::parse("abcacbabcbac")) == 0);
  CHECK(largest_square_in(Word::parse("00100")) == 2);
  CHECK(largest_square_in(Word::parse("0")) == 0);
}

TEST_CASE("ultimately periodic sources and file errors") {
  auto p = ultimately_periodic_source(Word::parse("0"), Word::parse("011"));
  CHECK(p.prefix(7) == Word::parse("0011011"));
  CHECK_THROWS_AS(
      ultimately_periodic_source(Word::parse("0"), Word(Alphabet::binary)),
      PreconditionViolated);
}

TEST_CASE("word parsing and printing") {
  CHECK(Word::parse("x1x2x1").str() == "x1 x2 x1");
  CHECK(Word::parse("0100").str() == "0100");
  CHECK(Word::parse("abc").str() == "abc");
  CHECK(Word::parse("012") == Word(Alphabet::ternary, {0, 1, 2}));
  CHECK_THROWS_AS(Word::parse("xz"), PreconditionViolated);
  CHECK_THROWS_AS(Word(Alphabet::binary, {2}), PreconditionViolated);
  CHECK_THROWS_AS(Word(Alphabet::zimin, {0}), PreconditionViolated);
}

TEST_CASE("file sources and repeat policies") {
  TempWordFile plain("01101");
  auto none = from_file_source(plain.path, RepeatPolicy::none);
  CHECK(none.prefix(5) == Word::parse("01101"));
  CHECK_THROWS_AS(none.prefix(6), InsufficientData);

  auto cycled = from_file_source(plain.path, RepeatPolicy::cycle_suffix, 2);
  CHECK(cycled.prefix(9) == Word::parse("011011011"));
  CHECK(cycled.info().eventually_periodic);

  TempWordFile tokens("1 2 1 3");
  auto zw = from_file_source(tokens.path, RepeatPolicy::none);
  CHECK(zw.alphabet() == Alphabet::zimin);
  CHECK(zw.prefix(4) == Word::parse("x1 x2 x1 x3"));

  TempWordFile mixed("0 1 2 0");
  CHECK(from_file_source(mixed.path, RepeatPolicy::none).alphabet() ==
        Alphabet::ternary);
  CHECK_THROWS_AS(
      from_file_source(plain.path, RepeatPolicy::cycle_suffix, 5),
      PreconditionViolated);
}

TEST_CASE("concurrent prefix calls observe one stream") {
  auto z = zimin_source(1);  // caching generator
  Word expected = zimin_source(2).prefix(5000);
  std::vector<std::thread> threads;
  std::vector<bool> ok(8, false);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] { ok[t] = z.prefix(5000) == expected; });
  for (auto& th : threads) th.join();
  for (int t = 0; t < 8; ++t) CHECK(ok[t]);
}

TEST_CASE("period-doubling membership decider") {
  CHECK(period_doubling_factor_decision(Word::parse("11")) ==
        std::optional<bool>(false));
  CHECK(period_doubling_factor_decision(Word::parse("010001")) ==
        std::optional<bool>(true));
  // cross-check the decider against a generated window
  auto d = period_doubling_source();
  Word w = d.prefix(512);
  for (std::size_t p = 0; p < 64; ++p)
    for (std::size_t l = 1; l <= 12; ++l)
      CHECK(period_doubling_factor_decision(w.slice(p, l)) ==
            std::optional<bool>(true));
}
