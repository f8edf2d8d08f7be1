#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rw/conslen.hpp"
#include "rw/zimin.hpp"

using namespace rw;

TEST_CASE("is_consecutive checks slot occurrences") {
  FactorIndex idx(zimin_source(2), 64);
  Word u = Word::parse("x1 x2 x1");
  CHECK(is_consecutive(idx, u, {1}));
  CHECK_FALSE(is_consecutive(idx, u, {1, 2}));
  CHECK(is_consecutive(idx, u, {}));
  CHECK_THROWS_AS(is_consecutive(idx, u, {2, 1}), PreconditionViolated);
  CHECK_THROWS_AS(is_consecutive(idx, u, {3}), PreconditionViolated);
}

TEST_CASE("consecutive length on Zimin factors") {
  FactorIndex idx(zimin_source(2), 64);
  CHECK(consecutive_length(idx, Word::parse("x1")) == 1);
  CHECK(consecutive_length(idx, Word::parse("x1 x2 x1")) == 2);
  CHECK(consecutive_length(idx, Word::parse("x2 x1")) == 1);
  CHECK(is_irreducible(idx, Word::parse("x1")));
  CHECK_FALSE(is_irreducible(idx, Word::parse("x1 x2 x1")));
  CHECK(is_irreducible(idx, Word::parse("x2 x1")));
  CHECK_THROWS_AS(consecutive_length(idx, Word::parse("x1 x1")),
                  NotAFactorInWindow);
}

TEST_CASE("maximal decompositions break ties toward short first chunks") {
  FactorIndex idx(zimin_source(2), 64);
  auto d1 = maximal_decomposition(idx, Word::parse("x1 x2 x1"));
  CHECK(d1.cuts == std::vector<std::size_t>{1});
  CHECK(d1.chunks() ==
        std::vector<Word>{Word::parse("x1"), Word::parse("x2 x1")});

  auto d2 = maximal_decomposition(idx, Word::parse("x1"));
  CHECK(d2.terms() == 1);

  // Z_3 has L = 3; the traceback picks x1 | x2 | x1 x3 x1 x2 x1
  auto d3 = maximal_decomposition(idx, build_zn(3));
  CHECK(d3.terms() == 3);
  CHECK(d3.cuts == std::vector<std::size_t>{1, 2});
  for (const Word& chunk : d3.chunks())
    CHECK(consecutive_length(idx, chunk) == 1);
}

TEST_CASE("find_factor_with_length grows and truncates") {
  FactorIndex idx(zimin_source(2), 256);
  for (std::size_t k : {std::size_t(0), std::size_t(1), std::size_t(2)}) {
    for (std::size_t l = 1; l <= 3; ++l) {
      Word u = find_factor_with_length(idx, k, l);
      CHECK(idx.first_occurrence(u) == k);
      CHECK(consecutive_length(idx, u) == l);
    }
  }
  FactorIndex pe(
      ultimately_periodic_source(Word(Alphabet::binary), Word::parse("01")),
      64);
  CHECK_THROWS_AS(find_factor_with_length(pe, 0, 5), WindowExhausted);
}

TEST_CASE("boundary sets of x2 x1 in Z") {
  FactorIndex idx(zimin_source(2), 64);
  Word u = Word::parse("x2 x1");
  CHECK(boundary_set(idx, u, Boundary::lambda_plus) ==
        std::vector<Word>{Word::parse("x1")});
  CHECK(boundary_set(idx, u, Boundary::rho_plus) ==
        std::vector<Word>{Word::parse("x1")});
  CHECK(boundary_set(idx, u, Boundary::lambda_minus).empty());
  CHECK(boundary_set(idx, u, Boundary::rho_minus).empty());

  // nothing fits before position 0
  CHECK(boundary_set(idx, Word::parse("x1"), Boundary::lambda_plus).empty());
  CHECK(boundary_set(idx, Word::parse("x1"), Boundary::lambda_minus).empty());
}

TEST_CASE("boundary sets on the squarefree word") {
  FactorIndex idx(squarefree_source(), 256);
  Word u = Word::parse("bc");  // occurs first at 1
  CHECK(idx.first_occurrence(u) == 1);
  auto b = boundary_sets(idx, u);
  CHECK(b.lambda_plus == std::vector<Word>{Word::parse("a")});
  CHECK(b.rho_plus.empty());
  CHECK(b.lambda_minus.empty());
}
