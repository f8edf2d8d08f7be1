#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rw/ramsey.hpp"
#include "rw/zimin.hpp"

using namespace rw;

TEST_CASE("finite-sums witnesses are lexicographically least") {
  auto constant = [](std::uint64_t) { return 0; };
  auto w = find_finite_sums_mono(constant, 3, 10);
  REQUIRE(w.has_value());
  CHECK(w->elements == std::vector<std::uint64_t>{1, 2, 4});
  CHECK(w->subset_sums() == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7});

  auto parity = [](std::uint64_t i) { return static_cast<int>(i % 2); };
  auto w2 = find_finite_sums_mono(parity, 2, 9);
  REQUIRE(w2.has_value());
  CHECK(w2->elements == std::vector<std::uint64_t>{2, 4});

  // all-distinct colors admit no witness of size 2
  auto distinct = [](std::uint64_t i) { return static_cast<int>(i); };
  CHECK_FALSE(find_finite_sums_mono(distinct, 2, 8).has_value());
  CHECK_THROWS_AS(find_finite_sums_mono(constant, 3, 2),
                  PreconditionViolated);
}

TEST_CASE("witness verification rejects tampering") {
  auto parity = [](std::uint64_t i) { return static_cast<int>(i % 2); };
  IPWitness good{{2, 4}, 0};
  CHECK(verify_ip_witness(good, parity, 9));
  CHECK_FALSE(verify_ip_witness(IPWitness{{2, 3}, 0}, parity, 9));
  CHECK_FALSE(verify_ip_witness(IPWitness{{2, 4}, 1}, parity, 9));
  CHECK_FALSE(verify_ip_witness(IPWitness{{2, 4}, 0}, parity, 5));  // 6 > 5
  CHECK_FALSE(verify_ip_witness(IPWitness{{4, 2}, 0}, parity, 9));
}

TEST_CASE("periodic construction returns verified v-powers") {
  Word u(Alphabet::binary), v = Word::parse("01");
  auto constant_fn = [](const Word&) { return Color::atom("rb", 0); };
  auto c = build_periodic_super_mono(u, v, constant_fn, 3, 10);
  REQUIRE(c.has_value());
  CHECK(c->exponents == std::vector<std::uint64_t>{1, 2, 4});
  CHECK(c->parts[0] == Word::parse("01"));
  CHECK(c->parts[2] == Word::parse("01010101"));

  auto parity_fn = [&](const Word& w) {
    return Color::atom("rb", static_cast<int>((w.size() / v.size()) % 2));
  };
  auto p = build_periodic_super_mono(u, v, parity_fn, 2, 16);
  REQUIRE(p.has_value());
  CHECK(p->exponents == std::vector<std::uint64_t>{2, 4});

  // spec-driven overload: recurrence with threshold 1 is constant blue
  auto s =
      build_periodic_super_mono(u, v, ColoringSpec::recurrence(64, 1), 3, 12);
  REQUIRE(s.has_value());
  CHECK(s->exponents == std::vector<std::uint64_t>{1, 2, 4});

  auto injective_fn = [](const Word& w) {
    return Color::atom("sizes", static_cast<int>(w.size()));
  };
  CHECK_FALSE(build_periodic_super_mono(u, v, injective_fn, 2, 12).has_value());
}

TEST_CASE("suffix chains reproduce the u_n family on Z") {
  FactorIndex idx(zimin_source(2), 256);
  auto chain = build_suffix_chain(idx, Word::parse("x1"), 5);
  REQUIRE(chain.size() == 5);
  for (std::uint32_t n = 1; n <= 5; ++n)
    CHECK(chain[n - 1] == build_un(n));

  auto single = build_suffix_chain(idx, Word::parse("x2 x1"), 1);
  CHECK(single == std::vector<Word>{Word::parse("x2 x1")});

  FactorIndex pe(
      ultimately_periodic_source(Word(Alphabet::binary), Word::parse("01")),
      64);
  auto pchain = build_suffix_chain(pe, Word::parse("0"), 3);
  CHECK(pchain.size() == 3);
  Word prod = pchain[0];
  for (std::size_t n = 1; n < pchain.size(); ++n) {
    CHECK(prod.is_suffix_of(pchain[n]));
    prod = prod + pchain[n];
    CHECK(pe.is_factor(prod) == FactorAnswer::yes);
  }

  FactorIndex tiny(zimin_source(2), 4);
  CHECK_THROWS_AS(build_suffix_chain(tiny, Word::parse("x1"), 4),
                  WindowExhausted);
}

TEST_CASE("subshift construction over a chain") {
  FactorIndex idx(zimin_source(2), 512);
  auto chain = build_suffix_chain(idx, Word::parse("x1"), 5);

  auto constant_fn = [](const Word&) { return Color::atom("rb", 0); };
  auto c = subshift_super_mono(idx, constant_fn, chain, 3, 2);
  REQUIRE(c.has_value());
  CHECK(c->blocks == std::vector<std::vector<std::uint32_t>>{{1}, {2}, {3}});

  // parity of |u_A|: {1} is odd and unusable, the search moves past it
  auto parity_fn = [](const Word& w) {
    return Color::atom("rb", static_cast<int>(w.size() % 2));
  };
  auto p = subshift_super_mono(idx, parity_fn, chain, 2, 2);
  REQUIRE(p.has_value());
  for (std::uint64_t sel = 1; sel < 4; ++sel) {
    Word prod(Alphabet::zimin);
    for (std::size_t i = 0; i < 2; ++i)
      if (sel & (1ull << i)) prod = prod + p->parts[i];
    CHECK(parity_fn(prod) == p->color);
    CHECK(idx.is_factor(prod) == FactorAnswer::yes);
  }

  // sizes of u_A are pairwise distinct, so this coloring is injective there
  auto injective_fn = [](const Word& w) {
    return Color::atom("sizes", static_cast<int>(w.size()));
  };
  CHECK_FALSE(subshift_super_mono(idx, injective_fn, chain, 2, 2).has_value());
}
