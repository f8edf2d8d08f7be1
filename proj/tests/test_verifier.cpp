#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rw/verifier.hpp"
#include "rw/zimin.hpp"

using namespace rw;

TEST_CASE("subset concatenations in binary counting order") {
  Word a = Word::parse("x1"), b = Word::parse("x2");
  CHECK(subset_concats({a}) == std::vector<Word>{a});
  CHECK(subset_concats({a, b}) ==
        std::vector<Word>{a, b, Word::parse("x1 x2")});

  std::vector<Word> parts{build_un(1), build_un(2), build_un(3)};
  auto family = subset_concats(parts);
  CHECK(family.size() == 7);
  CHECK(family[4] == Word::parse("x1 x3 x1 x2 x1"));  // mask 5 = u_1 u_3

  std::vector<Word> many(21, a);
  CHECK_THROWS_AS(subset_concats(many), TooManyParts);
}

TEST_CASE("is_super_mono_prefix exhibits the Zimin witness") {
  FactorIndex idx(zimin_source(2), 128);
  FactorisationCandidate cand;
  cand.parts = {build_un(1), build_un(2), build_un(3)};
  auto witness = is_super_mono_prefix(ColoringSpec::zimin_cz(), idx, cand);
  REQUIRE(witness.has_value());
  CHECK(witness->first.color == "red");
  CHECK(witness->second.word == Word::parse("x1 x3 x1 x2 x1"));
  CHECK(witness->second.color == "blue");
  CHECK(witness->second.subset_mask == 5);

  FactorisationCandidate single;
  single.parts = {build_un(2)};
  CHECK_FALSE(
      is_super_mono_prefix(ColoringSpec::zimin_cz(), idx, single).has_value());

  // a constant coloring keeps any family monochromatic
  FactorIndex pe(
      ultimately_periodic_source(Word(Alphabet::binary), Word::parse("01")),
      64);
  FactorisationCandidate pc;
  pc.parts = {Word::parse("0"), Word::parse("10"), Word::parse("1010")};
  CHECK_FALSE(is_super_mono_prefix(ColoringSpec::recurrence(64, 1), pe, pc)
                  .has_value());
}

TEST_CASE("plain monochromatic check ignores subset closure") {
  FactorIndex idx(zimin_source(2), 128);
  FactorisationCandidate cand;
  cand.parts = {build_un(1), build_un(2)};  // both red
  CHECK(check_monochromatic_factorisation(ColoringSpec::zimin_cz(), idx, cand));
  cand.parts = {build_un(1), build_u(FinSet{1, 3})};  // red, blue
  CHECK_FALSE(
      check_monochromatic_factorisation(ColoringSpec::zimin_cz(), idx, cand));
}

TEST_CASE("probe prunes the natural Zimin factorisation at depth 3") {
  ProbeParams params;
  params.k_lo = 0;
  params.k_hi = 0;
  params.m_max = 3;
  params.len_max = 16;
  params.consecutive = true;
  params.max_recorded = 100000;
  auto rep = probe_conjecture(zimin_source(2), ColoringSpec::zimin_cz(), params);

  bool found = false;
  for (const auto& kill : rep.kills) {
    if (kill.cuts == std::vector<std::size_t>{1, 3, 7}) {
      found = true;
      CHECK(kill.first.color == "red");
      CHECK(kill.second.color == "blue");
      CHECK(kill.second.word == Word::parse("x1 x3 x1 x2 x1"));
      CHECK(kill.second.subset_mask == 5);
    }
  }
  CHECK(found);
  CHECK(rep.depth_histogram[2] == 0);  // no depth-3 survivor at k = 0
}

TEST_CASE("search reports round-trip through JSON") {
  ProbeParams params;
  params.k_lo = 0;
  params.k_hi = 1;
  params.m_max = 2;
  params.len_max = 10;
  params.consecutive = true;
  auto rep = probe_conjecture(zimin_source(2), ColoringSpec::zimin_cz(), params);
  auto text = rep.to_json().dump();
  auto back = SearchReport::from_json(nlohmann::json::parse(text));
  CHECK(back == rep);
  back.wall_time_ms = rep.wall_time_ms + 1000;  // wall time is ignored
  CHECK(back == rep);
  back.kill_count += 1;
  CHECK_FALSE(back == rep);
}

TEST_CASE("T3 trace on the natural parts") {
  FactorIndex idx(zimin_source(2), 128);
  FactorisationCandidate cand;
  cand.suffix_offset = 0;
  cand.parts = {build_un(1), build_un(2), build_un(3), build_un(4)};
  cand.consecutive = cand.suffix_property = cand.factor_closed = true;
  auto tr = proof_trace(Theorem::T3, cand, ColoringSpec::zimin_cz(), idx);
  CHECK(tr.passed);
  CHECK(tr.refuted);
  for (const auto& s : tr.steps) CHECK(s.ok);

  // red-forced steps really talk about the right parts
  std::size_t reds = 0;
  for (const auto& s : tr.steps)
    if (s.name == "red_forced") ++reds;
  CHECK(reds == 3);

  // non-increasing k violates the standing hypotheses
  FactorisationCandidate bad;
  bad.suffix_offset = 1;
  bad.parts = {Word::parse("x2"), Word::parse("x1")};
  CHECK_THROWS_AS(proof_trace(Theorem::T3, bad, ColoringSpec::zimin_cz(), idx),
                  HypothesisViolated);
  CHECK_THROWS_AS(
      proof_trace(Theorem::T3, cand, ColoringSpec::firstocc_split(), idx),
      HypothesisViolated);
}

TEST_CASE("T4 trace lifts the natural parts to Z") {
  FactorIndex idx(period_doubling_source(), 256);
  FactorisationCandidate cand;
  cand.suffix_offset = 0;
  cand.consecutive = true;
  for (std::uint32_t n = 1; n <= 4; ++n) cand.parts.push_back(psi(build_un(n)));
  auto tr = proof_trace(Theorem::T4, cand, ColoringSpec::period_doubling_cw(),
                        idx);
  CHECK(tr.passed);
  CHECK(tr.refuted);
  for (const auto& s : tr.steps) CHECK(s.ok);
  CHECK(ProofTrace::from_json(tr.to_json()) == tr);
}

TEST_CASE("T5 trace terminates with a refutation or a located square") {
  FactorIndex idx(squarefree_source(), 2048);
  FactorisationCandidate cand;
  cand.suffix_offset = 0;
  cand.consecutive = cand.suffix_property = true;
  cand.parts = {Word::parse("a"), Word::parse("bca"),
                Word::parse("cbabcbacabca")};
  auto tr = proof_trace(Theorem::T5, cand, ColoringSpec::squarefree3(512), idx);
  CHECK(tr.passed);
  CHECK(tr.refuted);

  // parts that do not satisfy the suffix property are rejected up front
  FactorisationCandidate bad = cand;
  bad.parts = {Word::parse("a"), Word::parse("bc")};
  CHECK_THROWS_AS(
      proof_trace(Theorem::T5, bad, ColoringSpec::squarefree3(512), idx),
      HypothesisViolated);
}
