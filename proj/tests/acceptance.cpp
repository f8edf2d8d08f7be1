// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>

#include "rw/conslen.hpp"
#include "rw/props.hpp"
#include "rw/ramsey.hpp"
#include "rw/verifier.hpp"
#include "rw/zimin.hpp"

using namespace rw;

namespace {

struct Harness {
  int failures = 0;

  template <class F>
  void criterion(int num, const std::string& label, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = body();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    std::printf("[%s] criterion %2d: %s [%.2fs]%s\n", ok ? "PASS" : "FAIL",
                num, label.c_str(), secs, note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

bool suite_ok(const std::string& name, double* seconds = nullptr) {
  auto t0 = std::chrono::steady_clock::now();
  auto r = props::run_suite(name);
  if (seconds)
    *seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             t0)
                   .count();
  if (!r.ok())
    for (const auto& f : r.failures)
      std::fprintf(stderr, "  [%s] %s\n", name.c_str(), f.c_str());
  return r.ok();
}

bool reverify_kills(const SearchReport& rep, const ColoringSpec& spec,
                    const FactorIndex& idx) {
  if (rep.kills.size() != rep.kill_count) return false;  // need all recorded
  for (const auto& kill : rep.kills) {
    Color c1 = color(spec, idx, kill.first.word);
    Color c2 = color(spec, idx, kill.second.word);
    if (c1.name() != kill.first.color) return false;
    if (c2.name() != kill.second.color) return false;
    if (c1 == c2) return false;
  }
  return true;
}

}  // namespace

int main() {
  Harness h;

  h.criterion(1, "Zimin definitions 1/2/3 agree on 2^14 letters", [] {
    auto t0 = std::chrono::steady_clock::now();
    std::size_t n = 1 << 14;
    Word a = zimin_source(1).prefix(n);
    Word b = zimin_source(2).prefix(n);
    Word c = zimin_source(3).prefix(n);
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return a == b && a == c && secs < 5.0;
  });

  h.criterion(2, "|Z_n| = 2^n-1, |u_n| = 2^(n-1), |u_A| = sum 2^(i-1)", [] {
    for (std::uint32_t n = 1; n <= 20; ++n) {
      if (build_zn(n).size() != zn_length(n)) return false;
      if (build_un(n).size() != un_length(n)) return false;
    }
    std::mt19937_64 rng(20260810);
    for (int t = 0; t < 200; ++t) {
      std::uint64_t mask = rng() & ((1ull << 20) - 1);
      if (mask == 0) mask = 1;
      FinSet a = FinSet::from_binary_weight(mask);
      if (build_u(a).size() != a.binary_weight()) return false;
    }
    return true;
  });

  h.criterion(3, "proper suffixes of u_n are exactly the u_A (n <= 10)", [] {
    double secs = 0;
    return suite_ok("prop7", &secs) && secs < 10.0;
  });

  h.criterion(4, "canonical parse/build round trip on u_A and Z_8 substrings",
              [] { return suite_ok("prop8"); });

  h.criterion(5, "set calculus agrees with string oracles (k <= 7)",
              [] {
                double secs = 0;
                return suite_ok("prop9", &secs) && secs < 60.0;
              });

  h.criterion(6, "u_A is red iff A is an interval (all nonempty A in [1,8])",
              [] { return suite_ok("prop10"); });

  h.criterion(7, "consecutive length: DP vs brute force, chunks, subadditivity",
              [] {
                return suite_ok("dp-oracle") && suite_ok("prop11") &&
                       suite_ok("prop12");
              });

  h.criterion(8, "pinned-split rule <=> L(u) >= 2 bridge, exhaustive",
              [] { return suite_ok("def4-bridge"); });

  h.criterion(9, "finite sums: every 2-coloring of [1..9] has an r=2 witness",
              [] {
                double secs = 0;
                return suite_ok("finite-sums", &secs) && secs < 1.0;
              });

  h.criterion(10, "constructions: suffix chain = u_1..u_5; periodic parts",
              [] {
                FactorIndex idx(zimin_source(2), 256);
                auto chain = build_suffix_chain(idx, Word::parse("x1"), 5);
                if (chain.size() != 5) return false;
                for (std::uint32_t n = 1; n <= 5; ++n)
                  if (chain[n - 1] != build_un(n)) return false;

                Word u(Alphabet::binary), v = Word::parse("01");
                auto parity = [&](const Word& w) {
                  return Color::atom(
                      "rb", static_cast<int>((w.size() / v.size()) % 2));
                };
                auto parts = build_periodic_super_mono(u, v, parity, 2, 16);
                if (!parts) return false;
                if (parts->exponents != std::vector<std::uint64_t>{2, 4})
                  return false;
                for (std::uint64_t mask = 1; mask < 4; ++mask) {
                  Word cat(v.alphabet());
                  for (std::size_t i = 0; i < 2; ++i)
                    if (mask & (1ull << i)) cat = cat + parts->parts[i];
                  if (parity(cat) != parts->color) return false;
                }
                return true;
              });

  h.criterion(11, "conjecture probes match frozen goldens; traces pass", [] {
    // Zimin probe: k <= 3, m_max 3, len_max 64, consecutive
    ProbeParams zp;
    zp.k_lo = 0;
    zp.k_hi = 3;
    zp.m_max = 3;
    zp.len_max = 64;
    zp.consecutive = true;
    zp.max_recorded = 1 << 20;  // record every kill for re-verification
    auto t0 = std::chrono::steady_clock::now();
    auto zrep = probe_conjecture(zimin_source(2), ColoringSpec::zimin_cz(), zp);
    double zsecs = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    if (zsecs >= 300.0) return false;
    if (zrep.depth_histogram != std::vector<std::uint64_t>{255, 1124, 1074})
      return false;
    if (zrep.kill_count != 15937 || zrep.max_depth_reached != 3) return false;
    FactorIndex zi(zimin_source(2), 128);
    if (!reverify_kills(zrep, ColoringSpec::zimin_cz(), zi)) return false;
    bool natural = false;
    for (const auto& kill : zrep.kills)
      if (kill.k == 0 && kill.cuts == std::vector<std::size_t>{1, 3, 7} &&
          kill.second.word == Word::parse("x1 x3 x1 x2 x1") &&
          kill.second.color == "blue")
        natural = true;
    if (!natural) return false;

    // squarefree probe: suffix property, len_max 100, m_max 4
    ProbeParams sp;
    sp.k_lo = 0;
    sp.k_hi = 0;
    sp.m_max = 4;
    sp.len_max = 100;
    sp.suffix_property = true;
    sp.max_recorded = 1 << 20;
    ColoringSpec s3 = ColoringSpec::squarefree3(256);
    t0 = std::chrono::steady_clock::now();
    auto srep = probe_conjecture(squarefree_source(), s3, sp);
    double ssecs = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    if (ssecs >= 300.0) return false;
    if (srep.depth_histogram != std::vector<std::uint64_t>{100, 101, 0, 0})
      return false;
    if (srep.kill_count != 57 || srep.max_depth_reached != 2) return false;
    FactorIndex sf(squarefree_source(), 256);
    if (!reverify_kills(srep, s3, sf)) return false;

    // proof traces on the concrete example instances
    FactorIndex zidx(zimin_source(2), 128);
    FactorisationCandidate t3;
    t3.parts = {build_un(1), build_un(2), build_un(3), build_un(4)};
    t3.consecutive = t3.suffix_property = t3.factor_closed = true;
    if (!proof_trace(Theorem::T3, t3, ColoringSpec::zimin_cz(), zidx).passed)
      return false;

    FactorIndex didx(period_doubling_source(), 256);
    FactorisationCandidate t4;
    t4.consecutive = true;
    for (std::uint32_t n = 1; n <= 4; ++n) t4.parts.push_back(psi(build_un(n)));
    if (!proof_trace(Theorem::T4, t4, ColoringSpec::period_doubling_cw(), didx)
             .passed)
      return false;

    FactorIndex sidx(squarefree_source(), 2048);
    FactorisationCandidate t5;
    t5.consecutive = t5.suffix_property = true;
    t5.parts = {Word::parse("a"), Word::parse("bca"),
                Word::parse("cbabcbacabca")};
    if (!proof_trace(Theorem::T5, t5, ColoringSpec::squarefree3(512), sidx)
             .passed)
      return false;
    return true;
  });

  h.criterion(12, "period-doubling prefix and the W lift on D's 64-prefix",
              [] {
                if (period_doubling_source().prefix(23) !=
                    Word::parse("01000101010001000100010"))
                  return false;
                FactorIndex didx(period_doubling_source(), 64);
                FactorIndex zidx(zimin_source(2), 256);
                for (std::size_t p = 0; p < 64; ++p)
                  for (std::size_t l = 1; p + l <= 64; ++l) {
                    Word u = didx.slice(p, l);
                    CanonicalFactor w = lift_W(u, didx);
                    if (psi(build(w)) != u) return false;
                    if (zidx.first_occurrence(build(w)) !=
                        didx.first_occurrence(u))
                      return false;
                  }
                return true;
              });

  std::printf("%s: %d criterion(s) failed\n",
              h.failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              h.failures);
  return h.failures == 0 ? 0 : 1;
}
