#include "rw/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <future>
#include <thread>
#include <unordered_map>

#include "rw/conslen.hpp"
#include "rw/zimin.hpp"

namespace rw {

std::vector<std::size_t> FactorisationCandidate::cuts() const {
  std::vector<std::size_t> out;
  std::size_t end = 0;
  for (const Word& p : parts) {
    end += p.size();
    out.push_back(end);
  }
  return out;
}

std::vector<Word> subset_concats(const std::vector<Word>& parts) {
  if (parts.empty()) throw PreconditionViolated("need at least one part");
  if (parts.size() > 20)
    throw TooManyParts("refusing 2^" + std::to_string(parts.size()) +
                       " subset concatenations");
  std::size_t m = parts.size();
  std::vector<Word> out;
  out.reserve((1ull << m) - 1);
  for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
    Word w(parts[0].alphabet());
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1ull << i)) w = w + parts[i];
    out.push_back(std::move(w));
  }
  return out;
}

static std::vector<std::size_t> mask_subset(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i)
    if (mask & (1ull << i)) out.push_back(i + 1);
  return out;
}

std::optional<BichromaticPair> find_bichromatic(
    const ColorFn& coloring, const std::vector<Word>& parts) {
  auto family = subset_concats(parts);
  Color c0 = coloring(family[0]);  // mask 1 = the first part
  for (std::size_t i = 1; i < family.size(); ++i) {
    Color c = coloring(family[i]);
    if (c != c0) {
      return BichromaticPair{
          ColoredWord{1, family[0], c0.name()},
          ColoredWord{static_cast<std::uint64_t>(i + 1), family[i], c.name()}};
    }
  }
  return std::nullopt;
}

std::optional<BichromaticPair> is_super_mono_prefix(
    const ColoringSpec& spec, const FactorIndex& idx,
    const FactorisationCandidate& cand) {
  auto fn = color_fn(spec, idx);
  return find_bichromatic(fn, cand.parts);
}

bool check_monochromatic_factorisation(const ColoringSpec& spec,
                                       const FactorIndex& idx,
                                       const FactorisationCandidate& cand) {
  if (cand.parts.empty())
    throw PreconditionViolated("candidate has no parts");
  Color c0 = color(spec, idx, cand.parts[0]);
  for (std::size_t i = 1; i < cand.parts.size(); ++i)
    if (color(spec, idx, cand.parts[i]) != c0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Probe
// ---------------------------------------------------------------------------

namespace {

unsigned rw_threads() {
  if (const char* env = std::getenv("RW_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return std::max(1u, std::min(hw, 8u));
}

struct PerK {
  std::vector<std::uint64_t> hist;  // [d-1] = survivors at depth d
  std::vector<std::vector<SearchReport::Survivor>> samples;  // per depth
  std::vector<SearchReport::Kill> kills;
  std::uint64_t kill_count = 0;
};

class ProbeWorker {
public:
  ProbeWorker(const FactorIndex& idx, const ColoringSpec& spec,
              const ProbeParams& p, std::uint64_t k)
      : idx_(idx), spec_(spec), p_(p), k_(k) {
    out_.hist.assign(p.m_max, 0);
    out_.samples.resize(p.m_max + 1);
  }

  PerK run() {
    family_.assign(1, Word(idx_.source().alphabet()));  // mask 0 = empty
    cuts_.clear();
    extend(std::nullopt);
    return std::move(out_);
  }

private:
  const FactorIndex& idx_;
  const ColoringSpec& spec_;
  const ProbeParams& p_;
  std::uint64_t k_;
  std::vector<Word> family_;  // indexed by subset mask
  std::vector<std::size_t> cuts_;
  std::unordered_map<Word, Color, WordHash> memo_;
  PerK out_;

  const Color& colored(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(w, color(spec_, idx_, w)).first->second;
  }

  void extend(std::optional<Color> c0) {
    std::size_t depth = cuts_.size();
    if (depth == p_.m_max) return;
    std::size_t prev = cuts_.empty() ? 0 : cuts_.back();

    // parts enumerated by increasing length: short parts die fastest
    for (std::size_t len = 1; prev + len <= p_.len_max; ++len) {
      std::size_t abs_start = static_cast<std::size_t>(k_) + prev;
      Word part = idx_.slice(abs_start, len);

      if (p_.consecutive) {
        auto a = idx_.try_first_occurrence(part);
        if (!a || *a != abs_start) continue;
      }
      if (p_.suffix_property && depth >= 1) {
        const Word& whole = family_[(1ull << depth) - 1];  // u_1 ... u_d
        if (!whole.is_suffix_of(part)) continue;
      }

      // the new subset concatenations are those ending with the new part
      std::vector<Word> fresh;
      fresh.reserve(1ull << depth);
      bool pruned = false;
      std::optional<Color> c = c0;
      std::optional<SearchReport::Kill> kill;
      for (std::uint64_t mask = 0; mask < (1ull << depth) && !pruned; ++mask) {
        Word w = family_[mask] + part;
        std::uint64_t wmask = mask | (1ull << depth);
        if (p_.factor_closed &&
            idx_.is_factor(w) != FactorAnswer::yes) {
          pruned = true;  // structural filter, not a color kill
          break;
        }
        const Color& cw = colored(w);
        if (!c) {
          c = cw;  // first word of the whole family fixes the color
        } else if (cw != *c) {
          auto cur = cuts_;
          cur.push_back(prev + len);
          kill = SearchReport::Kill{
              k_, cur,
              ColoredWord{1, family_.size() > 1 ? family_[1] : w, c->name()},
              ColoredWord{wmask, w, cw.name()}};
          pruned = true;
          break;
        }
        fresh.push_back(std::move(w));
      }
      if (kill) {
        ++out_.kill_count;
        if (out_.kills.size() < p_.max_recorded)
          out_.kills.push_back(std::move(*kill));
      }
      if (pruned) continue;

      // candidate with depth+1 parts is monochromatic
      cuts_.push_back(prev + len);
      for (auto& w : fresh) family_.push_back(std::move(w));
      ++out_.hist[depth];
      if (out_.samples[depth + 1].size() < p_.max_recorded) {
        SearchReport::Survivor s;
        s.k = k_;
        s.cuts = cuts_;
        s.colors.assign(depth + 1, c->name());
        out_.samples[depth + 1].push_back(std::move(s));
      }
      extend(c);
      family_.resize(1ull << depth);
      cuts_.pop_back();
    }
  }
};

}  // namespace

SearchReport probe_conjecture(const InfiniteWordSource& source,
                              const ColoringSpec& spec,
                              const ProbeParams& params) {
  if (params.m_max < 1 || params.m_max > 20)
    throw PreconditionViolated("m_max must be in 1..20");
  if (params.len_max < 1) throw PreconditionViolated("len_max must be >= 1");
  if (params.k_hi < params.k_lo)
    throw PreconditionViolated("empty suffix range");

  auto t0 = std::chrono::steady_clock::now();
  std::size_t window = std::max<std::size_t>(
      spec.min_window(),
      static_cast<std::size_t>(params.k_hi) + params.len_max);
  FactorIndex idx(source, window);

  std::vector<std::uint64_t> ks;
  for (std::uint64_t k = params.k_lo; k <= params.k_hi; ++k) ks.push_back(k);

  std::vector<PerK> partials(ks.size());
  unsigned threads = std::min<unsigned>(rw_threads(),
                                        static_cast<unsigned>(ks.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < ks.size(); ++i)
      partials[i] = ProbeWorker(idx, spec, params, ks[i]).run();
  } else {
    std::vector<std::future<PerK>> futs;
    for (std::size_t i = 0; i < ks.size(); ++i)
      futs.push_back(std::async(std::launch::async, [&, i] {
        return ProbeWorker(idx, spec, params, ks[i]).run();
      }));
    for (std::size_t i = 0; i < ks.size(); ++i) partials[i] = futs[i].get();
  }

  SearchReport rep;
  rep.params = {
      {"source", source.describe()},
      {"spec", spec.to_json()},
      {"k_lo", params.k_lo},
      {"k_hi", params.k_hi},
      {"m_max", params.m_max},
      {"len_max", params.len_max},
      {"consecutive", params.consecutive},
      {"suffix_property", params.suffix_property},
      {"factor_closed", params.factor_closed},
      {"max_recorded", params.max_recorded},
      {"window", window},
  };
  rep.depth_histogram.assign(params.m_max, 0);

  // merge in ascending k; caps reapplied after the canonical ordering
  for (const PerK& p : partials) {
    for (std::size_t d = 0; d < params.m_max; ++d)
      rep.depth_histogram[d] += p.hist[d];
    rep.kill_count += p.kill_count;
    for (const auto& kl : p.kills)
      if (rep.kills.size() < params.max_recorded) rep.kills.push_back(kl);
  }
  for (std::size_t d = params.m_max; d >= 1; --d) {
    if (rep.depth_histogram[d - 1] > 0) {
      rep.max_depth_reached = d;
      break;
    }
  }
  if (rep.max_depth_reached > 0) {
    for (const PerK& p : partials)
      for (const auto& s : p.samples[rep.max_depth_reached])
        if (rep.survivors.size() < params.max_recorded)
          rep.survivors.push_back(s);
  }

  rep.wall_time_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return rep;
}

// ---------------------------------------------------------------------------
// Report JSON
// ---------------------------------------------------------------------------

static nlohmann::json colored_word_json(const ColoredWord& cw) {
  return {{"subset", mask_subset(cw.subset_mask)},
          {"word", cw.word.str()},
          {"color", cw.color}};
}

static ColoredWord colored_word_from_json(const nlohmann::json& j) {
  ColoredWord cw;
  std::uint64_t mask = 0;
  for (std::size_t i : j.at("subset").get<std::vector<std::size_t>>())
    mask |= 1ull << (i - 1);
  cw.subset_mask = mask;
  cw.word = Word::parse(j.at("word").get<std::string>());
  cw.color = j.at("color").get<std::string>();
  return cw;
}

nlohmann::json SearchReport::to_json() const {
  nlohmann::json j;
  j["params"] = params;
  j["depth_histogram"] = depth_histogram;
  j["max_depth_reached"] = max_depth_reached;
  j["kill_count"] = kill_count;
  j["survivors"] = nlohmann::json::array();
  for (const auto& s : survivors)
    j["survivors"].push_back(
        {{"k", s.k}, {"cuts", s.cuts}, {"colors", s.colors}});
  j["kills"] = nlohmann::json::array();
  for (const auto& k : kills)
    j["kills"].push_back({{"k", k.k},
                          {"cuts", k.cuts},
                          {"pair",
                           {{"first", colored_word_json(k.first)},
                            {"second", colored_word_json(k.second)}}}});
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

SearchReport SearchReport::from_json(const nlohmann::json& j) {
  SearchReport rep;
  rep.params = j.at("params");
  rep.depth_histogram =
      j.at("depth_histogram").get<std::vector<std::uint64_t>>();
  rep.max_depth_reached = j.at("max_depth_reached").get<std::size_t>();
  rep.kill_count = j.at("kill_count").get<std::uint64_t>();
  for (const auto& s : j.at("survivors")) {
    Survivor sv;
    sv.k = s.at("k").get<std::uint64_t>();
    sv.cuts = s.at("cuts").get<std::vector<std::size_t>>();
    sv.colors = s.at("colors").get<std::vector<std::string>>();
    rep.survivors.push_back(std::move(sv));
  }
  for (const auto& k : j.at("kills")) {
    Kill kl;
    kl.k = k.at("k").get<std::uint64_t>();
    kl.cuts = k.at("cuts").get<std::vector<std::size_t>>();
    kl.first = colored_word_from_json(k.at("pair").at("first"));
    kl.second = colored_word_from_json(k.at("pair").at("second"));
    rep.kills.push_back(std::move(kl));
  }
  rep.wall_time_ms = j.value("wall_time_ms", 0.0);
  return rep;
}

static bool kill_eq(const SearchReport::Kill& a, const SearchReport::Kill& b) {
  auto cw_eq = [](const ColoredWord& x, const ColoredWord& y) {
    return x.subset_mask == y.subset_mask && x.word == y.word &&
           x.color == y.color;
  };
  return a.k == b.k && a.cuts == b.cuts && cw_eq(a.first, b.first) &&
         cw_eq(a.second, b.second);
}

bool SearchReport::operator==(const SearchReport& other) const {
  if (params != other.params) return false;
  if (depth_histogram != other.depth_histogram) return false;
  if (max_depth_reached != other.max_depth_reached) return false;
  if (kill_count != other.kill_count) return false;
  if (survivors != other.survivors) return false;
  if (kills.size() != other.kills.size()) return false;
  for (std::size_t i = 0; i < kills.size(); ++i)
    if (!kill_eq(kills[i], other.kills[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Proof traces
// ---------------------------------------------------------------------------

namespace {

void validate_candidate(const FactorisationCandidate& cand,
                        const FactorIndex& idx) {
  if (cand.parts.empty())
    throw HypothesisViolated("candidate has no parts");
  for (const Word& p : cand.parts)
    if (p.empty()) throw HypothesisViolated("candidate has an empty part");
  std::size_t pos = static_cast<std::size_t>(cand.suffix_offset);
  for (const Word& p : cand.parts) {
    if (pos + p.size() > idx.window())
      throw WindowInsufficient("candidate extends beyond the window");
    for (std::size_t i = 0; i < p.size(); ++i)
      if (idx.letter_at(pos + i) != p[i])
        throw HypothesisViolated(
            "parts do not tile T^" + std::to_string(cand.suffix_offset) +
            " of the source");
    pos += p.size();
  }
  if (cand.consecutive) {
    std::size_t slot = static_cast<std::size_t>(cand.suffix_offset);
    for (const Word& p : cand.parts) {
      auto a = idx.try_first_occurrence(p);
      if (!a || *a != slot)
        throw HypothesisViolated("consecutive hypothesis fails at offset " +
                                 std::to_string(slot));
      slot += p.size();
    }
  }
  if (cand.suffix_property) {
    Word prod = cand.parts[0];
    for (std::size_t n = 1; n < cand.parts.size(); ++n) {
      if (!prod.is_suffix_of(cand.parts[n]))
        throw HypothesisViolated("suffix property fails at part " +
                                 std::to_string(n + 1));
      prod = prod + cand.parts[n];
    }
  }
}

ProofTrace trace_t3(const FactorisationCandidate& cand,
                    const ColoringSpec& spec, const FactorIndex& idx) {
  if (spec.kind() != ColoringSpec::Kind::zimin_cz)
    throw HypothesisViolated("theorem T3 is about the zimin_cz coloring");
  validate_candidate(cand, idx);

  std::vector<CanonicalFactor> cf;
  for (const Word& p : cand.parts) {
    try {
      cf.push_back(parse_factor(p));
    } catch (const NotAZiminFactor&) {
      throw HypothesisViolated("part \"" + p.str() + "\" is not a factor of Z");
    }
  }
  std::size_t m = cf.size();
  for (std::size_t n = 0; n + 1 < m; ++n) {
    if (cf[n].k >= cf[n + 1].k)
      throw HypothesisViolated("k(w_n) < k(w_{n+1}) fails at n=" +
                               std::to_string(n + 1));
    if (cf[n].k > 2 + cf[n + 1].k)
      throw HypothesisViolated("spacing k(w_n) <= 2+k(w_{n+1}) fails at n=" +
                               std::to_string(n + 1));
  }

  ProofTrace tr;
  tr.theorem = "T3";
  auto fn = color_fn(spec, idx);
  auto is_red = [&](const Word& w) {
    return fn(w) == Color::atom(spec.palette_id(), kRed);
  };

  for (std::size_t n = 0; n + 1 < m; ++n) {
    bool ok = concat_is_factor(cf[n], cf[n + 1]);
    tr.steps.push_back({"factor_pair", static_cast<int>(n + 1), ok,
                        "w_n w_{n+1} is a factor of Z"});
  }
  Word prod = cand.parts[0];
  for (std::size_t n = 1; n < m; ++n) {
    bool lit = prod.is_suffix_of(cand.parts[n]);
    bool alg = false;
    try {
      alg = suffix_test(parse_factor(prod), cf[n]);
    } catch (const NotAZiminFactor&) {
    }
    tr.steps.push_back({"suffix_chain", static_cast<int>(n), lit && alg,
                        "w_1...w_n is a suffix of w_{n+1} (literal and set calculus)"});
    prod = prod + cand.parts[n];
  }
  for (std::size_t n = 0; n + 1 < m; ++n) {
    bool ok = eta(cf[n + 1]) == cf[n].k;
    tr.steps.push_back({"eta_forced", static_cast<int>(n + 2), ok,
                        "eta(w_{n+1}) = k(w_n)"});
  }
  for (std::size_t n = 1; n < m; ++n) {
    bool ok = is_red(cand.parts[n]);
    tr.steps.push_back(
        {"red_forced", static_cast<int>(n + 1), ok, "w_{n+1} is red"});
    if (!ok) tr.refuted = true;  // bichromatic against a forced-red part
  }
  for (std::size_t n = 0; n + 2 < m; ++n) {
    Word z = cand.parts[n] + cand.parts[n + 2];
    bool blue = !is_red(z);
    std::string detail =
        "w_n w_{n+2} = \"" + z.str() + "\" is " + (blue ? "blue" : "red");
    if (blue) {
      tr.refuted = true;
      detail += "; bichromatic against the red w_{n+1}";
    } else {
      // a red factor w_n w_{n+2} would force k(w_n) into A_{n+2}
      detail += "; but k(w_n) in A_{n+2} is " +
                std::string(cf[n + 2].A.contains(cf[n].k) ? "true" : "false");
    }
    tr.steps.push_back(
        {"pair_contradiction", static_cast<int>(n + 1), blue, detail});
  }

  tr.passed = std::all_of(tr.steps.begin(), tr.steps.end(),
                          [](const TraceStep& s) { return s.ok; }) &&
              tr.refuted;
  return tr;
}

ProofTrace trace_t4(const FactorisationCandidate& cand,
                    const ColoringSpec& spec, const FactorIndex& idx) {
  if (spec.kind() != ColoringSpec::Kind::period_doubling_cw)
    throw HypothesisViolated("theorem T4 is about the period_doubling_cw coloring");
  validate_candidate(cand, idx);

  ProofTrace tr;
  tr.theorem = "T4";
  std::size_t m = cand.parts.size();

  std::vector<CanonicalFactor> lifted;
  std::vector<Word> lifted_words;
  for (const Word& p : cand.parts) {
    CanonicalFactor w = lift_W(p, idx);
    Word bw = build(w);
    tr.steps.push_back({"lift", static_cast<int>(lifted.size() + 1), true,
                        "W(u) = " + w.str() + " at A_D = " +
                            std::to_string(idx.first_occurrence(p))});
    lifted.push_back(std::move(w));
    lifted_words.push_back(std::move(bw));
  }

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Word prod = cand.parts[i] + cand.parts[j];
      if (idx.is_factor(prod) != FactorAnswer::yes ||
          !idx.try_first_occurrence(prod)) {
        tr.steps.push_back({"multiplicative",
                            static_cast<int>(i + 1), true,
                            "u_" + std::to_string(i + 1) + " u_" +
                                std::to_string(j + 1) +
                                " not witnessed as a factor of D in the "
                                "window; vacuous"});
        continue;
      }
      Word wprod = build(lift_W(prod, idx));
      bool ok = wprod == lifted_words[i] + lifted_words[j];
      tr.steps.push_back({"multiplicative", static_cast<int>(i + 1), ok,
                          "W(u_" + std::to_string(i + 1) + " u_" +
                              std::to_string(j + 1) +
                              ") = W(u_i) W(u_j)"});
    }
  }

  auto fn = color_fn(ColoringSpec::zimin_cz(), idx);
  auto witness = find_bichromatic(fn, lifted_words);
  tr.steps.push_back({"induced_refutation", -1, witness.has_value(),
                      witness ? "lifted family is bichromatic: \"" +
                                    witness->first.word.str() + "\" " +
                                    witness->first.color + " vs \"" +
                                    witness->second.word.str() + "\" " +
                                    witness->second.color
                              : "lifted family is monochromatic"});
  if (witness) tr.refuted = true;

  auto dfn = color_fn(spec, idx);
  auto direct = find_bichromatic(dfn, cand.parts);
  tr.steps.push_back(
      {"direct_refutation", -1, direct.has_value() == witness.has_value(),
       "the D-side verdict matches the lifted verdict"});
  if (direct) tr.refuted = true;

  tr.passed = std::all_of(tr.steps.begin(), tr.steps.end(),
                          [](const TraceStep& s) { return s.ok; }) &&
              tr.refuted;
  return tr;
}

ProofTrace trace_t5(const FactorisationCandidate& cand,
                    const ColoringSpec& spec, const FactorIndex& idx) {
  if (spec.kind() != ColoringSpec::Kind::squarefree3)
    throw HypothesisViolated("theorem T5 is about the squarefree3 coloring");
  FactorisationCandidate strict = cand;
  strict.consecutive = true;
  strict.suffix_property = true;
  validate_candidate(strict, idx);

  ProofTrace tr;
  tr.theorem = "T5";
  std::size_t m = cand.parts.size();
  auto fn = color_fn(spec, idx);
  Color red = Color::atom(spec.palette_id(), kRed);

  for (std::size_t n = 1; n < m; ++n) {
    Color c = fn(cand.parts[n]);
    bool ok = c == red;
    tr.steps.push_back({"red_forced", static_cast<int>(n + 1), ok,
                        "u_" + std::to_string(n + 1) + " is " + c.name()});
    if (!ok) tr.refuted = true;
  }

  for (std::size_t n = 0; n + 2 < m; ++n) {
    Word z = cand.parts[n] + cand.parts[n + 2];
    Color cz = fn(z);
    if (cz != red) {
      tr.refuted = true;
      tr.steps.push_back({"pair_square", static_cast<int>(n + 1), true,
                          "u_n u_{n+2} = \"" + z.str() + "\" is " + cz.name() +
                              "; bichromatic against the red parts"});
      continue;
    }
    // red z forces a square u_n u_n through the lambda/rho argument
    Word square = cand.parts[n] + cand.parts[n];
    bool located = idx.try_first_occurrence(square).has_value();
    tr.steps.push_back({"pair_square", static_cast<int>(n + 1), located,
                        located ? "square \"" + square.str() +
                                      "\" located in the window"
                                : "red u_n u_{n+2} but no square located"});
    if (located) tr.refuted = true;
  }

  tr.passed = std::all_of(tr.steps.begin(), tr.steps.end(),
                          [](const TraceStep& s) { return s.ok; }) &&
              tr.refuted;
  return tr;
}

}  // namespace

nlohmann::json ProofTrace::to_json() const {
  nlohmann::json steps_json = nlohmann::json::array();
  for (const auto& s : steps)
    steps_json.push_back(
        {{"name", s.name}, {"n", s.n}, {"ok", s.ok}, {"detail", s.detail}});
  return {{"theorem", theorem},
          {"refuted", refuted},
          {"passed", passed},
          {"steps", steps_json}};
}

ProofTrace ProofTrace::from_json(const nlohmann::json& j) {
  ProofTrace tr;
  tr.theorem = j.at("theorem").get<std::string>();
  tr.refuted = j.at("refuted").get<bool>();
  tr.passed = j.at("passed").get<bool>();
  for (const auto& s : j.at("steps"))
    tr.steps.push_back({s.at("name").get<std::string>(), s.at("n").get<int>(),
                        s.at("ok").get<bool>(),
                        s.at("detail").get<std::string>()});
  return tr;
}

bool ProofTrace::operator==(const ProofTrace& other) const {
  if (theorem != other.theorem || refuted != other.refuted ||
      passed != other.passed || steps.size() != other.steps.size())
    return false;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& a = steps[i];
    const auto& b = other.steps[i];
    if (a.name != b.name || a.n != b.n || a.ok != b.ok || a.detail != b.detail)
      return false;
  }
  return true;
}

ProofTrace proof_trace(Theorem theorem, const FactorisationCandidate& cand,
                       const ColoringSpec& spec, const FactorIndex& idx) {
  switch (theorem) {
    case Theorem::T3: return trace_t3(cand, spec, idx);
    case Theorem::T4: return trace_t4(cand, spec, idx);
    case Theorem::T5: return trace_t5(cand, spec, idx);
  }
  throw Error("internal: unhandled theorem");
}

}  // namespace rw
