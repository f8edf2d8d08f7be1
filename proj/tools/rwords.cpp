// rwords -- command-line front end: word generators, first-occurrence
// analytics, the Zimin calculus, colorings, bounded Ramsey searches and the
// conjecture prober.

#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rw/conslen.hpp"
#include "rw/props.hpp"
#include "rw/ramsey.hpp"
#include "rw/verifier.hpp"
#include "rw/zimin.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
  std::size_t window = 4096;
  std::uint32_t kmax = rw::kDefaultKmax;
  std::uint64_t seed = 12345;
  std::string out;
  std::string format = "text";
};

struct WordOpts {
  std::string word = "zimin";
  int def = 2;
  std::string u, v;       // ultimately periodic
  std::string path;       // from_file
  std::string repeat = "none";
  std::uint64_t at = 0;   // suffix view offset
};

void add_word_flags(CLI::App* app, WordOpts& w) {
  app->add_option("--word", w.word,
                  "zimin | period-doubling | squarefree | periodic | file")
      ->capture_default_str();
  app->add_option("--def", w.def, "Zimin definition id (1|2|3)")
      ->capture_default_str();
  app->add_option("--u", w.u, "preperiod for --word periodic");
  app->add_option("--v", w.v, "period for --word periodic");
  app->add_option("--path", w.path, "word file for --word file");
  app->add_option("--repeat", w.repeat, "none | cycle:<preperiod_len>");
}

rw::InfiniteWordSource make_source(const WordOpts& w, const GlobalOpts& g) {
  rw::InfiniteWordSource src = [&]() -> rw::InfiniteWordSource {
    if (w.word == "zimin") return rw::zimin_source(w.def, g.kmax);
    if (w.word == "period-doubling" || w.word == "pd")
      return rw::period_doubling_source();
    if (w.word == "squarefree" || w.word == "sf") return rw::squarefree_source();
    if (w.word == "periodic")
      return rw::ultimately_periodic_source(
          w.u.empty() ? rw::Word(rw::Alphabet::binary) : rw::Word::parse(w.u),
          rw::Word::parse(w.v));
    if (w.word == "file") {
      if (w.repeat.rfind("cycle:", 0) == 0)
        return rw::from_file_source(w.path, rw::RepeatPolicy::cycle_suffix,
                                    std::stoul(w.repeat.substr(6)));
      return rw::from_file_source(w.path, rw::RepeatPolicy::none);
    }
    throw rw::PreconditionViolated("unknown --word: " + w.word);
  }();
  return w.at > 0 ? src.suffix_view(w.at) : src;
}

void emit(const GlobalOpts& g, const json& j, const std::string& text) {
  std::string payload = g.format == "json" ? j.dump(2) : text;
  if (!g.out.empty()) {
    std::ofstream out(g.out);
    out << payload << "\n";
  } else {
    std::cout << payload << "\n";
  }
}

rw::CanonicalFactor parse_canonical(const std::string& text) {
  // "{1,2}:3:{1}" or a word like "x1 x2 x1"
  auto first = text.find(':');
  if (first == std::string::npos)
    return rw::parse_factor(rw::Word::parse(text));
  auto second = text.find(':', first + 1);
  if (second == std::string::npos)
    throw rw::PreconditionViolated("canonical form is {A}:k:{B}");
  return rw::CanonicalFactor(
      rw::FinSet::parse(text.substr(0, first)),
      static_cast<std::uint32_t>(
          std::stoul(text.substr(first + 1, second - first - 1))),
      rw::FinSet::parse(text.substr(second + 1)));
}

json canonical_json(const rw::CanonicalFactor& c) {
  return {{"A", c.A.elements()},
          {"k", c.k},
          {"B", c.B.elements()},
          {"word", rw::build(c).str()},
          {"length", c.length()}};
}

int cmd_gen(const GlobalOpts& g, const WordOpts& w, std::uint64_t n) {
  auto src = make_source(w, g);
  rw::Word p = src.prefix(n);
  emit(g, {{"word", src.describe()}, {"n", n}, {"prefix", p.str()}}, p.str());
  return 0;
}

int cmd_analyze(const GlobalOpts& g, const WordOpts& w, std::uint64_t at,
                std::uint64_t len, const std::string& factor, bool conslen,
                bool boundary) {
  auto src = make_source(w, g);
  rw::FactorIndex idx(src, g.window);
  rw::Word u = factor.empty()
                   ? idx.slice(static_cast<std::size_t>(at),
                               static_cast<std::size_t>(len))
                   : rw::Word::parse(factor);
  std::size_t a = idx.first_occurrence(u);
  json j = {{"word", src.describe()},
            {"factor", u.str()},
            {"A", a},
            {"B", a + u.size()}};
  std::string text = "u = " + u.str() + "\nA(u) = " + std::to_string(a) +
                     "  B(u) = " + std::to_string(a + u.size());
  if (conslen) {
    auto d = rw::maximal_decomposition(idx, u);
    j["L"] = d.terms();
    j["cuts"] = d.cuts;
    json chunks = json::array();
    for (const auto& c : d.chunks()) chunks.push_back(c.str());
    j["chunks"] = chunks;
    text += "\nL(u) = " + std::to_string(d.terms()) + "  cuts = [";
    for (std::size_t i = 0; i < d.cuts.size(); ++i)
      text += (i ? "," : "") + std::to_string(d.cuts[i]);
    text += "]";
  }
  if (boundary) {
    auto b = rw::boundary_sets(idx, u);
    auto words_json = [](const std::vector<rw::Word>& ws) {
      json out = json::array();
      for (const auto& x : ws) out.push_back(x.str());
      return out;
    };
    j["lambda_plus"] = words_json(b.lambda_plus);
    j["lambda_minus"] = words_json(b.lambda_minus);
    j["rho_plus"] = words_json(b.rho_plus);
    j["rho_minus"] = words_json(b.rho_minus);
    auto show = [](const char* name, const std::vector<rw::Word>& ws) {
      std::string s = std::string("\n") + name + " = {";
      for (std::size_t i = 0; i < ws.size(); ++i)
        s += (i ? ", " : "") + ws[i].str();
      return s + "}";
    };
    text += show("lambda+", b.lambda_plus) + show("lambda-", b.lambda_minus) +
            show("rho+", b.rho_plus) + show("rho-", b.rho_minus);
  }
  emit(g, j, text);
  return 0;
}

int cmd_color(const GlobalOpts& g, const WordOpts& w, const std::string& spec,
              const std::string& factor) {
  auto parsed = rw::ColoringSpec::parse(spec);
  auto src = make_source(w, g);
  rw::FactorIndex idx(src, std::max(g.window, parsed.min_window()));
  rw::Word u = rw::Word::parse(factor);
  rw::Color c = rw::color(parsed, idx, u);
  emit(g,
       {{"spec", parsed.to_json()}, {"factor", u.str()}, {"color", c.name()}},
       c.name());
  return 0;
}

std::function<int(std::uint64_t)> parse_nat_coloring(const std::string& text) {
  if (text == "constant") return [](std::uint64_t) { return 0; };
  if (text == "parity")
    return [](std::uint64_t i) { return static_cast<int>(i % 2); };
  if (text.rfind("mod:", 0) == 0) {
    std::uint64_t m = std::stoull(text.substr(4));
    return [m](std::uint64_t i) { return static_cast<int>(i % m); };
  }
  if (text.rfind("list:", 0) == 0) {
    std::vector<int> colors;
    std::string rest = text.substr(5);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      std::size_t comma = rest.find(',', pos);
      colors.push_back(std::stoi(rest.substr(pos, comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return [colors](std::uint64_t i) {
      if (i < 1 || i > colors.size())
        throw rw::PreconditionViolated("coloring list too short");
      return colors[static_cast<std::size_t>(i - 1)];
    };
  }
  throw rw::PreconditionViolated("unknown integer coloring: " + text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"super-monochromatic factorisation toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--window", g.window, "index window size")
      ->capture_default_str();
  app.add_option("--kmax", g.kmax, "letter index cap")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for sampled suites")
      ->capture_default_str();
  app.add_option("--out", g.out, "write the report to a file");
  auto* format_opt =
      app.add_option("--format", g.format, "text | json")->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "print a prefix of a word");
  WordOpts gen_w;
  add_word_flags(gen, gen_w);
  gen->add_option("--at", gen_w.at, "suffix offset k (print T^k of the word)");
  std::uint64_t gen_n = 32;
  gen->add_option("-n,--length", gen_n, "prefix length")->capture_default_str();

  // analyze
  auto* an = app.add_subcommand("analyze", "first occurrences and L(u)");
  WordOpts an_w;
  add_word_flags(an, an_w);
  std::uint64_t an_at = 0, an_len = 1;
  std::string an_factor;
  bool an_conslen = false, an_boundary = false;
  an->add_option("--at", an_at, "slice start")->capture_default_str();
  an->add_option("--len", an_len, "slice length")->capture_default_str();
  an->add_option("--factor", an_factor, "explicit factor (overrides --at/--len)");
  an->add_flag("--conslen", an_conslen, "compute L(u) and a maximal decomposition");
  an->add_flag("--boundary", an_boundary, "compute the lambda/rho sets");

  // zimin
  auto* zi = app.add_subcommand("zimin", "canonical-form calculus");
  zi->require_subcommand(1);
  std::string zi_a, zi_b;
  auto* zi_parse = zi->add_subcommand("parse", "canonical form of a factor");
  zi_parse->add_option("word", zi_a, "factor, e.g. \"x1 x2 x1\"")->required();
  auto* zi_build = zi->add_subcommand("build", "word of a canonical form");
  zi_build->add_option("canonical", zi_a, "{A}:k:{B}")->required();
  auto* zi_concat = zi->add_subcommand("concat", "canonical concatenation");
  zi_concat->add_option("first", zi_a, "{A}:k:{B} or word")->required();
  zi_concat->add_option("second", zi_b, "{A}:k:{B} or word")->required();
  auto* zi_suffix = zi->add_subcommand("suffix", "canonical suffix test");
  zi_suffix->add_option("first", zi_a, "{A}:k:{B} or word")->required();
  zi_suffix->add_option("second", zi_b, "{A}:k:{B} or word")->required();
  auto* zi_lift = zi->add_subcommand("lift", "W(u) for a factor u of D");
  zi_lift->add_option("word", zi_a, "binary factor of D")->required();
  auto* zi_peel = zi->add_subcommand("peel", "suffix decomposition of T^k(Z)");
  std::uint64_t zi_k = 0;
  std::size_t zi_depth = 8;
  zi_peel->add_option("--k", zi_k, "suffix offset")->capture_default_str();
  zi_peel->add_option("--depth", zi_depth, "terms to peel")
      ->capture_default_str();

  // color
  auto* co = app.add_subcommand("color", "evaluate a coloring");
  WordOpts co_w;
  add_word_flags(co, co_w);
  std::string co_spec = "zimin_cz", co_factor;
  co->add_option("--spec", co_spec,
                 "zimin_cz | firstocc_split | squarefree3[:w] | "
                 "recurrence[:w:t] | period_doubling_cw | nonfactor_nf[:inner]"
                 " | JSON")
      ->capture_default_str();
  co->add_option("factor", co_factor, "word to color")->required();

  // ramsey
  auto* ra = app.add_subcommand("ramsey", "bounded Hindman-style searches");
  ra->require_subcommand(1);
  auto* ra_ip = ra->add_subcommand("ip", "finite-sums witness");
  std::string ra_coloring = "parity";
  std::size_t ra_r = 2;
  std::uint64_t ra_n = 9;
  ra_ip->add_option("--coloring", ra_coloring,
                    "constant | parity | mod:<m> | list:<c1,c2,...>")
      ->capture_default_str();
  ra_ip->add_option("-r", ra_r, "witness size")->capture_default_str();
  ra_ip->add_option("-N,--bound", ra_n, "sum bound")->capture_default_str();
  auto* ra_pe = ra->add_subcommand("periodic", "v-power construction");
  std::string ra_u = "", ra_v = "01", ra_spec;
  ra_pe->add_option("--u", ra_u, "preperiod");
  ra_pe->add_option("--v", ra_v, "period")->capture_default_str();
  ra_pe->add_option("--spec", ra_spec,
                    "coloring spec; default = exponent parity");
  ra_pe->add_option("-r", ra_r, "number of parts")->capture_default_str();
  ra_pe->add_option("-N,--bound", ra_n, "exponent bound")->capture_default_str();
  auto* ra_su = ra->add_subcommand("subshift", "chain block construction");
  WordOpts ra_w;
  add_word_flags(ra_su, ra_w);
  std::string ra_u1 = "x1";
  std::size_t ra_depth = 6, ra_block = 2;
  std::string ra_su_spec = "zimin_cz";
  ra_su->add_option("--u1", ra_u1, "chain seed")->capture_default_str();
  ra_su->add_option("--depth", ra_depth, "chain depth")->capture_default_str();
  ra_su->add_option("--spec", ra_su_spec, "coloring spec")
      ->capture_default_str();
  ra_su->add_option("-r", ra_r, "number of blocks")->capture_default_str();
  ra_su->add_option("--block", ra_block, "max block cardinality")
      ->capture_default_str();

  // verify
  auto* ve = app.add_subcommand("verify", "bounded conjecture probes");
  ve->require_subcommand(1);
  auto* ve_probe = ve->add_subcommand("probe", "depth-first candidate search");
  WordOpts ve_w;
  add_word_flags(ve_probe, ve_w);
  rw::ProbeParams probe_params;
  std::string ve_spec = "zimin_cz";
  ve_probe->add_option("--spec", ve_spec, "coloring spec")
      ->capture_default_str();
  ve_probe->add_option("--k-lo", probe_params.k_lo, "first suffix offset")
      ->capture_default_str();
  ve_probe->add_option("--k-hi", probe_params.k_hi, "last suffix offset")
      ->capture_default_str();
  ve_probe->add_option("--m-max", probe_params.m_max, "max parts")
      ->capture_default_str();
  ve_probe->add_option("--len-max", probe_params.len_max, "max total length")
      ->capture_default_str();
  ve_probe->add_flag("--consecutive", probe_params.consecutive,
                     "require consecutive parts");
  ve_probe->add_flag("--suffix-property", probe_params.suffix_property,
                     "require the suffix property");
  ve_probe->add_flag("--factor-closed", probe_params.factor_closed,
                     "require all subset concatenations to be factors");
  ve_probe->add_option("--max-recorded", probe_params.max_recorded,
                       "sample cap for survivors/kills")
      ->capture_default_str();

  auto* ve_trace = ve->add_subcommand("trace", "replay a theorem proof");
  WordOpts ve_t_w;
  add_word_flags(ve_trace, ve_t_w);
  std::string ve_theorem = "T3", ve_t_spec, ve_cuts, ve_parts;
  std::uint64_t ve_k = 0;
  bool ve_cons = false, ve_suf = false, ve_fc = false;
  ve_trace->add_option("--theorem", ve_theorem, "T3 | T4 | T5")
      ->capture_default_str();
  ve_trace->add_option("--spec", ve_t_spec, "coloring spec (defaults by theorem)");
  ve_trace->add_option("--k", ve_k, "suffix offset")->capture_default_str();
  ve_trace->add_option("--cuts", ve_cuts, "cumulative ends, e.g. 1,3,7");
  ve_trace->add_option("--parts", ve_parts, "explicit parts, ';'-separated");
  ve_trace->add_flag("--consecutive", ve_cons, "candidate flag");
  ve_trace->add_flag("--suffix-property", ve_suf, "candidate flag");
  ve_trace->add_flag("--factor-closed", ve_fc, "candidate flag");

  auto* ve_check = ve->add_subcommand("check", "plain monochromatic check");
  WordOpts ve_c_w;
  add_word_flags(ve_check, ve_c_w);
  std::string ve_c_spec = "zimin_cz", ve_c_cuts, ve_c_parts;
  std::uint64_t ve_c_k = 0;
  bool ve_c_super = false;
  ve_check->add_option("--spec", ve_c_spec, "coloring spec")
      ->capture_default_str();
  ve_check->add_option("--k", ve_c_k, "suffix offset")->capture_default_str();
  ve_check->add_option("--cuts", ve_c_cuts, "cumulative ends, e.g. 1,3,7");
  ve_check->add_option("--parts", ve_c_parts, "explicit parts, ';'-separated");
  ve_check->add_flag("--super", ve_c_super,
                     "check all subset concatenations, not just the parts");

  // props
  auto* pr = app.add_subcommand("props", "run named invariant suites");
  std::string pr_suite;
  bool pr_all = false, pr_list = false;
  pr->add_option("--suite", pr_suite, "suite name");
  pr->add_flag("--all", pr_all, "run every suite");
  pr->add_flag("--list", pr_list, "list suite names");

  // global flags may appear after the subcommand
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; }))
      allow_fallthrough(sub);
  };
  allow_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // flag misuse is a usage error
  }
  // files get machine-readable reports unless a format was forced
  if (!g.out.empty() && format_opt->count() == 0) g.format = "json";

  auto parse_cuts = [](const std::string& text) {
    std::vector<std::size_t> cuts;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t comma = text.find(',', pos);
      cuts.push_back(std::stoul(text.substr(pos, comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return cuts;
  };

  auto make_candidate = [&](const WordOpts& w, std::uint64_t k,
                            const std::string& cuts_text,
                            const std::string& parts_text, bool cons, bool suf,
                            bool fc, rw::FactorIndex& idx) {
    rw::FactorisationCandidate cand;
    cand.suffix_offset = k;
    cand.consecutive = cons;
    cand.suffix_property = suf;
    cand.factor_closed = fc;
    if (!parts_text.empty()) {
      std::size_t pos = 0;
      while (pos < parts_text.size()) {
        std::size_t semi = parts_text.find(';', pos);
        cand.parts.push_back(
            rw::Word::parse(parts_text.substr(pos, semi - pos)));
        if (semi == std::string::npos) break;
        pos = semi + 1;
      }
    } else {
      std::size_t prev = 0;
      for (std::size_t c : parse_cuts(cuts_text)) {
        cand.parts.push_back(
            idx.slice(static_cast<std::size_t>(k) + prev, c - prev));
        prev = c;
      }
    }
    (void)w;
    return cand;
  };

  try {
    if (*gen) return cmd_gen(g, gen_w, gen_n);
    if (*an)
      return cmd_analyze(g, an_w, an_at, an_len, an_factor, an_conslen,
                         an_boundary);
    if (*zi) {
      if (*zi_parse) {
        auto c = rw::parse_factor(rw::Word::parse(zi_a));
        emit(g, canonical_json(c), c.str());
        return 0;
      }
      if (*zi_build) {
        auto c = parse_canonical(zi_a);
        emit(g, canonical_json(c), rw::build(c).str());
        return 0;
      }
      if (*zi_concat) {
        auto c1 = parse_canonical(zi_a), c2 = parse_canonical(zi_b);
        bool ok = rw::concat_is_factor(c1, c2);
        json j = {{"first", canonical_json(c1)},
                  {"second", canonical_json(c2)},
                  {"factor", ok}};
        std::string text = ok ? "factor" : "not a factor";
        if (ok) {
          auto c = rw::concat_canonical(c1, c2);
          j["concat"] = canonical_json(c);
          text += ": " + c.str();
        }
        emit(g, j, text);
        return ok ? 0 : 1;
      }
      if (*zi_suffix) {
        auto c1 = parse_canonical(zi_a), c2 = parse_canonical(zi_b);
        bool ok = rw::suffix_test(c1, c2);
        emit(g, {{"suffix", ok}}, ok ? "suffix" : "not a suffix");
        return ok ? 0 : 1;
      }
      if (*zi_lift) {
        rw::FactorIndex idx(rw::period_doubling_source(), g.window);
        auto c = rw::lift_W(rw::Word::parse(zi_a), idx);
        emit(g, canonical_json(c), c.str());
        return 0;
      }
      if (*zi_peel) {
        auto m = rw::suffix_decomposition_M(zi_k, zi_depth, g.kmax);
        std::string text;
        for (std::size_t i = 0; i < m.size(); ++i)
          text += (i ? " " : "") + std::to_string(m[i]);
        emit(g, {{"k", zi_k}, {"M", m}}, text);
        return 0;
      }
    }
    if (*co) return cmd_color(g, co_w, co_spec, co_factor);
    if (*ra) {
      if (*ra_ip) {
        auto coloring = parse_nat_coloring(ra_coloring);
        auto w = rw::find_finite_sums_mono(coloring, ra_r, ra_n);
        json j = {{"found", w.has_value()}};
        if (w) {
          j["elements"] = w->elements;
          j["sums"] = w->subset_sums();
          j["color"] = w->color;
        }
        emit(g, j, w ? "witness found" : "NotFoundWithinBound");
        return w ? 0 : 1;
      }
      if (*ra_pe) {
        rw::Word u = ra_u.empty() ? rw::Word(rw::Alphabet::binary)
                                  : rw::Word::parse(ra_u);
        rw::Word v = rw::Word::parse(ra_v);
        std::optional<rw::PeriodicConstruction> parts;
        if (ra_spec.empty()) {
          auto fn = [&](const rw::Word& w) {
            return rw::Color::atom("rb",
                                   static_cast<int>((w.size() / v.size()) % 2));
          };
          parts = rw::build_periodic_super_mono(u, v, fn, ra_r, ra_n);
        } else {
          parts = rw::build_periodic_super_mono(
              u, v, rw::ColoringSpec::parse(ra_spec), ra_r, ra_n);
        }
        json j = {{"found", parts.has_value()}};
        std::string text = parts ? "parts:" : "NotFoundWithinBound";
        if (parts) {
          j["exponents"] = parts->exponents;
          json pw = json::array();
          for (const auto& p : parts->parts) {
            pw.push_back(p.str());
            text += " " + p.str();
          }
          j["parts"] = pw;
          j["color"] = parts->color.name();
        }
        emit(g, j, text);
        return parts ? 0 : 1;
      }
      if (*ra_su) {
        auto src = make_source(ra_w, g);
        rw::FactorIndex idx(src, g.window);
        auto chain =
            rw::build_suffix_chain(idx, rw::Word::parse(ra_u1), ra_depth);
        auto spec = rw::ColoringSpec::parse(ra_su_spec);
        auto found = rw::subshift_super_mono(idx, spec, chain, ra_r, ra_block);
        json j = {{"found", found.has_value()}};
        std::string text = found ? "blocks:" : "NotFoundWithinBound";
        if (found) {
          j["blocks"] = found->blocks;
          json pw = json::array();
          for (const auto& p : found->parts) pw.push_back(p.str());
          j["parts"] = pw;
          j["color"] = found->color.name();
          for (const auto& b : found->blocks) {
            text += " {";
            for (std::size_t i = 0; i < b.size(); ++i)
              text += (i ? "," : "") + std::to_string(b[i]);
            text += "}";
          }
        }
        emit(g, j, text);
        return found ? 0 : 1;
      }
    }
    if (*ve) {
      if (*ve_probe) {
        auto src = make_source(ve_w, g);
        auto spec = rw::ColoringSpec::parse(ve_spec);
        auto rep = rw::probe_conjecture(src, spec, probe_params);
        json j = rep.to_json();
        std::string text =
            "max depth " + std::to_string(rep.max_depth_reached) +
            ", kills " + std::to_string(rep.kill_count) + ", histogram [";
        for (std::size_t i = 0; i < rep.depth_histogram.size(); ++i)
          text += (i ? "," : "") + std::to_string(rep.depth_histogram[i]);
        text += "]";
        emit(g, j, text);
        return 0;
      }
      if (*ve_trace) {
        auto src = make_source(ve_t_w, g);
        rw::FactorIndex idx(src, g.window);
        rw::Theorem th = ve_theorem == "T3"   ? rw::Theorem::T3
                         : ve_theorem == "T4" ? rw::Theorem::T4
                                              : rw::Theorem::T5;
        std::string spec_text =
            !ve_t_spec.empty()   ? ve_t_spec
            : ve_theorem == "T3" ? "zimin_cz"
            : ve_theorem == "T4" ? "period_doubling_cw"
                                 : "squarefree3:" + std::to_string(g.window);
        auto spec = rw::ColoringSpec::parse(spec_text);
        auto cand = make_candidate(ve_t_w, ve_k, ve_cuts, ve_parts, ve_cons,
                                   ve_suf, ve_fc, idx);
        auto tr = rw::proof_trace(th, cand, spec, idx);
        std::string text;
        for (const auto& s : tr.steps)
          text += (s.ok ? "[ok]   " : "[FAIL] ") + s.name + " n=" +
                  std::to_string(s.n) + ": " + s.detail + "\n";
        text += tr.passed ? "trace passed" : "trace did not pass";
        emit(g, tr.to_json(), text);
        return tr.passed ? 0 : 1;
      }
      if (*ve_check) {
        auto src = make_source(ve_c_w, g);
        rw::FactorIndex idx(src, g.window);
        auto spec = rw::ColoringSpec::parse(ve_c_spec);
        auto cand = make_candidate(ve_c_w, ve_c_k, ve_c_cuts, ve_c_parts,
                                   false, false, false, idx);
        if (ve_c_super) {
          auto witness = rw::is_super_mono_prefix(spec, idx, cand);
          json j = {{"monochromatic", !witness.has_value()}};
          std::string text = "super-monochromatic";
          if (witness) {
            j["pair"] = {{"first", witness->first.word.str()},
                         {"first_color", witness->first.color},
                         {"second", witness->second.word.str()},
                         {"second_color", witness->second.color}};
            text = "bichromatic: \"" + witness->first.word.str() + "\" " +
                   witness->first.color + " vs \"" +
                   witness->second.word.str() + "\" " + witness->second.color;
          }
          emit(g, j, text);
          return witness ? 1 : 0;
        }
        bool mono = rw::check_monochromatic_factorisation(spec, idx, cand);
        emit(g, {{"monochromatic", mono}},
             mono ? "monochromatic" : "not monochromatic");
        return mono ? 0 : 1;
      }
    }
    if (*pr) {
      rw::props::Options opts{g.seed};
      if (pr_list) {
        std::string text;
        for (const auto& n : rw::props::suite_names()) text += n + "\n";
        std::cout << text;
        return 0;
      }
      std::vector<rw::props::SuiteResult> results;
      if (pr_all) {
        results = rw::props::run_all(opts);
      } else if (!pr_suite.empty()) {
        results.push_back(rw::props::run_suite(pr_suite, opts));
      } else {
        std::cerr << "props needs --suite <name> or --all\n";
        return 2;
      }
      json j = json::array();
      std::string text;
      bool any_fail = false;
      for (const auto& r : results) {
        j.push_back({{"suite", r.name},
                     {"passed", r.passed},
                     {"failed", r.failed},
                     {"failures", r.failures}});
        text += r.name + ": " + std::to_string(r.passed) + "/" +
                std::to_string(r.total()) + " pass\n";
        for (const auto& f : r.failures) text += "  ! " + f + "\n";
        if (!r.ok()) any_fail = true;
      }
      emit(g, j, text.empty() ? text : text.substr(0, text.size() - 1));
      return any_fail ? 1 : 0;
    }
  } catch (const rw::PreconditionViolated& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return 2;  // malformed inputs are usage errors
  } catch (const rw::Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
