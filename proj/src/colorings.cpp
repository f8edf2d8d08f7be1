#include "rw/colorings.hpp"

#include <algorithm>

#include "rw/conslen.hpp"
#include "rw/zimin.hpp"

namespace rw {

static const char* kAtomNames[] = {"red", "blue", "green"};

std::string Color::name() const {
  auto one = [](int i) {
    return (i >= 0 && i < 3) ? std::string(kAtomNames[i])
                             : "c" + std::to_string(i);
  };
  if (indices_.size() == 1) return one(indices_[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) out += ",";
    out += one(indices_[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// ColoringSpec
// ---------------------------------------------------------------------------

ColoringSpec ColoringSpec::recurrence(std::size_t window,
                                      std::size_t threshold) {
  if (window < 1 || threshold < 1)
    throw PreconditionViolated("recurrence needs window >= 1, threshold >= 1");
  ColoringSpec s(Kind::recurrence);
  s.window_ = window;
  s.threshold_ = threshold;
  return s;
}

ColoringSpec ColoringSpec::nonfactor_nf(ColoringSpec inner) {
  if (inner.palette_size() < 2)
    throw PreconditionViolated("nonfactor_nf needs a >= 2-color inner coloring");
  ColoringSpec s(Kind::nonfactor_nf);
  s.children_.push_back(std::move(inner));
  return s;
}

ColoringSpec ColoringSpec::firstocc_split() {
  return ColoringSpec(Kind::firstocc_split);
}

ColoringSpec ColoringSpec::zimin_cz() { return ColoringSpec(Kind::zimin_cz); }

ColoringSpec ColoringSpec::period_doubling_cw() {
  return ColoringSpec(Kind::period_doubling_cw);
}

ColoringSpec ColoringSpec::squarefree3(std::size_t search_window) {
  if (search_window < 1)
    throw PreconditionViolated("squarefree3 needs a search window >= 1");
  ColoringSpec s(Kind::squarefree3);
  s.window_ = search_window;
  return s;
}

ColoringSpec ColoringSpec::product(std::vector<ColoringSpec> parts) {
  if (parts.size() < 2)
    throw PreconditionViolated("product needs at least 2 component colorings");
  ColoringSpec s(Kind::product);
  s.children_ = std::move(parts);
  return s;
}

std::size_t ColoringSpec::palette_size() const {
  switch (kind_) {
    case Kind::squarefree3: return 3;
    case Kind::nonfactor_nf: return children_[0].palette_size();
    case Kind::product: {
      std::size_t n = 1;
      for (const auto& c : children_) n *= c.palette_size();
      return n;
    }
    default: return 2;
  }
}

std::string ColoringSpec::palette_id() const {
  switch (kind_) {
    case Kind::squarefree3: return "rbg";
    case Kind::nonfactor_nf: return children_[0].palette_id();
    case Kind::product: {
      std::string out;
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out += "*";
        out += children_[i].palette_id();
      }
      return out;
    }
    default: return "rb";
  }
}

std::size_t ColoringSpec::min_window() const {
  switch (kind_) {
    case Kind::recurrence: return window_;
    case Kind::squarefree3: return window_;
    case Kind::nonfactor_nf: return children_[0].min_window();
    case Kind::product: {
      std::size_t n = 1;
      for (const auto& c : children_) n = std::max(n, c.min_window());
      return n;
    }
    default: return 1;
  }
}

std::string ColoringSpec::display() const {
  switch (kind_) {
    case Kind::recurrence:
      return "recurrence(" + std::to_string(window_) + "," +
             std::to_string(threshold_) + ")";
    case Kind::nonfactor_nf: return "nonfactor_nf(" + children_[0].display() + ")";
    case Kind::firstocc_split: return "firstocc_split";
    case Kind::zimin_cz: return "zimin_cz";
    case Kind::period_doubling_cw: return "period_doubling_cw";
    case Kind::squarefree3:
      return "squarefree3(" + std::to_string(window_) + ")";
    case Kind::product: {
      std::string out = "product(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out += ",";
        out += children_[i].display();
      }
      return out + ")";
    }
  }
  return "?";
}

nlohmann::json ColoringSpec::to_json() const {
  nlohmann::json j;
  switch (kind_) {
    case Kind::recurrence:
      j["kind"] = "recurrence";
      j["window"] = window_;
      j["threshold"] = threshold_;
      break;
    case Kind::nonfactor_nf:
      j["kind"] = "nonfactor_nf";
      j["inner"] = children_[0].to_json();
      break;
    case Kind::firstocc_split: j["kind"] = "firstocc_split"; break;
    case Kind::zimin_cz: j["kind"] = "zimin_cz"; break;
    case Kind::period_doubling_cw: j["kind"] = "period_doubling_cw"; break;
    case Kind::squarefree3:
      j["kind"] = "squarefree3";
      j["search_window"] = window_;
      break;
    case Kind::product: {
      j["kind"] = "product";
      nlohmann::json parts = nlohmann::json::array();
      for (const auto& c : children_) parts.push_back(c.to_json());
      j["parts"] = std::move(parts);
      break;
    }
  }
  return j;
}

ColoringSpec ColoringSpec::from_json(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "recurrence")
    return recurrence(j.at("window").get<std::size_t>(),
                      j.at("threshold").get<std::size_t>());
  if (kind == "nonfactor_nf") return nonfactor_nf(from_json(j.at("inner")));
  if (kind == "firstocc_split") return firstocc_split();
  if (kind == "zimin_cz") return zimin_cz();
  if (kind == "period_doubling_cw") return period_doubling_cw();
  if (kind == "squarefree3")
    return squarefree3(j.at("search_window").get<std::size_t>());
  if (kind == "product") {
    std::vector<ColoringSpec> parts;
    for (const auto& p : j.at("parts")) parts.push_back(from_json(p));
    return product(std::move(parts));
  }
  throw PreconditionViolated("unknown coloring kind: " + kind);
}

ColoringSpec ColoringSpec::parse(const std::string& text) {
  if (!text.empty() && text.front() == '{')
    return from_json(nlohmann::json::parse(text));
  // short names, with optional :params
  auto split = [&](char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
      std::size_t next = text.find(sep, pos);
      out.push_back(text.substr(pos, next - pos));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return out;
  };
  auto parts = split(':');
  const std::string& name = parts[0];
  if (name == "zimin_cz") return zimin_cz();
  if (name == "firstocc_split") return firstocc_split();
  if (name == "period_doubling_cw" || name == "pd_cw")
    return period_doubling_cw();
  if (name == "squarefree3")
    return squarefree3(parts.size() > 1 ? std::stoul(parts[1]) : 1024);
  if (name == "recurrence")
    return recurrence(parts.size() > 1 ? std::stoul(parts[1]) : 1024,
                      parts.size() > 2 ? std::stoul(parts[2]) : 2);
  if (name == "nonfactor_nf")
    return nonfactor_nf(parts.size() > 1 ? parse(parts[1]) : zimin_cz());
  throw PreconditionViolated("unknown coloring spec: " + text);
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

// C_NF over the Zimin word; exact, no window involved.
int c_nf_zimin(const Word& u) {
  for (std::size_t p = 1; p < u.size(); ++p)
    if (is_zimin_factor(u.slice(0, p)) &&
        is_zimin_factor(u.slice(p, u.size() - p)))
      return kBlue;
  return kRed;
}

// C_NF against an index: u must be a certified non-factor.  blue needs one
// split into two certified factors; red needs every split to contain a
// certified non-factor half.
int c_nf_indexed(const FactorIndex& idx, const Word& u) {
  bool undecided = false;
  for (std::size_t p = 1; p < u.size(); ++p) {
    FactorAnswer l = idx.is_factor(u.slice(0, p));
    FactorAnswer r = idx.is_factor(u.slice(p, u.size() - p));
    if (l == FactorAnswer::yes && r == FactorAnswer::yes) return kBlue;
    if (l != FactorAnswer::no && r != FactorAnswer::no) undecided = true;
  }
  if (undecided)
    throw WindowInsufficient("cannot certify the C_NF color of \"" + u.str() +
                             "\" within window " +
                             std::to_string(idx.window()));
  return kRed;
}

int eval_zimin_cz(const Word& u) {
  if (u.empty() || u.alphabet() != Alphabet::zimin)
    throw PreconditionViolated("zimin_cz colors nonempty zimin words");
  try {
    CanonicalFactor c = parse_factor(u);
    std::uint32_t e = eta(c);
    bool red = c.A.restrict_to(1, e) ==
               c.B.restrict_to(1, e).complement_in(1, e);
    return red ? kRed : kBlue;
  } catch (const NotAZiminFactor&) {
    return c_nf_zimin(u);
  }
}

// red iff some split u = v1 v2 has A(v1) = A(u) and B(v2) = B(u), found by
// a direct scan (the equivalence with L(u) >= 2 is a tested property, not an
// assumption here).
int eval_firstocc_split(const FactorIndex& idx, const Word& u) {
  FactorAnswer ans = idx.is_factor(u);
  if (ans == FactorAnswer::unknown_beyond_window)
    throw WindowInsufficient("factorhood of \"" + u.str() +
                             "\" undecided within window");
  if (ans == FactorAnswer::no) return c_nf_indexed(idx, u);

  std::size_t a0 = idx.first_occurrence(u);
  auto pre = idx.cursor();
  for (std::size_t s = 1; s < u.size(); ++s) {
    if (!pre.advance(u[s - 1])) break;
    if (pre.first_occurrence() != a0) continue;
    auto suf = idx.cursor();
    bool ok = true;
    for (std::size_t i = s; i < u.size() && ok; ++i) ok = suf.advance(u[i]);
    if (ok && suf.first_occurrence() == a0 + s) return kRed;
  }
  return kBlue;
}

int eval_recurrence(const ColoringSpec& spec, const FactorIndex& idx,
                    const Word& u) {
  if (idx.window() < spec.window())
    throw WindowInsufficient("recurrence coloring needs window >= " +
                             std::to_string(spec.window()));
  auto occs = idx.occurrences_up_to(u, spec.threshold());
  std::size_t count = 0;
  for (std::size_t p : occs)
    if (p + u.size() <= spec.window()) ++count;
  if (count == 0) return kBlue;                  // treated as a non-factor
  if (count >= spec.threshold()) return kBlue;   // recurrent surrogate
  return kRed;
}

int eval_squarefree3(const ColoringSpec& spec, const FactorIndex& idx,
                     const Word& u) {
  std::size_t w = spec.search_window();
  if (idx.window() < w)
    throw WindowInsufficient("squarefree3 declared window " +
                             std::to_string(w) + " exceeds index window");
  auto a0 = idx.try_first_occurrence(u);
  bool in_window = a0 && *a0 + u.size() <= w;
  if (!in_window) {
    // declared-window C_NF rule: one split into two in-window factors = blue
    for (std::size_t p = 1; p < u.size(); ++p) {
      auto l = idx.try_first_occurrence(u.slice(0, p));
      auto r = idx.try_first_occurrence(u.slice(p, u.size() - p));
      if (l && *l + p <= w && r && *r + (u.size() - p) <= w) return kBlue;
    }
    return kRed;
  }
  if (consecutive_length(idx, u) == 1) return kGreen;
  BoundarySets b = boundary_sets(idx, u);
  bool red = b.lambda_plus == b.rho_plus && b.lambda_minus == b.rho_minus;
  return red ? kRed : kBlue;
}

int eval_period_doubling_cw(const FactorIndex& idx, const Word& u) {
  const auto& info = idx.source().info();
  if (info.kind != SourceInfo::Kind::period_doubling ||
      idx.source().base_offset() != 0)
    throw PreconditionViolated("period_doubling_cw needs an index over D");
  FactorAnswer ans = idx.is_factor(u);
  if (ans == FactorAnswer::unknown_beyond_window)
    throw WindowInsufficient("factorhood in D undecided for \"" + u.str() +
                             "\"");
  if (ans == FactorAnswer::no) return c_nf_indexed(idx, u);
  if (!idx.try_first_occurrence(u))
    throw WindowInsufficient("A_D(\"" + u.str() + "\") lies beyond the window");
  CanonicalFactor w = lift_W(u, idx);
  return eval_zimin_cz(build(w));
}

}  // namespace

Color color(const ColoringSpec& spec, const FactorIndex& idx, const Word& u) {
  if (u.empty()) throw PreconditionViolated("colorings apply to nonempty words");
  switch (spec.kind()) {
    case ColoringSpec::Kind::zimin_cz:
      return Color::atom(spec.palette_id(), eval_zimin_cz(u));
    case ColoringSpec::Kind::firstocc_split:
      return Color::atom(spec.palette_id(), eval_firstocc_split(idx, u));
    case ColoringSpec::Kind::recurrence:
      return Color::atom(spec.palette_id(), eval_recurrence(spec, idx, u));
    case ColoringSpec::Kind::squarefree3:
      return Color::atom(spec.palette_id(), eval_squarefree3(spec, idx, u));
    case ColoringSpec::Kind::period_doubling_cw:
      return Color::atom(spec.palette_id(), eval_period_doubling_cw(idx, u));
    case ColoringSpec::Kind::nonfactor_nf: {
      FactorAnswer ans = idx.is_factor(u);
      if (ans == FactorAnswer::unknown_beyond_window)
        throw WindowInsufficient("factorhood of \"" + u.str() +
                                 "\" undecided within window");
      if (ans == FactorAnswer::no)
        return Color::atom(spec.palette_id(), c_nf_indexed(idx, u));
      return color(spec.children()[0], idx, u);
    }
    case ColoringSpec::Kind::product: {
      std::vector<int> indices;
      for (const auto& child : spec.children()) {
        Color c = color(child, idx, u);
        indices.insert(indices.end(), c.indices().begin(), c.indices().end());
      }
      return Color(spec.palette_id(), std::move(indices));
    }
  }
  throw Error("internal: unhandled coloring kind");
}

ColorFn color_fn(const ColoringSpec& spec, const FactorIndex& idx) {
  return [spec, &idx](const Word& u) { return color(spec, idx, u); };
}

}  // namespace rw
