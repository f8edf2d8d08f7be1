#include "rw/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <set>

namespace rw {

std::vector<std::uint64_t> IPWitness::subset_sums() const {
  std::size_t r = elements.size();
  std::vector<std::uint64_t> sums;
  sums.reserve((1ull << r) - 1);
  for (std::uint64_t mask = 1; mask < (1ull << r); ++mask) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (1ull << i)) s += elements[i];
    sums.push_back(s);
  }
  return sums;
}

bool verify_ip_witness(const IPWitness& w,
                       const std::function<int(std::uint64_t)>& coloring,
                       std::uint64_t N) {
  if (w.elements.empty()) return false;
  for (std::size_t i = 1; i < w.elements.size(); ++i)
    if (w.elements[i] <= w.elements[i - 1]) return false;
  auto sums = w.subset_sums();
  std::set<std::uint64_t> distinct(sums.begin(), sums.end());
  if (distinct.size() != sums.size()) return false;
  for (std::uint64_t s : sums)
    if (s > N || coloring(s) != w.color) return false;
  return true;
}

namespace {

// Depth-first extension in increasing element order; the first complete
// witness is the lexicographic minimum.
bool extend_witness(const std::function<int(std::uint64_t)>& coloring,
                    std::size_t r, std::uint64_t N, int color,
                    std::vector<std::uint64_t>& elems,
                    std::vector<std::uint64_t>& sums) {
  if (elems.size() == r) return true;
  std::uint64_t start = elems.empty() ? 1 : elems.back() + 1;
  for (std::uint64_t m = start; m <= N; ++m) {
    std::vector<std::uint64_t> added{m};
    added.reserve(sums.size() + 1);
    for (std::uint64_t s : sums) added.push_back(s + m);

    bool ok = true;
    for (std::uint64_t s : added) {
      if (s > N || coloring(s) != color) {
        ok = false;
        break;
      }
    }
    if (ok) {
      // subset sums must stay pairwise distinct
      std::set<std::uint64_t> seen(sums.begin(), sums.end());
      for (std::uint64_t s : added)
        if (!seen.insert(s).second) {
          ok = false;
          break;
        }
    }
    if (!ok) continue;

    std::size_t keep = sums.size();
    elems.push_back(m);
    sums.insert(sums.end(), added.begin(), added.end());
    if (extend_witness(coloring, r, N, color, elems, sums)) return true;
    elems.pop_back();
    sums.resize(keep);
  }
  return false;
}

}  // namespace

std::optional<IPWitness> find_finite_sums_mono(
    const std::function<int(std::uint64_t)>& coloring, std::size_t r,
    std::uint64_t N) {
  if (r < 1 || N < r)
    throw PreconditionViolated("find_finite_sums_mono needs r >= 1 and N >= r");
  for (std::uint64_t m1 = 1; m1 <= N; ++m1) {
    int color = coloring(m1);
    std::vector<std::uint64_t> elems{m1}, sums{m1};
    if (extend_witness(coloring, r, N, color, elems, sums)) {
      IPWitness w{std::move(elems), color};
      if (!verify_ip_witness(w, coloring, N))
        throw Error("internal: witness failed re-verification");
      return w;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

static Word word_power(const Word& v, std::uint64_t e) {
  std::vector<std::uint32_t> letters;
  letters.reserve(v.size() * e);
  for (std::uint64_t i = 0; i < e; ++i)
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return Word(v.alphabet(), std::move(letters));
}

std::optional<PeriodicConstruction> build_periodic_super_mono(
    const Word& u, const Word& v, const ColorFn& coloring, std::size_t r,
    std::uint64_t exponent_bound) {
  if (v.empty()) throw PreconditionViolated("period v must be nonempty");

  // the induced integer coloring i -> C(v^i)
  auto induced = [&](std::uint64_t i) { return coloring(word_power(v, i)); };
  // map distinct word colors to small ints for the integer search
  std::vector<Color> seen;
  auto induced_id = [&](std::uint64_t i) {
    Color c = induced(i);
    for (std::size_t j = 0; j < seen.size(); ++j)
      if (seen[j] == c) return static_cast<int>(j);
    seen.push_back(c);
    return static_cast<int>(seen.size()) - 1;
  };

  auto witness = find_finite_sums_mono(induced_id, r, exponent_bound);
  if (!witness) return std::nullopt;

  PeriodicConstruction out{witness->elements, {}, induced(witness->elements[0])};
  for (std::uint64_t e : witness->elements) out.parts.push_back(word_power(v, e));

  // re-color all subset concatenations (v-powers) before returning
  for (std::uint64_t s : witness->subset_sums())
    if (coloring(word_power(v, s)) != out.color)
      throw Error("internal: periodic construction failed re-verification");
  (void)u;  // the preperiod only fixes which suffix the parts factorize
  return out;
}

std::optional<PeriodicConstruction> build_periodic_super_mono(
    const Word& u, const Word& v, const ColoringSpec& spec, std::size_t r,
    std::uint64_t exponent_bound) {
  std::size_t window =
      std::max<std::size_t>(spec.min_window(),
                            u.size() + v.size() * (exponent_bound + 2) + 16);
  FactorIndex idx(ultimately_periodic_source(u, v), window);
  auto fn = color_fn(spec, idx);
  return build_periodic_super_mono(u, v, fn, r, exponent_bound);
}

std::vector<Word> build_suffix_chain(const FactorIndex& idx, const Word& u1,
                                     std::size_t depth) {
  if (depth < 1) throw PreconditionViolated("depth must be >= 1");
  if (u1.empty()) throw PreconditionViolated("u1 must be nonempty");

  std::vector<Word> chain{u1};
  Word product = u1;  // u_1 u_2 ... u_n
  while (chain.size() < depth) {
    std::size_t p1 = idx.first_occurrence(product);
    // first occurrence disjoint from (and after) the first one
    std::optional<std::size_t> p2;
    for (std::size_t q = p1 + product.size();
         q + product.size() <= idx.window(); ++q) {
      bool match = true;
      for (std::size_t i = 0; i < product.size() && match; ++i)
        match = idx.letter_at(q + i) == product[i];
      if (match) {
        p2 = q;
        break;
      }
    }
    if (!p2)
      throw WindowExhausted("no disjoint reoccurrence of \"" + product.str() +
                            "\" within window " + std::to_string(idx.window()));
    Word gap = idx.slice(p1 + product.size(), *p2 - (p1 + product.size()));
    Word next = gap + product;
    chain.push_back(next);

    Word extended = product + next;
    if (!product.is_suffix_of(next))
      throw Error("internal: suffix property violated by construction");
    if (idx.is_factor(extended) != FactorAnswer::yes)
      throw WindowExhausted("product \"" + extended.str() +
                            "\" not witnessed as a factor within window");
    product = std::move(extended);
  }
  return chain;
}

// ---------------------------------------------------------------------------

namespace {

Word block_product(const std::vector<Word>& chain,
                   const std::vector<std::uint32_t>& block) {
  Word out(chain.empty() ? Alphabet::binary : chain[0].alphabet());
  for (std::uint32_t i : block) out = out + chain[i - 1];
  return out;
}

std::vector<std::uint32_t> mask_to_block(std::uint64_t mask) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t b = 0; b < 64; ++b)
    if (mask & (1ull << b)) out.push_back(b + 1);
  return out;
}

struct BlockSearch {
  const FactorIndex& idx;
  const ColorFn& coloring;
  const std::vector<Word>& chain;
  std::size_t r, max_block_size;
  std::vector<std::uint64_t> masks;
  std::vector<Word> block_words;

  bool family_ok(const Word& fresh, const Color& c0) {
    // products of subfamilies that end with the fresh block
    std::size_t n = block_words.size();
    for (std::uint64_t sel = 0; sel < (1ull << n); ++sel) {
      Word prod(fresh.alphabet());
      for (std::size_t i = 0; i < n; ++i)
        if (sel & (1ull << i)) prod = prod + block_words[i];
      prod = prod + fresh;
      if (idx.is_factor(prod) != FactorAnswer::yes) return false;
      if (coloring(prod) != c0) return false;
    }
    return true;
  }

  bool extend(std::uint64_t min_mask_bit, const Color& c0) {
    if (masks.size() == r) return true;
    std::uint64_t limit = 1ull << chain.size();
    for (std::uint64_t mask = min_mask_bit; mask < limit; ++mask) {
      auto block = mask_to_block(mask);
      if (block.empty() || block.size() > max_block_size) continue;
      if (!masks.empty()) {
        // A_{j-1} < A_j: strictly above the previous block
        std::uint64_t prev_top = 63 - std::countl_zero(masks.back());
        if (static_cast<std::uint64_t>(block.front() - 1) <= prev_top) continue;
      }
      Word w = block_product(chain, block);
      if (masks.empty()) {
        if (idx.is_factor(w) != FactorAnswer::yes) continue;
        Color c = coloring(w);
        masks.push_back(mask);
        block_words.push_back(w);
        if (extend(mask + 1, c)) return true;
        masks.pop_back();
        block_words.pop_back();
      } else {
        if (!family_ok(w, c0)) continue;
        masks.push_back(mask);
        block_words.push_back(w);
        if (extend(mask + 1, c0)) return true;
        masks.pop_back();
        block_words.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

std::optional<SubshiftConstruction> subshift_super_mono(
    const FactorIndex& idx, const ColorFn& coloring,
    const std::vector<Word>& chain, std::size_t r,
    std::size_t max_block_size) {
  if (r < 1) throw PreconditionViolated("r must be >= 1");
  if (chain.empty() || chain.size() > 62)
    throw PreconditionViolated("chain must have 1..62 elements");

  BlockSearch search{idx, coloring, chain, r, max_block_size, {}, {}};
  // the top-level loop fixes the family color via the first block
  if (!search.extend(1, Color::atom("unset", 0))) return std::nullopt;

  SubshiftConstruction out{{}, {}, coloring(search.block_words[0])};
  for (std::size_t i = 0; i < search.masks.size(); ++i) {
    out.blocks.push_back(mask_to_block(search.masks[i]));
    out.parts.push_back(search.block_words[i]);
  }
  // independent re-verification of all union products
  for (std::uint64_t sel = 1; sel < (1ull << r); ++sel) {
    Word prod(out.parts[0].alphabet());
    for (std::size_t i = 0; i < r; ++i)
      if (sel & (1ull << i)) prod = prod + out.parts[i];
    if (idx.is_factor(prod) != FactorAnswer::yes ||
        coloring(prod) != out.color)
      throw Error("internal: subshift construction failed re-verification");
  }
  return out;
}

std::optional<SubshiftConstruction> subshift_super_mono(
    const FactorIndex& idx, const ColoringSpec& spec,
    const std::vector<Word>& chain, std::size_t r,
    std::size_t max_block_size) {
  auto fn = color_fn(spec, idx);
  return subshift_super_mono(idx, fn, chain, r, max_block_size);
}

}  // namespace rw
