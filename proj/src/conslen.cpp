#include "rw/conslen.hpp"

#include <algorithm>
#include <limits>

namespace rw {

std::vector<Word> ConsecutiveDecomposition::chunks() const {
  std::vector<Word> out;
  std::size_t prev = 0;
  for (std::size_t c : cuts) {
    out.push_back(base.slice(prev, c - prev));
    prev = c;
  }
  out.push_back(base.slice(prev, base.size() - prev));
  return out;
}

namespace {

// First occurrences of all slices of u, one automaton walk per start; -1
// where the slice is not a factor of the window.
struct SliceTable {
  std::size_t n;
  std::vector<std::ptrdiff_t> a;  // (p,q) -> a[p*(n+1)+q]

  std::ptrdiff_t at(std::size_t p, std::size_t q) const {
    return a[p * (n + 1) + q];
  }
};

SliceTable build_slices(const FactorIndex& idx, const Word& u) {
  SliceTable t;
  t.n = u.size();
  t.a.assign((t.n + 1) * (t.n + 1), -1);
  for (std::size_t p = 0; p < t.n; ++p) {
    auto c = idx.cursor();
    for (std::size_t q = p + 1; q <= t.n; ++q) {
      if (!c.advance(u[q - 1])) break;
      t.a[p * (t.n + 1) + q] = static_cast<std::ptrdiff_t>(c.first_occurrence());
    }
  }
  return t;
}

constexpr std::ptrdiff_t kNone = -1;

// tail[q] = max chunks over consecutive decompositions of u[q..); -1 where
// none exists.  Chunk (p,q) is usable iff its first occurrence equals
// A(u) + p.
std::vector<std::ptrdiff_t> tail_dp(const SliceTable& t, std::size_t a0) {
  std::size_t n = t.n;
  std::vector<std::ptrdiff_t> tail(n + 1, kNone);
  tail[n] = 0;
  for (std::size_t p = n; p-- > 0;) {
    std::ptrdiff_t best = kNone;
    for (std::size_t q = p + 1; q <= n; ++q) {
      if (tail[q] == kNone) continue;
      if (t.at(p, q) != static_cast<std::ptrdiff_t>(a0 + p)) continue;
      best = std::max(best, tail[q] + 1);
    }
    tail[p] = best;
  }
  return tail;
}

}  // namespace

bool is_consecutive(const FactorIndex& idx, const Word& u,
                    const std::vector<std::size_t>& cuts) {
  std::size_t a0 = idx.first_occurrence(u);
  std::size_t prev = 0;
  for (std::size_t c : cuts) {
    if (c <= prev || c >= u.size())
      throw PreconditionViolated("cuts must be strictly increasing interior positions");
    prev = c;
  }
  prev = 0;
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    std::size_t end = i < cuts.size() ? cuts[i] : u.size();
    Word chunk = u.slice(prev, end - prev);
    auto a = idx.try_first_occurrence(chunk);
    if (!a || *a != a0 + prev) return false;
    prev = end;
  }
  return true;
}

std::size_t consecutive_length(const FactorIndex& idx, const Word& u) {
  std::size_t a0 = idx.first_occurrence(u);
  SliceTable t = build_slices(idx, u);
  auto tail = tail_dp(t, a0);
  // the one-term decomposition is always valid, so tail[0] >= 1
  return static_cast<std::size_t>(tail[0]);
}

ConsecutiveDecomposition maximal_decomposition(const FactorIndex& idx,
                                               const Word& u) {
  std::size_t a0 = idx.first_occurrence(u);
  SliceTable t = build_slices(idx, u);
  auto tail = tail_dp(t, a0);

  ConsecutiveDecomposition d;
  d.base = u;
  d.base_occurrence = a0;
  std::size_t p = 0;
  while (p < u.size()) {
    // shortest chunk consistent with an optimal completion
    std::size_t q = p + 1;
    for (; q <= u.size(); ++q) {
      if (tail[q] == kNone) continue;
      if (t.at(p, q) != static_cast<std::ptrdiff_t>(a0 + p)) continue;
      if (tail[q] + 1 == tail[p]) break;
    }
    if (q > u.size()) throw Error("internal: traceback lost the optimum");
    if (q < u.size()) d.cuts.push_back(q);
    p = q;
  }

  for (const Word& chunk : d.chunks())
    if (consecutive_length(idx, chunk) != 1)
      throw Error("internal: maximal decomposition produced a reducible chunk");
  return d;
}

bool is_irreducible(const FactorIndex& idx, const Word& u) {
  return consecutive_length(idx, u) == 1;
}

Word find_factor_with_length(const FactorIndex& idx, std::size_t k,
                             std::size_t l) {
  if (l < 1) throw PreconditionViolated("target length must be >= 1");
  if (k >= idx.window())
    throw WindowExhausted("suffix offset is outside the window");

  // Grow a chain of chunks pinned at their own positions; each prefix of the
  // chain is then a consecutive decomposition of the slice it covers.
  std::size_t chunks = 0, end = k;
  while (chunks < l) {
    auto c = idx.cursor();
    std::size_t pos = end, found = 0;
    while (pos < idx.window()) {
      if (!c.advance(idx.letter_at(pos))) break;
      ++pos;
      if (c.first_occurrence() == end) {
        found = pos;
        break;
      }
    }
    if (found == 0)
      throw WindowExhausted("no pinned chunk at " + std::to_string(end) +
                            " within window " + std::to_string(idx.window()));
    end = found;
    ++chunks;
  }

  Word u = idx.slice(k, end - k);
  ConsecutiveDecomposition d = maximal_decomposition(idx, u);
  if (d.terms() < l) throw Error("internal: chain shorter than requested");
  // first l chunks of an irreducible decomposition have L exactly l
  std::size_t cut = l <= d.cuts.size() ? d.cuts[l - 1] : u.size();
  Word out = u.slice(0, cut);
  if (consecutive_length(idx, out) != l)
    throw Error("internal: truncation did not achieve the target length");
  return out;
}

std::vector<Word> boundary_set(const FactorIndex& idx, const Word& u,
                               Boundary which) {
  std::size_t a0 = idx.first_occurrence(u);
  std::vector<Word> out;

  bool lambda =
      which == Boundary::lambda_plus || which == Boundary::lambda_minus;
  bool plus = which == Boundary::lambda_plus || which == Boundary::rho_plus;

  if (lambda) {
    // B(vu) = B(u) forces A(vu) = A(u) - |v| (else u would occur earlier),
    // so v is the slice just before u's first occurrence.
    for (std::size_t len = 1; len <= a0; ++len) {
      Word v = idx.slice(a0 - len, len);
      std::size_t bv = idx.first_occurrence(v) + len;
      if (plus ? bv != a0 : bv >= a0) continue;
      if (consecutive_length(idx, v) != 1) continue;
      out.push_back(std::move(v));
    }
  } else {
    for (std::size_t len = 1; len <= u.size(); ++len) {
      Word v = u.slice(u.size() - len, len);
      auto av = idx.try_first_occurrence(v);
      if (!av) continue;  // suffix of an in-window factor is in-window
      std::size_t bv = *av + len;
      if (plus ? bv != a0 : bv >= a0) continue;
      if (consecutive_length(idx, v) != 1) continue;
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end(), shorter_then_lex);
  return out;
}

BoundarySets boundary_sets(const FactorIndex& idx, const Word& u) {
  return BoundarySets{
      boundary_set(idx, u, Boundary::lambda_plus),
      boundary_set(idx, u, Boundary::lambda_minus),
      boundary_set(idx, u, Boundary::rho_plus),
      boundary_set(idx, u, Boundary::rho_minus),
  };
}

}  // namespace rw
