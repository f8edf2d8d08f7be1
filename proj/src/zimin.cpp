#include "rw/zimin.hpp"

#include <algorithm>
#include <ostream>

#include "rw/index.hpp"

namespace rw {

// Materialization guard: build_* would otherwise happily try to allocate
// 2^63 letters for an in-cap index.
static constexpr std::uint64_t kMaxMaterialize = 1ull << 26;

CanonicalFactor::CanonicalFactor(FinSet a, std::uint32_t k, FinSet b)
    : A(std::move(a)), k(k), B(std::move(b)) {
  if (k < 1) throw PreconditionViolated("canonical index k must be positive");
  if ((!A.empty() && A.max() >= k) || (!B.empty() && B.max() >= k))
    throw PreconditionViolated("A and B must be subsets of [1,k)");
}

std::string CanonicalFactor::str() const {
  return "u" + A.str() + " x" + std::to_string(k) + " v" + B.str();
}

std::ostream& operator<<(std::ostream& os, const CanonicalFactor& c) {
  return os << c.str();
}

static void check_build_size(std::uint64_t len) {
  if (len > kMaxMaterialize)
    throw CapExceeded("refusing to materialize " + std::to_string(len) +
                      " letters");
}

static void check_index(std::uint32_t n, std::uint32_t k_max) {
  if (n < 1) throw PreconditionViolated("index must be >= 1");
  if (n > k_max)
    throw CapExceeded("letter x" + std::to_string(n) + " beyond cap " +
                      std::to_string(k_max));
}

// u_1 = x1, u_{n+1} = x_{n+1} u_1 u_2 ... u_n
static void append_un(std::vector<std::uint32_t>& out, std::uint32_t n) {
  if (n == 1) {
    out.push_back(1);
    return;
  }
  out.push_back(n);
  for (std::uint32_t i = 1; i < n; ++i) append_un(out, i);
}

// v_1 = x1, v_{n+1} = v_n v_{n-1} ... v_1 x_{n+1}
static void append_vn(std::vector<std::uint32_t>& out, std::uint32_t n) {
  if (n == 1) {
    out.push_back(1);
    return;
  }
  for (std::uint32_t i = n - 1; i >= 1; --i) append_vn(out, i);
  out.push_back(n);
}

Word build_un(std::uint32_t n, std::uint32_t k_max) {
  check_index(n, k_max);
  check_build_size(un_length(n));
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(un_length(n)));
  append_un(out, n);
  return Word(Alphabet::zimin, std::move(out));
}

Word build_vn(std::uint32_t n, std::uint32_t k_max) {
  check_index(n, k_max);
  check_build_size(un_length(n));
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(un_length(n)));
  append_vn(out, n);
  return Word(Alphabet::zimin, std::move(out));
}

Word build_zn(std::uint32_t n, std::uint32_t k_max) {
  check_index(n, k_max);
  check_build_size(zn_length(n));
  // Z_n = Z_{n-1} x_n Z_{n-1}
  std::vector<std::uint32_t> out{1};
  for (std::uint32_t m = 2; m <= n; ++m) {
    std::size_t sz = out.size();
    out.push_back(m);
    for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i]);
  }
  return Word(Alphabet::zimin, std::move(out));
}

Word build_u(const FinSet& A, std::uint32_t k_max) {
  check_build_size(A.binary_weight());
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(A.binary_weight()));
  for (std::uint32_t i : A.elements()) {
    check_index(i, k_max);
    append_un(out, i);
  }
  return Word(Alphabet::zimin, std::move(out));
}

Word build_v(const FinSet& B, std::uint32_t k_max) {
  check_build_size(B.binary_weight());
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(B.binary_weight()));
  const auto& e = B.elements();
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    check_index(*it, k_max);
    append_vn(out, *it);
  }
  return Word(Alphabet::zimin, std::move(out));
}

Word build(const CanonicalFactor& c, std::uint32_t k_max) {
  check_index(c.k, k_max);
  return build_u(c.A, k_max) + Word(Alphabet::zimin, {c.k}) +
         build_v(c.B, k_max);
}

CanonicalFactor parse_factor(const Word& w) {
  if (w.empty()) throw PreconditionViolated("cannot parse the empty word");
  if (w.alphabet() != Alphabet::zimin)
    throw PreconditionViolated("parse_factor expects a zimin word");

  std::uint32_t k = 0;
  for (std::uint32_t l : w.letters()) k = std::max(k, l);
  std::size_t pos = 0, count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == k) {
      pos = i;
      ++count;
    }
  // in a factor, the maximal letter occurs exactly once
  if (count != 1)
    throw NotAZiminFactor("letter x" + std::to_string(k) +
                          " occurs more than once");

  std::uint64_t pre_len = pos, post_len = w.size() - pos - 1;
  std::uint64_t cap = (k >= 64) ? ~0ull : (1ull << (k - 1));
  if (k < 64 && (pre_len >= cap || post_len >= cap))
    throw NotAZiminFactor("sides too long for k=" + std::to_string(k));

  FinSet A = FinSet::from_binary_weight(pre_len);
  FinSet B = FinSet::from_binary_weight(post_len);
  // |u_A| determines A (binary weights), so only one split can work
  if (w.slice(0, pos) != build_u(A, k))
    throw NotAZiminFactor("prefix is not u_" + A.str());
  if (w.slice(pos + 1, w.size() - pos - 1) != build_v(B, k))
    throw NotAZiminFactor("suffix is not v_" + B.str());
  return CanonicalFactor(std::move(A), k, std::move(B));
}

bool is_zimin_factor(const Word& w) {
  if (w.empty() || w.alphabet() != Alphabet::zimin) return false;
  try {
    parse_factor(w);
    return true;
  } catch (const NotAZiminFactor&) {
    return false;
  }
}

std::uint32_t eta(const CanonicalFactor& c) {
  FinSet gap = c.A.complement_in(1, c.k);
  return gap.empty() ? 0 : gap.max();
}

static void check_order(const CanonicalFactor& c1, const CanonicalFactor& c2) {
  if (c1.k >= c2.k)
    throw HypothesisViolated("requires k(u) < k(v), got k(u)=" +
                             std::to_string(c1.k) +
                             ", k(v)=" + std::to_string(c2.k));
}

bool concat_is_factor(const CanonicalFactor& c1, const CanonicalFactor& c2) {
  check_order(c1, c2);
  if (c2.A.contains(c1.k)) return false;
  return c1.B == c2.A.restrict_to(1, c1.k).complement_in(1, c1.k);
}

CanonicalFactor concat_canonical(const CanonicalFactor& c1,
                                 const CanonicalFactor& c2) {
  check_order(c1, c2);
  if (!concat_is_factor(c1, c2))
    throw NotAZiminFactor("concatenation " + c1.str() + " * " + c2.str() +
                          " is not a factor of Z");
  FinSet A = c1.A.unite(FinSet{c1.k}).unite(c2.A.restrict_to(c1.k + 1, c2.k));
  return CanonicalFactor(std::move(A), c2.k, c2.B);
}

bool suffix_test(const CanonicalFactor& c1, const CanonicalFactor& c2) {
  check_order(c1, c2);
  if (!c2.B.contains(c1.k)) return false;
  return c2.B.restrict_to(1, c1.k) == c1.B;
}

Word zimin_slice(std::uint64_t pos, std::size_t len) {
  std::vector<std::uint32_t> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(zimin_letter_at(pos + i));
  return Word(Alphabet::zimin, std::move(out));
}

std::vector<std::uint32_t> suffix_decomposition_M(std::uint64_t k,
                                                  std::size_t depth,
                                                  std::uint32_t k_max) {
  if (depth < 1) throw PreconditionViolated("depth must be >= 1");
  std::vector<std::uint32_t> out;
  out.reserve(depth);
  std::uint64_t pos = k;
  for (std::size_t i = 0; i < depth; ++i) {
    std::uint32_t m = zimin_letter_at(pos);
    if (m > k_max)
      throw CapExceeded("peeled index x" + std::to_string(m) + " beyond cap");
    out.push_back(m);
    pos += un_length(m);
  }
  return out;
}

CanonicalFactor lift_W(const Word& u, const FactorIndex& idxD) {
  if (u.empty() || u.alphabet() != Alphabet::binary)
    throw PreconditionViolated("lift_W expects a nonempty binary word");
  const auto& info = idxD.source().info();
  if (info.kind != SourceInfo::Kind::period_doubling ||
      idxD.source().base_offset() != 0)
    throw PreconditionViolated("lift_W needs an index over D itself");
  std::size_t a = idxD.first_occurrence(u);
  return parse_factor(zimin_slice(a, u.size()));
}

}  // namespace rw
