#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "error.hpp"
#include "monoid.hpp"
#include "word.hpp"

namespace iofpar {

using BlockSequence = std::vector<Block>;

// k_u and k_x for every position k of a block sequence (0-based vectors).
struct Indicators {
  std::vector<int> ku;
  std::vector<int> kx;
};

inline Indicators indicators(const BlockSequence& bs) {
  const std::size_t m = bs.size();
  Indicators ind{std::vector<int>(m), std::vector<int>(m)};
  // Letter counts of the u-blocks and x-blocks strictly after position k.
  int wu = 0, wx = 0;
  for (std::size_t k = m; k-- > 0;) {
    const Block& b = bs[k];
    if (b.kind == Kind::U) {
      ind.ku[k] = b.i;
      ind.kx[k] = b.i + 2 * b.j + 2 * wu - 2 * wx;
    } else {
      ind.kx[k] = b.i;
      ind.ku[k] = b.i + 2 * b.j - 2 * wu + 2 * wx;
    }
    (b.kind == Kind::U ? wu : wx) += b.j;
  }
  return ind;
}

// XSpacing/USpacing: two blocks of the same kind overlap or touch.
// AfterU/AfterX: a block is too close to the indicators of its successor.
enum class Q0Violation { Empty, InvalidBlock, IndicatorRange, XSpacing, USpacing, AfterU, AfterX };

inline std::string violation_name(Q0Violation v) {
  switch (v) {
  case Q0Violation::Empty: return "empty";
  case Q0Violation::InvalidBlock: return "invalid block";
  case Q0Violation::IndicatorRange: return "indicator outside 1..n";
  case Q0Violation::XSpacing: return "x-block spacing";
  case Q0Violation::USpacing: return "u-block spacing";
  case Q0Violation::AfterU: return "spacing after a u-block";
  case Q0Violation::AfterX: return "spacing after an x-block";
  }
  return "?";
}

struct Q0Result {
  bool ok = true;
  std::optional<Q0Violation> violation;
  int position = 0; // 1-based block position where the violation was found
};

// Q_0 membership. Besides the spacing conditions, every indicator has to be a
// point of {1..n}; sequences that break only this condition render to words that
// duplicate other members.
inline Q0Result in_Q0(const BlockSequence& bs, int n) {
  auto fail = [](Q0Violation v, std::size_t k) { return Q0Result{false, v, static_cast<int>(k) + 1}; };
  if (bs.empty())
    return fail(Q0Violation::Empty, 0);
  for (std::size_t k = 0; k < bs.size(); ++k)
    if (!bs[k].valid(n))
      return fail(Q0Violation::InvalidBlock, k);
  for (std::size_t k = 0; k < bs.size(); ++k)
    for (std::size_t l = k + 1; l < bs.size(); ++l)
      if (bs[k].kind == bs[l].kind && !(bs[k].i + 2 * bs[k].j + 1 < bs[l].i))
        return fail(bs[k].kind == Kind::X ? Q0Violation::XSpacing : Q0Violation::USpacing, k);
  const auto ind = indicators(bs);
  for (std::size_t k = 0; k < bs.size(); ++k)
    if (ind.ku[k] < 1 || ind.ku[k] > n || ind.kx[k] < 1 || ind.kx[k] > n)
      return fail(Q0Violation::IndicatorRange, k);
  for (std::size_t k = 0; k + 1 < bs.size(); ++k) {
    const Block& b = bs[k];
    if (b.kind == Kind::U) {
      if (!(b.i + 2 * b.j + 2 <= ind.ku[k + 1]) || ind.kx[k + 1] - ind.kx[k] < 2)
        return fail(Q0Violation::AfterU, k);
    } else {
      if (!(b.i + 2 * b.j + 2 <= ind.kx[k + 1]) || ind.ku[k + 1] - ind.ku[k] < 2)
        return fail(Q0Violation::AfterX, k);
    }
  }
  return {};
}

namespace detail {
inline void add_range(std::vector<bool>& set, int a, int b) {
  for (int t = std::max(a, 1); t <= b && t < static_cast<int>(set.size()); ++t)
    set[t] = true;
}
inline std::vector<int> members(const std::vector<bool>& set) {
  std::vector<int> out;
  for (std::size_t t = 1; t < set.size(); ++t)
    if (set[t])
      out.push_back(static_cast<int>(t));
  return out;
}
} // namespace detail

// The admissible set A_w: a tail range from the last block, the gaps between
// consecutive blocks walking back to the first, then a head range below the
// first indicators. Ranges with a > b are empty.
inline std::vector<int> compute_Aw(const BlockSequence& bs, int n) {
  if (bs.empty())
    throw StructureError("compute_Aw: empty block sequence");
  const auto ind = indicators(bs);
  const std::size_t m = bs.size();
  std::vector<bool> A(static_cast<std::size_t>(n) + 1, false);
  const int mu = ind.ku[m - 1], mx = ind.kx[m - 1];
  if (mu > mx && mu + 2 <= n)
    detail::add_range(A, mu + 2, n);
  else if (mu < mx && mx + 2 <= n)
    detail::add_range(A, mx + 2, n);
  for (std::size_t k = m - 1; k-- > 0;) {
    const Block& b = bs[k];
    if (b.kind == Kind::U)
      detail::add_range(A, b.i + 2 * b.j + 2, ind.ku[k + 1] - 1);
    else
      detail::add_range(A, ind.ku[k] + 2, ind.ku[k + 1] - 1);
  }
  const int u1 = ind.ku[0], x1 = ind.kx[0];
  if (u1 == 1 || x1 == 1) {
  } else if (1 < u1 && u1 <= x1) {
    detail::add_range(A, 1, u1 - 1);
  } else if (1 < x1 && x1 < u1) {
    detail::add_range(A, u1 - x1 + 1, u1 - 1);
  }
  return detail::members(A);
}

// v_A w* with w* = the u-blocks in order, then the reversal of all x letters.
struct NormalFormWord {
  std::vector<int> A; // sorted
  BlockSequence blocks;

  friend bool operator==(const NormalFormWord&, const NormalFormWord&) = default;
  friend auto operator<=>(const NormalFormWord&, const NormalFormWord&) = default;

  std::string to_string() const {
    std::string s = "A={";
    for (std::size_t k = 0; k < A.size(); ++k)
      s += (k ? "," : "") + std::to_string(A[k]);
    s += "} blocks=[";
    for (std::size_t k = 0; k < blocks.size(); ++k)
      s += (k ? "," : "") + blocks[k].to_string();
    return s + "]";
  }
};

inline Word star(const BlockSequence& bs) {
  Word us, xs;
  for (const auto& b : bs) {
    auto e = expand(b);
    (b.kind == Kind::U ? us : xs).insert((b.kind == Kind::U ? us : xs).end(), e.begin(), e.end());
  }
  us.insert(us.end(), xs.rbegin(), xs.rend());
  return us;
}

inline Word v_word(const std::vector<int>& A) {
  Word w;
  for (int a : A)
    w.push_back(v(a));
  return w;
}

inline Word render(const NormalFormWord& nf) { return concat({v_word(nf.A), star(nf.blocks)}); }

// Restores the block sequence order from the u-blocks (in order) and the
// x-blocks (in order) of a word w*. A u-block goes before an x-block when the
// top index of the u-block, shifted by the later u letters and the earlier
// x letters, stays below the top index of the x-block. Returns nullopt when
// the two sides tie, which does not happen for members of Q_0.
inline std::optional<BlockSequence> interleave(const std::vector<Block>& ublocks, const std::vector<Block>& xblocks) {
  const std::size_t a = ublocks.size(), b = xblocks.size();
  std::vector<int> later_u(a, 0);
  for (std::size_t k = a; k-- > 1;)
    later_u[k - 1] = later_u[k] + ublocks[k].j;
  // x letters in x-blocks after position l (in sequence order).
  std::vector<int> later_x(b, 0);
  for (std::size_t l = b; l-- > 1;)
    later_x[l - 1] = later_x[l] + xblocks[l].j;
  BlockSequence out;
  std::size_t ui = 0, xi = 0;
  while (ui < a || xi < b) {
    if (ui == a) {
      out.push_back(xblocks[xi++]);
      continue;
    }
    if (xi == b) {
      out.push_back(ublocks[ui++]);
      continue;
    }
    const Block& U = ublocks[ui];
    const Block& X = xblocks[xi];
    int lhs = U.top() + 2 * later_u[ui] - 2 * later_x[xi];
    int rhs = X.top();
    if (lhs == rhs)
      return std::nullopt;
    if (lhs < rhs)
      out.push_back(ublocks[ui++]);
    else
      out.push_back(xblocks[xi++]);
  }
  return out;
}

// Inverse of render on W_n; nullopt for words outside W_n.
inline std::optional<NormalFormWord> recognize(const Word& w, int n) {
  if (!word_valid(w, n))
    return std::nullopt;
  NormalFormWord nf;
  std::size_t p = 0;
  while (p < w.size() && w[p].kind == Kind::V) {
    if (!nf.A.empty() && nf.A.back() >= w[p].index)
      return std::nullopt;
    nf.A.push_back(w[p].index);
    ++p;
  }
  if (p == w.size())
    return nf;
  Word us, xs;
  while (p < w.size() && w[p].kind == Kind::U)
    us.push_back(w[p++]);
  while (p < w.size() && w[p].kind == Kind::X)
    xs.push_back(w[p++]);
  if (p != w.size())
    return std::nullopt;
  auto ub = parse_blocks(us);
  auto xb = parse_blocks(reverse_inverse(xs));
  auto bs = interleave(ub, xb);
  if (!bs || !in_Q0(*bs, n).ok)
    return std::nullopt;
  auto aw = compute_Aw(*bs, n);
  if (!std::includes(aw.begin(), aw.end(), nf.A.begin(), nf.A.end()))
    return std::nullopt;
  nf.blocks = std::move(*bs);
  if (render(nf) != w)
    return std::nullopt;
  return nf;
}

// All valid blocks for n: u before x, then by i, then by j.
inline std::vector<Block> all_blocks(int n) {
  std::vector<Block> out;
  for (Kind k : {Kind::U, Kind::X})
    for (int i = 1; i <= n - 2; ++i)
      for (int j = 1; i + 2 * j <= n; ++j)
        out.push_back({k, i, j});
  return out;
}

// All of Q_0 in depth-first order over all_blocks. Prefixes are pruned by
// the same-kind spacing conditions, which only depend on blocks of one kind.
inline std::vector<BlockSequence> enumerate_Q0(int n) {
  std::vector<BlockSequence> out;
  const auto blocks = all_blocks(n);
  BlockSequence cur;
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty() && in_Q0(cur, n).ok)
      out.push_back(cur);
    for (const auto& b : blocks) {
      bool fits = true;
      for (const auto& c : cur)
        if (c.kind == b.kind && !(c.i + 2 * c.j + 1 < b.i)) {
          fits = false;
          break;
        }
      if (!fits)
        continue;
      cur.push_back(b);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

inline std::vector<std::vector<int>> subsets_of(const std::vector<int>& s) {
  std::vector<std::vector<int>> out;
  const std::size_t k = s.size();
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    std::vector<int> t;
    for (std::size_t b = 0; b < k; ++b)
      if (mask & (1ul << b))
        t.push_back(s[b]);
    out.push_back(std::move(t));
  }
  return out;
}

struct WnEnumeration {
  std::vector<NormalFormWord> members;
  // Number of (A, w) pairs that rendered to an already seen word.
  std::size_t collisions = 0;
};

// W_n, deduplicated by rendered word: first the v_A w* members in Q_0 order,
// then the 2^n pure v_A words.
inline WnEnumeration enumerate_Wn_report(int n, int max_n = kDefaultMaxN) {
  check_bound(n, max_n);
  WnEnumeration res;
  std::unordered_set<Word, WordHash> seen;
  auto add = [&](NormalFormWord nf) {
    if (seen.insert(render(nf)).second)
      res.members.push_back(std::move(nf));
    else
      ++res.collisions;
  };
  for (auto& bs : enumerate_Q0(n))
    for (auto& A : subsets_of(compute_Aw(bs, n)))
      add({std::move(A), bs});
  std::vector<int> all;
  for (int a = 1; a <= n; ++a)
    all.push_back(a);
  for (auto& A : subsets_of(all))
    add({std::move(A), {}});
  return res;
}

inline std::vector<NormalFormWord> enumerate_Wn(int n, int max_n = kDefaultMaxN) {
  return enumerate_Wn_report(n, max_n).members;
}

inline std::size_t count_Wn(int n, int max_n = kDefaultMaxN) { return enumerate_Wn(n, max_n).size(); }

} // namespace iofpar
