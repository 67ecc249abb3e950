#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "transformation.hpp"
#include "word.hpp"

namespace iofpar {

struct RelationInstance {
  std::string family; // E, L1..L6, R1..R19, LEM3i, LEM3ii
  std::string params; // e.g. "i=2 j=1", "i=3 x" for the x-side twin
  Word lhs;
  Word rhs;

  std::string label() const { return params.empty() ? family : family + " " + params; }
};

// u_{i_0} ... u_{i_l} x_{j_1} ... x_{j_{m+1}}
struct WtWord {
  std::vector<int> I; // strictly increasing
  std::vector<int> J; // strictly decreasing

  Word word() const {
    Word w;
    for (int i : I)
      w.push_back(u(i));
    for (int j : J)
      w.push_back(x(j));
    return w;
  }

  std::string params() const {
    auto tuple = [](const std::vector<int>& t) {
      std::string s = "(";
      for (std::size_t k = 0; k < t.size(); ++k)
        s += (k ? "," : "") + std::to_string(t[k]);
      return s + ")";
    };
    return "I=" + tuple(I) + " J=" + tuple(J);
  }
};

namespace detail {
// Calls f on every size-k subsequence of items, in lexicographic order of
// positions.
inline void combinations(const std::vector<int>& items, std::size_t k,
                         const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      f(cur);
      return;
    }
    for (std::size_t p = start; p + (k - cur.size()) <= items.size(); ++p) {
      cur.push_back(items[p]);
      rec(p + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

inline bool contains(const std::vector<int>& s, std::size_t from, std::size_t to, int value) {
  for (std::size_t p = from; p < to; ++p)
    if (s[p] == value)
      return true;
  return false;
}
} // namespace detail

// Index sets for the cancellation families. The exclusion rule is read
// literally: for k among i_0..i_{l-1}, neither k+1 nor k+3 is one of
// i_1..i_l, and for k among j_2..j_{m+1}, neither is one of j_1..j_m.
inline std::vector<WtWord> enumerate_Wt(int n) {
  std::vector<WtWord> out;
  const int N = n - 2;
  if (N < 1)
    return out;
  std::vector<int> asc, desc;
  for (int i = 1; i <= N; ++i)
    asc.push_back(i);
  desc.assign(asc.rbegin(), asc.rend());
  for (int l = 0; l <= n - 2; ++l)
    detail::combinations(asc, static_cast<std::size_t>(l) + 1, [&](const std::vector<int>& I) {
      for (std::size_t p = 0; p + 1 < I.size(); ++p)
        if (detail::contains(I, 1, I.size(), I[p] + 1) || detail::contains(I, 1, I.size(), I[p] + 3))
          return;
      for (int m = 0; m <= n - 3; ++m)
        detail::combinations(desc, static_cast<std::size_t>(m) + 1, [&](const std::vector<int>& J) {
          for (std::size_t p = 1; p < J.size(); ++p)
            if (detail::contains(J, 0, J.size() - 1, J[p] + 1) || detail::contains(J, 0, J.size() - 1, J[p] + 3))
              return;
          out.push_back({I, J});
        });
    });
  return out;
}

namespace detail {
inline Word vs(std::initializer_list<int> idx) {
  Word w;
  for (int i : idx)
    w.push_back(v(i));
  return w;
}
inline Word us(std::initializer_list<int> idx) {
  Word w;
  for (int i : idx)
    w.push_back(u(i));
  return w;
}
inline Word xs(std::initializer_list<int> idx) {
  Word w;
  for (int i : idx)
    w.push_back(x(i));
  return w;
}
// v_a v_{a+1} ... v_b
inline Word vrange(int a, int b) {
  Word w;
  for (int i = a; i <= b; ++i)
    w.push_back(v(i));
  return w;
}
inline Word xblock_rev(int i, int j) { return reverse_inverse(expand({Kind::X, i, j})); }
} // namespace detail

// Every instance of every relation family for X_n. Index ranges are clamped
// to the letters that exist in X_n; v_i with i > n is dropped; instances that
// become trivial (lhs = rhs) or still contain a letter outside X_n are
// skipped. Chains a ≈ b ≈ c ... give the pairs (a, b), (a, c), ...
inline std::vector<RelationInstance> instantiate_relations(int n) {
  using namespace detail;
  std::vector<RelationInstance> R;
  const int N = n - 2;
  auto add = [&](const std::string& fam, const std::string& params, const Word& l, const Word& r) {
    Word lhs = drop_high_v(l, n), rhs = drop_high_v(r, n);
    if (lhs == rhs || !word_valid(lhs, n) || !word_valid(rhs, n))
      return;
    R.push_back({fam, params, std::move(lhs), std::move(rhs)});
  };
  auto ij = [](int i, int j) { return "i=" + std::to_string(i) + " j=" + std::to_string(j); };
  auto si = [](int i) { return "i=" + std::to_string(i); };

  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      Word r;
      if (i < j && (j - i == 2 || j - i == 3))
        r = concat({vs({1, 2}), vrange(i + 3, j + 3)});
      else if (i > j && (i - j == 2 || i - j == 3))
        r = concat({vs({1, 2}), vrange(j + 3, i + 3)});
      else if (i - j == 1)
        r = vs({1, 2, j + 3, j + 4});
      else if (j - i == 1)
        r = vs({1, 2, j + 2, j + 3});
      else if (i == j)
        r = vs({1, 2, i + 3});
      else if (i < j)
        r = concat({vs({1, 2}), us({j}), xs({i + 2})});
      else
        r = concat({vs({1, 2}), us({j + 2}), xs({i})});
      add("E", ij(i, j), {x(i), u(j)}, r);
    }

  {
    std::vector<Word> chain{us({2, 1}), us({1, 2}), xs({1, 2}), xs({2, 1}), us({2, 2}), xs({2, 2}), vrange(1, 5)};
    for (std::size_t k = 1; k < chain.size(); ++k)
      add("L1", "k=" + std::to_string(k + 1), chain[0], chain[k]);
    std::vector<Word> chain2{us({3, 2}), xs({2, 3}), vrange(1, 6)};
    for (std::size_t k = 1; k < chain2.size(); ++k)
      add("L2", "k=" + std::to_string(k + 1), chain2[0], chain2[k]);
  }
  for (int i = 3; i <= N; ++i) {
    add("L3", si(i), us({i, 1}), concat({vs({1, 2}), us({i})}));
    add("L3", si(i) + " x", xs({1, i}), concat({vs({3, 4}), xs({i})}));
  }
  for (int i = 4; i <= N; ++i) {
    add("L4", si(i), us({i, 2}), concat({vs({1, 2, 3}), us({i})}));
    add("L4", si(i) + " x", xs({2, i}), concat({vs({3, 4, 5}), xs({i})}));
    add("L5", si(i), us({i, i - 1}), concat({vs({i + 3}), us({i - 3, i - 1})}));
    add("L5", si(i) + " x", xs({i - 1, i}), concat({vs({i + 3}), xs({i - 1, i - 3})}));
  }
  for (int i = 1; i <= N; ++i)
    for (int j = 3; j < i - 1; ++j) {
      add("L6", ij(i, j), us({i, j}), us({j - 2, i}));
      add("L6", ij(i, j) + " x", xs({j, i}), xs({i, j - 2}));
    }
  for (int i = 1; i <= n; ++i) {
    add("R1", si(i), vs({i, i}), vs({i}));
    for (int j = 1; j <= n; ++j)
      if (i != j)
        add("R2", ij(i, j), vs({i, j}), vs({j, i}));
  }
  for (int j = 1; j <= N; ++j) {
    for (int i = j + 4; i <= n; ++i) {
      add("R3", ij(i, j), {v(i), u(j)}, {u(j), v(i)});
      add("R3", ij(i, j) + " x", {v(i), x(j)}, {x(j), v(i)});
    }
    for (int i = 1; i <= j; ++i) {
      add("R4", ij(i, j), {v(i), u(j)}, {u(j), v(i + 2)});
      add("R4", ij(i, j) + " x", {v(i + 2), x(j)}, {x(j), v(i)});
    }
    for (int i : {j + 1, j + 2, j + 3}) {
      add("R5", ij(i, j), {v(i), u(j)}, {u(j)});
      add("R5", ij(i, j) + " x", {x(j), v(i)}, {x(j)});
    }
    std::set<int> r6{1, 2, j + 3};
    for (int i : r6) {
      add("R6", ij(i, j), {u(j), v(i)}, {u(j)});
      add("R6", ij(i, j) + " x", {v(i), x(j)}, {x(j)});
    }
  }
  add("R7", "k=2", us({1, 1}), xs({1, 1}));
  add("R7", "k=3", us({1, 1}), vrange(1, 4));
  for (int i = 3; i <= N; ++i) {
    add("R8", si(i), us({i, i}), us({i - 2, i}));
    add("R8", si(i) + " x", xs({i, i}), xs({i, i - 2}));
  }
  for (int i = 2; i <= n - 5; ++i) {
    add("R9", si(i), us({i, i + 1}), us({i - 1, i + 1}));
    add("R9", si(i) + " x", xs({i + 1, i}), xs({i + 1, i - 1}));
  }
  for (int i = 1; i <= n - 5; ++i) {
    add("R10", si(i), us({i, i + 3}), concat({vs({i + 6}), us({i, i + 2})}));
    add("R10", si(i) + " x", xs({i + 3, i}), concat({vs({i + 6}), xs({i + 2, i})}));
  }
  for (const auto& t : enumerate_Wt(n)) {
    const int l = static_cast<int>(t.I.size()) - 1, m = static_cast<int>(t.J.size()) - 1;
    const int i0 = t.I.front(), jl = t.J.back();
    const Word w = t.word();
    Word tailU, headX, allU, allX;
    for (std::size_t p = 0; p < t.I.size(); ++p) {
      allU.push_back(u(t.I[p]));
      if (p > 0)
        tailU.push_back(u(t.I[p]));
    }
    for (std::size_t p = 0; p < t.J.size(); ++p) {
      allX.push_back(x(t.J[p]));
      if (p + 1 < t.J.size())
        headX.push_back(x(t.J[p]));
    }
    const std::string p = t.params();
    if (jl == i0 + 2 * l - 2 * m)
      add("R11", p, w, concat({vs({i0 + 1, i0 + 2, i0 + 3}), tailU, headX}));
    if (jl == i0 + 2 * l - 2 * m - 1)
      add("R12", p, w, concat({vrange(i0, i0 + 3), tailU, headX}));
    if (jl == i0 + 2 * l - 2 * m + 1)
      add("R13", p, w, concat({vrange(i0 + 1, i0 + 4), tailU, headX}));
    if (jl < 2 * l - 2 * m)
      add("R14", p, w, concat({allU, headX}));
    if (i0 < 2 * m - 2 * l)
      add("R15", p, w, concat({tailU, allX}));
    if (jl == 2 * l - 2 * m)
      add("LEM3i", p, w, concat({vs({1}), allU, headX}));
    if (i0 == 2 * m - 2 * l)
      add("LEM3ii", p, w, concat({vs({i0 + 3}), tailU, allX}));
  }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; i + 2 * j <= n; ++j) {
      const int k = i + 2 * j - 2;
      const Word ub = expand({Kind::U, i, j});
      const Word xb = xblock_rev(i, j);
      add("R16", ij(i, j), concat({vrange(1, i), ub}), vrange(1, k + 3));
      add("R17", ij(i, j), concat({vrange(k - i + 3, k + 2), xb}), vrange(1, k + 3));
      if (i >= 2) {
        add("R18", ij(i, j), concat({vs({i}), ub}), concat({vs({k + 3}), expand({Kind::U, i - 1, j})}));
        add("R19", ij(i, j), concat({vs({k + 2}), xb}), concat({vs({k + 3}), xblock_rev(i - 1, j)}));
      }
    }
  return R;
}

struct RelationCheck {
  bool ok = true;
  PartialInjection lhs_eval;
  PartialInjection rhs_eval;
};

inline RelationCheck verify_relation(const RelationInstance& r, int n) {
  RelationCheck c;
  c.lhs_eval = evaluate(r.lhs, n);
  c.rhs_eval = evaluate(r.rhs, n);
  c.ok = c.lhs_eval == c.rhs_eval;
  return c;
}

struct RelationFailure {
  RelationInstance instance;
  RelationCheck check;
};

inline std::vector<RelationFailure> failing_relations(int n) {
  std::vector<RelationFailure> out;
  for (const auto& r : instantiate_relations(n)) {
    auto c = verify_relation(r, n);
    if (!c.ok)
      out.push_back({r, std::move(c)});
  }
  return out;
}

} // namespace iofpar
