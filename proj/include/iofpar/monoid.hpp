#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "error.hpp"
#include "transformation.hpp"

namespace iofpar {

// Largest n accepted by the enumeration routines unless the caller raises it.
inline constexpr int kDefaultMaxN = 9;

enum class Condition { Order, Parity, Step1, Even };

inline std::string condition_name(Condition c) {
  switch (c) {
  case Condition::Order: return "ORDER";
  case Condition::Parity: return "PARITY";
  case Condition::Step1: return "STEP1(iii)";
  case Condition::Even: return "EVEN(iv)";
  }
  return "?";
}

struct MembershipReport {
  bool is_member = true;
  std::optional<Condition> failed_condition;
  // For Order/Step1/Even: the index i (1-based) of the offending pair
  // (d_i, d_{i+1}).
  int position = 0;

  std::string describe() const {
    if (is_member)
      return "member";
    std::string s = condition_name(*failed_condition);
    if (*failed_condition == Condition::Order)
      s = "ORDER(" + std::to_string(position) + ")";
    return s;
  }
};

// Checks the four arithmetic conditions on the ordered domain d_1<...<d_p
// and its images m_1..m_p.
inline MembershipReport is_member_prop1(const PartialInjection& f) {
  const auto d = f.domain();
  const auto m = f.images();
  MembershipReport r;
  auto fail = [&](Condition c, int pos) {
    r.is_member = false;
    r.failed_condition = c;
    r.position = pos;
    return r;
  };
  const std::size_t p = d.size();
  if (p == 0)
    return r;
  for (std::size_t i = 0; i + 1 < p; ++i)
    if (m[i] >= m[i + 1])
      return fail(Condition::Order, static_cast<int>(i) + 1);
  if ((d[0] - m[0]) % 2 != 0)
    return fail(Condition::Parity, 1);
  for (std::size_t i = 0; i + 1 < p; ++i) {
    int dg = d[i + 1] - d[i], mg = m[i + 1] - m[i];
    if ((dg == 1) != (mg == 1))
      return fail(Condition::Step1, static_cast<int>(i) + 1);
  }
  for (std::size_t i = 0; i + 1 < p; ++i) {
    int dg = d[i + 1] - d[i], mg = m[i + 1] - m[i];
    if ((dg % 2 == 0) != (mg % 2 == 0))
      return fail(Condition::Even, static_cast<int>(i) + 1);
  }
  return r;
}

// x ≺ y in the up-fence 1 ≺ 2 ≻ 3 ≺ 4 ≻ ... : adjacent points, odd below even.
inline bool fence_less(int x, int y) {
  return (x % 2 == 1 && y == x + 1) || (x % 2 == 1 && y == x - 1);
}

inline bool fence_preserving(const PartialInjection& f) {
  const auto d = f.domain();
  for (int x : d)
    for (int y : d)
      if (fence_less(x, y) && !fence_less(f(x), f(y)))
        return false;
  return true;
}

// Membership straight from the definitions: order-preserving, parity-preserving,
// and regular among fence-preserving maps (f and its inverse preserve the fence).
inline bool is_member_direct(const PartialInjection& f) {
  const auto d = f.domain();
  for (int x : d)
    if ((x - f(x)) % 2 != 0)
      return false;
  for (int x : d)
    for (int y : d)
      if (x < y && !(f(x) < f(y)))
        return false;
  return fence_preserving(f) && fence_preserving(inverse(f));
}

inline PartialInjection gen_v(int i, int n) {
  if (i < 1 || i > n)
    throw RangeError("v_" + std::to_string(i) + " needs 1 <= i <= " + std::to_string(n));
  std::vector<int> dom;
  for (int a = 1; a <= n; ++a)
    if (a != i)
      dom.push_back(a);
  return PartialInjection::partial_identity(dom, n);
}

inline PartialInjection gen_u(int i, int n) {
  if (i < 1 || i > n - 2)
    throw RangeError("u_" + std::to_string(i) + " needs 1 <= i <= " + std::to_string(n - 2));
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  for (int k = 1; k <= n; ++k) {
    if (k <= i)
      img[k - 1] = k + 2;
    else if (k >= i + 4)
      img[k - 1] = k;
  }
  return PartialInjection::from_images(img);
}

inline PartialInjection gen_x(int i, int n) {
  if (i < 1 || i > n - 2)
    throw RangeError("x_" + std::to_string(i) + " needs 1 <= i <= " + std::to_string(n - 2));
  return inverse(gen_u(i, n));
}

// All generators v_1..v_n, u_1..u_{n-2}, x_1..x_{n-2}.
inline std::vector<PartialInjection> generators(int n) {
  std::vector<PartialInjection> g;
  for (int i = 1; i <= n; ++i)
    g.push_back(gen_v(i, n));
  for (int i = 1; i <= n - 2; ++i)
    g.push_back(gen_u(i, n));
  for (int i = 1; i <= n - 2; ++i)
    g.push_back(gen_x(i, n));
  return g;
}

inline void check_bound(int n, int max_n) {
  if (n < 1)
    throw RangeError("n must be positive");
  if (n > max_n)
    throw ResourceError("n=" + std::to_string(n) + " exceeds the configured bound " +
                        std::to_string(max_n));
}

// All members, sorted by domain subset (as a sorted list) and then by image
// tuple, both lexicographically.
inline std::vector<PartialInjection> enumerate_monoid(int n, int max_n = kDefaultMaxN) {
  check_bound(n, max_n);
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int a = 1; a <= n; ++a)
      if (mask & (1u << (a - 1)))
        s.push_back(a);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end());
  std::vector<PartialInjection> out;
  for (const auto& dom : subsets)
    for (const auto& im : subsets) {
      if (im.size() != dom.size())
        continue;
      std::vector<std::pair<int, int>> pairs;
      for (std::size_t k = 0; k < dom.size(); ++k)
        pairs.emplace_back(dom[k], im[k]);
      auto f = PartialInjection::from_pairs(n, pairs);
      if (is_member_prop1(f).is_member)
        out.push_back(std::move(f));
    }
  return out;
}

// Least composition-closed set containing the generators and id_n, sorted.
inline std::vector<PartialInjection> closure(const std::vector<PartialInjection>& gens, int n) {
  for (const auto& g : gens)
    if (g.n() != n)
      throw DimensionError("closure: generator over n=" + std::to_string(g.n()));
  std::unordered_set<PartialInjection, PartialInjectionHash> seen;
  std::deque<PartialInjection> queue;
  auto id = PartialInjection::identity(n);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    auto f = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto h = compose(f, g);
      if (seen.insert(h).second)
        queue.push_back(h);
    }
  }
  std::vector<PartialInjection> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace iofpar
