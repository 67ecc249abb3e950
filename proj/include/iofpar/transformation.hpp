#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace iofpar {

// A partial injective map on {1..n}. Images are stored densely; 0 marks an
// undefined point. The ambient size n is part of the value.
class PartialInjection {
public:
  PartialInjection() = default;

  // The empty map on {1..n}.
  explicit PartialInjection(int n) : n_(n), img_(static_cast<std::size_t>(n), 0) {
    if (n < 0)
      throw RangeError("negative ambient size");
  }

  // Builds a map from (point, image) pairs; rejects out-of-range points and
  // non-injective input.
  PartialInjection(int n, std::initializer_list<std::pair<int, int>> pairs)
      : PartialInjection(from_pairs(n, std::vector<std::pair<int, int>>(pairs))) {}

  static PartialInjection from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    PartialInjection f(n);
    std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
    for (auto [a, b] : pairs) {
      if (a < 1 || a > n || b < 1 || b > n)
        throw RangeError("pair (" + std::to_string(a) + "," + std::to_string(b) +
                         ") outside {1.." + std::to_string(n) + "}");
      if (f.img_[a - 1] != 0)
        throw RangeError("point " + std::to_string(a) + " mapped twice");
      if (hit[b])
        throw RangeError("image " + std::to_string(b) + " hit twice");
      hit[b] = true;
      f.img_[a - 1] = static_cast<std::int8_t>(b);
    }
    return f;
  }

  // Builds a map from a dense image vector (0 = undefined).
  static PartialInjection from_images(const std::vector<int>& images) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t a = 0; a < images.size(); ++a)
      if (images[a] != 0)
        pairs.emplace_back(static_cast<int>(a) + 1, images[a]);
    return from_pairs(static_cast<int>(images.size()), pairs);
  }

  static PartialInjection identity(int n) {
    PartialInjection f(n);
    for (int a = 1; a <= n; ++a)
      f.img_[a - 1] = static_cast<std::int8_t>(a);
    return f;
  }

  static PartialInjection empty(int n) { return PartialInjection(n); }

  static PartialInjection partial_identity(const std::vector<int>& domain, int n) {
    PartialInjection f(n);
    for (int a : domain) {
      if (a < 1 || a > n)
        throw RangeError("point " + std::to_string(a) + " outside {1.." + std::to_string(n) + "}");
      f.img_[a - 1] = static_cast<std::int8_t>(a);
    }
    return f;
  }

  int n() const { return n_; }

  // Image of a, or 0 when a is undefined.
  int operator()(int a) const {
    if (a < 1 || a > n_)
      throw RangeError("point " + std::to_string(a) + " outside {1.." + std::to_string(n_) + "}");
    return img_[a - 1];
  }

  bool defined(int a) const { return (*this)(a) != 0; }

  std::vector<int> domain() const {
    std::vector<int> d;
    for (int a = 1; a <= n_; ++a)
      if (img_[a - 1] != 0)
        d.push_back(a);
    return d;
  }

  // Images listed in the order of the domain points.
  std::vector<int> images() const {
    std::vector<int> m;
    for (int a = 1; a <= n_; ++a)
      if (img_[a - 1] != 0)
        m.push_back(img_[a - 1]);
    return m;
  }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> p;
    for (int a = 1; a <= n_; ++a)
      if (img_[a - 1] != 0)
        p.emplace_back(a, img_[a - 1]);
    return p;
  }

  int rank() const { return static_cast<int>(domain().size()); }
  bool is_empty() const { return rank() == 0; }

  friend bool operator==(const PartialInjection&, const PartialInjection&) = default;
  friend auto operator<=>(const PartialInjection&, const PartialInjection&) = default;

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n_);
    for (auto b : img_)
      h = h * 31 + static_cast<std::size_t>(b);
    return h;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto [a, b] : pairs()) {
      if (!first)
        s += ", ";
      first = false;
      s += std::to_string(a) + "->" + std::to_string(b);
    }
    return s + "}";
  }

private:
  int n_ = 0;
  std::vector<std::int8_t> img_;
};

// compose(f, g)(x) = g(f(x)): the left factor acts first.
inline PartialInjection compose(const PartialInjection& f, const PartialInjection& g) {
  if (f.n() != g.n())
    throw DimensionError("compose: n=" + std::to_string(f.n()) + " vs n=" + std::to_string(g.n()));
  std::vector<int> out(static_cast<std::size_t>(f.n()), 0);
  for (int a = 1; a <= f.n(); ++a) {
    int b = f(a);
    if (b != 0)
      out[a - 1] = g(b);
  }
  return PartialInjection::from_images(out);
}

inline PartialInjection inverse(const PartialInjection& f) {
  std::vector<int> out(static_cast<std::size_t>(f.n()), 0);
  for (auto [a, b] : f.pairs())
    out[b - 1] = a;
  return PartialInjection::from_images(out);
}

// Every partial injection on {1..n}; sum over k of C(n,k)^2 k! maps.
inline std::vector<PartialInjection> all_partial_injections(int n) {
  std::vector<PartialInjection> out;
  std::vector<int> imgs(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<void(int)> rec = [&](int a) {
    if (a > n) {
      out.push_back(PartialInjection::from_images(imgs));
      return;
    }
    imgs[a - 1] = 0;
    rec(a + 1);
    for (int b = 1; b <= n; ++b) {
      if (used[b])
        continue;
      used[b] = true;
      imgs[a - 1] = b;
      rec(a + 1);
      used[b] = false;
      imgs[a - 1] = 0;
    }
  };
  rec(1);
  return out;
}

struct PartialInjectionHash {
  std::size_t operator()(const PartialInjection& f) const { return f.hash(); }
};

} // namespace iofpar
