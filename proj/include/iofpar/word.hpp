#pragma once

#include <cctype>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "monoid.hpp"
#include "transformation.hpp"

namespace iofpar {

enum class Kind : char { V = 'v', U = 'u', X = 'x' };

struct Letter {
  Kind kind = Kind::V;
  int index = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;

  std::string to_string() const { return std::string(1, static_cast<char>(kind)) + std::to_string(index); }
};

inline Letter v(int i) { return {Kind::V, i}; }
inline Letter u(int i) { return {Kind::U, i}; }
inline Letter x(int i) { return {Kind::X, i}; }

using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = w.size();
    for (const auto& l : w)
      h = h * 1000003u + static_cast<std::size_t>(l.index) * 3 + static_cast<std::size_t>(l.kind);
    return h;
  }
};

inline bool letter_valid(const Letter& l, int n) {
  if (l.kind == Kind::V)
    return l.index >= 1 && l.index <= n;
  return l.index >= 1 && l.index <= n - 2;
}

inline bool word_valid(const Word& w, int n) {
  for (const auto& l : w)
    if (!letter_valid(l, n))
      return false;
  return true;
}

inline void require_valid(const Word& w, int n) {
  for (const auto& l : w)
    if (!letter_valid(l, n))
      throw RangeError("letter " + l.to_string() + " is not in X_" + std::to_string(n));
}

// Drops v_i with i > n. Only used when instantiating relation schemas, where
// such letters stand for the empty word.
inline Word drop_high_v(const Word& w, int n) {
  Word out;
  for (const auto& l : w)
    if (!(l.kind == Kind::V && l.index > n))
      out.push_back(l);
  return out;
}

inline PartialInjection generator(const Letter& l, int n) {
  switch (l.kind) {
  case Kind::V: return gen_v(l.index, n);
  case Kind::U: return gen_u(l.index, n);
  case Kind::X: return gen_x(l.index, n);
  }
  throw RangeError("bad letter kind");
}

// Product of the generators, leftmost letter first. Works directly on image
// arrays so that large word corpora stay cheap.
inline PartialInjection evaluate(const Word& w, int n) {
  require_valid(w, n);
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a)
    img[a - 1] = a;
  for (const auto& l : w) {
    const int i = l.index;
    for (auto& b : img) {
      if (b == 0)
        continue;
      switch (l.kind) {
      case Kind::V:
        if (b == i)
          b = 0;
        break;
      case Kind::U:
        if (b <= i)
          b += 2;
        else if (b <= i + 3)
          b = 0;
        break;
      case Kind::X:
        if (b >= 3 && b <= i + 2)
          b -= 2;
        else if (b <= i + 3)
          b = 0;
        break;
      }
    }
  }
  return PartialInjection::from_images(img);
}

// Formal reversal of the letter sequence.
inline Word reverse_inverse(const Word& w) { return Word(w.rbegin(), w.rend()); }

inline Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts)
    out.insert(out.end(), p.begin(), p.end());
  return out;
}

// u_{i,j} = u_i u_{i+2} ... u_{i+2j-2} and likewise for x.
struct Block {
  Kind kind = Kind::U;
  int i = 1;
  int j = 1;

  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;

  // Index of the last letter.
  int top() const { return i + 2 * j - 2; }

  bool valid(int n) const { return (kind == Kind::U || kind == Kind::X) && i >= 1 && i <= n - 2 && j >= 1 && i + 2 * j <= n; }

  std::string to_string() const {
    return std::string(kind == Kind::U ? "U(" : "X(") + std::to_string(i) + "," + std::to_string(j) + ")";
  }
};

inline Word expand(const Block& b) {
  Word w;
  for (int s = 0; s < b.j; ++s)
    w.push_back({b.kind, b.i + 2 * s});
  return w;
}

// Greedy decomposition of a u/x word into maximal runs with step 2.
inline std::vector<Block> parse_blocks(const Word& w) {
  std::vector<Block> out;
  for (const auto& l : w) {
    if (l.kind == Kind::V)
      throw StructureError("parse_blocks: v letter " + l.to_string() + " inside a block word");
    if (!out.empty() && out.back().kind == l.kind && out.back().top() + 2 == l.index)
      ++out.back().j;
    else
      out.push_back({l.kind, l.index, 1});
  }
  return out;
}

inline std::string to_string(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k)
      s += ' ';
    s += w[k].to_string();
  }
  return s;
}

namespace detail {
inline bool parse_positive(std::string_view s, int& out) {
  if (s.empty() || s[0] < '1' || s[0] > '9' || s.size() > 6)
    return false;
  out = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
    out = out * 10 + (c - '0');
  }
  return true;
}
} // namespace detail

// Parses whitespace-separated tokens v3, u1, x4 and block shorthand u1.2.
// Letter ranges are not checked here; see require_valid.
inline Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos >= text.size())
      break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
      ++end;
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;
    auto bad = [&] { return StructureError("bad token '" + std::string(tok) + "'"); };
    char c = tok[0];
    if (c != 'v' && c != 'u' && c != 'x')
      throw bad();
    Kind kind = static_cast<Kind>(c);
    std::string_view rest = tok.substr(1);
    auto dot = rest.find('.');
    if (dot == std::string_view::npos) {
      int i;
      if (!detail::parse_positive(rest, i))
        throw bad();
      w.push_back({kind, i});
    } else {
      int i, j;
      if (kind == Kind::V || !detail::parse_positive(rest.substr(0, dot), i) ||
          !detail::parse_positive(rest.substr(dot + 1), j))
        throw bad();
      auto e = expand({kind, i, j});
      w.insert(w.end(), e.begin(), e.end());
    }
  }
  return w;
}

// All letters of X_n in the order v_1..v_n, u_1..u_{n-2}, x_1..x_{n-2}.
inline std::vector<Letter> alphabet(int n) {
  std::vector<Letter> a;
  for (int i = 1; i <= n; ++i)
    a.push_back(v(i));
  for (int i = 1; i <= n - 2; ++i)
    a.push_back(u(i));
  for (int i = 1; i <= n - 2; ++i)
    a.push_back(x(i));
  return a;
}

// Every word over X_n of length at most max_len, shorter words first.
inline std::vector<Word> all_words(int n, int max_len) {
  const auto a = alphabet(n);
  std::vector<Word> out{Word{}};
  std::size_t from = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t to = out.size();
    for (std::size_t k = from; k < to; ++k)
      for (const auto& l : a) {
        Word w = out[k];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    from = to;
  }
  return out;
}

} // namespace iofpar
