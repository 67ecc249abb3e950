#pragma once

#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "monoid.hpp"
#include "normalform.hpp"
#include "transformation.hpp"

namespace iofpar {

// Positions r (1-based) where d_{r+1}-d_r differs from m_{r+1}-m_r.
struct BreakpointData {
  std::vector<int> r;
  int p = 0;
};

struct CanonicalBuild {
  BreakpointData breakpoints;
  BlockSequence blocks;
  Word star_word;
  // Each prefix rule that contributed v letters, with the letters it added.
  std::vector<std::pair<std::string, std::vector<int>>> lambda_stages;
  NormalFormWord result;
};

inline BreakpointData breakpoints(const PartialInjection& f) {
  const auto d = f.domain();
  const auto m = f.images();
  BreakpointData bp;
  bp.p = static_cast<int>(d.size());
  for (std::size_t r = 0; r + 1 < d.size(); ++r)
    if (d[r + 1] - d[r] != m[r + 1] - m[r])
      bp.r.push_back(static_cast<int>(r) + 1);
  return bp;
}

inline CanonicalBuild canonical_build(const PartialInjection& f) {
  const int n = f.n();
  if (!is_member_prop1(f).is_member)
    throw DomainError("canonical_word: " + f.to_string() + " is not a member");
  if (f.is_empty())
    throw DomainError("canonical_word: the empty map has no block word; its normal form is v_1...v_n");
  const auto d = f.domain();
  const auto m = f.images();
  const int p = static_cast<int>(d.size());
  CanonicalBuild cb;
  cb.breakpoints = breakpoints(f);
  for (int r : cb.breakpoints.r) {
    const int dg = d[r] - d[r - 1], mg = m[r] - m[r - 1];
    if (mg > dg)
      cb.blocks.push_back({Kind::X, m[r - 1], (mg - dg) / 2});
    else
      cb.blocks.push_back({Kind::U, d[r - 1], (dg - mg) / 2});
  }
  const int dp = d[p - 1], mp = m[p - 1];
  if (dp > mp)
    cb.blocks.push_back({Kind::X, mp, (dp - mp) / 2});
  else if (dp < mp)
    cb.blocks.push_back({Kind::U, dp, (mp - dp) / 2});

  std::vector<bool> A(static_cast<std::size_t>(n) + 1, false);
  auto stage = [&](const std::string& rule, int a, int b) {
    std::vector<int> added;
    for (int t = a; t <= b; ++t)
      if (t >= 1 && t <= n) {
        A[t] = true;
        added.push_back(t);
      }
    cb.lambda_stages.emplace_back(rule, std::move(added));
  };
  if (dp <= n - 2 && mp < dp)
    stage("tail x", dp + 2, n);
  else if (dp <= n - 2 && mp > dp && mp < n - 1)
    stage("tail u", mp + 2, n);
  else if (dp <= n - 2 && mp == dp)
    stage("tail fixed", mp + 1, n);
  else if (dp == n - 1 && mp == n - 1)
    stage("tail n-1", n, n);
  for (int k = 2; k <= p; ++k) {
    const int dg = d[k - 1] - d[k - 2], mg = m[k - 1] - m[k - 2];
    if (2 <= mg && mg == dg)
      stage("gap equal k=" + std::to_string(k), d[k - 2] + 1, d[k - 1] - 1);
    else if (2 < mg && mg < dg)
      stage("gap shrinks k=" + std::to_string(k), d[k - 1] - (mg - 2), d[k - 1] - 1);
    else if (mg > dg && dg > 2)
      stage("gap grows k=" + std::to_string(k), d[k - 2] + 2, d[k - 1] - 1);
  }
  const int d1 = d[0], m1 = m[0];
  if (d1 == 1 || m1 == 1) {
  } else if (d1 <= m1) {
    stage("head", 1, d1 - 1);
  } else {
    stage("head shifted", d1 - m1 + 1, d1 - 1);
  }
  cb.result.A = detail::members(A);
  cb.result.blocks = cb.blocks;
  cb.star_word = star(cb.blocks);
  return cb;
}

inline NormalFormWord canonical_word(const PartialInjection& f) { return canonical_build(f).result; }

// Normal form of any member, including the empty map (v_1 ... v_n).
inline NormalFormWord normal_form_of(const PartialInjection& f) {
  if (f.is_empty()) {
    NormalFormWord nf;
    for (int a = 1; a <= f.n(); ++a)
      nf.A.push_back(a);
    return nf;
  }
  return canonical_word(f);
}

struct Segment {
  int d0, d1, m0, m1; // [d0..d1] -> [m0..m1]
};

struct ReconstructionFrame {
  std::vector<int> a, b;
  int first_u = 0, first_x = 0;
  std::vector<Segment> segments;
};

inline ReconstructionFrame reconstruction_frame(const NormalFormWord& nf, int n) {
  const auto& bs = nf.blocks;
  if (bs.empty())
    throw StructureError("reconstruction_frame: no blocks");
  for (const auto& b : bs)
    if (!b.valid(n))
      throw StructureError("reconstruction_frame: invalid block " + b.to_string());
  const auto ind = indicators(bs);
  const std::size_t m = bs.size();
  ReconstructionFrame fr;
  for (std::size_t k = 0; k < m; ++k) {
    const Block& b = bs[k];
    if (b.kind == Kind::X) {
      fr.a.push_back(ind.ku[k] + 2);
      fr.b.push_back(b.i + 2 * b.j + 2);
    } else {
      fr.a.push_back(b.i + 2 * b.j + 2);
      fr.b.push_back(ind.kx[k] + 2);
    }
  }
  fr.first_u = ind.ku[0];
  fr.first_x = ind.kx[0];
  const int mn = std::min(fr.first_u, fr.first_x);
  fr.segments.push_back({1 + fr.first_u - mn, fr.first_u, 1 + fr.first_x - mn, fr.first_x});
  for (std::size_t k = 0; k + 1 < m; ++k)
    fr.segments.push_back({fr.a[k], ind.ku[k + 1], fr.b[k], ind.kx[k + 1]});
  fr.segments.push_back({fr.a[m - 1], n, fr.b[m - 1], n});
  return fr;
}

// The transformation of v_A w*: the frame segments, with A removed from the
// domain.
inline PartialInjection reconstruct(const NormalFormWord& nf, int n) {
  for (int a : nf.A)
    if (a < 1 || a > n)
      throw StructureError("reconstruct: A contains " + std::to_string(a));
  if (nf.blocks.empty()) {
    std::vector<int> dom;
    for (int a = 1; a <= n; ++a)
      if (!std::binary_search(nf.A.begin(), nf.A.end(), a))
        dom.push_back(a);
    return PartialInjection::partial_identity(dom, n);
  }
  const auto fr = reconstruction_frame(nf, n);
  if (fr.a.back() != fr.b.back())
    throw StructureError("reconstruct: a_m != b_m for " + nf.to_string());
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  for (const auto& s : fr.segments) {
    if (s.d1 - s.d0 != s.m1 - s.m0)
      throw StructureError("reconstruct: unequal segment lengths for " + nf.to_string());
    for (int t = 0; t <= s.d1 - s.d0; ++t) {
      const int a = s.d0 + t, b = s.m0 + t;
      if (a < 1 || a > n || b < 1 || b > n || img[a - 1] != 0)
        throw StructureError("reconstruct: segment leaves {1..n} or overlaps for " + nf.to_string());
      img[a - 1] = b;
    }
  }
  for (int a : nf.A)
    img[a - 1] = 0;
  return PartialInjection::from_images(img);
}

// Segment lengths agree, segments are disjoint and increasing on both sides,
// and the result is a member.
inline bool check_wellformed_reconstruction(const NormalFormWord& nf, int n) {
  if (nf.blocks.empty())
    return true;
  ReconstructionFrame fr;
  try {
    fr = reconstruction_frame(nf, n);
  } catch (const StructureError&) {
    return false;
  }
  if (fr.a.back() != fr.b.back())
    return false;
  for (std::size_t k = 0; k < fr.segments.size(); ++k) {
    const auto& s = fr.segments[k];
    if (s.d1 - s.d0 != s.m1 - s.m0 || s.d0 < 1 || s.m0 < 1)
      return false;
    if (k > 0) {
      const auto& prev = fr.segments[k - 1];
      const bool prev_nonempty = prev.d1 >= prev.d0;
      if (prev_nonempty && s.d1 >= s.d0 && (s.d0 <= prev.d1 || s.m0 <= prev.m1))
        return false;
    }
  }
  try {
    return is_member_prop1(reconstruct(nf, n)).is_member;
  } catch (const Error&) {
    return false;
  }
}

} // namespace iofpar
