#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "canonical.hpp"
#include "monoid.hpp"
#include "normalform.hpp"
#include "relations.hpp"
#include "rewriter.hpp"

namespace iofpar {

struct VerifyOptions {
  std::size_t random_words = 10000;
  std::size_t max_random_length = 12;
  std::uint64_t seed = 1;
  int max_n = kDefaultMaxN;
};

struct WordFailure {
  Word word;
  std::string reason;
};

struct VerificationReport {
  int n = 0;
  std::uint64_t seed = 0;
  std::size_t relations_checked = 0;
  std::size_t relations_failed = 0;
  std::vector<RelationFailure> errata;
  std::size_t words_sampled = 0;
  std::size_t words_normalized = 0;
  std::vector<WordFailure> word_failures; // first few only
  std::size_t monoid_size = 0;
  std::size_t closure_size = 0;
  std::size_t wn_size = 0;
  bool bijection_ok = false;
  bool generation_ok = false;
  std::vector<std::pair<std::string, double>> elapsed_ms;

  bool presentation_verified() const {
    return relations_failed == 0 && bijection_ok && generation_ok && words_normalized == words_sampled;
  }
};

// Length bound of the exhaustive word corpus used for n.
inline int exhaustive_length(int n) {
  if (n <= 5)
    return 3;
  if (n <= 8)
    return 2;
  return 1;
}

inline std::vector<Word> random_words(int n, std::size_t count, std::size_t max_len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto a = alphabet(n);
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<std::size_t> letter_dist(0, a.size() - 1);
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Word w(len_dist(rng));
    for (auto& l : w)
      l = a[letter_dist(rng)];
    out.push_back(std::move(w));
  }
  return out;
}

// Why normalizing w fails, or an empty string if the result is the normal
// form of w's evaluation.
inline std::string check_normalization(const Rewriter& rw, const Word& w) {
  const int n = rw.n();
  try {
    auto res = rw.normalize(w);
    const auto f = evaluate(w, n);
    if (evaluate(res.word, n) != f)
      return "evaluation changed: " + to_string(res.word);
    if (res.nf != normal_form_of(f))
      return "not the canonical normal form: " + to_string(res.word);
    return "";
  } catch (const Error& e) {
    return e.what();
  }
}

struct BijectionResult {
  bool injective = false;
  bool surjective = false;
  bool members_ok = false;
  std::size_t wn_size = 0;
  std::size_t monoid_size = 0;
  bool ok() const { return injective && surjective && members_ok && wn_size == monoid_size; }
};

inline BijectionResult check_bijection(int n, int max_n = kDefaultMaxN) {
  BijectionResult r;
  const auto wn = enumerate_Wn(n, max_n);
  const auto mon = enumerate_monoid(n, max_n);
  r.wn_size = wn.size();
  r.monoid_size = mon.size();
  std::unordered_set<PartialInjection, PartialInjectionHash> images;
  r.members_ok = true;
  for (const auto& nf : wn) {
    auto f = evaluate(render(nf), n);
    if (!is_member_prop1(f).is_member)
      r.members_ok = false;
    images.insert(std::move(f));
  }
  r.injective = images.size() == wn.size();
  const std::unordered_set<PartialInjection, PartialInjectionHash> target(mon.begin(), mon.end());
  r.surjective = images == target;
  return r;
}

// Every word of length <= max_len with the same evaluation has to normalize
// to the same word. Returns a description of the first violation, or an
// empty string.
inline std::string check_confluence(const Rewriter& rw, int max_len) {
  const int n = rw.n();
  std::unordered_map<PartialInjection, std::pair<Word, Word>, PartialInjectionHash> seen;
  for (const auto& w : all_words(n, max_len)) {
    Word r;
    try {
      r = rw.normalize(w).word;
    } catch (const Error& e) {
      return to_string(w) + ": " + e.what();
    }
    auto [it, fresh] = seen.emplace(evaluate(w, n), std::pair{w, r});
    if (!fresh && it->second.second != r)
      return to_string(it->second.first) + " -> " + to_string(it->second.second) + " but " + to_string(w) +
             " -> " + to_string(r);
  }
  return "";
}

struct Perturbation {
  std::size_t index = 0;
  RelationInstance original;
  RelationInstance perturbed;
};

// Changes the index of one letter of one instance to another index that is
// still valid for n.
inline Perturbation perturb_relation(const std::vector<RelationInstance>& rels, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); };
  while (true) {
    Perturbation p;
    p.index = pick(rels.size());
    p.original = rels[p.index];
    p.perturbed = p.original;
    Word& side = pick(2) == 0 ? p.perturbed.lhs : p.perturbed.rhs;
    if (side.empty())
      continue;
    Letter& l = side[pick(side.size())];
    const int hi = l.kind == Kind::V ? n : n - 2;
    if (hi < 2)
      continue;
    int idx = static_cast<int>(pick(static_cast<std::size_t>(hi - 1))) + 1;
    if (idx >= l.index)
      ++idx;
    l.index = idx;
    if (p.perturbed.lhs == p.perturbed.rhs)
      continue;
    p.perturbed.params += " (perturbed)";
    return p;
  }
}

struct FaultDetection {
  bool by_relations = false;  // some instance fails verify_relation
  bool by_confluence = false; // the rewriter built from the set breaks confluence
  std::string detail;
  bool detected() const { return by_relations || by_confluence; }
};

// Runs the relation soundness check, then the confluence check with a
// rewriter built from the given relation set.
inline FaultDetection detect_fault(const std::vector<RelationInstance>& rels, int n, int max_len) {
  FaultDetection d;
  for (const auto& r : rels)
    if (!verify_relation(r, n).ok) {
      d.by_relations = true;
      d.detail = r.label() + ": " + to_string(r.lhs) + " = " + to_string(r.rhs) + " fails";
      return d;
    }
  Rewriter rw(n, rels);
  auto why = check_confluence(rw, max_len);
  if (!why.empty()) {
    d.by_confluence = true;
    d.detail = why;
  }
  return d;
}

inline VerificationReport verify_presentation(int n, const VerifyOptions& opt = {}) {
  check_bound(n, opt.max_n);
  using clock = std::chrono::steady_clock;
  VerificationReport rep;
  rep.n = n;
  rep.seed = opt.seed;
  auto timed = [&](const std::string& name, auto&& body) {
    auto t0 = clock::now();
    body();
    rep.elapsed_ms.emplace_back(name, std::chrono::duration<double, std::milli>(clock::now() - t0).count());
  };
  timed("relations", [&] {
    const auto rels = instantiate_relations(n);
    rep.relations_checked = rels.size();
    rep.errata = failing_relations(n);
    rep.relations_failed = rep.errata.size();
  });
  timed("rewriting", [&] {
    Rewriter rw(n);
    auto corpus = all_words(n, exhaustive_length(n));
    auto extra = random_words(n, opt.random_words, opt.max_random_length, opt.seed);
    corpus.insert(corpus.end(), extra.begin(), extra.end());
    rep.words_sampled = corpus.size();
    for (const auto& w : corpus) {
      auto why = check_normalization(rw, w);
      if (why.empty())
        ++rep.words_normalized;
      else if (rep.word_failures.size() < 10)
        rep.word_failures.push_back({w, why});
    }
  });
  timed("bijection", [&] {
    auto b = check_bijection(n, opt.max_n);
    rep.wn_size = b.wn_size;
    rep.monoid_size = b.monoid_size;
    rep.bijection_ok = b.ok();
  });
  timed("generation", [&] {
    auto cl = closure(generators(n), n);
    auto mon = enumerate_monoid(n, opt.max_n);
    std::sort(mon.begin(), mon.end());
    rep.closure_size = cl.size();
    rep.generation_ok = cl == mon;
  });
  return rep;
}

} // namespace iofpar
