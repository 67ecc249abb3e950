#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "normalform.hpp"
#include "relations.hpp"
#include "word.hpp"

namespace iofpar {

struct RewriteStep {
  std::string family;
  std::string params;
  bool reversed = false; // applied right-to-left
  std::string phase;
  std::size_t position = 0;
  Word removed;  // subword replaced at position
  Word inserted; // its replacement
  Word before;
  Word after;

  std::string to_string() const {
    std::string tag = "(" + family + ")";
    if (reversed)
      tag += "^-1";
    if (!params.empty())
      tag += " " + params;
    return "[" + tag + " @" + std::to_string(position) + "] " + iofpar::to_string(removed) + " -> " +
           iofpar::to_string(inserted);
  }
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
  std::size_t rounds = 0;
};

// Raised when normalization exceeds its step budget or ends outside W_n.
class NormalizationError : public Error {
public:
  NormalizationError(const std::string& what, RewriteTrace trace) : Error(what), trace_(std::move(trace)) {}
  const RewriteTrace& trace() const { return trace_; }

private:
  RewriteTrace trace_;
};

// Replaces the occurrence of lhs (or rhs when reversed) at position.
inline Word apply_once(const Word& w, const RelationInstance& r, std::size_t position, bool reversed = false) {
  const Word& from = reversed ? r.rhs : r.lhs;
  const Word& to = reversed ? r.lhs : r.rhs;
  if (position + from.size() > w.size() || !std::equal(from.begin(), from.end(), w.begin() + position))
    throw ApplicationError(r.label() + ": " + iofpar::to_string(from) + " does not occur at position " +
                           std::to_string(position) + " of " + iofpar::to_string(w));
  Word out(w.begin(), w.begin() + position);
  out.insert(out.end(), to.begin(), to.end());
  out.insert(out.end(), w.begin() + position + from.size(), w.end());
  return out;
}

struct NormalizeResult {
  Word word;
  NormalFormWord nf;
  RewriteTrace trace;
};

// Step cap used when none is given: ten times a bound on the number of
// letter positions and index values a word can move through.
inline std::size_t default_budget(std::size_t length, int n) {
  const std::size_t l = length + 1, m = static_cast<std::size_t>(n) + 2;
  return 10 * std::max<std::size_t>(1000, l * l * m * m);
}

// Normalizes words over X_n into W_n using only relation instances that hold
// in the monoid. Each phase is an oriented rule table applied at the leftmost
// match until nothing applies; the phases repeat until a full round leaves
// the word unchanged. Steps that need more than one rule (pushing a v letter
// through a block, the two-letter patterns at the top of the index range)
// are macros made of single recorded relation steps.
class Rewriter {
public:
  explicit Rewriter(int n) : Rewriter(n, instantiate_relations(n)) {}

  Rewriter(int n, const std::vector<RelationInstance>& relations) : n_(n) {
    for (const auto& r : relations)
      if (word_valid(r.lhs, n) && word_valid(r.rhs, n) && verify_relation(r, n).ok)
        rels_.push_back(r);
    for (std::size_t k = 0; k < rels_.size(); ++k) {
      lookup_.emplace(PairKey{rels_[k].lhs, rels_[k].rhs}, Ref{k, false});
      lookup_.emplace(PairKey{rels_[k].rhs, rels_[k].lhs}, Ref{k, true});
    }
    build_tables();
  }

  int n() const { return n_; }
  const std::vector<RelationInstance>& relations() const { return rels_; }

  NormalizeResult normalize(const Word& input, std::optional<std::size_t> budget = std::nullopt) const {
    require_valid(input, n_);
    Run run{this, {}, budget.value_or(default_budget(input.size(), n_)), {}};
    Word w = input;
    while (true) {
      ++run.trace.rounds;
      const Word start = w;
      w = run.fix(w, p1_, "v-front", {});
      w = run.fix(w, p2_, "separate", {});
      w = run.fix(w, p3_, "sort", {});
      w = run.fix(w, p4_, "local", {&Run::m_local});
      w = run.fix(w, p1_, "cancel", {&Run::m_cancel});
      w = run.fix(w, p1_, "decrease", {&Run::m_push});
      if (w == start)
        break;
      if (run.trace.rounds > run.budget)
        throw NormalizationError("round budget exceeded at " + to_string(w), std::move(run.trace));
    }
    auto nf = recognize(w, n_);
    if (!nf)
      throw NormalizationError("terminal word " + to_string(w) + " is not in W_" + std::to_string(n_),
                               std::move(run.trace));
    return {w, std::move(*nf), std::move(run.trace)};
  }

private:
  struct Ref {
    std::size_t index;
    bool reversed;
  };
  struct Rule {
    Word rhs;
  };
  using Table = std::unordered_map<Word, Rule, WordHash>;
  using PairKey = std::pair<Word, Word>;
  struct PairHash {
    std::size_t operator()(const PairKey& k) const { return WordHash{}(k.first) * 7919u ^ WordHash{}(k.second); }
  };

  static bool is_v_word(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](const Letter& l) { return l.kind == Kind::V; });
  }

  // u_i u_j with i >= j or x_i x_j with i <= j.
  static bool unsorted_pair(const Word& a) {
    if (a.size() != 2 || a[0].kind != a[1].kind)
      return false;
    if (a[0].kind == Kind::U)
      return a[0].index >= a[1].index;
    if (a[0].kind == Kind::X)
      return a[0].index <= a[1].index;
    return false;
  }

  using Pred = std::function<bool(const std::string& fam, const Word& a, const Word& b, bool reversed)>;

  // Rules a -> b from every relation (in both orientations) accepted by pred;
  // the first relation listed wins when two share a left side.
  Table oriented(const Pred& pred) const {
    Table t;
    for (const auto& r : rels_) {
      if (pred(r.family, r.lhs, r.rhs, false))
        t.emplace(r.lhs, Rule{r.rhs});
      if (pred(r.family, r.rhs, r.lhs, true))
        t.emplace(r.rhs, Rule{r.lhs});
    }
    return t;
  }

  static void overlay(Table& base, const Table& top) {
    for (const auto& [k, rule] : top)
      base.insert_or_assign(k, rule);
  }

  void build_tables() {
    // v letters move to the front, sorted, duplicates and absorbed letters
    // removed.
    p1_ = oriented([](const std::string& f, const Word& a, const Word&, bool rev) {
      if (f == "R1" || f == "R5" || f == "R6")
        return !rev;
      if (f == "R2")
        return a[0].index > a[1].index;
      if (f == "R3" || f == "R4")
        return a[0].kind != Kind::V;
      return false;
    });
    p2_ = p1_;
    overlay(p2_, oriented([](const std::string& f, const Word&, const Word&, bool rev) { return f == "E" && !rev; }));
    const std::vector<Word> pivots{{u(2), u(1)}, {u(3), u(2)}, {u(1), u(1)}};
    auto is_pivot = [pivots](const Word& w) { return std::find(pivots.begin(), pivots.end(), w) != pivots.end(); };
    p3_ = p1_;
    overlay(p3_, oriented([&](const std::string& f, const Word& a, const Word& b, bool rev) {
      if (f == "L1" || f == "L2" || f == "R7")
        return unsorted_pair(a) && (is_pivot(b) || (is_pivot(a) && is_v_word(b)));
      if (f == "L3" || f == "L4" || f == "L5" || f == "L6" || f == "R8")
        return unsorted_pair(a) && !rev;
      return false;
    }));
    p4_ = p3_;
    const Word u12{u(1), u(2)}, x21{x(2), x(1)};
    overlay(p4_, oriented([&](const std::string& f, const Word& a, const Word& b, bool rev) {
      if (a.size() != 2)
        return false;
      if ((f == "R9" || f == "R10") && !rev)
        return true;
      return f == "L1" && (a == u12 || a == x21) && is_pivot(b);
    }));
    cancel_ = oriented([](const std::string& f, const Word&, const Word&, bool rev) {
      return !rev && (f == "R11" || f == "R12" || f == "R13" || f == "R14" || f == "R15" || f == "LEM3i" ||
                      f == "LEM3ii");
    });
  }

  // State of one normalize call.
  struct Run {
    const Rewriter* rw;
    RewriteTrace trace;
    std::size_t budget;
    std::string phase;

    using Macro = std::optional<Word> (Run::*)(const Word&, std::size_t);

    Word step(const Word& w, std::size_t pos, std::size_t len, const Word& b) {
      const Word a(w.begin() + pos, w.begin() + pos + len);
      auto it = rw->lookup_.find(PairKey{a, b});
      if (it == rw->lookup_.end())
        throw ApplicationError(to_string(a) + " -> " + to_string(b) + " is not a relation instance for n=" +
                               std::to_string(rw->n_));
      const auto& r = rw->rels_[it->second.index];
      Word out = apply_once(w, r, pos, it->second.reversed);
      trace.steps.push_back({r.family, r.params, it->second.reversed, phase, pos, a, b, w, out});
      if (trace.steps.size() > budget)
        throw NormalizationError("step budget of " + std::to_string(budget) + " exceeded", trace);
      return out;
    }

    Word fix(Word w, const Table& rules, const std::string& name, std::initializer_list<Macro> macros) {
      phase = name;
      std::size_t max_len = 0;
      for (const auto& [k, r] : rules)
        max_len = std::max(max_len, k.size());
      Word key;
      while (true) {
        bool changed = false;
        for (std::size_t pos = 0; pos < w.size() && !changed; ++pos) {
          for (std::size_t len = 1; len <= std::min(max_len, w.size() - pos); ++len) {
            key.assign(w.begin() + pos, w.begin() + pos + len);
            auto it = rules.find(key);
            if (it != rules.end()) {
              w = step(w, pos, len, it->second.rhs);
              changed = true;
              break;
            }
          }
          if (changed)
            break;
          for (auto m : macros) {
            if (auto r = (this->*m)(w, pos)) {
              w = std::move(*r);
              changed = true;
              break;
            }
          }
        }
        if (!changed)
          return w;
      }
    }

    // u_i u_{i+1} and x_{i+1} x_i for i in {n-4, n-3}, where the two-letter
    // rules do not reach.
    std::optional<Word> m_local(const Word& w, std::size_t pos) {
      const int n = rw->n_;
      if (pos + 2 > w.size())
        return std::nullopt;
      const Letter a = w[pos], b = w[pos + 1];
      if (a.kind == Kind::U && b.kind == Kind::U && b.index == a.index + 1 && a.index > n - 5) {
        if (a.index == n - 3 && n >= 5) {
          Word t = step(w, pos, 1, {v(n - 2), u(n - 2)});
          t = step(t, pos + 1, 2, {u(n - 4), u(n - 2)});
          return step(t, pos, 2, {u(n - 4)});
        }
        if (a.index == n - 4 && n >= 6) {
          Word t = step(w, pos + 1, 1, {v(n - 2), u(n - 2)});
          t = step(t, pos, 2, {v(n - 4), u(n - 4)});
          return step(t, pos, 3, {u(n - 5), u(n - 3)});
        }
      }
      if (a.kind == Kind::X && b.kind == Kind::X && a.index == b.index + 1 && b.index > n - 5) {
        if (b.index == n - 4 && n >= 6) {
          Word t = step(w, pos, 1, {v(n), x(n - 2)});
          return step(t, pos, 3, {x(n - 3), x(n - 5)});
        }
        if (b.index == n - 3 && n >= 5) {
          Word t = step(w, pos, 1, {x(n - 2), v(n - 1)});
          t = step(t, pos + 1, 2, {v(n), x(n - 4)});
          return step(t, pos, 2, {x(n - 2)});
        }
      }
      return std::nullopt;
    }

    // A u-run followed by an x-run starting at pos: apply the shortest
    // cancellation instance that is a prefix of it.
    std::optional<Word> m_cancel(const Word& w, std::size_t pos) {
      if (w[pos].kind != Kind::U)
        return std::nullopt;
      std::size_t q = pos;
      while (q < w.size() && w[q].kind == Kind::U)
        ++q;
      if (q == w.size() || w[q].kind != Kind::X)
        return std::nullopt;
      std::size_t e = q;
      while (e < w.size() && w[e].kind == Kind::X)
        ++e;
      Word key;
      for (std::size_t end = q + 1; end <= e; ++end) {
        key.assign(w.begin() + pos, w.begin() + end);
        auto it = rw->cancel_.find(key);
        if (it != rw->cancel_.end())
          return step(w, pos, end - pos, it->second.rhs);
      }
      return std::nullopt;
    }

    enum class PushEnd { Absorb, ShiftU, ShiftX };

    // Follows v_rho at pos rightwards through u/x letters. Returns where it
    // stops and how, or nullopt if it would meet another v letter or the end.
    std::optional<std::pair<PushEnd, std::size_t>> push_plan(const Word& w, std::size_t pos) const {
      int rho = w[pos].index;
      for (std::size_t q = pos + 1; q < w.size(); ++q) {
        const Letter l = w[q];
        const int j = l.index;
        if (l.kind == Kind::V)
          return std::nullopt;
        if (l.kind == Kind::U) {
          const bool block_start = q - 1 == pos || w[q - 1] != u(j - 2);
          if (rho == j && block_start)
            return std::pair{PushEnd::ShiftU, q};
          if (rho <= j)
            rho += 2;
          else if (rho <= j + 3)
            return std::pair{PushEnd::Absorb, q};
        } else {
          const bool run_top = q - 1 == pos || w[q - 1] != x(j + 2);
          if (rho == j + 2 && run_top)
            return std::pair{PushEnd::ShiftX, q};
          if (rho == 1 || rho == 2 || rho == j + 3)
            return std::pair{PushEnd::Absorb, q};
          if (rho <= j + 2)
            rho -= 2;
        }
      }
      return std::nullopt;
    }

    // Moves one v letter of a strictly increasing v-run to the end of the
    // run, then through the following letters until it is absorbed or lowers
    // the first index of a block.
    std::optional<Word> m_push(const Word& w0, std::size_t pos) {
      const int n = rw->n_;
      if (w0[pos].kind != Kind::V)
        return std::nullopt;
      std::size_t e = pos;
      while (e + 1 < w0.size() && w0[e + 1].kind == Kind::V)
        ++e;
      if (e + 1 >= w0.size())
        return std::nullopt;
      std::size_t st = pos;
      while (st > 0 && w0[st - 1].kind == Kind::V)
        --st;
      for (std::size_t q = st; q < e; ++q)
        if (w0[q].index >= w0[q + 1].index)
          return std::nullopt;
      Word sim = w0;
      std::rotate(sim.begin() + pos, sim.begin() + pos + 1, sim.begin() + e + 1);
      auto plan = push_plan(sim, e);
      if (!plan)
        return std::nullopt;
      Word w = w0;
      for (std::size_t p = pos; p < e; ++p)
        w = step(w, p, 2, {w[p + 1], w[p]});
      std::size_t p = e;
      const auto [kind, q] = *plan;
      for (; p + 1 < q; ++p) {
        const Letter l = w[p + 1];
        const int rho = w[p].index, j = l.index;
        Word b;
        if (l.kind == Kind::U)
          b = {u(j), v(rho <= j ? rho + 2 : rho)};
        else
          b = {x(j), v(rho >= j + 4 ? rho : rho - 2)};
        w = step(w, p, 2, b);
      }
      const int j = w[p + 1].index;
      if (kind == PushEnd::Absorb)
        return step(w, p, 2, {w[p + 1]});
      if (kind == PushEnd::ShiftU) {
        int len = 1;
        while (p + 1 + len < w.size() && w[p + 1 + len] == u(j + 2 * len))
          ++len;
        const int top = j + 2 * len - 2;
        Word b = j == 1 ? detail::vrange(1, top + 3) : concat({{v(top + 3)}, expand({Kind::U, j - 1, len})});
        return step(w, p, static_cast<std::size_t>(len) + 1, drop_high_v(b, n));
      }
      int len = 1;
      while (p + 1 + len < w.size() && w[p + 1 + len] == x(j - 2 * len))
        ++len;
      const int i = j - 2 * len + 2;
      Word b = i == 1 ? detail::vrange(1, j + 3) : concat({{v(j + 3)}, detail::xblock_rev(i - 1, len)});
      return step(w, p, static_cast<std::size_t>(len) + 1, drop_high_v(b, n));
    }
  };

  int n_;
  std::vector<RelationInstance> rels_;
  std::unordered_map<PairKey, Ref, PairHash> lookup_;
  Table p1_, p2_, p3_, p4_, cancel_;
};

// Checks that every step of a trace is a single relation application and
// that the steps chain from start to the final word.
inline bool replay(const RewriteTrace& trace, const Word& start, const std::vector<RelationInstance>& relations) {
  Word w = start;
  for (const auto& s : trace.steps) {
    if (s.before != w)
      return false;
    bool matched = false;
    for (const auto& r : relations) {
      if (r.family != s.family || r.params != s.params)
        continue;
      try {
        if (apply_once(w, r, s.position, s.reversed) == s.after) {
          matched = true;
          break;
        }
      } catch (const ApplicationError&) {
      }
    }
    if (!matched)
      return false;
    w = s.after;
  }
  return true;
}

} // namespace iofpar
