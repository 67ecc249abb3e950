#include <catch_amalgamated.hpp>

#include <random>
#include <unordered_map>

#include <iofpar/canonical.hpp>
#include <iofpar/rewriter.hpp>
#include <iofpar/verifier.hpp>

using namespace iofpar;

TEST_CASE("normalize examples") {
  Rewriter rw(6);
  auto r = rw.normalize({u(1), u(1)});
  CHECK(r.word == Word{v(1), v(2), v(3), v(4)});
  CHECK(r.nf == NormalFormWord{{1, 2, 3, 4}, {}});

  r = rw.normalize({v(3), u(2)});
  CHECK(r.word == Word{u(2)});
  CHECK(r.nf == NormalFormWord{{}, {{Kind::U, 2, 1}}});

  CHECK_THROWS_AS(rw.normalize({u(5)}), RangeError);
}

TEST_CASE("members of W_n are fixpoints") {
  for (int n = 1; n <= 7; ++n) {
    Rewriter rw(n);
    for (const auto& nf : enumerate_Wn(n)) {
      auto r = rw.normalize(render(nf));
      REQUIRE(r.trace.steps.empty());
      REQUIRE(r.nf == nf);
    }
  }
}

TEST_CASE("apply_once") {
  auto rels = instantiate_relations(8);
  const RelationInstance* r10 = nullptr;
  for (const auto& r : rels)
    if (r.family == "R10" && r.params == "i=1")
      r10 = &r;
  REQUIRE(r10);
  CHECK(apply_once({u(1), u(4)}, *r10, 0) == Word{v(7), u(1), u(3)});
  CHECK(apply_once({v(2), u(1), u(4), x(1)}, *r10, 1) == Word{v(2), v(7), u(1), u(3), x(1)});
  CHECK(apply_once({v(7), u(1), u(3)}, *r10, 0, true) == Word{u(1), u(4)});
  CHECK_THROWS_AS(apply_once({u(1), u(4)}, *r10, 1), ApplicationError);
  CHECK_THROWS_AS(apply_once({u(1), u(3)}, *r10, 0), ApplicationError);
}

TEST_CASE("every step preserves the evaluation, n <= 7") {
  std::mt19937_64 rng(11);
  for (int n = 3; n <= 7; ++n) {
    Rewriter rw(n);
    for (const auto& w : random_words(n, 300, 10, rng())) {
      auto r = rw.normalize(w);
      for (const auto& s : r.trace.steps)
        REQUIRE(evaluate(s.before, n) == evaluate(s.after, n));
      REQUIRE(evaluate(r.word, n) == evaluate(w, n));
    }
  }
}

TEST_CASE("traces replay with single relation steps") {
  for (int n = 4; n <= 8; ++n) {
    Rewriter rw(n);
    for (const auto& w : random_words(n, 100, 10, 100 + n)) {
      auto r = rw.normalize(w);
      REQUIRE(replay(r.trace, w, rw.relations()));
      if (!r.trace.steps.empty())
        REQUIRE(r.trace.steps.back().after == r.word);
    }
  }
}

TEST_CASE("trace rendering") {
  Rewriter rw(8);
  auto r = rw.normalize({u(1), u(4)});
  REQUIRE_FALSE(r.trace.steps.empty());
  CHECK(r.trace.steps.front().to_string() == "[(R10) i=1 @0] u1 u4 -> v7 u1 u3");
  CHECK(r.trace.steps.front().phase == "local");
}

TEST_CASE("normalization lands on the canonical normal form") {
  SECTION("all words of length <= 4 over X_5") {
    Rewriter rw(5);
    for (const auto& w : all_words(5, 4))
      REQUIRE(check_normalization(rw, w).empty());
  }
  SECTION("all words of length <= 2 for n = 3..8") {
    for (int n = 3; n <= 8; ++n) {
      Rewriter rw(n);
      for (const auto& w : all_words(n, 2))
        REQUIRE(check_normalization(rw, w).empty());
    }
  }
  SECTION("random words at n = 8 and n = 10") {
    Rewriter rw8(8);
    for (const auto& w : random_words(8, 2000, 12, 5))
      REQUIRE(check_normalization(rw8, w).empty());
    Rewriter rw10(10);
    for (const auto& w : random_words(10, 300, 14, 6))
      REQUIRE(check_normalization(rw10, w).empty());
  }
}

TEST_CASE("idempotence") {
  Rewriter rw(6);
  for (const auto& w : random_words(6, 500, 10, 21)) {
    auto once = rw.normalize(w);
    auto twice = rw.normalize(once.word);
    REQUIRE(twice.word == once.word);
    REQUIRE(twice.trace.steps.empty());
  }
}

TEST_CASE("equal evaluations normalize to the same word at n = 5") {
  Rewriter rw(5);
  CHECK(check_confluence(rw, 3).empty());
}

TEST_CASE("budget overflow raises with the partial trace") {
  Rewriter rw(6);
  try {
    rw.normalize({u(1), u(1), x(2), u(3)}, 1);
    FAIL("expected NormalizationError");
  } catch (const NormalizationError& e) {
    CHECK(e.trace().steps.size() == 2);
  }
}

TEST_CASE("a rewriter without a needed relation reports it") {
  // Drop every R7 instance: u1 u1 can no longer be rewritten to v1 v2 v3 v4.
  std::vector<RelationInstance> rels;
  for (const auto& r : instantiate_relations(6))
    if (r.family != "R7")
      rels.push_back(r);
  Rewriter rw(6, rels);
  CHECK_FALSE(check_normalization(rw, {u(1), u(1)}).empty());
}

TEST_CASE("failing instances are not used") {
  Rewriter rw(8);
  for (const auto& r : rw.relations())
    REQUIRE(verify_relation(r, 8).ok);
  CHECK(rw.relations().size() == instantiate_relations(8).size() - 3);
}
