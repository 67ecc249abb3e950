#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include <iofpar/monoid.hpp>

using namespace iofpar;

TEST_CASE("membership by the four conditions") {
  auto r = is_member_prop1(PartialInjection(6, {{1, 3}, {2, 4}, {6, 6}}));
  CHECK(r.is_member);
  CHECK(PartialInjection(6, {{1, 3}, {2, 4}, {6, 6}}) == gen_u(2, 6));

  r = is_member_prop1(PartialInjection(2, {{1, 2}}));
  CHECK_FALSE(r.is_member);
  CHECK(r.failed_condition == Condition::Parity);

  r = is_member_prop1(PartialInjection(6, {{1, 3}, {2, 6}}));
  CHECK_FALSE(r.is_member);
  CHECK(r.failed_condition == Condition::Step1);

  r = is_member_prop1(PartialInjection(4, {{1, 3}, {3, 1}}));
  CHECK_FALSE(r.is_member);
  CHECK(r.failed_condition == Condition::Order);
  CHECK(r.describe() == "ORDER(1)");

  // d-gap 2 against m-gap 3 passes (i)-(iii) and fails (iv).
  r =is_member_prop1(PartialInjection(6, {{1, 1}, {3, 4}}));
  CHECK_FALSE(r.is_member);
  CHECK(r.failed_condition == Condition::Even);

  CHECK(is_member_prop1(PartialInjection::empty(5)).is_member);
}

TEST_CASE("direct membership oracle on small cases") {
  CHECK(is_member_direct(PartialInjection::identity(5)));
  CHECK_FALSE(is_member_direct(PartialInjection(2, {{1, 2}})));
  CHECK_FALSE(is_member_direct(PartialInjection(3, {{1, 1}, {2, 3}})));
  std::size_t agree = 0;
  for (const auto& f : all_partial_injections(2)) {
    CHECK(is_member_prop1(f).is_member == is_member_direct(f));
    ++agree;
  }
  CHECK(agree == 7);
}

TEST_CASE("the two membership tests agree on all partial injections, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& f : all_partial_injections(n))
      REQUIRE(is_member_prop1(f).is_member == is_member_direct(f));
}

TEST_CASE("generators") {
  CHECK(gen_u(1, 6) == PartialInjection(6, {{1, 3}, {5, 5}, {6, 6}}));
  CHECK(gen_x(1, 6) == PartialInjection(6, {{3, 1}, {5, 5}, {6, 6}}));
  CHECK(gen_v(3, 6) == PartialInjection::partial_identity({1, 2, 4, 5, 6}, 6));
  CHECK(gen_u(4, 6) == PartialInjection(6, {{1, 3}, {2, 4}, {3, 5}, {4, 6}}));
  CHECK_THROWS_AS(gen_u(0, 6), RangeError);
  CHECK_THROWS_AS(gen_u(5, 6), RangeError);
  CHECK_THROWS_AS(gen_x(1, 2), RangeError);
  CHECK_THROWS_AS(gen_v(7, 6), RangeError);
  for (int n = 3; n <= 8; ++n)
    for (const auto& g : generators(n))
      CHECK(is_member_direct(g));
}

TEST_CASE("enumerate_monoid") {
  auto m1 = enumerate_monoid(1);
  CHECK(m1.size() == 2);
  auto m2 = enumerate_monoid(2);
  std::set<PartialInjection> got(m2.begin(), m2.end());
  std::set<PartialInjection> want{PartialInjection::empty(2), PartialInjection(2, {{1, 1}}),
                                  PartialInjection(2, {{2, 2}}), PartialInjection::identity(2)};
  CHECK(got == want);
  const std::vector<std::size_t> sizes{2, 4, 10, 22, 52, 120, 286};
  for (int n = 1; n <= 7; ++n) {
    auto m = enumerate_monoid(n);
    CHECK(m.size() == sizes[n - 1]);
    for (const auto& f : m)
      REQUIRE(is_member_direct(f));
  }
  CHECK_THROWS_AS(enumerate_monoid(10), ResourceError);
  CHECK(enumerate_monoid(10, 10).size() > 0);
}

TEST_CASE("enumerate_monoid is a brute-force filter of all partial injections") {
  for (int n = 1; n <= 5; ++n) {
    std::set<PartialInjection> filtered;
    for (const auto& f : all_partial_injections(n))
      if (is_member_direct(f))
        filtered.insert(f);
    auto m = enumerate_monoid(n);
    CHECK(std::set<PartialInjection>(m.begin(), m.end()) == filtered);
  }
}

TEST_CASE("members are closed under composition, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    auto m = enumerate_monoid(n);
    for (const auto& f : m)
      for (const auto& g : m)
        REQUIRE(is_member_prop1(compose(f, g)).is_member);
  }
}

TEST_CASE("closure") {
  CHECK(closure({}, 4) == std::vector<PartialInjection>{PartialInjection::identity(4)});
  auto c = closure({gen_v(1, 2)}, 2);
  CHECK(std::set<PartialInjection>(c.begin(), c.end()) ==
        std::set<PartialInjection>{PartialInjection::identity(2), gen_v(1, 2)});
  for (int n = 1; n <= 5; ++n) {
    auto cl = closure(generators(n), n);
    auto m = enumerate_monoid(n);
    std::sort(m.begin(), m.end());
    CHECK(cl == m);
  }
  CHECK_THROWS_AS(closure({gen_v(1, 3)}, 4), DimensionError);
}
