#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include <iofpar/monoid.hpp>
#include <iofpar/transformation.hpp>

using namespace iofpar;

namespace {

// Composition through std::map, independent of the dense representation.
std::map<int, int> as_map(const PartialInjection& f) {
  std::map<int, int> m;
  for (auto [a, b] : f.pairs())
    m[a] = b;
  return m;
}

PartialInjection compose_by_map(const PartialInjection& f, const PartialInjection& g) {
  auto mf = as_map(f), mg = as_map(g);
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : mf)
    if (auto it = mg.find(b); it != mg.end())
      out.emplace_back(a, it->second);
  return PartialInjection::from_pairs(f.n(), out);
}

long long count_partial_injections(int n) {
  long long total = 0;
  for (int k = 0; k <= n; ++k) {
    long long c = 1;
    for (int t = 0; t < k; ++t)
      c = c * (n - t) / (t + 1);
    long long fact = 1;
    for (int t = 2; t <= k; ++t)
      fact *= t;
    total += c * c * fact;
  }
  return total;
}

PartialInjection random_injection(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    perm[a] = a + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  std::bernoulli_distribution keep(0.7);
  for (int a = 0; a < n; ++a)
    if (keep(rng))
      img[a] = perm[a];
  return PartialInjection::from_images(img);
}

} // namespace

TEST_CASE("compose applies the left factor first") {
  const int n = 6;
  CHECK(compose(PartialInjection::identity(n), gen_u(2, n)) == gen_u(2, n));
  CHECK(compose(gen_u(1, n), gen_u(1, n)) == PartialInjection(n, {{5, 5}, {6, 6}}));
  CHECK(compose(PartialInjection::empty(n), gen_x(3, n)) == PartialInjection::empty(n));
  // u_1 then v_3 kills the image 3 of point 1.
  CHECK(compose(gen_u(1, n), gen_v(3, n)) == PartialInjection(n, {{5, 5}, {6, 6}}));
}

TEST_CASE("compose rejects mismatched ambient sizes") {
  CHECK_THROWS_AS(compose(PartialInjection::identity(3), PartialInjection::identity(4)), DimensionError);
}

TEST_CASE("inverse") {
  const int n = 6;
  CHECK(inverse(gen_u(2, n)) == PartialInjection(n, {{3, 1}, {4, 2}, {6, 6}}));
  CHECK(inverse(PartialInjection::identity(5)) == PartialInjection::identity(5));
  for (const auto& f : all_partial_injections(4))
    CHECK(inverse(inverse(f)) == f);
}

TEST_CASE("partial identities") {
  CHECK(PartialInjection::partial_identity({1, 2, 4, 5, 6}, 6) == gen_v(3, 6));
  CHECK(PartialInjection::partial_identity({}, 4) == PartialInjection::empty(4));
  CHECK(PartialInjection::partial_identity({1, 2, 3, 4}, 4) == PartialInjection::identity(4));
  CHECK_THROWS_AS(PartialInjection::partial_identity({0}, 4), RangeError);
  CHECK_THROWS_AS(PartialInjection::partial_identity({5}, 4), RangeError);
}

TEST_CASE("construction validates injectivity and range") {
  CHECK_THROWS_AS(PartialInjection(3, {{1, 2}, {2, 2}}), RangeError);
  CHECK_THROWS_AS(PartialInjection(3, {{1, 4}}), RangeError);
  CHECK_THROWS_AS(PartialInjection(3, {{1, 1}, {1, 2}}), RangeError);
}

TEST_CASE("empty maps over different n are distinct") {
  CHECK(PartialInjection::empty(3) != PartialInjection::empty(4));
}

TEST_CASE("enumeration of all partial injections matches the closed form") {
  CHECK(all_partial_injections(2).size() == 7);
  for (int n = 0; n <= 6; ++n) {
    auto all = all_partial_injections(n);
    CHECK(static_cast<long long>(all.size()) == count_partial_injections(n));
    std::set<PartialInjection> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
  }
  CHECK(count_partial_injections(6) == 13327);
}

TEST_CASE("compose agrees with map-based composition and is associative") {
  const auto all = all_partial_injections(3);
  for (const auto& f : all)
    for (const auto& g : all) {
      REQUIRE(compose(f, g) == compose_by_map(f, g));
      for (const auto& h : all)
        REQUIRE(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 5 + trial % 4;
    auto f = random_injection(n, rng), g = random_injection(n, rng), h = random_injection(n, rng);
    REQUIRE(compose(compose(f, g), h) == compose(f, compose(g, h)));
    REQUIRE(compose(f, g) == compose_by_map(f, g));
  }
}

TEST_CASE("every partial injection is regular: f f^-1 f = f") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& f : all_partial_injections(n))
      REQUIRE(compose(compose(f, inverse(f)), f) == f);
}

TEST_CASE("domain and images are read in domain order") {
  PartialInjection f(6, {{1, 3}, {5, 5}, {6, 6}});
  CHECK(f.domain() == std::vector<int>{1, 5, 6});
  CHECK(f.images() == std::vector<int>{3, 5, 6});
  CHECK(f(2) == 0);
  CHECK(f.rank() == 3);
  CHECK_THROWS_AS(f(7), RangeError);
}
