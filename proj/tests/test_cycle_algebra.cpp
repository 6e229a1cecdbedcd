#include <doctest.h>

#include "hyperham/cycle_algebra.hpp"
#include "test_support.hpp"

#include <cmath>
#include <numbers>
#include <set>

using namespace hyperham;
using namespace hyperham::testing;

TEST_CASE("make_parameters") {
  SUBCASE("r=7, l=4, n=21") {
    const auto p = make_parameters(7, 4, 21);
    CHECK(p.s == 3);
    CHECK(p.t == 1);
    CHECK(p.lambda == 2);
    CHECK(p.m == 7);
    CHECK(p.reach() == 2);
  }
  SUBCASE("r=4, l=2, n=8 takes t = s") {
    const auto p = make_parameters(4, 2, 8);
    CHECK(p.s == 2);
    CHECK(p.t == 2);
    CHECK(p.lambda == 2);
    CHECK(p.m == 4);
  }
  SUBCASE("tight r=3, l=2, n=6") {
    const auto p = make_parameters(3, 2, 6);
    CHECK(p.s == 1);
    CHECK(p.t == 1);
    CHECK(p.lambda == 1);
    CHECK(p.m == 6);
  }
  SUBCASE("l = 1 is accepted") { CHECK(make_parameters(3, 1, 6).lambda == 1); }
  SUBCASE("errors") {
    CHECK_THROWS_AS(make_parameters(3, 3, 6), ParameterError);
    CHECK_THROWS_AS(make_parameters(3, 0, 6), ParameterError);
    CHECK_THROWS_AS(make_parameters(4, 2, 9), ParameterError);  // 2 does not divide 9
    CHECK_THROWS_AS(make_parameters(4, 2, 4), ParameterError);  // n < r + s
    CHECK_THROWS_AS(make_parameters(3, 2, 3), ParameterError);
  }
}

TEST_CASE("t and lambda across parameter pairs") {
  for (unsigned r = 2; r <= 12; ++r)
    for (unsigned ell = 1; ell < r; ++ell) {
      const unsigned s = r - ell;
      const auto p = make_parameters(r, ell, s * (r + 2));
      CHECK(p.t >= 1);
      CHECK(p.t <= s);
      CHECK((r - p.t) % s == 0);
      double lambda = std::tgamma(p.t + 1.0) * std::tgamma(s - p.t + 1.0);
      CHECK(static_cast<double>(p.lambda) == lambda);
    }
}

TEST_CASE("p_star") {
  const double e = std::numbers::e;
  CHECK(p_star(make_parameters(3, 2, 100)).value == doctest::Approx(e / 100).epsilon(1e-12));
  CHECK(p_star(make_parameters(4, 2, 100)).value == doctest::Approx(2 * e * e / 10000).epsilon(1e-12));
  CHECK(p_star(make_parameters(4, 2, 100)).value == doctest::Approx(0.001477811).epsilon(1e-6));
  CHECK_FALSE(p_star(make_parameters(3, 2, 100)).exceeds_one);

  const auto tiny = p_star(3, 2, 1);
  CHECK(tiny.value == doctest::Approx(e).epsilon(1e-12));
  CHECK(tiny.exceeds_one);

  SUBCASE("exact route agrees") {
    const auto params = make_parameters(7, 4, 21);
    CHECK(to_double(p_star_rational(params)) == doctest::Approx(p_star(params).value).epsilon(1e-13));
    CHECK(p_star_rational(params, 2) == 2 * p_star_rational(params));
  }
  SUBCASE("strictly decreasing in n") {
    for (unsigned n = 6; n < 200; ++n) CHECK(p_star(3, 2, n + 1).value < p_star(3, 2, n).value);
    for (unsigned n = 8; n < 200; n += 2) CHECK(p_star(4, 2, n + 2).value < p_star(4, 2, n).value);
  }
}

TEST_CASE("cycle_from_permutation") {
  SUBCASE("tight cycle on 6 vertices") {
    const auto params = make_parameters(3, 2, 6);
    const auto h = cycle_from_permutation(params, BlockPermutation::identity(params));
    const std::vector<Edge> want{{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {1, 5, 6}, {1, 2, 6}};
    CHECK(h.edges == want);
  }
  SUBCASE("7-uniform 4-cycle on 21 vertices") {
    const auto params = make_parameters(7, 4, 21);
    const auto h = cycle_from_permutation(params, BlockPermutation::identity(params));
    REQUIRE(h.edges.size() == 7);
    CHECK(h.edges[0] == Edge{1, 2, 3, 4, 5, 6, 7});
    CHECK(h.edges[1] == Edge{4, 5, 6, 7, 8, 9, 10});
    CHECK(h.edges[6] == Edge{1, 2, 3, 4, 19, 20, 21});
    for (unsigned i = 0; i < 7; ++i) {
      const auto& a = h.edges[i];
      const auto& b = h.edges[(i + 1) % 7];
      std::vector<Vertex> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      CHECK(common.size() == 4);
    }
  }
  SUBCASE("the tight cycle has singleton subblocks, so a swap changes H") {
    const auto params = make_parameters(3, 2, 6);
    const std::vector<Vertex> swapped{2, 1, 3, 4, 5, 6};
    CHECK(cycle_from_permutation(params, swapped).edges !=
          cycle_from_permutation(params, BlockPermutation::identity(params)).edges);
  }
  SUBCASE("swap inside a subblock leaves H unchanged") {
    // r=4, l=2: each block of size 2 is one subblock.
    const auto params = make_parameters(4, 2, 8);
    const std::vector<Vertex> swapped{2, 1, 3, 4, 5, 6, 7, 8};
    CHECK(cycle_from_permutation(params, swapped).edges ==
          cycle_from_permutation(params, BlockPermutation::identity(params)).edges);
  }
  SUBCASE("mismatch") {
    const auto a = make_parameters(3, 2, 6);
    const auto b = make_parameters(3, 2, 7);
    CHECK_THROWS_AS(cycle_from_permutation(b, BlockPermutation::identity(a)), ParameterError);
  }
}

TEST_CASE("canonicalize") {
  const auto p42 = make_parameters(4, 2, 8);
  const std::vector<Vertex> a{2, 1, 3, 4, 6, 5, 8, 7};
  CHECK(canonicalize(p42, a) == BlockPermutation::identity(p42));

  const auto id = BlockPermutation::identity(p42);
  CHECK(canonicalize(p42, id.arrangement()) == id);

  const auto p32 = make_parameters(3, 2, 9);
  const std::vector<Vertex> any{9, 3, 1, 7, 2, 8, 4, 6, 5};
  const auto c = canonicalize(p32, any);
  CHECK(std::vector<Vertex>(c.arrangement().begin(), c.arrangement().end()) == any);

  const std::vector<Vertex> dup{1, 1, 3, 4, 5, 6, 7, 8};
  CHECK_THROWS_AS(canonicalize(p42, dup), ParameterError);
  const std::vector<Vertex> short_a{1, 2, 3};
  CHECK_THROWS_AS(canonicalize(p42, short_a), ParameterError);
  const std::vector<Vertex> out_of_range{1, 2, 3, 4, 5, 6, 7, 9};
  CHECK_THROWS_AS(canonicalize(p42, out_of_range), ParameterError);
}

TEST_CASE("subblock invariance and canonical-form properties at r=7, l=4, n=21") {
  const auto params = make_parameters(7, 4, 21);
  SplitMix64 rng({99, 0});
  for (int trial = 0; trial < 1000; ++trial) {
    auto sigma = random_permutation(params.n, rng);
    auto tau = sigma;
    shuffle_subblocks(params, tau, rng);
    const auto hs = window_edges(params, sigma);
    const auto ht = window_edges(params, tau);
    CHECK(std::set(hs.begin(), hs.end()) == std::set(ht.begin(), ht.end()));
    CHECK(cycle_from_permutation(params, sigma).edges == cycle_from_permutation(params, tau).edges);

    const auto cs = canonicalize(params, sigma);
    CHECK(canonicalize(params, tau) == cs);
    CHECK(canonicalize(params, cs.arrangement()) == cs);
  }
}

TEST_CASE("q_size") {
  CHECK(q_size(make_parameters(3, 2, 6)) == 720);
  CHECK(q_size(make_parameters(4, 2, 8)) == 2520);
  CHECK(q_size(make_parameters(7, 4, 21)) == factorial(21) / 128);
  CHECK(q_size(make_parameters(7, 4, 21)).str() == "399147985716480000");
}

namespace {

void check_pattern_invariants(const CycleParameters& params, const EllCyclePattern& h) {
  REQUIRE(h.edges.size() == params.m);
  std::set<Vertex> all;
  for (unsigned i = 0; i < params.m; ++i) {
    const auto& e = h.edges[i];
    CHECK(e.size() == params.r);
    CHECK(std::set<Vertex>(e.begin(), e.end()).size() == params.r);
    all.insert(e.begin(), e.end());
    const auto& next = h.edges[(i + 1) % params.m];
    std::vector<Vertex> common;
    std::set_intersection(e.begin(), e.end(), next.begin(), next.end(), std::back_inserter(common));
    CHECK(common.size() == params.ell);
  }
  CHECK(all.size() == params.n);
}

}  // namespace

TEST_CASE("enumerate_Qn matches q_size and the brute-force class set") {
  const std::vector<std::array<unsigned, 3>> triples{
      {3, 2, 6}, {3, 2, 7}, {3, 2, 8}, {4, 2, 8}, {4, 3, 5}, {4, 3, 7}, {5, 3, 8},
      {5, 2, 9}, {4, 1, 9}, {6, 4, 8}, {6, 3, 9}, {3, 1, 6}, {5, 4, 6}};
  for (const auto& [r, ell, n] : triples) {
    CAPTURE(r);
    CAPTURE(ell);
    CAPTURE(n);
    const auto params = make_parameters(r, ell, n);
    REQUIRE(q_size(params) <= 100000);
    std::set<std::vector<Vertex>> seen;
    QnEnumerator it(params);
    std::size_t count = 0;
    while (auto sigma = it.next()) {
      ++count;
      seen.emplace(sigma->arrangement().begin(), sigma->arrangement().end());
      CHECK(canonicalize(params, sigma->arrangement()) == *sigma);
      check_pattern_invariants(params, cycle_from_permutation(params, *sigma));
    }
    CHECK(count == seen.size());
    CHECK(BigInt(count) == q_size(params));
    CHECK(seen == classes_by_brute_force(params));
  }
}

TEST_CASE("enumeration cap") {
  const auto params = make_parameters(7, 4, 21);
  CHECK_THROWS_AS(QnEnumerator{params}, CapExceeded);
  CHECK_THROWS_AS(QnEnumerator(make_parameters(4, 2, 8), 2519), CapExceeded);
  CHECK_NOTHROW(QnEnumerator(make_parameters(4, 2, 8), 2520));
}

TEST_CASE("shards partition Q_n") {
  for (const auto params : {make_parameters(4, 2, 8), make_parameters(5, 3, 8), make_parameters(6, 3, 9)}) {
    std::set<BlockPermutation> whole;
    for_each_in_qn(params, [&](const BlockPermutation& s) { whole.insert(s); });
    std::set<BlockPermutation> merged;
    std::size_t total = 0;
    for (const auto& shard : qn_shards(params)) {
      QnEnumerator it(params, shard);
      while (auto s = it.next()) {
        ++total;
        CHECK(std::equal(shard.begin(), shard.end(), s->arrangement().begin()));
        merged.insert(*s);
      }
    }
    CHECK(total == whole.size());
    CHECK(merged == whole);
  }
}

TEST_CASE("permutation text form") {
  const auto a = parse_permutation("3 1 2 4 5 6");
  CHECK(a == std::vector<Vertex>{3, 1, 2, 4, 5, 6});
  CHECK(format_permutation(a) == "3 1 2 4 5 6");
  CHECK_THROWS_AS(parse_permutation("1 2 x"), ParameterError);
  CHECK_THROWS_AS(parse_permutation("0 1"), ParameterError);
}
