#include <doctest.h>

#include "hyperham/overlap.hpp"
#include "test_support.hpp"

#include <numeric>
#include <set>

using namespace hyperham;
using namespace hyperham::testing;

namespace {

std::set<std::set<Vertex>> as_set(const std::vector<std::set<Vertex>>& v) { return {v.begin(), v.end()}; }

// Indices of sigma-edges shared with tau, straight from the vertex sets.
std::vector<unsigned> shared_indices(const CycleParameters& params, const std::vector<Vertex>& sigma,
                                     const std::vector<Vertex>& tau) {
  const auto hs = window_edges(params, sigma);
  const auto ht = as_set(window_edges(params, tau));
  std::vector<unsigned> out;
  for (unsigned i = 0; i < params.m; ++i)
    if (ht.count(hs[i])) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("intersection_profile on the tight 12-cycle") {
  const auto params = make_parameters(3, 2, 12);
  const auto id = BlockPermutation::identity(params);
  const auto ident = iota_vertices(12);

  SUBCASE("tau = sigma") {
    const auto prof = intersection_profile(params, id, id);
    CHECK(prof.b == 12);
    CHECK(prof.full_cycle);
    CHECK(prof.a == 1);
    CHECK_FALSE(prof.canonical);
  }
  SUBCASE("two overlapping edges, one gap") {
    const std::vector<Vertex> tau{1, 2, 3, 5, 4, 9, 12, 11, 8, 6, 10, 7};
    REQUIRE(shared_indices(params, ident, tau) == std::vector<unsigned>{0, 2});
    const auto prof = intersection_profile(params, id, canonicalize(params, tau));
    CHECK(prof.b == 2);
    CHECK(prof.a == 1);
    CHECK_FALSE(prof.canonical);
    CHECK_FALSE(prof.degenerate);
    REQUIRE(prof.minimal_cover.paths.size() == 1);
    CHECK(prof.minimal_cover.paths[0] == PathRun{0, 3});
    CHECK(prof.minimal_cover.b == 3);
    CHECK(prof.k == 1);
    CHECK(prof.components[0].span == 3);
    const auto brute = classify_by_vertex_sets(window_edges(params, ident), as_set(window_edges(params, tau)), 3, 1);
    CHECK(brute.a == 1);
    CHECK_FALSE(brute.canonical);
  }
  SUBCASE("two far-apart edges") {
    const std::vector<Vertex> tau{1, 2, 3, 11, 7, 8, 9, 6, 12, 10, 4, 5};
    REQUIRE(shared_indices(params, ident, tau) == std::vector<unsigned>{0, 6});
    const auto prof = intersection_profile(params, id, canonicalize(params, tau));
    CHECK(prof.b == 2);
    CHECK(prof.a == 2);
    CHECK(prof.canonical);
    CHECK(prof.k == 0);
    CHECK(prof.minimal_cover.covered_vertices(params) == 6);
    const auto brute = classify_by_vertex_sets(window_edges(params, ident), as_set(window_edges(params, tau)), 3, 1);
    CHECK(brute.a == 2);
    CHECK(brute.canonical);
  }
}

TEST_CASE("profile_from_shared edge cases") {
  const auto params = make_parameters(3, 2, 12);  // reach: edges i and i+1, i+2 meet
  const auto mask = [&](std::initializer_list<unsigned> on) {
    std::vector<bool> v(params.m, false);
    for (const unsigned i : on) v[i] = true;
    return v;
  };
  SUBCASE("empty intersection") {
    const auto prof = profile_from_shared(params, mask({}));
    CHECK(prof.b == 0);
    CHECK(prof.a == 0);
    CHECK(prof.canonical);
  }
  SUBCASE("single edge") {
    const auto prof = profile_from_shared(params, mask({5}));
    CHECK(prof.a == 1);
    CHECK(prof.canonical);
    CHECK(prof.minimal_cover.paths[0] == PathRun{5, 1});
  }
  SUBCASE("run across the seam") {
    const auto prof = profile_from_shared(params, mask({11, 0, 1}));
    CHECK(prof.a == 1);
    CHECK(prof.canonical);
    CHECK(prof.minimal_cover.paths[0] == PathRun{11, 3});
  }
  SUBCASE("gaps of two chain into one weak path") {
    const auto prof = profile_from_shared(params, mask({0, 2, 4}));
    CHECK(prof.a == 1);
    CHECK(prof.k == 2);
    CHECK_FALSE(prof.canonical);
  }
  SUBCASE("gap of three separates") {
    const auto prof = profile_from_shared(params, mask({0, 1, 5, 6}));
    CHECK(prof.a == 2);
    CHECK(prof.canonical);
    CHECK(prof.minimal_cover.covered_vertices(params) == 8);
  }
  SUBCASE("every other edge wraps the cycle") {
    const auto prof = profile_from_shared(params, mask({0, 2, 4, 6, 8, 10}));
    CHECK(prof.degenerate);
    CHECK_FALSE(prof.canonical);
    CHECK(prof.a == 1);
    CHECK(prof.k == 6);
  }
  SUBCASE("ten consecutive edges") {
    const auto prof = profile_from_shared(params, mask({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
    CHECK_FALSE(prof.degenerate);
    CHECK(prof.canonical);
    REQUIRE(prof.minimal_cover.paths.size() == 1);
    CHECK(prof.minimal_cover.paths[0] == PathRun{0, 10});
  }
  SUBCASE("eleven edges meet across the missing one") {
    // 11 edges would need 13 vertices as a path.
    const auto prof = profile_from_shared(params, mask({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
    CHECK(prof.degenerate);
    CHECK_FALSE(prof.canonical);
    CHECK(prof.k == 1);
    CHECK(prof.minimal_cover.paths.empty());
  }
  CHECK_THROWS_AS(profile_from_shared(params, std::vector<bool>(5)), ParameterError);
}

TEST_CASE("profiles agree with the vertex-set oracle on random pairs") {
  struct Case {
    unsigned r, ell, n;
  };
  SplitMix64 rng({17, 0});
  for (const Case& c : {Case{3, 2, 9}, Case{4, 2, 10}, Case{5, 3, 10}, Case{5, 2, 9}, Case{7, 4, 21}, Case{6, 4, 12}}) {
    CAPTURE(c.r);
    CAPTURE(c.n);
    const auto params = make_parameters(c.r, c.ell, c.n);
    for (int trial = 0; trial < 400; ++trial) {
      const auto sigma = random_permutation(c.n, rng);
      auto tau = sigma;
      // Perturb a copy of sigma so that overlaps are common.
      for (int swaps = 0; swaps < 1 + trial % 4; ++swaps) std::swap(tau[rng.next() % c.n], tau[rng.next() % c.n]);
      const auto prof = intersection_profile(params, canonicalize(params, sigma), canonicalize(params, tau));
      const auto hs = window_edges(params, sigma);
      const auto brute = classify_by_vertex_sets(hs, as_set(window_edges(params, tau)), c.r, params.s);
      CHECK(prof.b == brute.b);
      CHECK(prof.full_cycle == brute.full);
      if (brute.full || brute.b == 0) continue;
      CHECK(prof.a == brute.a);
      CHECK(prof.canonical == brute.canonical);
      if (prof.canonical) {
        CHECK(prof.k == 0);
        CHECK(prof.minimal_cover.b == prof.b);
        CHECK(prof.minimal_cover.covered_vertices(params) == params.s * prof.b + params.ell * prof.a);
      } else {
        CHECK(prof.k >= 1);
      }
    }
  }
}

TEST_CASE("N(b) on small cases") {
  const auto p6 = make_parameters(3, 2, 6);
  const auto id6 = BlockPermutation::identity(p6);
  const auto n6 = n_counts(p6, id6);
  CHECK(n6 == std::vector<std::uint64_t>{204, 0, 396, 0, 108, 0, 12});
  CHECK(std::accumulate(n6.begin(), n6.end(), std::uint64_t{0}) == 720);

  // Any sigma gives the same profile vector.
  const std::vector<Vertex> other{4, 1, 6, 2, 5, 3};
  CHECK(n_counts(p6, canonicalize(p6, other)) == n6);

  const auto p8 = make_parameters(4, 2, 8);
  const auto n8 = n_counts(p8, BlockPermutation::identity(p8));
  CHECK(n8 == std::vector<std::uint64_t>{2240, 0, 272, 0, 8});
  const std::vector<Vertex> other8{3, 8, 1, 5, 2, 7, 4, 6};
  CHECK(n_counts(p8, canonicalize(p8, other8)) == n8);

  CHECK_THROWS_AS(n_counts(p8, BlockPermutation::identity(p8), {.cap = 100}), CapExceeded);
}

TEST_CASE("canonical counts match the oracle classification") {
  for (const auto& [r, ell, n] : {std::array<unsigned, 3>{3, 2, 6}, {4, 2, 8}, {3, 2, 7}, {5, 3, 8}}) {
    CAPTURE(r);
    CAPTURE(n);
    const auto params = make_parameters(r, ell, n);
    const auto counts = nc_counts(params, BlockPermutation::identity(params));
    std::vector<std::vector<std::uint64_t>> nc(params.m + 1, std::vector<std::uint64_t>(params.m + 1, 0));
    std::vector<std::uint64_t> nb(params.m + 1, 0);
    const auto hs = window_edges(params, iota_vertices(n));
    for (const auto& tau : all_cycle_edge_sets(params)) {
      const auto brute = classify_by_vertex_sets(hs, tau, r, params.s);
      ++nb[brute.b];
      if (!brute.full && brute.b > 0 && brute.canonical) ++nc[brute.b][brute.a];
    }
    CHECK(counts.n == nb);
    CHECK(counts.nc == nc);
    CHECK(counts.full_cycle == nb[params.m]);
    for (unsigned b = 1; b < params.m; ++b) {
      CHECK(counts.nc_total[b] + counts.n_prime[b] == counts.n[b]);
      for (unsigned a = b + 1; a <= params.m; ++a) CHECK(counts.nc[b][a] == 0);
    }
  }
}

TEST_CASE("frozen N_c at n = 7") {
  const auto params = make_parameters(3, 2, 7);
  const auto counts = nc_counts(params, BlockPermutation::identity(params));
  CHECK(counts.n == std::vector<std::uint64_t>{1694, 882, 1568, 686, 98, 98, 0, 14});
  CHECK(counts.nc[1][1] == 882);
  CHECK(counts.nc[2][2] == 1470);
  CHECK(counts.nc[3][2] == 588);
  CHECK(counts.nc_total == std::vector<std::uint64_t>{0, 882, 1470, 588, 0, 0, 0, 0});
  CHECK(counts.n_prime == std::vector<std::uint64_t>{0, 0, 98, 98, 98, 98, 0, 0});
  CHECK(counts.degenerate == 98);
}

TEST_CASE("Gamma decomposition") {
  const auto params = make_parameters(3, 2, 6);
  const auto g = gamma_decomposition(params, 2);
  CHECK(g.gamma == g.gamma_c + g.gamma_prime);
  CHECK(to_decimal_string(g.gamma, 40) == "0.9225615034658493702839702428681014046243");
  CHECK(to_decimal_string(g.gamma_c, 40) == "0.6699096520212328248752975001137977968678");
  CHECK(to_decimal_string(g.gamma_prime, 40) == "0.2526518514446165454086727427543036077565");
  CHECK(g.p == p_star_rational(params, 2));

  const auto g8 = gamma_decomposition(make_parameters(4, 2, 8), 1);
  CHECK(to_decimal_string(g8.gamma, 40) == "3.1410645843354713492382969923935213112218");

  SUBCASE("decreasing in C") {
    Rational prev = -1;
    for (const int c : {8, 4, 2, 1}) {
      const auto gc = gamma_decomposition(params, c);
      if (prev >= 0) CHECK(gc.gamma > prev);
      prev = gc.gamma;
    }
  }
  SUBCASE("counts route") {
    const auto counts = nc_counts(params, BlockPermutation::identity(params));
    const auto again = gamma_from_counts(params, counts, g.p);
    CHECK(again.gamma == g.gamma);
    CHECK(again.gamma_full == Rational(12, 720) / pow(g.p, 6));
  }
}

TEST_CASE("threaded overlap counts equal the single-threaded ones") {
  for (const auto params : {make_parameters(4, 2, 8), make_parameters(3, 2, 8), make_parameters(6, 3, 9)}) {
    const auto id = BlockPermutation::identity(params);
    const auto one = nc_counts(params, id, {.threads = 1});
    const auto many = nc_counts(params, id, {.threads = 4});
    CHECK(one.n == many.n);
    CHECK(one.nc == many.nc);
    CHECK(one.n_prime == many.n_prime);
    CHECK(one.degenerate == many.degenerate);
    CHECK(n_counts(params, id, {.threads = 3}) == one.n);
  }
}
