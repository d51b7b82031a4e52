#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "partfn/counts.hpp"
#include "partfn/errors.hpp"
#include "partfn/observables.hpp"

using namespace partfn;

namespace {

CoefVector iv(std::initializer_list<long> v) {
  CoefVector out;
  for (long x : v) out.push_back(BigInt(x));
  return out;
}

// reference engines built on plain configuration enumeration
CoefVector brute_match(const Graph& g) {
  CoefVector c;
  for_each_matching(g, [&](const std::vector<int>& partner) {
    int k = 0;
    for (int v = 0; v < g.n; ++v)
      if (partner[v] >= 0) ++k;
    k /= 2;
    if ((int)c.size() <= k) c.resize(k + 1, BigInt(0));
    c[k] += 1;
  });
  return c;
}

CoefVector brute_ind(const Graph& g) {
  CoefVector c;
  for_each_ind_set(g, [&](const std::vector<char>& in) {
    int k = 0;
    for (int v = 0; v < g.n; ++v) k += in[v];
    if ((int)c.size() <= k) c.resize(k + 1, BigInt(0));
    c[k] += 1;
  });
  return c;
}

CoefVector brute_potts(const Graph& g, int q) {
  CoefVector c(g.m() + 1, BigInt(0));
  for_each_coloring(g, q, [&](const std::vector<int>& col) {
    int mono = 0;
    for (auto [u, v] : g.edges) mono += col[u] == col[v];
    c[mono] += 1;
  });
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

Graph random_graph(std::mt19937& rng, int n) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1) es.push_back({u, v});
  return Graph::from_edges(n, es);
}

}  // namespace

TEST_CASE("matching coefficients of known graphs") {
  CHECK(match_coeffs(complete_bipartite(3, 3)) == iv({1, 9, 18, 6}));
  CHECK(match_coeffs(prism_graph()) == iv({1, 9, 18, 4}));
  CHECK(match_coeffs(cycle_graph(8)) == iv({1, 8, 20, 16, 2}));
  CHECK(match_coeffs(complete_graph(4)) == iv({1, 6, 3}));
  CHECK(match_coeffs(petersen_graph()) == iv({1, 15, 75, 145, 90, 6}));
  CHECK(match_coeffs(empty_graph(3)) == iv({1}));
  CHECK(match_coeffs(path_graph(2)) == iv({1, 1}));
}

TEST_CASE("independence coefficients of known graphs") {
  CHECK(ind_coeffs(complete_bipartite(3, 3)) == iv({1, 6, 6, 2}));
  CHECK(ind_coeffs(cycle_graph(8)) == iv({1, 8, 20, 16, 2}));
  CHECK(ind_coeffs(complete_graph(4)) == iv({1, 4}));
  CHECK(ind_coeffs(petersen_graph()) == iv({1, 10, 30, 30, 5}));
  CHECK(ind_coeffs(empty_graph(2)) == iv({1, 2, 1}));
}

TEST_CASE("potts coefficients of known graphs") {
  // colorings of the triangle by monochromatic edge count
  CHECK(potts_coeffs(complete_graph(3), 3) == iv({6, 18, 0, 3}));
  CHECK(potts_coeffs(path_graph(2), 2) == iv({2, 2}));
  CHECK(potts_coeffs(cycle_graph(4), 2) == iv({2, 0, 12, 0, 2}));
  CHECK(eval_coeffs(potts_coeffs(complete_bipartite(3, 3), 3), BigRat(1)) ==
        pow_int(BigInt(3), 6));
  CHECK_THROWS_AS(potts_coeffs(complete_graph(3), 1), UsageError);
}

TEST_CASE("kind plumbing") {
  CHECK(kind_name(Kind::Match) == "match");
  CHECK(kind_from_name("ind") == Kind::Ind);
  CHECK(kind_from_name("potts") == Kind::Potts);
  CHECK_THROWS_AS(kind_from_name("bogus"), UsageError);
  CHECK(coeffs_for(cycle_graph(8), Kind::Match) == match_coeffs(cycle_graph(8)));
  CHECK(coeffs_for(cycle_graph(8), Kind::Ind) == ind_coeffs(cycle_graph(8)));
  CHECK(coeffs_for(complete_graph(3), Kind::Potts, 3) ==
        potts_coeffs(complete_graph(3), 3));
}

TEST_CASE("disjoint unions convolve") {
  CoefVector c4 = match_coeffs(cycle_graph(4));
  CHECK(c4 == iv({1, 4, 2}));
  CHECK(disjoint_union_coeffs(c4, c4) == iv({1, 8, 20, 16, 4}));

  Graph u = disjoint_union(prism_graph(), complete_bipartite(3, 3));
  CHECK(match_coeffs(u) ==
        disjoint_union_coeffs(match_coeffs(prism_graph()),
                              match_coeffs(complete_bipartite(3, 3))));
  CHECK(ind_coeffs(u) ==
        disjoint_union_coeffs(ind_coeffs(prism_graph()),
                              ind_coeffs(complete_bipartite(3, 3))));
  CHECK(potts_coeffs(u, 3) ==
        disjoint_union_coeffs(potts_coeffs(prism_graph(), 3),
                              potts_coeffs(complete_bipartite(3, 3), 3)));
}

TEST_CASE("block unions by convolution power") {
  CHECK(hdn_coeffs(3, 6, Kind::Match) == match_coeffs(complete_bipartite(3, 3)));
  CHECK(hdn_coeffs(3, 12, Kind::Match) == match_coeffs(make_hdn(3, 12)));
  CHECK(hdn_coeffs(2, 8, Kind::Ind) == ind_coeffs(make_hdn(2, 8)));
  CHECK(hdn_coeffs(3, 12, Kind::Potts, 3) == potts_coeffs(make_hdn(3, 12), 3));
  CHECK(hdn_coeffs(3, 0, Kind::Match) == iv({1}));
  CHECK_THROWS_AS(hdn_coeffs(3, 7, Kind::Match), UsageError);

  // thirty blocks stays cheap through repeated squaring
  CoefVector big = hdn_coeffs(3, 180, Kind::Match);
  CHECK((int)big.size() == 91);
  CHECK(big[0] == 1);
  CHECK(big[1] == 9 * 30);
  CHECK(big[90] == pow_int(BigInt(6), 30));
}

TEST_CASE("perfect matching counts") {
  CHECK(perfect_matching_count(prism_graph()) == 4);
  CHECK(perfect_matching_count(complete_bipartite(3, 3)) == 6);
  CHECK(perfect_matching_count(petersen_graph()) == 6);
  CHECK(perfect_matching_count(cycle_graph(8)) == 2);
  CHECK(perfect_matching_count(complete_graph(4)) == 3);
  CHECK(perfect_matching_count(cycle_graph(5)) == 0);
  // permanent of the Fano incidence matrix
  CHECK(perfect_matching_count(heawood_graph()) == 24);
}

TEST_CASE("evaluation helpers") {
  CoefVector k33 = match_coeffs(complete_bipartite(3, 3));
  CHECK(eval_coeffs(k33, BigRat(1)) == 34);
  CHECK(eval_coeffs(k33, BigRat(0)) == 1);
  CHECK(eval_coeffs(k33, BigRat(1, 2)) == BigRat(1) + BigRat(9, 2) +
                                              BigRat(18, 4) + BigRat(6, 8));
  RatPoly p = coeffs_to_poly(k33);
  CHECK(p.degree() == 3);
  CHECK(p.coeff(2) == 18);
}

TEST_CASE("engines agree with brute enumeration") {
  std::mt19937 rng(2024);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 2 + (int)(rng() % 6);  // up to 7 vertices
    Graph g = random_graph(rng, n);
    CHECK(match_coeffs(g) == brute_match(g));
    CHECK(ind_coeffs(g) == brute_ind(g));
    CHECK(potts_coeffs(g, 2) == brute_potts(g, 2));
    if (g.n <= 6) CHECK(potts_coeffs(g, 3) == brute_potts(g, 3));
  }
}

TEST_CASE("capacity guard on the potts expansion") {
  // 27 edges in one component exceeds the subset-expansion guard
  CHECK_THROWS_AS(potts_coeffs(complete_bipartite(4, 7), 2), CapacityError);
}
