#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "partfn/counts.hpp"
#include "partfn/distance.hpp"
#include "partfn/errors.hpp"
#include "partfn/observables.hpp"

using namespace partfn;

TEST_CASE("mean size and occupancy") {
  CoefVector c8 = match_coeffs(cycle_graph(8));
  CHECK(mean_size(c8, BigRat(1)) == BigRat(104, 47));
  CHECK(mean_size(c8, BigRat(0)) == 0);

  CoefVector k33 = match_coeffs(complete_bipartite(3, 3));
  CHECK(mean_size(k33, BigRat(1)) == BigRat(63, 34));
  CHECK(occupancy_fraction(Kind::Match, k33, 6, 9, BigRat(1)) == BigRat(7, 34));

  CoefVector k33i = ind_coeffs(complete_bipartite(3, 3));
  CHECK(occupancy_fraction(Kind::Ind, k33i, 6, 9, BigRat(1)) == BigRat(4, 15));

  CHECK_THROWS_AS(occupancy_fraction(Kind::Match, k33, 6, 9, BigRat(-1)),
                  UsageError);
}

TEST_CASE("size distribution") {
  CoefVector k33 = match_coeffs(complete_bipartite(3, 3));
  SizeDistribution d = size_distribution(k33, BigRat(1));
  REQUIRE(d.prob.size() == 4);
  CHECK(d.prob[0] == BigRat(1, 34));
  CHECK(d.prob[2] == BigRat(18, 34));
  BigRat total(0);
  for (auto& p : d.prob) total += p;
  CHECK(total == 1);

  // lambda reweights by lambda^k
  SizeDistribution h = size_distribution(k33, BigRat(1, 2));
  CHECK(h.prob[3] / h.prob[0] == BigRat(6, 8));
}

TEST_CASE("tuning the fugacity to a mean") {
  CoefVector k33 = match_coeffs(complete_bipartite(3, 3));
  for (BigRat target : {BigRat(1), BigRat(3, 2), BigRat(5, 2)}) {
    TuneResult t = tune_lambda(k33, target);
    CHECK(mean_size(k33, t.lo) <= target);
    CHECK(mean_size(k33, t.hi) >= target);
    CHECK(t.lo <= t.lambda);
    CHECK(t.lambda <= t.hi);
    CHECK(mean_size(k33, t.hi) - mean_size(k33, t.lo) <= BigRat(1, 1000000000));
  }
  CHECK_THROWS_AS(tune_lambda(k33, BigRat(3)), UsageError);
  CHECK_THROWS_AS(tune_lambda(k33, BigRat(0)), UsageError);
  CHECK_THROWS_AS(tune_lambda(CoefVector{BigInt(1)}, BigRat(1)), UsageError);
}

TEST_CASE("free volume") {
  CoefVector k33 = match_coeffs(complete_bipartite(3, 3));
  CHECK(free_volume(k33, 0) == 9);
  CHECK(free_volume(k33, 1) == 4);           // 2 * 18 / 9
  CHECK(free_volume(k33, 2) == BigRat(1));   // 3 * 6 / 18
  CHECK(free_volume(k33, 3) == 0);
  CHECK_THROWS_AS(free_volume(k33, 4), UsageError);
  CoefVector gap = {BigInt(6), BigInt(18), BigInt(0), BigInt(3)};
  CHECK_THROWS_AS(free_volume(gap, 2), UsageError);
}

TEST_CASE("match views") {
  LocalView v = make_match_view(1, 2, 0);
  CHECK(v.jx == 0);  // private counts are sorted
  CHECK(v.jy == 2);
  CHECK(v.view_graph.n == 2 + 1 + 2);
  CHECK(make_match_view(0, 1, 2).cert == make_match_view(0, 2, 1).cert);
  CHECK(make_match_view(1, 1, 1).cert != make_match_view(0, 2, 2).cert);

  // spoke partition function: 1 + (Jx+Jy) l + (Jx Jy - t) l^2
  RatPoly p = match_view_partition(1, 0, 1);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 3);
  CHECK(p.coeff(2) == 1);
}

TEST_CASE("local view distributions sum to one") {
  for (Kind kind : {Kind::Match, Kind::Ind}) {
    for (const char* name : {"K33", "Prism", "C8"}) {
      LocalViewDistribution lv =
          local_view_distribution(make_named(name), kind, BigRat(1));
      BigRat total(0);
      for (auto& [view, p] : lv.probs) {
        CHECK(p > 0);
        total += p;
      }
      CHECK(total == 1);
      CHECK(std::is_sorted(lv.probs.begin(), lv.probs.end(),
                           [](auto& a, auto& b) { return a.first < b.first; }));
    }
  }
}

TEST_CASE("views of the complete bipartite block") {
  // every edge of K_{d,d} looks the same; matchings leave no shared
  // neighbors uncovered ambiguity: t = 0 always (no triangles)
  LocalViewDistribution lv =
      local_view_distribution(complete_bipartite(3, 3), Kind::Match, BigRat(1));
  for (auto& [view, p] : lv.probs) CHECK(view.t == 0);

  // independent sets in K33: uncovered neighborhoods are empty graphs
  LocalViewDistribution iv =
      local_view_distribution(complete_bipartite(3, 3), Kind::Ind, BigRat(1));
  for (auto& [view, p] : iv.probs) CHECK(view.view_graph.m() == 0);
}

TEST_CASE("potts views") {
  LocalViewDistribution pv =
      local_view_distribution(complete_graph(3), Kind::Potts, BigRat(1, 2), 3);
  BigRat total(0);
  for (auto& [view, p] : pv.probs) total += p;
  CHECK(total == 1);
  CHECK(pv.q == 3);
  CHECK_THROWS_AS(
      local_view_distribution(complete_graph(3), Kind::Potts, BigRat(1), 1),
      UsageError);
}

TEST_CASE("occupancy bound") {
  for (const char* name : {"K33", "Prism", "C8", "Petersen", "K4"})
    for (BigRat l : {BigRat(1, 4), BigRat(1), BigRat(3)})
      CHECK(edge_occupancy_bound_check(make_named(name), l));
}

TEST_CASE("neighborhood profiles") {
  NeighborhoodProfile p = profile(cycle_graph(8), 1);
  REQUIRE(p.dist.size() == 1);  // vertex transitive
  CHECK(p.dist[0].second == 1);

  NeighborhoodProfile pp = profile(path_graph(4), 1);
  CHECK(pp.dist.size() == 2);  // ends vs middle

  CHECK(tv_distance(p, p) == 0);
  CHECK(tv_distance(p, profile(cycle_graph(4), 1)) == 0);  // same 1-balls
  CHECK(tv_distance(p, profile(path_graph(2), 1)) == 1);
}

TEST_CASE("sampling distance") {
  Graph c8 = cycle_graph(8);
  Graph c44 = disjoint_union(cycle_graph(4), cycle_graph(4));
  DistanceResult r = sampling_distance(c8, c44, 4);
  // balls agree at radius 1, split completely from radius 2 on
  CHECK(r.per_radius_tv == std::vector<BigRat>{BigRat(0), BigRat(1), BigRat(1), BigRat(1)});
  CHECK(r.lower == BigRat(7, 16));
  CHECK(r.upper == BigRat(1, 2));

  // every radius-5 ball of C8 covers the whole cycle, so the tail freezes
  // and the upper bound collapses to the lower
  DistanceResult same = sampling_distance(c8, c8, 5);
  CHECK(same.lower == 0);
  CHECK(same.upper == 0);

  // C12 has eccentricity 6, radius-5 balls still grow, generic tail applies
  Graph c12 = cycle_graph(12);
  DistanceResult open = sampling_distance(c12, c12, 5);
  CHECK(open.lower == 0);
  CHECK(open.upper == BigRat(1, 32));

  CHECK_THROWS_AS(sampling_distance(c8, c44, 0), UsageError);
}

TEST_CASE("fraction outside the complete bipartite blocks") {
  CHECK(fraction_outside_kdd(make_hdn(3, 12), 3) == 0);
  CHECK(fraction_outside_kdd(complete_bipartite(3, 3), 3) == 0);
  CHECK(fraction_outside_kdd(petersen_graph(), 3) == 1);
  Graph half = disjoint_union(prism_graph(), complete_bipartite(3, 3));
  CHECK(fraction_outside_kdd(half, 3) == BigRat(1, 2));
  // wrong d for the graph's degrees is rejected rather than answered
  CHECK_THROWS_AS(fraction_outside_kdd(complete_bipartite(3, 3), 2), UsageError);
}
