#pragma once

#include <functional>
#include <vector>

#include "partfn/counts.hpp"
#include "partfn/graph.hpp"
#include "partfn/poly.hpp"
#include "partfn/rational.hpp"

namespace partfn {

struct SizeDistribution {
  std::vector<BigRat> prob;  // prob[k] = c_k lambda^k / Z
};

// One local configuration as seen from a uniformly random edge (match),
// vertex (ind), or vertex with depth-2 surroundings (potts).
struct LocalView {
  Kind kind = Kind::Match;
  Cert cert;
  // match: t = uncovered common neighbors of the two endpoints,
  // jx <= jy = uncovered private neighbors of either endpoint
  int t = 0, jx = 0, jy = 0;
  // match: central edge plus uncovered spokes; ind: the induced graph on
  // uncovered neighbors of the root; potts: the depth-2 ball
  Graph view_graph;
  bool operator<(const LocalView& o) const { return cert < o.cert; }
  bool operator==(const LocalView& o) const { return cert == o.cert; }
};

struct LocalViewDistribution {
  Kind kind = Kind::Match;
  int d = 0;
  int q = 0;  // potts only
  BigRat lambda;
  std::vector<std::pair<LocalView, BigRat>> probs;  // sorted by cert, sums to 1
};

// lambda Z'/Z: expected configuration size
BigRat mean_size(const CoefVector& c, const BigRat& lambda);

// mean size over |V| (ind) or |E| (match, potts)
BigRat occupancy_fraction(Kind kind, const CoefVector& c, int n_vertices,
                          int n_edges, const BigRat& lambda);

SizeDistribution size_distribution(const CoefVector& c, const BigRat& lambda);

struct TuneResult {
  BigRat lambda;
  BigRat lo, hi;  // bracket: mean(lo) <= target <= mean(hi)
};
// inverts the strictly increasing map lambda -> mean_size
TuneResult tune_lambda(const CoefVector& c, const BigRat& target_mean,
                       const BigRat& tol = BigRat(1, 1000000000));

// (k+1) c_{k+1} / c_k; zero when k+1 exceeds the support
BigRat free_volume(const CoefVector& c, int k);

LocalViewDistribution local_view_distribution(const Graph& g, Kind kind,
                                              const BigRat& lambda, int q = 0);

// P(e in M) <= lambda/(1+lambda) for every edge, and the vertex analogue
// P(v in I) <= lambda/(1+lambda)
bool edge_occupancy_bound_check(const Graph& g, const BigRat& lambda);

// the view graph for given uncovered counts: central edge, t shared far
// vertices, jx and jy private far vertices
Graph match_view_graph(int t, int jx, int jy);
LocalView make_match_view(int t, int jx, int jy);
LocalView make_ind_view(const Graph& c_graph);

// matching partition function of the spokes alone:
// 1 + (Jx+Jy) lambda + (Jx Jy - t) lambda^2 with Jx = t+jx, Jy = t+jy
RatPoly match_view_partition(int t, int jx, int jy);
// independence partition function of the view's C graph
RatPoly ind_view_partition(const Graph& c_graph);

// exhaustive configuration enumeration, used by the exact distributions;
// partner[v] = matched vertex or -1; in_set[v] = 0/1; color[v] in 0..q-1
void for_each_matching(const Graph& g,
                       const std::function<void(const std::vector<int>&)>& f);
void for_each_ind_set(const Graph& g,
                      const std::function<void(const std::vector<char>&)>& f);
void for_each_coloring(const Graph& g, int q,
                       const std::function<void(const std::vector<int>&)>& f);

}  // namespace partfn
