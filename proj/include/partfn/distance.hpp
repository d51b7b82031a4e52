#pragma once

#include <utility>
#include <vector>

#include "partfn/graph.hpp"
#include "partfn/rational.hpp"

namespace partfn {

// distribution of rooted r-balls over a uniformly random root
struct NeighborhoodProfile {
  int radius = 0;
  std::vector<std::pair<Cert, BigRat>> dist;  // sorted by cert, sums to 1
};

NeighborhoodProfile profile(const Graph& g, int r);

BigRat tv_distance(const NeighborhoodProfile& a, const NeighborhoodProfile& b);

struct DistanceResult {
  BigRat lower, upper;             // lower = sum_{r<=r_max} 2^-r TV_r, upper adds the 2^-r_max tail
  std::vector<BigRat> per_radius_tv;  // TV_1 .. TV_{r_max}
};

// truncation of sum_{r>=1} 2^-r TV_r with a certified tail bound
DistanceResult sampling_distance(const Graph& g, const Graph& h, int r_max = 6);

// fraction of vertices lying in no K_{d,d} component; an upper bound on the
// sampling distance to K_{d,d} for d-regular graphs
BigRat fraction_outside_kdd(const Graph& g, int d);

}  // namespace partfn
