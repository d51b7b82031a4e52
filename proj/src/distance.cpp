#include "partfn/distance.hpp"

#include <algorithm>
#include <map>

#include "partfn/errors.hpp"

namespace partfn {

namespace {

// true when every radius-r ball already covers its whole component, so
// profiles at larger radii cannot change
bool balls_saturated(const Graph& g, int r) {
  for (int v = 0; v < g.n; ++v)
    for (int dist : bfs_dist(g, v))
      if (dist > r) return false;
  return true;
}

}  // namespace

NeighborhoodProfile profile(const Graph& g, int r) {
  if (g.n == 0) throw UsageError("profile needs a nonempty graph");
  if (r < 0) throw UsageError("profile radius must be nonnegative");
  std::map<Cert, BigRat> acc;
  BigRat share(1, g.n);
  for (int v = 0; v < g.n; ++v) acc[ball_cert(rooted_ball(g, v, r))] += share;
  NeighborhoodProfile out;
  out.radius = r;
  out.dist.assign(acc.begin(), acc.end());
  return out;
}

BigRat tv_distance(const NeighborhoodProfile& a, const NeighborhoodProfile& b) {
  BigRat total(0);
  size_t i = 0, j = 0;
  while (i < a.dist.size() || j < b.dist.size()) {
    if (j == b.dist.size() || (i < a.dist.size() && a.dist[i].first < b.dist[j].first)) {
      total += a.dist[i++].second;
    } else if (i == a.dist.size() || b.dist[j].first < a.dist[i].first) {
      total += b.dist[j++].second;
    } else {
      total += abs(a.dist[i].second - b.dist[j].second);
      ++i;
      ++j;
    }
  }
  return total / 2;
}

DistanceResult sampling_distance(const Graph& g, const Graph& h, int r_max) {
  if (r_max < 1) throw UsageError("sampling_distance needs r_max >= 1");
  DistanceResult out;
  out.lower = 0;
  BigRat weight(1, 2);
  for (int r = 1; r <= r_max; ++r) {
    BigRat tv = tv_distance(profile(g, r), profile(h, r));
    out.per_radius_tv.push_back(tv);
    out.lower += weight * tv;
    if (r < r_max) weight /= 2;
  }
  // the tail sum_{r>r_max} 2^-r tv_r is at most 2^-r_max; when both graphs
  // are saturated at r_max every deeper tv equals the last one computed
  BigRat tail = weight;
  if (balls_saturated(g, r_max) && balls_saturated(h, r_max))
    tail = weight * out.per_radius_tv.back();
  out.upper = out.lower + tail;
  return out;
}

BigRat fraction_outside_kdd(const Graph& g, int d) {
  if (g.n == 0) throw UsageError("fraction_outside_kdd needs a nonempty graph");
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) > d) throw UsageError("graph has a vertex of degree above d");
  long inside = 0;
  for (const auto& comp : components(g))
    if (is_complete_bipartite_dd(induced_subgraph(g, comp), d))
      inside += (long)comp.size();
  return BigRat(g.n - inside, g.n);
}

}  // namespace partfn
