#include "partfn/observables.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "partfn/errors.hpp"

namespace partfn {

BigRat mean_size(const CoefVector& c, const BigRat& lambda) {
  BigRat z(0), zs(0);  // Z and sum k c_k lambda^k
  BigRat pw(1);
  for (size_t k = 0; k < c.size(); ++k) {
    BigRat term = BigRat(c[k]) * pw;
    z += term;
    zs += BigRat((long)k) * term;
    pw *= lambda;
  }
  if (z == 0) throw UsageError("partition value is zero at this lambda");
  return zs / z;
}

BigRat occupancy_fraction(Kind kind, const CoefVector& c, int n_vertices,
                          int n_edges, const BigRat& lambda) {
  if (lambda < 0) throw UsageError("lambda must be nonnegative");
  int norm = (kind == Kind::Ind) ? n_vertices : n_edges;
  if (norm == 0) return BigRat(0);
  return mean_size(c, lambda) / norm;
}

SizeDistribution size_distribution(const CoefVector& c, const BigRat& lambda) {
  if (lambda < 0) throw UsageError("lambda must be nonnegative");
  SizeDistribution out;
  out.prob.assign(c.size(), BigRat(0));
  BigRat z(0), pw(1);
  for (size_t k = 0; k < c.size(); ++k) {
    out.prob[k] = BigRat(c[k]) * pw;
    z += out.prob[k];
    pw *= lambda;
  }
  if (z == 0) throw UsageError("partition value is zero at this lambda");
  for (auto& p : out.prob) p /= z;
  return out;
}

TuneResult tune_lambda(const CoefVector& c, const BigRat& target_mean,
                       const BigRat& tol) {
  if (c.size() < 2) throw UsageError("tune_lambda: constant coefficient vector");
  BigRat kmax((long)(c.size() - 1));
  if (!(target_mean > 0) || !(target_mean < kmax))
    throw UsageError("tune_lambda: target outside (0, k_max)");
  if (!(tol > 0)) throw UsageError("tune_lambda: tolerance must be positive");
  BigRat lo(0), hi(1);
  while (mean_size(c, hi) < target_mean) hi *= 2;
  while (mean_size(c, hi) - mean_size(c, lo) > tol) {
    BigRat mid = (lo + hi) / 2;
    if (mean_size(c, mid) <= target_mean)
      lo = mid;
    else
      hi = mid;
  }
  return {(lo + hi) / 2, lo, hi};
}

BigRat free_volume(const CoefVector& c, int k) {
  if (k < 0 || k >= (int)c.size() || c[k] == 0)
    throw UsageError("free volume undefined: c_k = 0");
  if (k + 1 >= (int)c.size()) return BigRat(0);
  return BigRat(k + 1) * BigRat(c[k + 1]) / BigRat(c[k]);
}

Graph match_view_graph(int t, int jx, int jy) {
  std::vector<std::pair<int, int>> e{{0, 1}};
  int next = 2;
  for (int i = 0; i < t; ++i, ++next) {
    e.push_back({0, next});
    e.push_back({1, next});
  }
  for (int i = 0; i < jx; ++i, ++next) e.push_back({0, next});
  for (int i = 0; i < jy; ++i, ++next) e.push_back({1, next});
  return Graph::from_edges(next, std::move(e));
}

LocalView make_match_view(int t, int jx, int jy) {
  if (t < 0 || jx < 0 || jy < 0) throw UsageError("bad match view parameters");
  if (jx > jy) std::swap(jx, jy);
  LocalView v;
  v.kind = Kind::Match;
  v.t = t;
  v.jx = jx;
  v.jy = jy;
  v.view_graph = match_view_graph(t, jx, jy);
  v.cert = canon_edge_rooted(v.view_graph, 0, 1);
  return v;
}

LocalView make_ind_view(const Graph& c_graph) {
  LocalView v;
  v.kind = Kind::Ind;
  v.view_graph = c_graph;
  v.cert = canon(c_graph);
  return v;
}

RatPoly match_view_partition(int t, int jx, int jy) {
  long Jx = t + jx, Jy = t + jy;
  return RatPoly({BigRat(1), BigRat(Jx + Jy), BigRat(Jx * Jy - t)});
}

RatPoly ind_view_partition(const Graph& c_graph) {
  return coeffs_to_poly(ind_coeffs(c_graph));
}

void for_each_matching(const Graph& g,
                       const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> partner(g.n, -1);
  std::function<void(int)> go = [&](int ei) {
    if (ei == g.m()) {
      f(partner);
      return;
    }
    go(ei + 1);
    auto [u, v] = g.edges[ei];
    if (partner[u] < 0 && partner[v] < 0) {
      partner[u] = v;
      partner[v] = u;
      go(ei + 1);
      partner[u] = partner[v] = -1;
    }
  };
  go(0);
}

void for_each_ind_set(const Graph& g,
                      const std::function<void(const std::vector<char>&)>& f) {
  std::vector<char> in(g.n, 0);
  std::function<void(int)> go = [&](int v) {
    if (v == g.n) {
      f(in);
      return;
    }
    go(v + 1);
    bool free = true;
    for (int w : g.adj[v])
      if (in[w]) {
        free = false;
        break;
      }
    if (free) {
      in[v] = 1;
      go(v + 1);
      in[v] = 0;
    }
  };
  go(0);
}

void for_each_coloring(const Graph& g, int q,
                       const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> col(g.n, 0);
  std::function<void(int)> go = [&](int v) {
    if (v == g.n) {
      f(col);
      return;
    }
    for (int c = 0; c < q; ++c) {
      col[v] = c;
      go(v + 1);
    }
    col[v] = 0;
  };
  go(0);
}

namespace {

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.n; ++v) d = std::max(d, g.degree(v));
  return d;
}

void check_view_capacity(const Graph& g) {
  int cap = std::max(16, capacity_override());
  if (g.n > cap)
    throw CapacityError("local_view_distribution: graph too large; set PARTFN_CAPACITY to raise the guard");
}

std::vector<BigRat> lambda_powers(const BigRat& lambda, int top) {
  std::vector<BigRat> p(top + 1);
  p[0] = 1;
  for (int i = 1; i <= top; ++i) p[i] = p[i - 1] * lambda;
  return p;
}

LocalViewDistribution finish(Kind kind, int d, int q, const BigRat& lambda,
                             std::map<Cert, std::pair<LocalView, BigRat>>& acc,
                             const BigRat& total_weight) {
  LocalViewDistribution out;
  out.kind = kind;
  out.d = d;
  out.q = q;
  out.lambda = lambda;
  BigRat check(0);
  for (auto& [cert, pr] : acc) {
    pr.second /= total_weight;
    check += pr.second;
    out.probs.push_back(std::move(pr));
  }
  if (check != 1)
    throw std::logic_error("local view probabilities do not sum to 1");
  return out;
}

LocalViewDistribution match_views(const Graph& g, const BigRat& lambda) {
  if (g.m() == 0) throw UsageError("matching local views need at least one edge");
  auto pw = lambda_powers(lambda, g.n / 2);
  std::map<Cert, std::pair<LocalView, BigRat>> acc;
  BigRat z(0);
  for_each_matching(g, [&](const std::vector<int>& partner) {
    int sz = 0;
    for (int v = 0; v < g.n; ++v)
      if (partner[v] >= 0) ++sz;
    sz /= 2;
    const BigRat& w = pw[sz];
    z += w;
    for (auto [x, y] : g.edges) {
      auto uncovered = [&](int u) {
        return partner[u] < 0 || partner[u] == x || partner[u] == y;
      };
      int t = 0, jx = 0, jy = 0;
      for (int u : g.adj[x]) {
        if (u == y) continue;
        if (!uncovered(u)) continue;
        if (g.adjacent(u, y))
          ++t;
        else
          ++jx;
      }
      for (int u : g.adj[y]) {
        if (u == x || g.adjacent(u, x)) continue;
        if (uncovered(u)) ++jy;
      }
      LocalView v = make_match_view(t, jx, jy);
      auto& slot = acc[v.cert];
      if (slot.first.cert.empty()) slot.first = std::move(v);
      slot.second += w;
    }
  });
  return finish(Kind::Match, max_degree(g), 0, lambda, acc, z * g.m());
}

LocalViewDistribution ind_views(const Graph& g, const BigRat& lambda) {
  if (g.n == 0) throw UsageError("independent-set local views need a vertex");
  auto pw = lambda_powers(lambda, g.n);
  std::map<Cert, std::pair<LocalView, BigRat>> acc;
  BigRat z(0);
  for_each_ind_set(g, [&](const std::vector<char>& in) {
    int sz = 0;
    for (int v = 0; v < g.n; ++v) sz += in[v];
    const BigRat& w = pw[sz];
    z += w;
    for (int v = 0; v < g.n; ++v) {
      // occupied vertices outside the closed neighborhood cover their
      // neighbors; the view is the induced graph on uncovered neighbors
      auto ext_occupied = [&](int u) { return in[u] && u != v && !g.adjacent(u, v); };
      std::vector<int> unc;
      for (int u : g.adj[v]) {
        bool covered = false;
        for (int w2 : g.adj[u])
          if (ext_occupied(w2)) {
            covered = true;
            break;
          }
        if (!covered) unc.push_back(u);
      }
      LocalView view = make_ind_view(induced_subgraph(g, unc));
      auto& slot = acc[view.cert];
      if (slot.first.cert.empty()) slot.first = std::move(view);
      slot.second += w;
    }
  });
  return finish(Kind::Ind, max_degree(g), 0, lambda, acc, z * g.n);
}

LocalViewDistribution potts_views(const Graph& g, int q, const BigRat& lambda) {
  if (q < 2 || q > 6) throw UsageError("potts local views support 2 <= q <= 6");
  if (g.n == 0) throw UsageError("potts local views need a vertex");
  double work = std::pow((double)q, (double)g.n);
  if (work > 1e7 && g.n > capacity_override())
    throw CapacityError("potts local views: q^n too large");
  // all color permutations, for the color-symmetry quotient
  std::vector<int> perm(q);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  struct Root {
    RootedBall ball;
    std::vector<int> boundary;  // ball vertices at distance exactly 2
  };
  std::vector<Root> roots(g.n);
  for (int v = 0; v < g.n; ++v) {
    roots[v].ball = rooted_ball(g, v, 2);
    for (int i = 0; i < roots[v].ball.g.n; ++i)
      if (roots[v].ball.dist[i] == 2) roots[v].boundary.push_back(i);
  }
  // cert depends only on the boundary colors, so memoize per root
  std::vector<std::map<std::vector<int>, std::pair<Cert, Graph>>> memo(g.n);

  auto pw = lambda_powers(lambda, g.m());
  std::map<Cert, std::pair<LocalView, BigRat>> acc;
  BigRat z(0);
  for_each_coloring(g, q, [&](const std::vector<int>& col) {
    int mono = 0;
    for (auto [u, v] : g.edges)
      if (col[u] == col[v]) ++mono;
    const BigRat& w = pw[mono];
    z += w;
    for (int v = 0; v < g.n; ++v) {
      Root& r = roots[v];
      std::vector<int> bc(r.boundary.size());
      for (size_t i = 0; i < r.boundary.size(); ++i)
        bc[i] = col[r.ball.orig[r.boundary[i]]];
      auto it = memo[v].find(bc);
      if (it == memo[v].end()) {
        Cert best;
        for (const auto& sigma : perms) {
          std::vector<int> colors(r.ball.g.n);
          for (int i = 0; i < r.ball.g.n; ++i)
            colors[i] = r.ball.dist[i] < 2 ? r.ball.dist[i]
                                           : 2 + sigma[col[r.ball.orig[i]]];
          Cert c = canon_colored(r.ball.g, colors);
          if (best.empty() || c < best) best = std::move(c);
        }
        it = memo[v].emplace(bc, std::make_pair(std::move(best), r.ball.g)).first;
      }
      auto& slot = acc[it->second.first];
      if (slot.first.cert.empty()) {
        slot.first.kind = Kind::Potts;
        slot.first.cert = it->second.first;
        slot.first.view_graph = it->second.second;
      }
      slot.second += w;
    }
  });
  return finish(Kind::Potts, max_degree(g), q, lambda, acc, z * g.n);
}

}  // namespace

LocalViewDistribution local_view_distribution(const Graph& g, Kind kind,
                                              const BigRat& lambda, int q) {
  if (lambda < 0) throw UsageError("lambda must be nonnegative");
  check_view_capacity(g);
  switch (kind) {
    case Kind::Match: return match_views(g, lambda);
    case Kind::Ind: return ind_views(g, lambda);
    case Kind::Potts: return potts_views(g, q, lambda);
  }
  throw UsageError("bad kind");
}

bool edge_occupancy_bound_check(const Graph& g, const BigRat& lambda) {
  if (lambda < 0) throw UsageError("lambda must be nonnegative");
  BigRat bound = lambda / (1 + lambda);
  BigRat zm = eval_coeffs(match_coeffs(g), lambda);
  for (auto [u, v] : g.edges) {
    BigRat in_e = lambda * eval_coeffs(match_coeffs(remove_vertices(g, {u, v})), lambda);
    if (in_e / zm > bound) return false;
  }
  BigRat zi = eval_coeffs(ind_coeffs(g), lambda);
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> closed = g.adj[v];
    closed.push_back(v);
    BigRat in_v = lambda * eval_coeffs(ind_coeffs(remove_vertices(g, closed)), lambda);
    if (in_v / zi > bound) return false;
  }
  return true;
}

}  // namespace partfn
