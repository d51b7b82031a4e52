#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace partfn {

// Simple undirected graph. Edges are stored with u < v, sorted
// lexicographically, no parallel edges, no loops. adj lists are sorted.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;

  static Graph from_edges(int n, std::vector<std::pair<int, int>> e);

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool adjacent(int u, int v) const;
  bool is_regular(int d) const;
};

Graph disjoint_union(const Graph& a, const Graph& b);
// keep[i] are old vertex ids; new vertex i corresponds to keep[i]
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);
Graph remove_vertices(const Graph& g, const std::vector<int>& drop);

std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
// length of a shortest cycle; 0 for a forest
int girth(const Graph& g);
// -1 where unreachable
std::vector<int> bfs_dist(const Graph& g, int src);
// true iff g is K_{d,d} for the given d
bool is_complete_bipartite_dd(const Graph& g, int d);

// named constructions
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);
Graph prism_graph();
Graph petersen_graph();
Graph generalized_petersen(int n, int k);
Graph heawood_graph();
Graph make_kdd(int d);
Graph make_hdn(int d, int n);   // n/(2d) copies of K_{d,d}
Graph make_cldn(int d, int n);  // n/(d+1) copies of K_{d+1}
Graph make_hwn(int n);          // n/14 copies of the Heawood graph

// textual names: K4, K33, C8, H3,12, CL3,8, HW14, Heawood, Prism,
// Petersen, GP7,2, and '+'-joined disjoint unions thereof
Graph make_named(const std::string& name);

// graph6 (printable ASCII) encoding, n <= 62 is enough here
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// Canonical certificate: byte string, equal iff the (colored) graphs are
// isomorphic by a color-preserving map. Colors are normalized
// order-preservingly, so shifting all color values is harmless but
// exchanging two color classes is not.
using Cert = std::string;
Cert canon(const Graph& g);
Cert canon_colored(const Graph& g, const std::vector<int>& colors);
Cert canon_rooted(const Graph& g, int root);
Cert canon_edge_rooted(const Graph& g, int u, int v);
std::string cert_hex(const Cert& c);

// ball of radius r around v; dist[i] is the distance from the center in g
struct RootedBall {
  Graph g;
  int center = 0;
  int radius = 0;
  std::vector<int> dist;
  std::vector<int> orig;  // ball vertex -> vertex of the source graph
};
RootedBall rooted_ball(const Graph& g, int v, int r);
// certificate of a ball as a rooted object (distance layers as colors)
Cert ball_cert(const RootedBall& b);

// All d-regular graphs on n vertices with girth >= min_girth, up to
// isomorphism, disconnected ones included. min_girth = 3 means no
// constraint. Size guards: n <= 16 for d <= 2, n <= 14 for d = 3,
// n <= 10 for d >= 4, unless PARTFN_CAPACITY raises them.
std::vector<Graph> enumerate_regular(int d, int n, int min_girth = 3);

}  // namespace partfn
