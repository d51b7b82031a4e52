#include "partfn/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "partfn/errors.hpp"

namespace partfn {

int capacity_override() {
  static int v = [] {
    const char* s = std::getenv("PARTFN_CAPACITY");
    if (!s) return 0;
    int x = std::atoi(s);
    return x > 0 ? x : 0;
  }();
  return v;
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> e) {
  if (n < 0) throw UsageError("vertex count must be nonnegative");
  for (auto& [u, v] : e) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw UsageError("edge endpoint out of range");
    if (u == v) throw UsageError("loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(e.begin(), e.end());
  if (std::adjacent_find(e.begin(), e.end()) != e.end())
    throw UsageError("parallel edges are not allowed");
  Graph g;
  g.n = n;
  g.edges = std::move(e);
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

bool Graph::is_regular(int d) const {
  for (int v = 0; v < n; ++v)
    if (degree(v) != d) return false;
  return true;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> e = a.edges;
  for (auto [u, v] : b.edges) e.push_back({u + a.n, v + a.n});
  return Graph::from_edges(a.n + b.n, std::move(e));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> pos(g.n, -1);
  for (int i = 0; i < (int)keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= g.n || pos[keep[i]] != -1)
      throw UsageError("induced_subgraph: bad vertex list");
    pos[keep[i]] = i;
  }
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges)
    if (pos[u] >= 0 && pos[v] >= 0) e.push_back({pos[u], pos[v]});
  return Graph::from_edges((int)keep.size(), std::move(e));
}

Graph remove_vertices(const Graph& g, const std::vector<int>& drop) {
  std::vector<char> gone(g.n, 0);
  for (int v : drop) {
    if (v < 0 || v >= g.n) throw UsageError("remove_vertices: bad vertex");
    gone[v] = 1;
  }
  std::vector<int> keep;
  for (int v = 0; v < g.n; ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(g.n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> cur{s};
    comp[s] = (int)out.size();
    for (size_t i = 0; i < cur.size(); ++i)
      for (int w : g.adj[cur[i]])
        if (comp[w] == -1) {
          comp[w] = (int)out.size();
          cur.push_back(w);
        }
    std::sort(cur.begin(), cur.end());
    out.push_back(std::move(cur));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.n <= 1 || components(g).size() == 1; }

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.n, -1);
  for (int s = 0; s < g.n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<int> cur{s};
    for (size_t i = 0; i < cur.size(); ++i)
      for (int w : g.adj[cur[i]]) {
        if (side[w] == -1) {
          side[w] = 1 - side[cur[i]];
          cur.push_back(w);
        } else if (side[w] == side[cur[i]]) {
          return false;
        }
      }
  }
  return true;
}

std::vector<int> bfs_dist(const Graph& g, int src) {
  std::vector<int> dist(g.n, -1);
  dist[src] = 0;
  std::queue<int> q;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.adj[u])
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

int girth(const Graph& g) {
  // min over roots of the shortest cycle found via one BFS per root
  int best = 0;
  for (int s = 0; s < g.n; ++s) {
    std::vector<int> dist(g.n, -1), par(g.n, -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.adj[u]) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          par[w] = u;
          q.push(w);
        } else if (w != par[u]) {
          int len = dist[u] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

bool is_complete_bipartite_dd(const Graph& g, int d) {
  return g.n == 2 * d && g.m() == d * d && g.is_regular(d) && is_bipartite(g) &&
         is_connected(g);
}

Graph empty_graph(int n) { return Graph::from_edges(n, {}); }

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edges(n, std::move(e));
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.push_back({u, a + v});
  return Graph::from_edges(a + b, std::move(e));
}

Graph cycle_graph(int n) {
  if (n < 3) throw UsageError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, std::move(e));
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, std::move(e));
}

Graph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n) throw UsageError("bad generalized Petersen parameters");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    e.push_back({i, (i + 1) % n});
    e.push_back({i, n + i});
    e.push_back({n + i, n + (i + k) % n});
  }
  return Graph::from_edges(2 * n, std::move(e));
}

Graph prism_graph() { return generalized_petersen(3, 1); }
Graph petersen_graph() { return generalized_petersen(5, 2); }

Graph heawood_graph() {
  // LCF [5,-5]^7 on a 14-cycle
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 14; ++i) e.push_back({i, (i + 1) % 14});
  for (int i = 0; i < 14; i += 2) e.push_back({i, (i + 5) % 14});
  return Graph::from_edges(14, std::move(e));
}

Graph make_kdd(int d) {
  if (d < 1) throw UsageError("K_{d,d} needs d >= 1");
  return complete_bipartite(d, d);
}

static Graph copies(const Graph& unit, int k) {
  Graph g = empty_graph(0);
  for (int i = 0; i < k; ++i) g = disjoint_union(g, unit);
  return g;
}

Graph make_hdn(int d, int n) {
  if (d < 1 || n <= 0 || n % (2 * d) != 0)
    throw UsageError("H_{d,n} needs n divisible by 2d");
  return copies(make_kdd(d), n / (2 * d));
}

Graph make_cldn(int d, int n) {
  if (d < 1 || n <= 0 || n % (d + 1) != 0)
    throw UsageError("CL_{d,n} needs n divisible by d+1");
  return copies(complete_graph(d + 1), n / (d + 1));
}

Graph make_hwn(int n) {
  if (n <= 0 || n % 14 != 0) throw UsageError("HW_n needs n divisible by 14");
  return copies(heawood_graph(), n / 14);
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit((unsigned char)c)) return false;
  return true;
}

int to_int(const std::string& s) {
  if (!all_digits(s) || s.size() > 6) throw UsageError("bad number in graph name: " + s);
  return std::stoi(s);
}

std::string lower(std::string s) {
  for (char& c : s) c = (char)std::tolower((unsigned char)c);
  return s;
}

Graph named_one(const std::string& raw) {
  std::string s = raw;
  std::string w = lower(s);
  if (w == "heawood") return heawood_graph();
  if (w == "petersen") return petersen_graph();
  if (w == "prism") return prism_graph();
  auto two_args = [&](size_t off) {
    auto comma = s.find(',', off);
    if (comma == std::string::npos) throw UsageError("expected d,n in graph name: " + s);
    return std::pair<int, int>(to_int(s.substr(off, comma - off)), to_int(s.substr(comma + 1)));
  };
  if (s.rfind("CL", 0) == 0) {
    auto [d, n] = two_args(2);
    return make_cldn(d, n);
  }
  if (s.rfind("GP", 0) == 0) {
    auto [n, k] = two_args(2);
    return generalized_petersen(n, k);
  }
  if (s.rfind("HW", 0) == 0) return make_hwn(to_int(s.substr(2)));
  if (s.rfind("H", 0) == 0 && s.find(',') != std::string::npos) {
    auto [d, n] = two_args(1);
    return make_hdn(d, n);
  }
  if (s.rfind("C", 0) == 0 && all_digits(s.substr(1))) return cycle_graph(to_int(s.substr(1)));
  if (s.rfind("K", 0) == 0) {
    std::string t = s.substr(1);
    if (t.size() == 2 && all_digits(t) && t[0] == t[1]) return make_kdd(t[0] - '0');
    return complete_graph(to_int(t));
  }
  throw UsageError("unknown graph name: " + raw);
}

}  // namespace

Graph make_named(const std::string& name) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : name) {
    if (c == '+') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace((unsigned char)c)) {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  Graph g = empty_graph(0);
  for (const auto& p : parts) {
    if (p.empty()) throw UsageError("empty component in graph name: " + name);
    g = disjoint_union(g, named_one(p));
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  if (g.n > 62) throw CapacityError("graph6 writer limited to 62 vertices");
  std::string out;
  out.push_back((char)(g.n + 63));
  int bit = 0, cur = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) {
      cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bit == 6) {
        out.push_back((char)(cur + 63));
        bit = 0;
        cur = 0;
      }
    }
  if (bit) out.push_back((char)((cur << (6 - bit)) + 63));
  return out;
}

Graph from_graph6(const std::string& s) {
  if (s.empty()) throw UsageError("empty graph6 string");
  int n = s[0] - 63;
  if (n < 0 || n > 62) throw UsageError("unsupported graph6 header");
  int nbits = n * (n - 1) / 2;
  int need = (nbits + 5) / 6;
  if ((int)s.size() != 1 + need) throw UsageError("graph6 string has wrong length");
  std::vector<int> bits;
  bits.reserve(need * 6);
  for (int i = 0; i < need; ++i) {
    int b = s[1 + i] - 63;
    if (b < 0 || b > 63) throw UsageError("bad graph6 byte");
    for (int k = 5; k >= 0; --k) bits.push_back((b >> k) & 1);
  }
  std::vector<std::pair<int, int>> e;
  int idx = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits[idx++]) e.push_back({i, j});
  return Graph::from_edges(n, std::move(e));
}

namespace {

// Canonical form by iterated degree refinement plus individualization.
// The certificate is the lexicographically smallest labeled encoding over
// all refinement-compatible orders, which makes it isomorphism-invariant.
struct CanonSearch {
  const Graph& g;
  const std::vector<int>& colors;
  std::vector<uint64_t> nbr;
  Cert best;
  bool have_best = false;

  CanonSearch(const Graph& g_, const std::vector<int>& cols) : g(g_), colors(cols) {
    nbr.assign(g.n, 0);
    for (auto [u, v] : g.edges) {
      nbr[u] |= uint64_t(1) << v;
      nbr[v] |= uint64_t(1) << u;
    }
  }

  void refine(std::vector<std::vector<int>>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<uint64_t> mask(cells.size(), 0);
      for (size_t i = 0; i < cells.size(); ++i)
        for (int v : cells[i]) mask[i] |= uint64_t(1) << v;
      std::vector<std::vector<int>> next;
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<std::vector<int>, std::vector<int>> split;
        for (int v : cell) {
          std::vector<int> key(cells.size());
          for (size_t i = 0; i < cells.size(); ++i)
            key[i] = std::popcount(nbr[v] & mask[i]);
          split[key].push_back(v);
        }
        if (split.size() > 1) changed = true;
        for (auto& [k, vs] : split) next.push_back(std::move(vs));
      }
      cells = std::move(next);
    }
  }

  Cert cert_of(const std::vector<int>& order) const {
    Cert s;
    s.push_back((char)g.n);
    for (int v : order) s.push_back((char)colors[v]);
    int bit = 0, cur = 0;
    for (int j = 1; j < g.n; ++j)
      for (int i = 0; i < j; ++i) {
        cur = (cur << 1) | ((nbr[order[i]] >> order[j]) & 1);
        if (++bit == 8) {
          s.push_back((char)cur);
          bit = 0;
          cur = 0;
        }
      }
    if (bit) s.push_back((char)(cur << (8 - bit)));
    return s;
  }

  void search(std::vector<std::vector<int>> cells) {
    refine(cells);
    int target = -1;
    for (size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        target = (int)i;
        break;
      }
    if (target < 0) {
      std::vector<int> order;
      order.reserve(g.n);
      for (auto& c : cells) order.push_back(c[0]);
      Cert c = cert_of(order);
      if (!have_best || c < best) {
        best = std::move(c);
        have_best = true;
      }
      return;
    }
    for (int v : cells[target]) {
      std::vector<std::vector<int>> nxt;
      nxt.reserve(cells.size() + 1);
      for (size_t i = 0; i < cells.size(); ++i) {
        if ((int)i == target) {
          nxt.push_back({v});
          std::vector<int> rest;
          for (int w : cells[i])
            if (w != v) rest.push_back(w);
          nxt.push_back(std::move(rest));
        } else {
          nxt.push_back(cells[i]);
        }
      }
      search(std::move(nxt));
    }
  }
};

}  // namespace

Cert canon_colored(const Graph& g, const std::vector<int>& colors) {
  if (g.n > 62) throw CapacityError("canonical form limited to 62 vertices");
  if ((int)colors.size() != g.n) throw UsageError("color vector has wrong length");
  if (g.n == 0) return Cert(1, '\0');
  // normalize color values order-preservingly to 0..k-1
  std::vector<int> vals = colors;
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<int> norm(g.n);
  for (int v = 0; v < g.n; ++v)
    norm[v] = (int)(std::lower_bound(vals.begin(), vals.end(), colors[v]) - vals.begin());
  std::vector<std::vector<int>> cells(vals.size());
  for (int v = 0; v < g.n; ++v) cells[norm[v]].push_back(v);
  CanonSearch cs(g, norm);
  cs.search(std::move(cells));
  return cs.best;
}

Cert canon(const Graph& g) { return canon_colored(g, std::vector<int>(g.n, 0)); }

Cert canon_rooted(const Graph& g, int root) {
  std::vector<int> colors(g.n, 0);
  colors.at(root) = 1;
  return canon_colored(g, colors);
}

Cert canon_edge_rooted(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v)) throw UsageError("edge root is not an edge");
  std::vector<int> colors(g.n, 0);
  colors[u] = colors[v] = 1;
  return canon_colored(g, colors);
}

std::string cert_hex(const Cert& c) {
  static const char* hx = "0123456789abcdef";
  std::string out;
  out.reserve(c.size() * 2);
  for (unsigned char b : c) {
    out.push_back(hx[b >> 4]);
    out.push_back(hx[b & 15]);
  }
  return out;
}

RootedBall rooted_ball(const Graph& g, int v, int r) {
  if (v < 0 || v >= g.n) throw UsageError("ball center out of range");
  if (r < 0) throw UsageError("ball radius must be nonnegative");
  std::vector<int> dist = bfs_dist(g, v);
  std::vector<int> keep;
  for (int u = 0; u < g.n; ++u)
    if (dist[u] != -1 && dist[u] <= r) keep.push_back(u);
  RootedBall b;
  b.g = induced_subgraph(g, keep);
  b.radius = r;
  b.orig = keep;
  b.dist.resize(keep.size());
  for (size_t i = 0; i < keep.size(); ++i) {
    b.dist[i] = dist[keep[i]];
    if (keep[i] == v) b.center = (int)i;
  }
  return b;
}

Cert ball_cert(const RootedBall& b) { return canon_colored(b.g, b.dist); }

namespace {

struct RegularSearch {
  int n, d, min_girth;
  std::vector<int> deg;
  std::vector<uint64_t> nbr;
  std::vector<std::pair<int, int>> cur_edges;
  std::set<Cert> seen;
  std::vector<Graph>* out;

  bool short_path(int from, int to, int maxdepth) const {
    // true iff dist(from, to) <= maxdepth in the current partial graph
    std::vector<int> dist(n, -1);
    dist[from] = 0;
    std::vector<int> q{from};
    for (size_t i = 0; i < q.size(); ++i) {
      int u = q[i];
      if (dist[u] >= maxdepth) continue;
      for (int w = 0; w < n; ++w)
        if ((nbr[u] >> w) & 1 && dist[w] == -1) {
          if (w == to) return true;
          dist[w] = dist[u] + 1;
          q.push_back(w);
        }
    }
    return false;
  }

  void leaf() {
    Graph g = Graph::from_edges(n, cur_edges);
    if (girth(g) != 0 && girth(g) < min_girth) return;  // defensive; pruning should prevent this
    Cert c = canon(g);
    if (seen.insert(c).second) out->push_back(std::move(g));
  }

  void rec(int active, int vmin) {
    int u = -1;
    for (int w = 0; w < n; ++w)
      if (deg[w] < d) {
        u = w;
        break;
      }
    if (u < 0) {
      leaf();
      return;
    }
    if (u != active) {
      active = u;
      vmin = u + 1;
    }
    bool isolated_tried = false;
    for (int v = vmin; v < n; ++v) {
      if (deg[v] >= d || ((nbr[u] >> v) & 1)) continue;
      if (deg[v] == 0) {
        // untouched vertices are interchangeable; try only the first
        if (isolated_tried) continue;
        isolated_tried = true;
      }
      if (min_girth > 3 && short_path(u, v, min_girth - 2)) continue;
      deg[u]++;
      deg[v]++;
      nbr[u] |= uint64_t(1) << v;
      nbr[v] |= uint64_t(1) << u;
      cur_edges.push_back({u, v});
      rec(active, v + 1);
      cur_edges.pop_back();
      deg[u]--;
      deg[v]--;
      nbr[u] &= ~(uint64_t(1) << v);
      nbr[v] &= ~(uint64_t(1) << u);
    }
  }
};

}  // namespace

std::vector<Graph> enumerate_regular(int d, int n, int min_girth) {
  if (d < 0 || n < 0 || min_girth < 3)
    throw UsageError("enumerate_regular: bad parameters");
  std::vector<Graph> out;
  if (n == 0) {
    out.push_back(empty_graph(0));
    return out;
  }
  if (d == 0) {
    out.push_back(empty_graph(n));
    return out;
  }
  if ((n * d) % 2 != 0 || d >= n) return out;
  int cap = d <= 2 ? 16 : (d == 3 ? 14 : 10);
  cap = std::max(cap, capacity_override());
  if (n > cap)
    throw CapacityError("enumerate_regular: n exceeds the size guard; set PARTFN_CAPACITY to raise it");
  RegularSearch rs;
  rs.n = n;
  rs.d = d;
  rs.min_girth = min_girth;
  rs.deg.assign(n, 0);
  rs.nbr.assign(n, 0);
  rs.out = &out;
  rs.rec(0, 1);
  return out;
}

}  // namespace partfn
