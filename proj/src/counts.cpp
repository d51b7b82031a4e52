#include "partfn/counts.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "partfn/errors.hpp"

namespace partfn {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Match: return "match";
    case Kind::Ind: return "ind";
    case Kind::Potts: return "potts";
  }
  return "?";
}

Kind kind_from_name(const std::string& s) {
  if (s == "match") return Kind::Match;
  if (s == "ind") return Kind::Ind;
  if (s == "potts") return Kind::Potts;
  throw UsageError("unknown kind: " + s + " (expected match, ind or potts)");
}

namespace {

void trim(CoefVector& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) c.push_back(BigInt(0));
}

CoefVector convolve(const CoefVector& a, const CoefVector& b) {
  CoefVector out(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// strips isolated vertices, splits into components, recurses with a
// per-thread memo keyed by canonical form
template <typename Rec>
CoefVector counted_over_components(const Graph& g, Rec&& rec_connected,
                                   bool isolated_matter) {
  std::vector<int> keep;
  int iso = 0;
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) == 0)
      ++iso;
    else
      keep.push_back(v);
  }
  Graph core = ((int)keep.size() == g.n) ? g : induced_subgraph(g, keep);
  CoefVector acc{BigInt(1)};
  for (const auto& comp : components(core)) {
    CoefVector part = rec_connected(induced_subgraph(core, comp));
    acc = convolve(acc, part);
  }
  if (isolated_matter && iso > 0) {
    CoefVector binoms(iso + 1);
    for (int k = 0; k <= iso; ++k) binoms[k] = binom(iso, k);
    acc = convolve(acc, binoms);
  }
  return acc;
}

CoefVector match_connected(const Graph& g);

CoefVector match_any(const Graph& g) {
  return counted_over_components(g, match_connected, /*isolated_matter=*/false);
}

CoefVector match_connected(const Graph& g) {
  if (g.m() == 0) return {BigInt(1)};
  thread_local std::unordered_map<Cert, CoefVector> memo;
  Cert key = canon(g);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  // branch on an edge at a max-degree vertex
  int u = 0;
  for (int v = 1; v < g.n; ++v)
    if (g.degree(v) > g.degree(u)) u = v;
  int v = g.adj[u][0];
  Graph minus_e = g;
  {
    std::vector<std::pair<int, int>> e = g.edges;
    e.erase(std::find(e.begin(), e.end(), std::make_pair(std::min(u, v), std::max(u, v))));
    minus_e = Graph::from_edges(g.n, std::move(e));
  }
  CoefVector without = match_any(minus_e);
  CoefVector with_e = match_any(remove_vertices(g, {u, v}));
  CoefVector out(std::max(without.size(), with_e.size() + 1), BigInt(0));
  for (size_t k = 0; k < without.size(); ++k) out[k] += without[k];
  for (size_t k = 0; k < with_e.size(); ++k) out[k + 1] += with_e[k];
  trim(out);
  memo.emplace(std::move(key), out);
  return out;
}

CoefVector ind_connected(const Graph& g);

CoefVector ind_any(const Graph& g) {
  return counted_over_components(g, ind_connected, /*isolated_matter=*/true);
}

CoefVector ind_connected(const Graph& g) {
  if (g.m() == 0) {
    CoefVector out(g.n + 1);
    for (int k = 0; k <= g.n; ++k) out[k] = binom(g.n, k);
    return out;
  }
  thread_local std::unordered_map<Cert, CoefVector> memo;
  Cert key = canon(g);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int v = 0;
  for (int u = 1; u < g.n; ++u)
    if (g.degree(u) > g.degree(v)) v = u;
  CoefVector without = ind_any(remove_vertices(g, {v}));
  std::vector<int> closed = g.adj[v];
  closed.push_back(v);
  CoefVector with_v = ind_any(remove_vertices(g, closed));
  CoefVector out(std::max(without.size(), with_v.size() + 1), BigInt(0));
  for (size_t k = 0; k < without.size(); ++k) out[k] += without[k];
  for (size_t k = 0; k < with_v.size(); ++k) out[k + 1] += with_v[k];
  trim(out);
  memo.emplace(std::move(key), out);
  return out;
}

// random-cluster expansion of one connected piece
CoefVector potts_connected(const Graph& g, int q) {
  int m = g.m();
  if (m > std::max(26, capacity_override()))
    throw CapacityError("potts_coeffs: component has too many edges for the subset expansion");
  // T[j] = sum over j-edge subsets A of q^{components(V, A)}
  std::vector<BigInt> qpow(g.n + 1);
  qpow[0] = 1;
  for (int i = 1; i <= g.n; ++i) qpow[i] = qpow[i - 1] * q;
  std::vector<BigInt> T(m + 1, BigInt(0));
  std::vector<int> parent(g.n);
  for (uint64_t mask = 0; mask < (uint64_t(1) << m); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int merges = 0;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int ei = 0; ei < m; ++ei) {
      if (!((mask >> ei) & 1)) continue;
      int a = find(g.edges[ei].first), b = find(g.edges[ei].second);
      if (a != b) {
        parent[a] = b;
        ++merges;
      }
    }
    T[std::popcount(mask)] += qpow[g.n - merges];
  }
  // Z = sum_j T[j] (lambda-1)^j; expand into powers of lambda
  CoefVector c(m + 1, BigInt(0));
  for (int j = 0; j <= m; ++j) {
    if (T[j] == 0) continue;
    for (int k = 0; k <= j; ++k) {
      BigInt term = T[j] * binom(j, k);
      if ((j - k) % 2 == 0)
        c[k] += term;
      else
        c[k] -= term;
    }
  }
  trim(c);
  for (const auto& x : c)
    if (x < 0) throw std::logic_error("potts expansion produced a negative coefficient");
  return c;
}

}  // namespace

CoefVector match_coeffs(const Graph& g) {
  CoefVector c = match_any(g);
  if (c.empty() || c[0] != 1) throw std::logic_error("match_coeffs: m_0 != 1");
  if (g.m() > 0 && (c.size() < 2 || c[1] != g.m()))
    throw std::logic_error("match_coeffs: m_1 != |E|");
  return c;
}

CoefVector ind_coeffs(const Graph& g) {
  CoefVector c = ind_any(g);
  if (c.empty() || c[0] != 1) throw std::logic_error("ind_coeffs: i_0 != 1");
  if (g.n > 0 && (c.size() < 2 || c[1] != g.n))
    throw std::logic_error("ind_coeffs: i_1 != n");
  return c;
}

CoefVector potts_coeffs(const Graph& g, int q) {
  if (q < 2) throw UsageError("potts_coeffs needs q >= 2");
  CoefVector acc{BigInt(1)};
  for (const auto& comp : components(g))
    acc = disjoint_union_coeffs(acc, potts_connected(induced_subgraph(g, comp), q));
  BigInt total = std::accumulate(acc.begin(), acc.end(), BigInt(0));
  if (total != pow_int(BigInt(q), (unsigned)g.n))
    throw std::logic_error("potts_coeffs: coefficients do not sum to q^n");
  return acc;
}

CoefVector coeffs_for(const Graph& g, Kind kind, int q) {
  switch (kind) {
    case Kind::Match: return match_coeffs(g);
    case Kind::Ind: return ind_coeffs(g);
    case Kind::Potts: return potts_coeffs(g, q);
  }
  throw UsageError("bad kind");
}

CoefVector disjoint_union_coeffs(const CoefVector& a, const CoefVector& b) {
  if (a.empty() || b.empty()) throw UsageError("empty coefficient vector");
  return convolve(a, b);
}

CoefVector hdn_coeffs(int d, int n, Kind kind, int q) {
  if (d < 1 || n < 0 || n % (2 * d) != 0)
    throw UsageError("hdn_coeffs: n must be a nonnegative multiple of 2d");
  CoefVector block = coeffs_for(complete_bipartite(d, d), kind, q);
  CoefVector acc{BigInt(1)};
  int e = n / (2 * d);
  while (e > 0) {
    if (e & 1) acc = convolve(acc, block);
    e >>= 1;
    if (e > 0) block = convolve(block, block);
  }
  return acc;
}

BigInt perfect_matching_count(const Graph& g) {
  if (g.n % 2 != 0) return BigInt(0);
  CoefVector c = match_coeffs(g);
  size_t k = g.n / 2;
  return k < c.size() ? c[k] : BigInt(0);
}

RatPoly coeffs_to_poly(const CoefVector& c) {
  RatPoly p;
  p.c.reserve(c.size());
  for (const auto& x : c) p.c.emplace_back(x);
  p.trim();
  return p;
}

BigRat eval_coeffs(const CoefVector& c, const BigRat& lambda) {
  BigRat acc(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * lambda + BigRat(c[i]);
  return acc;
}

}  // namespace partfn
