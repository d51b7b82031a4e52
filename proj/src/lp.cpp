#include "partfn/lp.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "partfn/distance.hpp"
#include "partfn/errors.hpp"

namespace partfn {

namespace {

std::vector<LocalView> match_candidates(int d) {
  std::vector<LocalView> out;
  for (int t = 0; t <= d - 1; ++t)
    for (int jx = 0; t + jx <= d - 1; ++jx)
      for (int jy = jx; t + jy <= d - 1; ++jy) out.push_back(make_match_view(t, jx, jy));
  return out;
}

// candidate view structures: graphs on <= d vertices with max degree <= d-1
// (each uncovered neighbor is also adjacent to the root)
std::vector<LocalView> ind_candidates(int d) {
  std::vector<LocalView> out;
  std::set<Cert> seen;
  for (int k = 0; k <= d; ++k) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < k; ++u)
      for (int v = u + 1; v < k; ++v) all.push_back({u, v});
    for (uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<std::pair<int, int>> e;
      for (size_t i = 0; i < all.size(); ++i)
        if ((mask >> i) & 1) e.push_back(all[i]);
      Graph c = Graph::from_edges(k, std::move(e));
      bool ok = true;
      for (int v = 0; v < k; ++v)
        if (c.degree(v) > d - 1) {
          ok = false;
          break;
        }
      if (!ok) continue;
      LocalView lv = make_ind_view(c);
      if (seen.insert(lv.cert).second) out.push_back(std::move(lv));
    }
  }
  return out;
}

LocalViewEnum compute_views(int d, Kind kind) {
  if (d < 1 || d > 5) throw UsageError("enumerate_local_views supports 1 <= d <= 5");
  if (kind == Kind::Potts)
    throw UsageError("local view enumeration is defined for match and ind");
  std::vector<LocalView> cands =
      kind == Kind::Match ? match_candidates(d) : ind_candidates(d);
  std::sort(cands.begin(), cands.end());
  std::map<Cert, size_t> index;
  for (size_t i = 0; i < cands.size(); ++i) index[cands[i].cert] = i;
  std::vector<std::optional<Graph>> host(cands.size());
  size_t remaining = cands.size();
  const int host_cap = 10;
  for (int n = d + 1; n <= host_cap && remaining > 0; ++n) {
    if ((n * d) % 2 != 0) continue;
    for (const Graph& g : enumerate_regular(d, n)) {
      LocalViewDistribution dist = local_view_distribution(g, kind, BigRat(1));
      for (const auto& [view, p] : dist.probs) {
        auto it = index.find(view.cert);
        if (it != index.end() && !host[it->second]) {
          host[it->second] = g;
          --remaining;
        }
      }
      if (remaining == 0) break;
    }
  }
  LocalViewEnum out;
  out.d = d;
  out.kind = kind;
  for (size_t i = 0; i < cands.size(); ++i) {
    if (host[i]) {
      out.views.push_back(cands[i]);
      out.hosts.push_back(*host[i]);
    } else {
      out.unrealized.push_back(cands[i]);
    }
  }
  return out;
}

const LocalViewEnum& cached_views(int d, Kind kind) {
  static std::map<std::pair<int, int>, LocalViewEnum> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lk(mtx);
  auto key = std::make_pair(d, (int)kind);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_views(d, kind)).first;
  return it->second;
}

RatPoly view_partition(const LocalView& v) {
  if (v.kind == Kind::Match) return match_view_partition(v.t, v.jx, v.jy);
  if (v.kind == Kind::Ind) return ind_view_partition(v.view_graph);
  throw UsageError("view functionals are defined for match and ind");
}

}  // namespace

LocalViewEnum enumerate_local_views(int d, Kind kind) { return cached_views(d, kind); }

BigRat view_a(const LocalView& v, const BigRat& lambda) {
  BigRat z = poly_eval(view_partition(v), lambda);
  return lambda / (lambda + z);
}

BigRat view_g(const LocalView& v, const BigRat& lambda) {
  RatPoly zp = view_partition(v);
  BigRat z = poly_eval(zp, lambda);
  BigRat dz = poly_eval(poly_derivative(zp), lambda);
  return lambda * dz / (lambda + z);
}

ExactLP build_lp(int d, Kind kind, const BigRat& lambda) {
  if (!(lambda > 0)) throw UsageError("build_lp needs lambda > 0");
  if (d < 2) throw UsageError("build_lp needs d >= 2");
  if (kind == Kind::Potts) throw UsageError("the occupancy LP covers match and ind");
  const LocalViewEnum ve = enumerate_local_views(d, kind);
  ExactLP lp;
  lp.views = ve.views;
  size_t nv = lp.views.size();
  lp.objective.resize(nv);
  std::vector<BigRat> cons(nv);
  int slots = kind == Kind::Match ? 2 * (d - 1) : d;
  for (size_t i = 0; i < nv; ++i) {
    BigRat a = view_a(lp.views[i], lambda);
    BigRat gv = view_g(lp.views[i], lambda);
    lp.objective[i] = a;
    cons[i] = slots * a - gv;
  }
  auto add_pair = [&](const std::vector<BigRat>& row, const BigRat& rhs,
                      const std::string& name) {
    lp.A.push_back(row);
    lp.b.push_back(rhs);
    lp.row_names.push_back(name + "-upper");
    std::vector<BigRat> neg(row.size());
    for (size_t i = 0; i < row.size(); ++i) neg[i] = -row[i];
    lp.A.push_back(std::move(neg));
    lp.b.push_back(-rhs);
    lp.row_names.push_back(name + "-lower");
  };
  add_pair(std::vector<BigRat>(nv, BigRat(1)), BigRat(1), "total-probability");
  // the root estimator of the occupancy fraction equals the neighbor-slot
  // estimator on every d-regular graph
  add_pair(cons, BigRat(0), "neighbor-consistency");
  if (kind == Kind::Match && d == 3) {
    // cubic-only balance identity over the two endpoint slots; fails for
    // other degrees, so it is gated to d = 3
    std::vector<BigRat> slot(nv);
    for (size_t i = 0; i < nv; ++i) {
      const LocalView& v = lp.views[i];
      long Jx = v.t + v.jx, Jy = v.t + v.jy;
      BigRat P = BigRat(Jx * (2 - Jx) + Jy * (2 - Jy)) -
                 lambda * BigRat((Jx + Jy - 2) * (Jx * Jy - 2 * v.t));
      BigRat z = poly_eval(match_view_partition(v.t, v.jx, v.jy), lambda);
      slot[i] = P / (lambda + z);
    }
    add_pair(slot, BigRat(0), "endpoint-slot-balance");
  }
  return lp;
}

namespace {

struct Tableau {
  int m = 0, ncols = 0, nstruct = 0;
  std::vector<std::vector<BigRat>> T;
  std::vector<BigRat> rhs;
  std::vector<int> basis;
  std::vector<BigRat> cost;  // reduced costs for the current objective
  BigRat val;                // objective value of the current basic solution
  std::vector<char> allowed;

  void price(const std::vector<BigRat>& c) {
    cost = c;
    val = 0;
    for (int i = 0; i < m; ++i) {
      const BigRat& cb = c[basis[i]];
      if (cb == 0) continue;
      val += cb * rhs[i];
      for (int j = 0; j < ncols; ++j)
        if (T[i][j] != 0) cost[j] -= cb * T[i][j];
    }
  }

  void pivot(int r, int e) {
    BigRat piv = T[r][e];
    for (int j = 0; j < ncols; ++j) T[r][j] /= piv;
    rhs[r] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == r || T[i][e] == 0) continue;
      BigRat f = T[i][e];
      for (int j = 0; j < ncols; ++j)
        if (T[r][j] != 0) T[i][j] -= f * T[r][j];
      rhs[i] -= f * rhs[r];
    }
    if (cost[e] != 0) {
      BigRat f = cost[e];
      for (int j = 0; j < ncols; ++j)
        if (T[r][j] != 0) cost[j] -= f * T[r][j];
      val += f * rhs[r];
    }
    basis[r] = e;
  }

  // Bland's rule: smallest eligible entering index, smallest basic
  // variable among ratio ties
  void iterate(std::vector<BigRat>* trace) {
    for (int round = 0; round < 100000; ++round) {
      int e = -1;
      for (int j = 0; j < ncols; ++j)
        if (allowed[j] && cost[j] > 0) {
          e = j;
          break;
        }
      if (e < 0) return;
      int r = -1;
      BigRat best;
      for (int i = 0; i < m; ++i) {
        if (!(T[i][e] > 0)) continue;
        BigRat ratio = rhs[i] / T[i][e];
        if (r < 0 || ratio < best || (ratio == best && basis[i] < basis[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r < 0) throw std::logic_error("LP unbounded: constraint generation bug");
      pivot(r, e);
      if (trace) trace->push_back(val);
    }
    throw std::logic_error("simplex iteration limit exceeded");
  }
};

}  // namespace

SolveResult solve_lp(const ExactLP& lp) {
  int m = (int)lp.A.size();
  int nv = (int)lp.views.size();
  if (m == 0 || nv == 0) throw UsageError("empty LP");
  for (const auto& row : lp.A)
    if ((int)row.size() != nv) throw UsageError("LP row has wrong width");

  int nart = 0;
  for (int i = 0; i < m; ++i)
    if (lp.b[i] < 0) ++nart;
  Tableau tb;
  tb.m = m;
  tb.nstruct = nv;
  tb.ncols = nv + m + nart;
  tb.T.assign(m, std::vector<BigRat>(tb.ncols, BigRat(0)));
  tb.rhs.assign(m, BigRat(0));
  tb.basis.assign(m, -1);
  tb.allowed.assign(tb.ncols, 1);
  std::vector<int> sign(m, 1);
  int art = nv + m;
  for (int i = 0; i < m; ++i) {
    sign[i] = lp.b[i] < 0 ? -1 : 1;
    for (int j = 0; j < nv; ++j) tb.T[i][j] = sign[i] * lp.A[i][j];
    tb.T[i][nv + i] = sign[i];
    tb.rhs[i] = sign[i] * lp.b[i];
    if (sign[i] < 0) {
      tb.T[i][art] = 1;
      tb.basis[i] = art;
      ++art;
    } else {
      tb.basis[i] = nv + i;
    }
  }

  if (nart > 0) {
    std::vector<BigRat> c1(tb.ncols, BigRat(0));
    for (int j = nv + m; j < tb.ncols; ++j) c1[j] = -1;
    tb.price(c1);
    tb.iterate(nullptr);
    if (tb.val != 0) throw std::logic_error("LP infeasible: constraint generation bug");
    // drive leftover artificials out of the basis
    for (int i = 0; i < m; ++i) {
      if (tb.basis[i] < nv + m) continue;
      int e = -1;
      for (int j = 0; j < nv + m; ++j)
        if (tb.T[i][j] != 0) {
          e = j;
          break;
        }
      if (e < 0) throw std::logic_error("redundant LP row survived phase one");
      tb.pivot(i, e);
    }
  }
  for (int j = nv + m; j < tb.ncols; ++j) tb.allowed[j] = 0;

  std::vector<BigRat> c2(tb.ncols, BigRat(0));
  for (int j = 0; j < nv; ++j) c2[j] = lp.objective[j];
  tb.price(c2);
  std::vector<BigRat> trace;
  tb.iterate(&trace);

  SolveResult out;
  out.optimum = tb.val;
  out.primal.assign(nv, BigRat(0));
  for (int i = 0; i < m; ++i)
    if (tb.basis[i] < nv) out.primal[tb.basis[i]] = tb.rhs[i];

  // dual multipliers off the slack columns' reduced costs; the row sign
  // flip cancels against the flipped slack coefficient
  out.dual.q.assign(m, BigRat(0));
  for (int i = 0; i < m; ++i) {
    out.dual.q[i] = -tb.cost[nv + i];
    if (out.dual.q[i] < 0) throw std::logic_error("negative dual multiplier at optimality");
  }
  out.dual.objective = 0;
  for (int i = 0; i < m; ++i) out.dual.objective += out.dual.q[i] * lp.b[i];
  if (out.dual.objective != out.optimum)
    throw std::logic_error("strong duality failed");
  out.dual.slack.assign(nv, BigRat(0));
  for (int j = 0; j < nv; ++j) {
    BigRat s(0);
    for (int i = 0; i < m; ++i) s += out.dual.q[i] * lp.A[i][j];
    s -= lp.objective[j];
    if (s < 0) throw std::logic_error("dual infeasible at optimality");
    if (s != -tb.cost[j]) throw std::logic_error("slack disagrees with reduced costs");
    out.dual.slack[j] = s;
  }
  // complementary slackness and weak duality over the recorded iterates
  for (int j = 0; j < nv; ++j)
    if (out.primal[j] != 0 && out.dual.slack[j] != 0)
      throw std::logic_error("complementary slackness failed");
  for (const BigRat& v : trace)
    if (v > out.dual.objective) throw std::logic_error("weak duality failed on an iterate");
  return out;
}

LpReport lp_report(int d, Kind kind, const BigRat& lambda) {
  LpReport r;
  r.lp = build_lp(d, kind, lambda);
  r.sol = solve_lp(r.lp);
  Graph k = make_kdd(d);
  r.alpha_kdd = occupancy_fraction(kind, coeffs_for(k, kind), k.n, k.m(), lambda);
  r.tight = r.sol.optimum == r.alpha_kdd;
  for (size_t j = 0; j < r.sol.dual.slack.size(); ++j)
    if (r.sol.dual.slack[j] == 0) r.zero_slack.push_back((int)j);
  if (!r.tight) r.gap_witness = r.sol.primal;
  return r;
}

BigRat f_match(int d, const BigRat& lambda) {
  BigRat one_l = 1 + lambda;
  BigRat b1 = BigRat(1) / pow_rat(one_l, d - 2);
  BigRat b2 = lambda / pow_rat(one_l, 2 * d * d);
  return b1 < b2 ? b1 : b2;
}

BigRat f_ind(int d, const BigRat& lambda) {
  return lambda / pow_rat(1 + lambda, 2 * d + 1);
}

BigRat f_girth5(const BigRat& lambda) {
  BigRat one_l = 1 + lambda;
  BigRat b1 = lambda / pow_rat(one_l, 15);
  BigRat b2 = BigRat(1) / (one_l * one_l);
  return b1 < b2 ? b1 : b2;
}

BigRat f_coloring(int d, int q, const BigRat& lambda) {
  return pow_rat(pow_rat(lambda, d) / q, 2 * d);
}

StabilityResult stability_constant(int d, Kind kind, const BigRat& lambda) {
  LpReport rep = lp_report(d, kind, lambda);
  if (!rep.tight)
    throw UsageError("LP optimum exceeds the K_{d,d} value for this (d, kind); no stability constant");
  bool found = false;
  BigRat theta(0);
  for (const BigRat& s : rep.sol.dual.slack)
    if (s > 0 && (!found || s < theta)) {
      theta = s;
      found = true;
    }
  if (!found) throw UsageError("all dual slacks vanish; certificate is degenerate");
  // with the extra multiplier set to theta, every view outside the
  // zero-slack set stays dual-feasible
  for (const BigRat& s : rep.sol.dual.slack)
    if (s != 0 && s < theta) throw std::logic_error("augmented dual infeasible");
  BigRat f = kind == Kind::Match ? f_match(d, lambda) : f_ind(d, lambda);
  return {theta, f, f * theta};
}

bool stability_gap_check(const Graph& g, int d, Kind kind, const BigRat& lambda) {
  if (!g.is_regular(d)) throw UsageError("stability_gap_check needs a d-regular graph");
  StabilityResult sc = stability_constant(d, kind, lambda);
  BigRat alpha_g =
      occupancy_fraction(kind, coeffs_for(g, kind), g.n, g.m(), lambda);
  Graph k = make_kdd(d);
  BigRat alpha_k = occupancy_fraction(kind, coeffs_for(k, kind), k.n, k.m(), lambda);
  // both are exact upper bounds on the sampling distance; take the
  // sharper of the two
  BigRat dist = sampling_distance(g, k, 6).upper;
  BigRat frac = fraction_outside_kdd(g, d);
  if (frac < dist) dist = frac;
  return alpha_g <= alpha_k - sc.c * dist;
}

std::string lp_dump(const ExactLP& lp) {
  std::ostringstream os;
  os << "variables: " << lp.views.size() << " local views\n";
  for (size_t j = 0; j < lp.views.size(); ++j) {
    const LocalView& v = lp.views[j];
    os << "  p" << j << ": ";
    if (v.kind == Kind::Match) {
      os << "match view t=" << v.t << " j1=" << v.jx << " j2=" << v.jy;
    } else {
      os << kind_name(v.kind) << " view n=" << v.view_graph.n << " edges=[";
      for (size_t i = 0; i < v.view_graph.edges.size(); ++i) {
        if (i) os << ",";
        os << v.view_graph.edges[i].first << "-" << v.view_graph.edges[i].second;
      }
      os << "]";
    }
    os << "\n";
  }
  os << "maximize: ";
  for (size_t j = 0; j < lp.objective.size(); ++j) {
    if (j) os << " + ";
    os << rat_str(lp.objective[j]) << " p" << j;
  }
  os << "\nsubject to:\n";
  for (size_t i = 0; i < lp.A.size(); ++i) {
    os << "  " << lp.row_names[i] << ": ";
    bool first = true;
    for (size_t j = 0; j < lp.A[i].size(); ++j) {
      if (lp.A[i][j] == 0) continue;
      if (!first) os << " + ";
      os << rat_str(lp.A[i][j]) << " p" << j;
      first = false;
    }
    if (first) os << "0";
    os << " <= " << rat_str(lp.b[i]) << "\n";
  }
  os << "  p >= 0\n";
  return os.str();
}

}  // namespace partfn
