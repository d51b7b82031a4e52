#include "partfn/jsonio.hpp"

#include "json.hpp"
#include "partfn/errors.hpp"

namespace partfn {
namespace {

using json = nlohmann::ordered_json;

json rat_field(const BigRat& x) { return rat_str(x); }

void maybe_float(json& j, const std::string& key, const BigRat& x, bool on) {
  if (on) j[key + "_float"] = rat_approx(x);
}

json graph_obj(const Graph& g) {
  json j;
  j["n"] = g.n;
  json es = json::array();
  for (const auto& [u, v] : g.edges) es.push_back(json::array({u, v}));
  j["edges"] = es;
  j["graph6"] = to_graph6(g);
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

double rat_approx(const BigRat& x) { return x.convert_to<double>(); }

std::string graph_json(const Graph& g) { return dump(graph_obj(g)); }

Graph graph_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.contains("graph6") && !j.contains("edges"))
    return from_graph6(j.at("graph6").get<std::string>());
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw UsageError("bad edge in graph JSON");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph::from_edges(n, edges);
}

std::string coef_json(Kind kind, int q, const CoefVector& c) {
  json j;
  j["kind"] = kind_name(kind);
  if (kind == Kind::Potts) j["q"] = q;
  json arr = json::array();
  for (const auto& x : c) arr.push_back(int_str(x));
  j["coeffs"] = arr;
  return dump(j);
}

CoefVector coef_from_json(const std::string& text, Kind* kind, int* q) {
  json j = json::parse(text);
  if (kind && j.contains("kind"))
    *kind = kind_from_name(j.at("kind").get<std::string>());
  if (q && j.contains("q")) *q = j.at("q").get<int>();
  CoefVector c;
  for (const auto& x : j.at("coeffs")) {
    if (x.is_string())
      c.emplace_back(x.get<std::string>());
    else
      c.emplace_back(x.get<long long>());
  }
  if (c.empty()) throw UsageError("empty coefficient vector in JSON");
  return c;
}

std::string size_dist_json(const SizeDistribution& d, bool with_float) {
  json j;
  json arr = json::array();
  for (const auto& p : d.prob) arr.push_back(rat_field(p));
  j["prob"] = arr;
  if (with_float) {
    json fl = json::array();
    for (const auto& p : d.prob) fl.push_back(rat_approx(p));
    j["prob_float"] = fl;
  }
  return dump(j);
}

std::string views_json(const LocalViewDistribution& v, bool with_float) {
  json j;
  j["kind"] = kind_name(v.kind);
  j["d"] = v.d;
  if (v.kind == Kind::Potts) j["q"] = v.q;
  j["lambda"] = rat_field(v.lambda);
  json probs = json::object();
  json detail = json::array();
  for (const auto& [view, p] : v.probs) {
    probs[cert_hex(view.cert)] = rat_field(p);
    json dj;
    dj["cert"] = cert_hex(view.cert);
    if (v.kind == Kind::Match) {
      dj["t"] = view.t;
      dj["jx"] = view.jx;
      dj["jy"] = view.jy;
    }
    dj["view_graph"] = graph_obj(view.view_graph);
    if (with_float) dj["prob_float"] = rat_approx(p);
    detail.push_back(dj);
  }
  j["probs"] = probs;
  j["views"] = detail;
  return dump(j);
}

std::string distance_json(const DistanceResult& r, bool with_float) {
  json j;
  j["lower"] = rat_field(r.lower);
  j["upper"] = rat_field(r.upper);
  maybe_float(j, "lower", r.lower, with_float);
  maybe_float(j, "upper", r.upper, with_float);
  json arr = json::array();
  for (const auto& tv : r.per_radius_tv) arr.push_back(rat_field(tv));
  j["per_radius_tv"] = arr;
  return dump(j);
}

std::string dominance_json(const DominanceReport& r) {
  json j;
  j["total_count"] = r.total_count;
  j["partition"] = r.partition;
  j["coefficient"] = r.coefficient;
  j["occupancy"] = r.occupancy;
  j["top"] = r.top;
  j["free_volume"] = r.free_volume;
  json ws = json::array();
  for (const auto& w : r.witnesses) {
    json wj;
    wj["flag"] = w.flag;
    if (w.index) wj["index"] = *w.index;
    if (w.point) wj["point"] = rat_field(*w.point);
    ws.push_back(wj);
  }
  j["witnesses"] = ws;
  return dump(j);
}

std::string verdict_json(const Verdict& v) {
  json j;
  j["statement"] = v.statement;
  json params = json::object();
  for (const auto& [k, val] : v.params) params[k] = val;
  j["params"] = params;
  j["theorem_backed"] = v.theorem_backed;
  j["checked"] = v.checked;
  j["failed"] = v.failed;
  j["ok"] = v.ok();
  json items = json::array();
  for (const auto& it : v.items) {
    json ij;
    ij["graph6"] = it.graph6;
    ij["pass"] = it.pass;
    if (!it.witness.empty()) ij["witness"] = it.witness;
    items.push_back(ij);
  }
  j["items"] = items;
  j["repro"] = v.repro;
  j["notes"] = v.notes;
  return dump(j);
}

std::string audit_json(const AuditReport& r, bool with_float) {
  json j;
  j["case"] = audit_case_name(r.acase);
  j["gprime6"] = r.gprime6;
  j["d"] = r.d;
  j["n"] = r.n;
  j["k"] = r.k;
  j["n1"] = r.n1;
  j["n2"] = r.n2;
  json pj;
  pj["kind"] = kind_name(r.params.kind);
  if (r.params.kind == Kind::Potts) pj["q"] = r.params.q;
  pj["delta"] = rat_field(r.params.delta);
  pj["delta_prime"] = rat_field(r.params.delta_prime);
  pj["N1"] = r.params.N1;
  j["params"] = pj;
  if (r.acase != AuditCase::Small1) j["lambda"] = rat_field(r.lambda);
  json lines = json::array();
  for (const auto& l : r.lines) {
    json lj;
    lj["label"] = l.label;
    lj["lhs"] = rat_field(l.lhs);
    lj["relation"] = l.relation;
    lj["rhs"] = rat_field(l.rhs);
    lj["holds"] = l.holds;
    if (with_float) {
      lj["lhs_float"] = rat_approx(l.lhs);
      lj["rhs_float"] = rat_approx(l.rhs);
    }
    if (!l.note.empty()) lj["note"] = l.note;
    lines.push_back(lj);
  }
  j["lines"] = lines;
  j["all_hold"] = r.all_hold;
  return dump(j);
}

std::string ratio_json(const RatioLemmaResult& r) {
  json j;
  j["lambda"] = rat_field(r.lambda);
  j["eps"] = rat_field(r.eps);
  j["ok"] = r.ok;
  j["lambda_bound_ok"] = r.lambda_lower_ok;
  j["n_independent"] = r.n_independent;
  j["first_n"] = r.first_n;
  j["notes"] = r.notes;
  return dump(j);
}

std::string gnedenko_json(const GnedenkoResult& r) {
  json j;
  j["K"] = r.K;
  j["lattice_ok"] = r.lattice_ok;
  j["mean"] = rat_field(r.mean);
  j["var"] = rat_field(r.var);
  j["deviation"] = r.deviation;
  j["deviation_float"] = r.deviation_approx;
  j["rows"] = static_cast<int>(r.rows.size());
  return dump(j);
}

std::string lp_json(int d, Kind kind, const BigRat& lambda, const LpReport& r,
                    const StabilityResult* stab, bool with_float) {
  json j;
  j["d"] = d;
  j["kind"] = kind_name(kind);
  j["lambda"] = rat_field(lambda);
  j["optimum"] = rat_field(r.sol.optimum);
  j["alpha_kdd"] = rat_field(r.alpha_kdd);
  maybe_float(j, "optimum", r.sol.optimum, with_float);
  maybe_float(j, "alpha_kdd", r.alpha_kdd, with_float);
  j["tight"] = r.tight;
  json cols = json::array();
  for (size_t i = 0; i < r.lp.views.size(); ++i) {
    json cj;
    cj["cert"] = cert_hex(r.lp.views[i].cert);
    if (kind == Kind::Match) {
      cj["t"] = r.lp.views[i].t;
      cj["jx"] = r.lp.views[i].jx;
      cj["jy"] = r.lp.views[i].jy;
    }
    cj["primal"] = rat_field(r.sol.primal[i]);
    cj["slack"] = rat_field(r.sol.dual.slack[i]);
    cols.push_back(cj);
  }
  j["columns"] = cols;
  json rows = json::array();
  for (size_t i = 0; i < r.lp.row_names.size(); ++i) {
    json rj;
    rj["name"] = r.lp.row_names[i];
    rj["b"] = rat_field(r.lp.b[i]);
    rj["dual"] = rat_field(r.sol.dual.q[i]);
    rows.push_back(rj);
  }
  j["rows"] = rows;
  j["zero_slack"] = r.zero_slack;
  if (r.gap_witness) {
    json gw = json::array();
    for (const auto& x : *r.gap_witness) gw.push_back(rat_field(x));
    j["gap_witness"] = gw;
  }
  if (stab) {
    json sj;
    sj["theta_star"] = rat_field(stab->theta_star);
    sj["f"] = rat_field(stab->f);
    sj["c"] = rat_field(stab->c);
    if (with_float) {
      sj["theta_star_float"] = rat_approx(stab->theta_star);
      sj["f_float"] = rat_approx(stab->f);
      sj["c_float"] = rat_approx(stab->c);
    }
    j["stability"] = sj;
  }
  return dump(j);
}

}  // namespace partfn
