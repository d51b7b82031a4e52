#include "partfn.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"
#include "partfn/distance.hpp"
#include "partfn/dominance.hpp"
#include "partfn/errors.hpp"
#include "partfn/jsonio.hpp"
#include "partfn/llt.hpp"
#include "partfn/lp.hpp"
#include "partfn/observables.hpp"
#include "partfn/verify.hpp"

using json = nlohmann::ordered_json;

struct pf_graph {
  partfn::Graph g;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
pf_status guarded(F&& f) {
  try {
    return f();
  } catch (const partfn::UsageError& e) {
    t_last_error = e.what();
    return PF_USAGE;
  } catch (const partfn::CapacityError& e) {
    t_last_error = e.what();
    return PF_CAPACITY;
  } catch (const nlohmann::json::exception& e) {
    // json documents only ever arrive from the caller
    t_last_error = e.what();
    return PF_USAGE;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return PF_INTERNAL;
  }
}

partfn::Kind parse_kind(const char* kind) {
  if (!kind) throw partfn::UsageError("kind is required");
  return partfn::kind_from_name(kind);
}

partfn::BigRat parse_rational(const char* s, const char* what) {
  if (!s) throw partfn::UsageError(std::string(what) + " is required");
  try {
    return partfn::parse_rat(s);
  } catch (const std::invalid_argument& e) {
    throw partfn::UsageError(std::string("bad ") + what + ": " + e.what());
  }
}

const partfn::Graph& deref(const pf_graph* g) {
  if (!g) throw partfn::UsageError("null graph handle");
  return g->g;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

extern "C" {

pf_status pf_graph_named(const char* name, pf_graph** out) {
  return guarded([&] {
    if (!name || !out) throw partfn::UsageError("null argument");
    *out = new pf_graph{partfn::make_named(name)};
    return PF_OK;
  });
}

pf_status pf_graph_from_graph6(const char* g6, pf_graph** out) {
  return guarded([&] {
    if (!g6 || !out) throw partfn::UsageError("null argument");
    *out = new pf_graph{partfn::from_graph6(g6)};
    return PF_OK;
  });
}

pf_status pf_graph_from_json(const char* text, pf_graph** out) {
  return guarded([&] {
    if (!text || !out) throw partfn::UsageError("null argument");
    *out = new pf_graph{partfn::graph_from_json(text)};
    return PF_OK;
  });
}

pf_status pf_graph_to_json(const pf_graph* g, char** out) {
  return guarded([&] {
    if (!out) throw partfn::UsageError("null argument");
    *out = dup_string(partfn::graph_json(deref(g)));
    return PF_OK;
  });
}

void pf_graph_free(pf_graph* g) { delete g; }

void pf_string_free(char* s) { std::free(s); }

const char* pf_last_error(void) { return t_last_error.c_str(); }

pf_status pf_coeffs(const pf_graph* g, const char* kind, int q, char** out) {
  return guarded([&] {
    if (!out) throw partfn::UsageError("null argument");
    partfn::Kind k = parse_kind(kind);
    partfn::CoefVector c = partfn::coeffs_for(deref(g), k, q);
    *out = dup_string(partfn::coef_json(k, q, c));
    return PF_OK;
  });
}

pf_status pf_observables(const pf_graph* g, const char* kind, int q,
                         const char* lambda, int with_float, char** out) {
  return guarded([&] {
    if (!out) throw partfn::UsageError("null argument");
    partfn::Kind k = parse_kind(kind);
    partfn::BigRat l = parse_rational(lambda, "lambda");
    const partfn::Graph& gr = deref(g);
    partfn::CoefVector c = partfn::coeffs_for(gr, k, q);
    partfn::BigRat mean = partfn::mean_size(c, l);
    partfn::BigRat occ = partfn::occupancy_fraction(k, c, gr.n, gr.m(), l);
    partfn::SizeDistribution sd = partfn::size_distribution(c, l);

    json j;
    j["kind"] = partfn::kind_name(k);
    if (k == partfn::Kind::Potts) j["q"] = q;
    j["lambda"] = partfn::rat_str(l);
    j["mean"] = partfn::rat_str(mean);
    j["occupancy"] = partfn::rat_str(occ);
    if (with_float) {
      j["mean_float"] = partfn::rat_approx(mean);
      j["occupancy_float"] = partfn::rat_approx(occ);
    }
    json probs = json::array();
    for (const auto& p : sd.prob) probs.push_back(partfn::rat_str(p));
    j["size_dist"] = probs;
    json fv = json::array();
    for (int i = 0; i + 1 < static_cast<int>(c.size()); ++i)
      fv.push_back(partfn::rat_str(partfn::free_volume(c, i)));
    j["free_volume"] = fv;
    if (k == partfn::Kind::Match || k == partfn::Kind::Ind)
      j["occupancy_bound_ok"] = partfn::edge_occupancy_bound_check(gr, l);
    *out = dup_string(dump(j));
    return PF_OK;
  });
}

pf_status pf_local_views(const pf_graph* g, const char* kind, int q,
                         const char* lambda, int with_float, char** out) {
  return guarded([&] {
    if (!out) throw partfn::UsageError("null argument");
    partfn::LocalViewDistribution v = partfn::local_view_distribution(
        deref(g), parse_kind(kind), parse_rational(lambda, "lambda"), q);
    *out = dup_string(partfn::views_json(v, with_float != 0));
    return PF_OK;
  });
}

pf_status pf_tune(const pf_graph* g, const char* kind, int q,
                  const char* target_mean, char** out) {
  return guarded([&] {
    if (!out) throw partfn::UsageError("null argument");
    partfn::CoefVector c = partfn::coeffs_for(deref(g), parse_kind(kind), q);
    partfn::TuneResult t =
        partfn::tune_lambda(c, parse_rational(target_mean, "target mean"));
    json j;
    j["lambda"] = partfn::rat_str(t.lambda);
    j["lo"] = partfn::rat_str(t.lo);
    j["hi"] = partfn::rat_str(t.hi);
    j["mean_at_lambda"] = partfn::rat_str(partfn::mean_size(c, t.lambda));
    *out = dup_string(dump(j));
    return PF_OK;
  });
}

pf_status pf_sampling_distance(const pf_graph* g, const pf_graph* h, int r_max,
                               int with_float, char** out) {
  return guarded([&] {
    if (!out) throw partfn::UsageError("null argument");
    partfn::DistanceResult r =
        partfn::sampling_distance(deref(g), deref(h), r_max);
    *out = dup_string(partfn::distance_json(r, with_float != 0));
    return PF_OK;
  });
}

pf_status pf_fraction_outside(const pf_graph* g, int d, char** out) {
  return guarded([&] {
    if (!out) throw partfn::UsageError("null argument");
    partfn::BigRat f = partfn::fraction_outside_kdd(deref(g), d);
    json j;
    j["fraction_outside"] = partfn::rat_str(f);
    *out = dup_string(dump(j));
    return PF_OK;
  });
}

pf_status pf_lp(int d, const char* kind, const char* lambda,
                int with_stability, int with_float, char** out) {
  return guarded([&] {
    if (!out) throw partfn::UsageError("null argument");
    partfn::Kind k = parse_kind(kind);
    partfn::BigRat l = parse_rational(lambda, "lambda");
    partfn::LpReport rep = partfn::lp_report(d, k, l);
    partfn::StabilityResult stab;
    bool have_stab = false;
    if (with_stability && rep.tight) {
      stab = partfn::stability_constant(d, k, l);
      have_stab = true;
    }
    *out = dup_string(partfn::lp_json(d, k, l, rep,
                                      have_stab ? &stab : nullptr,
                                      with_float != 0));
    return PF_OK;
  });
}

pf_status pf_lp_text(int d, const char* kind, const char* lambda, char** out) {
  return guarded([&] {
    if (!out) throw partfn::UsageError("null argument");
    partfn::ExactLP lp =
        partfn::build_lp(d, parse_kind(kind), parse_rational(lambda, "lambda"));
    *out = dup_string(partfn::lp_dump(lp));
    return PF_OK;
  });
}

pf_status pf_stability_check(const pf_graph* g, int d, const char* kind,
                             const char* lambda, int* holds) {
  return guarded([&] {
    if (!holds) throw partfn::UsageError("null argument");
    *holds = partfn::stability_gap_check(deref(g), d, parse_kind(kind),
                                         parse_rational(lambda, "lambda"))
                 ? 1
                 : 0;
    return PF_OK;
  });
}

pf_status pf_dominance(const char* zg_json, const char* zh_json, char** out) {
  return guarded([&] {
    if (!zg_json || !zh_json || !out) throw partfn::UsageError("null argument");
    partfn::CoefVector zg = partfn::coef_from_json(zg_json);
    partfn::CoefVector zh = partfn::coef_from_json(zh_json);
    partfn::DominanceReport rep = partfn::dominance(zg, zh);
    std::string violated;
    bool consistent = partfn::hierarchy_consistency(zg, zh, &violated);
    json j = json::parse(partfn::dominance_json(rep));
    j["hierarchy_consistent"] = consistent;
    if (!consistent) j["violated_implication"] = violated;
    json rk = json::array();
    for (const auto& r : partfn::rk_coefficients(zg, zh))
      rk.push_back(partfn::rat_str(r));
    j["rk"] = rk;
    *out = dup_string(dump(j));
    return PF_OK;
  });
}

pf_status pf_cutler_radcliffe(const pf_graph* g, int d, int* holds) {
  return guarded([&] {
    if (!holds) throw partfn::UsageError("null argument");
    const partfn::Graph& gr = deref(g);
    *holds = partfn::cutler_radcliffe_check(gr, d, gr.n) ? 1 : 0;
    return PF_OK;
  });
}

pf_status pf_convolution(const pf_graph* g, const char* kind, int q,
                         const char* lambda, int K, int with_float,
                         char** out) {
  return guarded([&] {
    if (!out) throw partfn::UsageError("null argument");
    partfn::CoefVector c = partfn::coeffs_for(deref(g), parse_kind(kind), q);
    partfn::SizeDistribution base =
        partfn::size_distribution(c, parse_rational(lambda, "lambda"));
    partfn::ConvolutionPower cp = partfn::convolution_power(base, K);
    json j;
    j["K"] = K;
    partfn::BigRat mean = 0;
    for (size_t i = 0; i < cp.dist.prob.size(); ++i)
      mean += partfn::BigRat(static_cast<unsigned>(i)) * cp.dist.prob[i];
    j["mean"] = partfn::rat_str(mean);
    j["var"] = partfn::rat_str(partfn::variance_size(cp.dist));
    json probs = json::array();
    for (const auto& p : cp.dist.prob) probs.push_back(partfn::rat_str(p));
    j["prob"] = probs;
    if (with_float) {
      json fl = json::array();
      for (const auto& p : cp.dist.prob) fl.push_back(partfn::rat_approx(p));
      j["prob_float"] = fl;
    }
    *out = dup_string(dump(j));
    return PF_OK;
  });
}

pf_status pf_gnedenko(const pf_graph* g, const char* kind, int q,
                      const char* lambda, int K, char** json_out,
                      char** csv_out) {
  return guarded([&] {
    if (!json_out) throw partfn::UsageError("null argument");
    partfn::CoefVector c = partfn::coeffs_for(deref(g), parse_kind(kind), q);
    partfn::SizeDistribution base =
        partfn::size_distribution(c, parse_rational(lambda, "lambda"));
    partfn::GnedenkoResult r = partfn::gnedenko_deviation(base, K);
    *json_out = dup_string(partfn::gnedenko_json(r));
    if (csv_out) *csv_out = dup_string(partfn::gnedenko_csv(r));
    return PF_OK;
  });
}

pf_status pf_ratio_check(int d, int n, int k, int r_max, const char* delta,
                         const char* kind, int q, char** out) {
  return guarded([&] {
    if (!out) throw partfn::UsageError("null argument");
    partfn::RatioLemmaResult r = partfn::ratio_lemma_check(
        d, n, k, r_max, parse_rational(delta, "delta"), parse_kind(kind), q);
    *out = dup_string(partfn::ratio_json(r));
    return PF_OK;
  });
}

pf_status pf_audit(const pf_graph* gprime, int d, int n, int k,
                   const char* audit_case, const char* kind, int q,
                   const char* delta, const char* delta_prime,
                   int n1_threshold, int with_float, char** out) {
  return guarded([&] {
    if (!out || !audit_case) throw partfn::UsageError("null argument");
    partfn::AuditParams params;
    params.kind = parse_kind(kind);
    params.q = q;
    params.delta = parse_rational(delta, "delta");
    params.delta_prime = parse_rational(delta_prime, "delta_prime");
    params.N1 = n1_threshold;
    partfn::AuditReport rep = partfn::transfer_inequality_audit(
        deref(gprime), d, n, k, partfn::audit_case_from_name(audit_case),
        params);
    *out = dup_string(partfn::audit_json(rep, with_float != 0));
    return PF_OK;
  });
}

pf_status pf_verify(const char* statement, int d, int n, const char* kind,
                    int q, int k_max, const char* grid_csv, const char* only,
                    int jobs, char** out) {
  return guarded([&] {
    if (!out || !statement) throw partfn::UsageError("null argument");
    std::string st = statement;
    std::string only_s = only ? only : "";
    partfn::Verdict v;
    if (st == "coefficient") {
      v = partfn::verify_coefficient_dominance(d, n, parse_kind(kind), q,
                                               k_max, jobs, only_s);
    } else if (st == "partition") {
      partfn::Kind k = parse_kind(kind);
      std::vector<partfn::BigRat> grid;
      if (grid_csv && *grid_csv) {
        std::string s = grid_csv;
        size_t pos = 0;
        while (pos <= s.size()) {
          size_t comma = s.find(',', pos);
          if (comma == std::string::npos) comma = s.size();
          grid.push_back(parse_rational(s.substr(pos, comma - pos).c_str(),
                                        "grid entry"));
          pos = comma + 1;
        }
      } else {
        grid = k == partfn::Kind::Potts ? partfn::potts_lambda_grid()
                                        : partfn::default_lambda_grid();
      }
      v = partfn::verify_partition_dominance(d, n, k, grid, q, jobs, only_s);
    } else if (st == "girth5") {
      v = partfn::verify_girth5(n, k_max, jobs, only_s);
    } else if (st == "bregman") {
      v = partfn::verify_bregman_regular(d, n, jobs, only_s);
    } else {
      throw partfn::UsageError("unknown statement: " + st);
    }
    *out = dup_string(partfn::verdict_json(v));
    return (v.theorem_backed && v.failed > 0) ? PF_THEOREM_FAIL : PF_OK;
  });
}

}  // extern "C"
