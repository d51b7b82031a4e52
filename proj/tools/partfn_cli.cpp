// Command-line front end.  All computation happens behind the C API in
// libpartfn; this translation unit only parses arguments, moves strings
// and maps pf_status values to exit codes (0 ok, 1 theorem failure, 2
// usage, 3 capacity).

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "partfn.h"

namespace {

int report_status(pf_status st) {
  if (st != PF_OK && st != PF_THEOREM_FAIL)
    std::cerr << "error: " << pf_last_error() << "\n";
  return static_cast<int>(st);
}

int emit(const std::string& path, char* text, pf_status st) {
  if (text) {
    if (path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        pf_string_free(text);
        return 2;
      }
      out << text;
    }
    pf_string_free(text);
  }
  return report_status(st);
}

struct GraphOpts {
  std::string name, g6, json_file;

  void attach(CLI::App* cmd, const std::string& prefix = "") {
    std::string dash = prefix.empty() ? "--" : "--" + prefix + "-";
    if (prefix.empty()) dash = "--";
    cmd->add_option(dash + "graph", name,
                    "named graph (K33, C8, Prism, H3,12, GP7,2, A+B, ...)");
    cmd->add_option(dash + "graph6", g6, "graph6 string");
    cmd->add_option(dash + "json", json_file, "path to a graph JSON file");
  }

  // exactly one source must be set; returns a fresh handle or null
  pf_graph* load(int* rc) const {
    int set = (!name.empty()) + (!g6.empty()) + (!json_file.empty());
    if (set != 1) {
      std::cerr << "error: provide exactly one of --graph, --graph6, --json\n";
      *rc = 2;
      return nullptr;
    }
    pf_graph* g = nullptr;
    pf_status st;
    if (!name.empty()) {
      st = pf_graph_named(name.c_str(), &g);
    } else if (!g6.empty()) {
      st = pf_graph_from_graph6(g6.c_str(), &g);
    } else {
      std::ifstream in(json_file, std::ios::binary);
      if (!in) {
        std::cerr << "error: cannot read " << json_file << "\n";
        *rc = 2;
        return nullptr;
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      st = pf_graph_from_json(buf.str().c_str(), &g);
    }
    if (st != PF_OK) {
      *rc = report_status(st);
      return nullptr;
    }
    *rc = 0;
    return g;
  }
};

struct GraphHandle {
  pf_graph* g = nullptr;
  ~GraphHandle() { pf_graph_free(g); }
};

std::string coeffs_csv_to_json(const std::string& csv, int* rc) {
  std::string out = "{\"coeffs\":[";
  size_t pos = 0;
  bool first = true;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    std::string tok = csv.substr(pos, comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      std::cerr << "error: coefficient lists are comma-separated nonnegative "
                   "integers, got '"
                << tok << "'\n";
      *rc = 2;
      return "";
    }
    if (!first) out += ',';
    out += '"' + tok + '"';
    first = false;
    pos = comma + 1;
  }
  out += "]}";
  *rc = 0;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact partition-function coefficients, occupancy bounds and "
               "dominance checks for bounded-degree graphs"};
  app.require_subcommand(1);
  std::function<int()> action;

  // poly
  {
    auto* cmd = app.add_subcommand("poly", "coefficient vector of a partition function");
    auto gopts = std::make_shared<GraphOpts>();
    gopts->attach(cmd);
    auto kind = std::make_shared<std::string>("match");
    auto q = std::make_shared<int>(0);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--kind", *kind, "match, ind or potts")->capture_default_str();
    cmd->add_option("--q", *q, "color count for potts");
    cmd->add_option("--out", *out, "output path (default stdout)");
    cmd->callback([=, &action] {
      action = [=] {
        int rc = 0;
        GraphHandle h{gopts->load(&rc)};
        if (!h.g) return rc;
        char* text = nullptr;
        pf_status st = pf_coeffs(h.g, kind->c_str(), *q, &text);
        return emit(*out, text, st);
      };
    });
  }

  // obs
  {
    auto* cmd = app.add_subcommand("obs", "observables at one fugacity");
    auto gopts = std::make_shared<GraphOpts>();
    gopts->attach(cmd);
    auto kind = std::make_shared<std::string>("match");
    auto q = std::make_shared<int>(0);
    auto lambda = std::make_shared<std::string>("1");
    auto tune = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto views = std::make_shared<bool>(false);
    auto with_float = std::make_shared<bool>(false);
    cmd->add_option("--kind", *kind, "match, ind or potts")->capture_default_str();
    cmd->add_option("--q", *q, "color count for potts");
    cmd->add_option("--lambda", *lambda, "fugacity, exact rational")->capture_default_str();
    cmd->add_flag("--views", *views, "emit the local view distribution instead");
    cmd->add_option("--tune", *tune, "emit the fugacity bracketing this mean size");
    cmd->add_flag("--float", *with_float, "add lossy decimal companions");
    cmd->add_option("--out", *out, "output path (default stdout)");
    cmd->callback([=, &action] {
      action = [=] {
        int rc = 0;
        GraphHandle h{gopts->load(&rc)};
        if (!h.g) return rc;
        char* text = nullptr;
        pf_status st;
        if (!tune->empty())
          st = pf_tune(h.g, kind->c_str(), *q, tune->c_str(), &text);
        else if (*views)
          st = pf_local_views(h.g, kind->c_str(), *q, lambda->c_str(),
                              *with_float, &text);
        else
          st = pf_observables(h.g, kind->c_str(), *q, lambda->c_str(),
                              *with_float, &text);
        return emit(*out, text, st);
      };
    });
  }

  // dist
  {
    auto* cmd = app.add_subcommand("dist", "neighborhood sampling distance");
    auto gname = std::make_shared<std::string>();
    auto hname = std::make_shared<std::string>();
    auto g6 = std::make_shared<std::string>();
    auto h6 = std::make_shared<std::string>();
    auto rmax = std::make_shared<int>(6);
    auto outside = std::make_shared<int>(0);
    auto out = std::make_shared<std::string>();
    auto with_float = std::make_shared<bool>(false);
    cmd->add_option("--G", *gname, "first graph, by name");
    cmd->add_option("--H", *hname, "second graph, by name");
    cmd->add_option("--G6", *g6, "first graph, graph6");
    cmd->add_option("--H6", *h6, "second graph, graph6");
    cmd->add_option("--rmax", *rmax, "truncation radius")->capture_default_str();
    cmd->add_option("--outside-kdd", *outside,
                    "instead: fraction of the first graph outside K_{d,d} "
                    "components, for this d");
    cmd->add_flag("--float", *with_float, "add lossy decimal companions");
    cmd->add_option("--out", *out, "output path (default stdout)");
    cmd->callback([=, &action] {
      action = [=] {
        GraphOpts a{*gname, *g6, ""};
        int rc = 0;
        GraphHandle ga{a.load(&rc)};
        if (!ga.g) return rc;
        char* text = nullptr;
        pf_status st;
        if (*outside > 0) {
          st = pf_fraction_outside(ga.g, *outside, &text);
        } else {
          GraphOpts b{*hname, *h6, ""};
          GraphHandle gb{b.load(&rc)};
          if (!gb.g) return rc;
          st = pf_sampling_distance(ga.g, gb.g, *rmax, *with_float, &text);
        }
        return emit(*out, text, st);
      };
    });
  }

  // lp
  {
    auto* cmd = app.add_subcommand("lp", "occupancy linear program over local views");
    auto d = std::make_shared<int>(3);
    auto kind = std::make_shared<std::string>("match");
    auto lambda = std::make_shared<std::string>("1");
    auto out = std::make_shared<std::string>();
    auto stability = std::make_shared<bool>(false);
    auto dump = std::make_shared<bool>(false);
    auto with_float = std::make_shared<bool>(false);
    auto gopts = std::make_shared<GraphOpts>();
    auto check = std::make_shared<bool>(false);
    cmd->add_option("--d", *d, "degree")->capture_default_str();
    cmd->add_option("--kind", *kind, "match or ind")->capture_default_str();
    cmd->add_option("--lambda", *lambda, "fugacity")->capture_default_str();
    cmd->add_flag("--stability", *stability, "include theta*, f and c when tight");
    cmd->add_flag("--dump", *dump, "human-readable constraint dump");
    cmd->add_flag("--check", *check,
                  "check the occupancy gap inequality for one graph");
    gopts->attach(cmd);
    cmd->add_flag("--float", *with_float, "add lossy decimal companions");
    cmd->add_option("--out", *out, "output path (default stdout)");
    cmd->callback([=, &action] {
      action = [=] {
        char* text = nullptr;
        pf_status st;
        if (*check) {
          int rc = 0;
          GraphHandle h{gopts->load(&rc)};
          if (!h.g) return rc;
          int holds = 0;
          st = pf_stability_check(h.g, *d, kind->c_str(), lambda->c_str(),
                                  &holds);
          if (st == PF_OK) {
            std::string s = std::string("{\n  \"holds\": ") +
                            (holds ? "true" : "false") + "\n}\n";
            text = static_cast<char*>(std::malloc(s.size() + 1));
            std::memcpy(text, s.c_str(), s.size() + 1);
          }
        } else if (*dump) {
          st = pf_lp_text(*d, kind->c_str(), lambda->c_str(), &text);
        } else {
          st = pf_lp(*d, kind->c_str(), lambda->c_str(), *stability,
                     *with_float, &text);
        }
        return emit(*out, text, st);
      };
    });
  }

  // hier
  {
    auto* cmd = app.add_subcommand("hier", "dominance report between two coefficient vectors");
    auto zg = std::make_shared<std::string>();
    auto zh = std::make_shared<std::string>();
    auto gname = std::make_shared<std::string>();
    auto hname = std::make_shared<std::string>();
    auto kind = std::make_shared<std::string>("match");
    auto q = std::make_shared<int>(0);
    auto cutler = std::make_shared<int>(0);
    auto gopts = std::make_shared<GraphOpts>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("--zg", *zg, "first vector, comma-separated integers");
    cmd->add_option("--zh", *zh, "second vector, comma-separated integers");
    cmd->add_option("--G", *gname, "first graph by name (coefficients computed)");
    cmd->add_option("--H", *hname, "second graph by name");
    cmd->add_option("--kind", *kind, "kind used with --G/--H")->capture_default_str();
    cmd->add_option("--q", *q, "color count for potts");
    cmd->add_option("--cutler-radcliffe", *cutler,
                    "instead: check independent-set minimality of a d-regular "
                    "graph against disjoint (d+1)-cliques, for this d");
    gopts->attach(cmd);
    cmd->add_option("--out", *out, "output path (default stdout)");
    cmd->callback([=, &action] {
      action = [=] {
        if (*cutler > 0) {
          int rc = 0;
          GraphHandle h{gopts->load(&rc)};
          if (!h.g) return rc;
          int holds = 0;
          pf_status st = pf_cutler_radcliffe(h.g, *cutler, &holds);
          char* text = nullptr;
          if (st == PF_OK) {
            std::string s = std::string("{\n  \"holds\": ") +
                            (holds ? "true" : "false") + "\n}\n";
            text = static_cast<char*>(std::malloc(s.size() + 1));
            std::memcpy(text, s.c_str(), s.size() + 1);
          }
          return emit(*out, text, st);
        }
        std::string ja, jb;
        if (!zg->empty() && !zh->empty()) {
          int rc = 0;
          ja = coeffs_csv_to_json(*zg, &rc);
          if (rc) return rc;
          jb = coeffs_csv_to_json(*zh, &rc);
          if (rc) return rc;
        } else if (!gname->empty() && !hname->empty()) {
          for (const auto* nm : {gname.get(), hname.get()}) {
            pf_graph* g = nullptr;
            pf_status st = pf_graph_named(nm->c_str(), &g);
            if (st != PF_OK) return report_status(st);
            char* text = nullptr;
            st = pf_coeffs(g, kind->c_str(), *q, &text);
            pf_graph_free(g);
            if (st != PF_OK) return report_status(st);
            (nm == gname.get() ? ja : jb) = text;
            pf_string_free(text);
          }
        } else {
          std::cerr << "error: provide --zg and --zh, or --G and --H\n";
          return 2;
        }
        char* text = nullptr;
        pf_status st = pf_dominance(ja.c_str(), jb.c_str(), &text);
        return emit(*out, text, st);
      };
    });
  }

  // llt
  {
    auto* cmd = app.add_subcommand(
        "llt", "convolution powers, Gaussian comparison, ratio sandwich");
    auto gopts = std::make_shared<GraphOpts>();
    gopts->attach(cmd);
    auto kind = std::make_shared<std::string>("match");
    auto q = std::make_shared<int>(0);
    auto lambda = std::make_shared<std::string>("1");
    auto conv = std::make_shared<int>(0);
    auto gned = std::make_shared<int>(0);
    auto csv = std::make_shared<std::string>();
    auto ratio = std::make_shared<bool>(false);
    auto d = std::make_shared<int>(3);
    auto n = std::make_shared<int>(0);
    auto k = std::make_shared<int>(0);
    auto rmax = std::make_shared<int>(6);
    auto delta = std::make_shared<std::string>("1/10");
    auto with_float = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--kind", *kind, "match, ind or potts")->capture_default_str();
    cmd->add_option("--q", *q, "color count for potts");
    cmd->add_option("--lambda", *lambda, "fugacity")->capture_default_str();
    cmd->add_option("--convolve", *conv, "emit the K-fold convolution power");
    cmd->add_option("--gnedenko", *gned, "emit the Gaussian comparison at this K");
    cmd->add_option("--csv", *csv, "also write the per-k comparison table here");
    cmd->add_flag("--ratio", *ratio, "coefficient ratio sandwich on H_{d,n}");
    cmd->add_option("--d", *d, "degree (ratio mode)")->capture_default_str();
    cmd->add_option("--n", *n, "vertices (ratio mode)");
    cmd->add_option("--k", *k, "target mean size (ratio mode)");
    cmd->add_option("--rmax", *rmax, "shift range (ratio mode)")->capture_default_str();
    cmd->add_option("--delta", *delta, "sandwich width (ratio mode)")->capture_default_str();
    cmd->add_flag("--float", *with_float, "add lossy decimal companions");
    cmd->add_option("--out", *out, "output path (default stdout)");
    cmd->callback([=, &action] {
      action = [=] {
        char* text = nullptr;
        pf_status st;
        if (*ratio) {
          st = pf_ratio_check(*d, *n, *k, *rmax, delta->c_str(), kind->c_str(),
                              *q, &text);
          return emit(*out, text, st);
        }
        int rc = 0;
        GraphHandle h{gopts->load(&rc)};
        if (!h.g) return rc;
        if (*conv > 0) {
          st = pf_convolution(h.g, kind->c_str(), *q, lambda->c_str(), *conv,
                              *with_float, &text);
          return emit(*out, text, st);
        }
        if (*gned > 0) {
          char* csv_text = nullptr;
          st = pf_gnedenko(h.g, kind->c_str(), *q, lambda->c_str(), *gned,
                           &text, csv->empty() ? nullptr : &csv_text);
          if (csv_text) {
            std::ofstream co(*csv, std::ios::binary);
            if (co) co << csv_text;
            pf_string_free(csv_text);
          }
          return emit(*out, text, st);
        }
        std::cerr << "error: pick one of --convolve, --gnedenko, --ratio\n";
        return 2;
      };
    });
  }

  // verify
  {
    auto* cmd = app.add_subcommand("verify", "exhaustive verification harness");
    auto statement = std::make_shared<std::string>();
    auto d = std::make_shared<int>(3);
    auto n = std::make_shared<int>(0);
    auto kind = std::make_shared<std::string>("match");
    auto q = std::make_shared<int>(0);
    auto kmax = std::make_shared<int>(-1);
    auto grid = std::make_shared<std::string>();
    auto only = std::make_shared<std::string>();
    auto jobs = std::make_shared<int>(0);
    auto out = std::make_shared<std::string>();
    cmd->add_option("statement", *statement,
                    "coefficient, partition, girth5 or bregman")
        ->required();
    cmd->add_option("--d", *d, "degree")->capture_default_str();
    cmd->add_option("--n", *n, "vertex count")->required();
    cmd->add_option("--kind", *kind, "match, ind or potts")->capture_default_str();
    cmd->add_option("--q", *q, "color count for potts");
    cmd->add_option("--k-max", *kmax, "restrict the coefficient range");
    cmd->add_option("--grid", *grid, "comma-separated fugacities");
    cmd->add_option("--only", *only, "restrict to one graph6 string");
    cmd->add_option("--jobs", *jobs, "worker threads (default: all cores)");
    cmd->add_option("--out", *out, "output path (default stdout)");
    cmd->callback([=, &action] {
      action = [=] {
        char* text = nullptr;
        pf_status st = pf_verify(statement->c_str(), *d, *n, kind->c_str(), *q,
                                 *kmax, grid->empty() ? nullptr : grid->c_str(),
                                 only->empty() ? nullptr : only->c_str(), *jobs,
                                 &text);
        return emit(*out, text, st);
      };
    });
  }

  // audit
  {
    auto* cmd = app.add_subcommand(
        "audit", "finite-parameter evaluation of the transfer inequalities");
    auto gopts = std::make_shared<GraphOpts>();
    gopts->attach(cmd);
    auto d = std::make_shared<int>(3);
    auto n = std::make_shared<int>(0);
    auto k = std::make_shared<int>(0);
    auto acase = std::make_shared<std::string>("small1");
    auto kind = std::make_shared<std::string>("match");
    auto q = std::make_shared<int>(0);
    auto delta = std::make_shared<std::string>("1/10");
    auto delta_prime = std::make_shared<std::string>("1/10");
    auto n1t = std::make_shared<int>(-1);
    auto with_float = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--d", *d, "degree")->capture_default_str();
    cmd->add_option("--n", *n, "total vertex count")->required();
    cmd->add_option("--k", *k, "coefficient index")->required();
    cmd->add_option("--case", *acase, "small1, small2 or large")->capture_default_str();
    cmd->add_option("--kind", *kind, "match or potts")->capture_default_str();
    cmd->add_option("--q", *q, "color count for potts");
    cmd->add_option("--delta", *delta, "top-gap width")->capture_default_str();
    cmd->add_option("--delta-prime", *delta_prime, "sandwich width")->capture_default_str();
    cmd->add_option("--n1-threshold", *n1t, "small/large threshold (default |G'|)");
    cmd->add_flag("--float", *with_float, "add lossy decimal companions");
    cmd->add_option("--out", *out, "output path (default stdout)");
    cmd->callback([=, &action] {
      action = [=] {
        int rc = 0;
        GraphHandle h{gopts->load(&rc)};
        if (!h.g) return rc;
        char* text = nullptr;
        pf_status st =
            pf_audit(h.g, *d, *n, *k, acase->c_str(), kind->c_str(), *q,
                     delta->c_str(), delta_prime->c_str(), *n1t, *with_float,
                     &text);
        return emit(*out, text, st);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return action ? action() : 2;
}
