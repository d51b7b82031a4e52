#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "partfn/counts.hpp"
#include "partfn/errors.hpp"
#include "partfn/lp.hpp"
#include "partfn/observables.hpp"

using namespace partfn;

namespace {

BigRat alpha_of(const Graph& g, Kind kind, const BigRat& l) {
  return occupancy_fraction(kind, coeffs_for(g, kind), g.n, g.m(), l);
}

void check_certificate(const LpReport& r) {
  const ExactLP& lp = r.lp;
  const SolveResult& s = r.sol;
  size_t cols = lp.views.size(), rows = lp.b.size();
  REQUIRE(s.primal.size() == cols);
  REQUIRE(s.dual.q.size() == rows);
  REQUIRE(s.dual.slack.size() == cols);

  // primal feasibility and objective value
  BigRat obj(0);
  for (size_t i = 0; i < cols; ++i) {
    CHECK(s.primal[i] >= 0);
    obj += lp.objective[i] * s.primal[i];
  }
  CHECK(obj == s.optimum);
  std::vector<BigRat> row_val(rows, BigRat(0));
  for (size_t rI = 0; rI < rows; ++rI) {
    for (size_t i = 0; i < cols; ++i) row_val[rI] += lp.A[rI][i] * s.primal[i];
    CHECK(row_val[rI] <= lp.b[rI]);
  }

  // dual feasibility and strong duality
  BigRat dual_obj(0);
  for (size_t rI = 0; rI < rows; ++rI) {
    CHECK(s.dual.q[rI] >= 0);
    dual_obj += lp.b[rI] * s.dual.q[rI];
  }
  CHECK(dual_obj == s.dual.objective);
  CHECK(s.dual.objective == s.optimum);
  for (size_t i = 0; i < cols; ++i) {
    BigRat atq(0);
    for (size_t rI = 0; rI < rows; ++rI) atq += lp.A[rI][i] * s.dual.q[rI];
    CHECK(s.dual.slack[i] == atq - lp.objective[i]);
    CHECK(s.dual.slack[i] >= 0);
  }

  // complementary slackness both ways
  for (size_t i = 0; i < cols; ++i)
    if (s.primal[i] > 0) CHECK(s.dual.slack[i] == 0);
  for (size_t rI = 0; rI < rows; ++rI)
    if (s.dual.q[rI] > 0) CHECK(row_val[rI] == lp.b[rI]);
}

}  // namespace

TEST_CASE("simplex on a handmade program") {
  // max 3x + 2y, x + y <= 4, x <= 2, y <= 3
  ExactLP lp;
  lp.views.resize(2);
  lp.objective = {BigRat(3), BigRat(2)};
  lp.A = {{BigRat(1), BigRat(1)}, {BigRat(1), BigRat(0)}, {BigRat(0), BigRat(1)}};
  lp.b = {BigRat(4), BigRat(2), BigRat(3)};
  lp.row_names = {"sum", "xcap", "ycap"};
  SolveResult s = solve_lp(lp);
  CHECK(s.optimum == 10);
  CHECK(s.primal[0] == 2);
  CHECK(s.primal[1] == 2);
  CHECK(s.dual.objective == 10);
}

TEST_CASE("view enumeration is certified by hosts") {
  for (Kind kind : {Kind::Match, Kind::Ind}) {
    for (int d : {2, 3}) {
      LocalViewEnum e = enumerate_local_views(d, kind);
      CHECK(e.unrealized.empty());
      REQUIRE(e.hosts.size() == e.views.size());
      for (size_t i = 0; i < e.views.size(); ++i) {
        CHECK(e.hosts[i].is_regular(d));
        // the host really produces this view at some positive probability
        LocalViewDistribution lv =
            local_view_distribution(e.hosts[i], kind, BigRat(1));
        bool found = false;
        for (auto& [view, p] : lv.probs) found |= view.cert == e.views[i].cert;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("lp optimum matches the block occupancy") {
  const std::vector<BigRat> grid{BigRat(1, 4), BigRat(1, 2), BigRat(1),
                                 BigRat(2)};
  for (Kind kind : {Kind::Match, Kind::Ind}) {
    for (int d : {2, 3}) {
      for (const BigRat& l : grid) {
        LpReport r = lp_report(d, kind, l);
        CHECK(r.tight);
        CHECK(r.alpha_kdd == alpha_of(make_kdd(d), kind, l));
        CHECK(r.sol.optimum == r.alpha_kdd);
        CHECK_FALSE(r.gap_witness.has_value());
        check_certificate(r);
        CHECK_FALSE(r.zero_slack.empty());
      }
    }
  }
  LpReport pinned = lp_report(3, Kind::Match, BigRat(1));
  CHECK(pinned.sol.optimum == BigRat(7, 34));
  LpReport pinned_ind = lp_report(3, Kind::Ind, BigRat(1));
  CHECK(pinned_ind.sol.optimum == BigRat(4, 15));
}

TEST_CASE("graph view distributions are feasible points") {
  for (Kind kind : {Kind::Match, Kind::Ind}) {
    ExactLP lp = build_lp(3, kind, BigRat(1));
    std::map<Cert, size_t> index;
    for (size_t i = 0; i < lp.views.size(); ++i) index[lp.views[i].cert] = i;
    for (const char* name : {"K33", "Prism", "Petersen"}) {
      Graph g = make_named(name);
      LocalViewDistribution lv = local_view_distribution(g, kind, BigRat(1));
      std::vector<BigRat> p(lp.views.size(), BigRat(0));
      for (auto& [view, prob] : lv.probs) {
        REQUIRE(index.count(view.cert));
        p[index[view.cert]] = prob;
      }
      for (size_t rI = 0; rI < lp.b.size(); ++rI) {
        BigRat v(0);
        for (size_t i = 0; i < p.size(); ++i) v += lp.A[rI][i] * p[i];
        CHECK(v <= lp.b[rI]);
      }
      // the objective recovers the graph's occupancy fraction
      BigRat obj(0);
      for (size_t i = 0; i < p.size(); ++i) obj += lp.objective[i] * p[i];
      CHECK(obj == alpha_of(g, kind, BigRat(1)));
    }
  }
}

TEST_CASE("stability constants") {
  StabilityResult s = stability_constant(3, Kind::Match, BigRat(1));
  CHECK(s.theta_star > 0);
  CHECK(s.f == f_match(3, BigRat(1)));
  CHECK(s.f > 0);
  CHECK(s.c == s.f * s.theta_star);

  CHECK(f_ind(3, BigRat(1)) == BigRat(1, 128));
  CHECK(f_girth5(BigRat(1)) > 0);
  CHECK(f_coloring(3, 3, BigRat(1)) > 0);

  StabilityResult si = stability_constant(3, Kind::Ind, BigRat(1));
  CHECK(si.theta_star > 0);
  CHECK(si.c > 0);
}

TEST_CASE("stability gap inequality on small cubic graphs") {
  for (int n : {4, 6, 8}) {
    for (const Graph& g : enumerate_regular(3, n)) {
      for (const BigRat& l : {BigRat(1, 2), BigRat(1)}) {
        CHECK(stability_gap_check(g, 3, Kind::Match, l));
        CHECK(stability_gap_check(g, 3, Kind::Ind, l));
      }
    }
  }
}

TEST_CASE("lp dump is human readable") {
  std::string text = lp_dump(build_lp(2, Kind::Match, BigRat(1)));
  CHECK(text.find("<=") != std::string::npos);
  CHECK_FALSE(text.empty());
}

TEST_CASE("usage guards") {
  CHECK_THROWS_AS(build_lp(0, Kind::Match, BigRat(1)), UsageError);
  CHECK_THROWS_AS(build_lp(3, Kind::Match, BigRat(-1)), UsageError);
  CHECK_THROWS_AS(lp_report(3, Kind::Potts, BigRat(1)), UsageError);
}
