#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partfn/observables.hpp"

namespace partfn {

// max objective . p subject to A p <= b, p >= 0; columns are local views
struct ExactLP {
  std::vector<LocalView> views;
  std::vector<std::vector<BigRat>> A;
  std::vector<BigRat> b;
  std::vector<BigRat> objective;
  std::vector<std::string> row_names;
};

struct DualCertificate {
  std::vector<BigRat> q;      // one multiplier per row, >= 0
  BigRat objective;           // b . q
  std::vector<BigRat> slack;  // per column: (A^T q)_L - a_L, >= 0
};

struct SolveResult {
  BigRat optimum;
  std::vector<BigRat> primal;
  DualCertificate dual;
};

struct LocalViewEnum {
  int d = 0;
  Kind kind = Kind::Match;
  std::vector<LocalView> views;           // sorted by cert
  std::vector<Graph> hosts;               // realizing host per view
  std::vector<LocalView> unrealized;      // candidates with no host found
};

// all local views realizable in d-regular graphs, each certified by a host
// graph found among small d-regular graphs
LocalViewEnum enumerate_local_views(int d, Kind kind);

ExactLP build_lp(int d, Kind kind, const BigRat& lambda);
SolveResult solve_lp(const ExactLP& lp);

struct LpReport {
  ExactLP lp;
  SolveResult sol;
  BigRat alpha_kdd;
  bool tight = false;
  std::vector<int> zero_slack;  // column indices of L*
  // optimizer distribution exceeding alpha_kdd, present when not tight
  std::optional<std::vector<BigRat>> gap_witness;
};
LpReport lp_report(int d, Kind kind, const BigRat& lambda);

struct StabilityResult {
  BigRat theta_star;  // minimum positive dual slack
  BigRat f;           // realizability constant
  BigRat c;           // f * theta_star
};

BigRat f_match(int d, const BigRat& lambda);
BigRat f_ind(int d, const BigRat& lambda);
BigRat f_girth5(const BigRat& lambda);
BigRat f_coloring(int d, int q, const BigRat& lambda);

StabilityResult stability_constant(int d, Kind kind, const BigRat& lambda);

// alpha_G <= alpha_{K_{d,d}} - c * dist, with dist a certified upper bound
// on the sampling distance to K_{d,d}
bool stability_gap_check(const Graph& g, int d, Kind kind, const BigRat& lambda);

// conditional occupancy of the root object given the view, and expected
// occupancy over the view's neighbor slots
BigRat view_a(const LocalView& v, const BigRat& lambda);
BigRat view_g(const LocalView& v, const BigRat& lambda);

std::string lp_dump(const ExactLP& lp);

}  // namespace partfn
