#pragma once

#include <string>
#include <vector>

#include "partfn/counts.hpp"
#include "partfn/graph.hpp"
#include "partfn/observables.hpp"
#include "partfn/rational.hpp"

namespace partfn {

// exact distribution of a sum of K i.i.d. copies of base
struct ConvolutionPower {
  SizeDistribution base;
  int K = 1;
  SizeDistribution dist;
};

ConvolutionPower convolution_power(const SizeDistribution& base, int K);

BigRat variance_size(const SizeDistribution& dist);

struct GnedenkoRow {
  int k;
  std::string exact;      // P(S = k), decimal
  std::string gaussian;   // density at k for N(K mu, K sigma^2)
  std::string deviation;  // |exact - gaussian|
};

// Comparison of the exact convolved distribution against the Gaussian
// density with matching mean and variance.  This is the one place in the
// library where floating point appears: the comparison runs twice, at 80
// and at 160 decimal digits of working precision, and the two results must
// agree to 50 digits before the value is reported.
struct GnedenkoResult {
  int K = 1;
  bool lattice_ok = true;  // support contains two consecutive integers
  BigRat mean, var;        // of the sum
  std::string deviation;   // max_k |P(S=k) - gaussian(k)|, 50+ digits
  double deviation_approx = 0.0;
  std::vector<GnedenkoRow> rows;
};

GnedenkoResult gnedenko_deviation(const SizeDistribution& base, int K);
std::string gnedenko_csv(const GnedenkoResult& r);

// scaled deviations dev*sqrt(K) along a ladder of K values; nonincreasing
// up to the given multiplicative slack
bool gnedenko_ladder_nonincreasing(const SizeDistribution& base,
                                   const std::vector<int>& ks, double slack,
                                   std::vector<std::string>* scaled = nullptr);

struct RatioLemmaResult {
  BigRat lambda;          // midpoint of the tuned bracket
  BigRat eps;             // k/n
  bool ok = false;        // sandwich holds for every 0 <= r <= r_max
  bool lambda_lower_ok = false;  // certified lambda bound from the
                                 // occupancy inequality (match) or
                                 // monotonicity at lambda = 1 (potts)
  bool n_independent = false;    // tuning on one component scaled to the
                                 // same per-component mean lands in an
                                 // overlapping bracket
  int first_n = -1;              // smallest n' (multiple of 2d) at which the
                                 // sandwich already holds for this delta
  std::vector<std::string> notes;
};

// Sandwich (1-delta) a_{k-r} <= lambda^r a_k <= (1+delta) a_{k-r} on
// H_{d,n}, with lambda tuned so the mean configuration size is k.
RatioLemmaResult ratio_lemma_check(int d, int n, int k, int r_max,
                                   const BigRat& delta, Kind kind, int q = 0);

enum class AuditCase { Small1, Small2, Large };

std::string audit_case_name(AuditCase c);
AuditCase audit_case_from_name(const std::string& s);

struct AuditParams {
  BigRat delta = BigRat(1, 10);
  BigRat delta_prime = BigRat(1, 10);
  int N1 = -1;  // threshold for "small" G'; defaults to |G'|
  Kind kind = Kind::Match;
  int q = 0;
};

struct AuditLine {
  std::string label;
  BigRat lhs, rhs;
  std::string relation;  // "<=", "<", ">=", "=="
  bool holds = false;
  std::string note;
};

struct AuditReport {
  AuditCase acase = AuditCase::Small1;
  std::string gprime6;
  int d = 0, n = 0, k = 0, n1 = 0, n2 = 0;
  AuditParams params;
  BigRat lambda;  // tuned fugacity, when the case uses one
  std::vector<AuditLine> lines;
  bool all_hold = false;
};

// Evaluates every display of the selected case of the coefficient transfer
// argument at the given finite parameters, exactly.  G = gprime plus a
// union of K_{d,d} components filling up n vertices.  Nothing here proves
// an asymptotic statement; each line reports whether the inequality holds
// at these parameters and by what margin.
AuditReport transfer_inequality_audit(const Graph& gprime, int d, int n, int k,
                                      AuditCase acase,
                                      const AuditParams& params = {});

}  // namespace partfn
