#include "partfn/llt.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <cassert>
#include <sstream>

#include "partfn/errors.hpp"

namespace partfn {
namespace {

using F80 = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<80>>;
using F160 = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<160>>;

template <class F>
F to_float(const BigRat& x) {
  // exact decimal strings for numerator and denominator; one rounded division
  return F(rat_num(x).str()) / F(rat_den(x).str());
}

std::vector<BigRat> convolve_prob(const std::vector<BigRat>& a,
                                  const std::vector<BigRat>& b) {
  std::vector<BigRat> out(a.size() + b.size() - 1, BigRat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

template <class F>
F max_gauss_deviation(const std::vector<BigRat>& p, const BigRat& mean,
                      const BigRat& var, std::vector<GnedenkoRow>* rows) {
  const F mu = to_float<F>(mean);
  const F s2 = to_float<F>(var);
  const F norm = 1 / sqrt(2 * boost::math::constants::pi<F>() * s2);
  F worst = 0;
  for (size_t k = 0; k < p.size(); ++k) {
    F x = F(static_cast<unsigned>(k)) - mu;
    F gauss = norm * exp(-x * x / (2 * s2));
    F exact = to_float<F>(p[k]);
    F dev = abs(exact - gauss);
    if (dev > worst) worst = dev;
    if (rows)
      rows->push_back({static_cast<int>(k), exact.str(30), gauss.str(30),
                       dev.str(30)});
  }
  return worst;
}

BigRat at_rat(const CoefVector& v, int k) {
  return (k >= 0 && k < static_cast<int>(v.size())) ? BigRat(v[k]) : BigRat(0);
}

}  // namespace

ConvolutionPower convolution_power(const SizeDistribution& base, int K) {
  if (K < 1) throw UsageError("convolution power needs K >= 1");
  if (base.prob.empty()) throw UsageError("empty base distribution");
  ConvolutionPower r;
  r.base = base;
  r.K = K;
  // repeated squaring on the probability vector
  std::vector<BigRat> acc{BigRat(1)};
  std::vector<BigRat> sq = base.prob;
  int e = K;
  while (e > 0) {
    if (e & 1) acc = convolve_prob(acc, sq);
    e >>= 1;
    if (e > 0) sq = convolve_prob(sq, sq);
  }
  r.dist.prob = std::move(acc);
  return r;
}

BigRat variance_size(const SizeDistribution& dist) {
  BigRat m = 0, m2 = 0;
  for (size_t k = 0; k < dist.prob.size(); ++k) {
    m += BigRat(static_cast<unsigned>(k)) * dist.prob[k];
    m2 += BigRat(static_cast<unsigned>(k * k)) * dist.prob[k];
  }
  return m2 - m * m;
}

GnedenkoResult gnedenko_deviation(const SizeDistribution& base, int K) {
  GnedenkoResult r;
  r.K = K;
  r.lattice_ok = false;
  for (size_t k = 0; k + 1 < base.prob.size(); ++k)
    if (base.prob[k] > 0 && base.prob[k + 1] > 0) r.lattice_ok = true;

  ConvolutionPower cp = convolution_power(base, K);
  BigRat m1 = 0;
  for (size_t k = 0; k < base.prob.size(); ++k)
    m1 += BigRat(static_cast<unsigned>(k)) * base.prob[k];
  r.mean = BigRat(K) * m1;
  r.var = BigRat(K) * variance_size(base);
  if (r.var == 0) throw UsageError("degenerate distribution has no Gaussian scale");

  F80 d1 = max_gauss_deviation<F80>(cp.dist.prob, r.mean, r.var, nullptr);
  F160 d2 = max_gauss_deviation<F160>(cp.dist.prob, r.mean, r.var, &r.rows);
  F160 gap = abs(F160(d1.str()) - d2);
  if (gap > F160("1e-50") * (1 + abs(d2)))
    throw std::runtime_error("floating comparison did not stabilize at 160 digits");
  r.deviation = d2.str(55);
  r.deviation_approx = d2.convert_to<double>();
  return r;
}

std::string gnedenko_csv(const GnedenkoResult& r) {
  std::ostringstream os;
  os << "k,exact,gaussian,deviation\n";
  for (const auto& row : r.rows)
    os << row.k << ',' << row.exact << ',' << row.gaussian << ','
       << row.deviation << '\n';
  return os.str();
}

bool gnedenko_ladder_nonincreasing(const SizeDistribution& base,
                                   const std::vector<int>& ks, double slack,
                                   std::vector<std::string>* scaled) {
  if (ks.empty()) throw UsageError("empty ladder of convolution powers");
  bool ok = true;
  F160 prev = 0;
  for (size_t i = 0; i < ks.size(); ++i) {
    GnedenkoResult r = gnedenko_deviation(base, ks[i]);
    F160 val = F160(r.deviation) * sqrt(F160(ks[i]));
    if (scaled) scaled->push_back(val.str(30));
    if (i > 0 && val > prev * F160(1 + slack)) ok = false;
    prev = val;
  }
  return ok;
}

RatioLemmaResult ratio_lemma_check(int d, int n, int k, int r_max,
                                   const BigRat& delta, Kind kind, int q) {
  if (d < 1 || n < 2 * d || n % (2 * d) != 0)
    throw UsageError("need n a positive multiple of 2d");
  if (kind == Kind::Ind) throw UsageError("ratio lemma covers match and potts");
  if (kind == Kind::Potts && (q < 2)) throw UsageError("potts needs q >= 2");
  if (r_max < 0 || r_max > k) throw UsageError("need 0 <= r_max <= k");
  if (delta <= 0 || delta >= 1) throw UsageError("delta must lie in (0,1)");

  CoefVector h = hdn_coeffs(d, n, kind, q);
  int sup = static_cast<int>(h.size()) - 1;  // n d / 2 for potts, n/2 for match
  if (k < 1 || k >= sup) throw UsageError("k outside the tunable mean range");

  RatioLemmaResult res;
  res.eps = BigRat(k, n);

  TuneResult tune = tune_lambda(h, BigRat(k));
  res.lambda = tune.lambda;
  res.notes.push_back("tuned bracket [" + rat_str(tune.lo) + ", " +
                      rat_str(tune.hi) + "]");

  auto sandwich = [&](const CoefVector& c, int kk, const BigRat& lam,
                      int rmax) {
    BigRat top = at_rat(c, kk);
    for (int r = 0; r <= rmax; ++r) {
      BigRat side = at_rat(c, kk - r);
      BigRat mid = pow_rat(lam, r) * top;
      if (!((1 - delta) * side <= mid && mid <= (1 + delta) * side))
        return false;
    }
    return true;
  };
  res.ok = sandwich(h, k, res.lambda, r_max);

  if (kind == Kind::Match) {
    // mean k forces occupancy 2k/(nd), and occupancy never exceeds
    // lambda/(1+lambda), so the bound transfers to the bracket top
    BigRat target = BigRat(2 * k, n * d);
    res.lambda_lower_ok = tune.hi / (1 + tune.hi) >= target;
    res.notes.push_back("occupancy target 2k/(nd) = " + rat_str(target));
  } else {
    // mean at lambda=1 is dn/2q for every graph, and the mean is strictly
    // increasing, so lambda < 1 exactly when 2qk < dn
    res.lambda_lower_ok = BigInt(2) * q * k < BigInt(d) * n;
    res.notes.push_back(res.lambda_lower_ok ? "2qk < dn so lambda < 1"
                                            : "2qk >= dn so lambda >= 1");
  }

  // the tuned fugacity depends only on (d, k/n): retune on one block
  CoefVector block = coeffs_for(complete_bipartite(d, d), kind, q);
  BigRat per_block = BigRat(BigInt(2) * d * k, BigInt(n));
  TuneResult tune1 = tune_lambda(block, per_block);
  res.n_independent =
      std::max(tune.lo, tune1.lo) <= std::min(tune.hi, tune1.hi);
  res.notes.push_back("single block bracket [" + rat_str(tune1.lo) + ", " +
                      rat_str(tune1.hi) + "]");

  for (int np = 2 * d; np <= n; np += 2 * d) {
    int kp = static_cast<int>((static_cast<long long>(k) * np) / n);
    CoefVector hp = (np == n) ? h : hdn_coeffs(d, np, kind, q);
    int supp = static_cast<int>(hp.size()) - 1;
    if (kp < 1 || kp >= supp || r_max > kp) continue;
    TuneResult tp = tune_lambda(hp, BigRat(kp));
    if (sandwich(hp, kp, tp.lambda, r_max)) {
      res.first_n = np;
      break;
    }
  }
  return res;
}

std::string audit_case_name(AuditCase c) {
  switch (c) {
    case AuditCase::Small1: return "small1";
    case AuditCase::Small2: return "small2";
    case AuditCase::Large: return "large";
  }
  return "?";
}

AuditCase audit_case_from_name(const std::string& s) {
  if (s == "small1") return AuditCase::Small1;
  if (s == "small2") return AuditCase::Small2;
  if (s == "large") return AuditCase::Large;
  throw UsageError("unknown audit case: " + s);
}

AuditReport transfer_inequality_audit(const Graph& gprime, int d, int n, int k,
                                      AuditCase acase,
                                      const AuditParams& params) {
  const Kind kind = params.kind;
  const int q = params.q;
  if (kind == Kind::Ind) throw UsageError("audit covers match and potts");
  if (kind == Kind::Potts && q < 2) throw UsageError("potts needs q >= 2");
  const int n1 = gprime.n;
  const int n2 = n - n1;
  if (n1 < 2 || n1 % (2 * d) != 0 || n2 < 0 || n2 % (2 * d) != 0)
    throw UsageError("need |G'| and n - |G'| nonnegative multiples of 2d");
  for (int v = 0; v < n1; ++v)
    if (gprime.degree(v) != d) throw UsageError("G' must be d-regular");
  for (const auto& comp : components(gprime))
    if (is_complete_bipartite_dd(induced_subgraph(gprime, comp), d))
      throw UsageError("G' must not contain a K_{d,d} component");
  const int N1 = params.N1 < 0 ? n1 : params.N1;
  const int ktop = kind == Kind::Match ? n / 2 : d * n / 2;
  if (k < 0 || k > ktop) throw UsageError("k outside the coefficient range");

  AuditReport rep;
  rep.acase = acase;
  rep.gprime6 = to_graph6(gprime);
  rep.d = d;
  rep.n = n;
  rep.k = k;
  rep.n1 = n1;
  rep.n2 = n2;
  rep.params = params;
  rep.params.N1 = N1;

  const CoefVector cg = coeffs_for(gprime, kind, q);
  const CoefVector ch = hdn_coeffs(d, n2, kind, q);   // the K_{d,d} part
  const CoefVector chp = hdn_coeffs(d, n1, kind, q);  // same size as G'
  const CoefVector chn = hdn_coeffs(d, n, kind, q);
  const CoefVector cG = disjoint_union_coeffs(cg, ch);

  auto add = [&](const std::string& label, const BigRat& lhs,
                 const BigRat& rhs, const std::string& rel,
                 const std::string& note = "") {
    bool h = rel == "<=" ? lhs <= rhs
             : rel == "<"  ? lhs < rhs
             : rel == ">=" ? lhs >= rhs
                           : lhs == rhs;
    rep.lines.push_back({label, lhs, rhs, rel, h, note});
  };

  const BigRat delta = params.delta;
  const BigRat dp = params.delta_prime;
  // the index carrying the constant-factor gap: top coefficient for
  // matchings, proper colorings (index 0) for potts
  const int top = kind == Kind::Match ? n1 / 2 : 0;

  if (acase == AuditCase::Small1) {
    add("top-gap", at_rat(cg, top), (1 - delta) * at_rat(chp, top), "<=",
        kind == Kind::Match ? "perfect matchings of G' vs H at |G'|"
                            : "proper colorings of G' vs H at |G'|");

    if (kind == Kind::Match) {
      if (d * N1 % 2 != 0) throw UsageError("d*N1 must be even");
      BigRat ratio = at_rat(chn, k) == 0
                         ? BigRat(0)
                         : at_rat(chn, k + 1) / at_rat(chn, k);
      add("ratio-bound", ratio, BigRat(d * (n - 2 * k), 2 * (k + 1)), "<=",
          "augmenting a size-k matching");
      add("top-ratio", ratio,
          delta / BigRat(BigInt(1) << (d * N1 / 2)), "<",
          "consecutive coefficient ratio near the top");
    } else {
      if (k < 1) throw UsageError("potts small1 needs k >= 1");
      bool undef = at_rat(chn, k) == 0;
      BigRat ratio = undef ? BigRat(0) : at_rat(chn, k - 1) / at_rat(chn, k);
      add("recolor-bound", at_rat(chn, k),
          BigRat(BigInt(n), BigInt(4 * d) * k * pow_int(BigInt(q), 2 * d)) *
              at_rat(chn, k - 1),
          ">=", "one clean block recolored to a single monochromatic edge");
      add("top-ratio", ratio, delta / BigRat(pow_int(BigInt(q), N1)), "<",
          undef ? "undefined: zero denominator" : "");
    }

    // the five-step chain through the split at the gap index
    int shift = kind == Kind::Match ? k - n1 / 2 : k;
    BigRat x = at_rat(ch, shift);
    BigRat big = 0;
    if (kind == Kind::Match) {
      for (int kp = shift + 1; kp < static_cast<int>(ch.size()); ++kp)
        big = std::max(big, at_rat(ch, kp));
      big *= BigRat(BigInt(1) << (d * n1 / 2));
    } else {
      for (int kp = 0; kp < std::min(k, static_cast<int>(ch.size())); ++kp)
        big = std::max(big, at_rat(ch, kp));
      big *= BigRat(pow_int(BigInt(q), n1));
    }
    BigRat s0 = at_rat(cG, k);
    BigRat s1 = at_rat(cg, top) * x + big;
    BigRat s2 = (1 - delta) * at_rat(chp, top) * x + big;
    BigRat s3 = (1 - delta) * at_rat(chp, top) * x + delta * x;
    BigRat s4 = at_rat(chp, top) * x;
    BigRat s5 = at_rat(chn, k);
    add("chain-1", s0, s1, "<=", "split off the extremal G' term");
    add("chain-2", s1, s2, "<=", "uses top-gap");
    add("chain-3", s2, s3, "<=", "uses top-ratio");
    add("chain-4", s3, s4, "<=", "absorb the delta slack");
    add("chain-5", s4, s5, "<=", "one term of the full convolution");
  } else if (acase == AuditCase::Small2) {
    if (n2 == 0) throw UsageError("small2 needs a nonempty K_{d,d} part");
    int sup = static_cast<int>(ch.size()) - 1;
    if (k < 1 || k >= sup)
      throw UsageError("k outside the tunable mean range of the K_{d,d} part");
    TuneResult tune = tune_lambda(ch, BigRat(k));
    rep.lambda = tune.lambda;

    int rmax = kind == Kind::Match ? n1 : d * n1 / 2;
    bool truncated = rmax > k;
    if (truncated) rmax = k;
    BigRat lo_ratio, hi_ratio;
    bool first = true;
    BigRat top_c = at_rat(ch, k);
    for (int r = 0; r <= rmax; ++r) {
      BigRat side = at_rat(ch, k - r);
      if (side == 0) continue;
      BigRat ratio = pow_rat(rep.lambda, r) * top_c / side;
      if (first || ratio < lo_ratio) lo_ratio = ratio;
      if (first || ratio > hi_ratio) hi_ratio = ratio;
      first = false;
    }
    std::string rnote = "r up to " + std::to_string(rmax) +
                        (truncated ? " (truncated at k)" : "");
    add("sandwich-lower", lo_ratio, 1 - dp, ">=", rnote);
    add("sandwich-upper", hi_ratio, 1 + dp, "<=", rnote);

    add("stability-gap", eval_coeffs(cg, rep.lambda),
        (1 - dp) / (1 + 2 * dp) * eval_coeffs(chp, rep.lambda), "<=",
        "partition functions of G' vs H at |G'| at the tuned fugacity");

    BigRat c0 = at_rat(cG, k);
    BigRat c1 = (1 + 2 * dp) * eval_coeffs(cg, rep.lambda) * top_c;
    BigRat c2 = (1 - dp) * eval_coeffs(chp, rep.lambda) * top_c;
    BigRat conv = 0;
    for (int r = 0; r < static_cast<int>(chp.size()); ++r)
      conv += at_rat(chp, r) * at_rat(ch, k - r);
    add("chain-1", c0, c1, "<=", "uses sandwich-lower termwise");
    add("chain-2", c1, c2, "<=", "uses stability-gap");
    add("chain-3", c2, conv, "<=", "uses sandwich-upper termwise");
    add("chain-4", conv, at_rat(chn, k), "==", "convolution identity");
  } else {
    int sup = static_cast<int>(chn.size()) - 1;
    if (k < 1 || k >= sup) throw UsageError("k outside the tunable mean range");
    TuneResult tune = tune_lambda(chn, BigRat(k));
    rep.lambda = tune.lambda;

    int s = 0;
    BigRat best = -1;
    for (int r = 0; r < static_cast<int>(cg.size()); ++r) {
      BigRat term = at_rat(cg, r) * at_rat(ch, k - r);
      if (term > best) {
        best = term;
        s = r;
      }
    }
    if (best == 0) throw UsageError("no size-k configuration in G");
    BigRat count = BigRat(static_cast<int>(cg.size()));

    add("count-bound", at_rat(cG, k), count * best, "<=",
        "most likely split s = " + std::to_string(s));

    int k1 = static_cast<int>((static_cast<long long>(k) * n1) / n);
    int k2 = k - k1;
    add("split-lower", at_rat(chp, k1) * at_rat(ch, k2), at_rat(chn, k), "<=",
        "one term of the convolution at the proportional split");

    SizeDistribution pg = size_distribution(cg, rep.lambda);
    SizeDistribution php = size_distribution(chp, rep.lambda);
    SizeDistribution ph = size_distribution(ch, rep.lambda);
    auto pr = [](const SizeDistribution& sd, int i) {
      return (i >= 0 && i < static_cast<int>(sd.prob.size())) ? sd.prob[i]
                                                              : BigRat(0);
    };
    BigRat lhs = eval_coeffs(chp, rep.lambda) / eval_coeffs(cg, rep.lambda) *
                 pr(php, k1) / pr(pg, s) * pr(ph, k2) / pr(ph, k - s);
    add("transfer-ratio", lhs, count, ">=",
        "the cancelled form of count-bound vs split-lower");

    add("conclusion", at_rat(cG, k), at_rat(chn, k), "<=",
        "the coefficient inequality itself");
  }

  rep.all_hold = true;
  for (const auto& l : rep.lines) rep.all_hold = rep.all_hold && l.holds;
  return rep;
}

}  // namespace partfn
