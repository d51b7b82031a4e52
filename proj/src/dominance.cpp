#include "partfn/dominance.hpp"

#include <cassert>

#include "partfn/errors.hpp"
#include "partfn/poly.hpp"

namespace partfn {
namespace {

void validate_pair(const CoefVector& zg, const CoefVector& zh) {
  for (const auto& a : zg)
    if (a < 0) throw UsageError("dominance: negative coefficient in first vector");
  for (const auto& b : zh)
    if (b < 0) throw UsageError("dominance: negative coefficient in second vector");
  if (zg.empty() || zh.empty())
    throw UsageError("dominance: empty coefficient vector");
  if (zg[0] != zh[0])
    throw UsageError("dominance: constant terms differ");
  if (zg[0] == 0)
    throw UsageError("dominance: constant term must be positive");
}

int top_index(const CoefVector& v) {
  int t = static_cast<int>(v.size()) - 1;
  while (t > 0 && v[t] == 0) --t;
  return t;
}

BigInt at(const CoefVector& v, int k) {
  return (k >= 0 && k < static_cast<int>(v.size())) ? v[k] : BigInt(0);
}

DominanceReport raw_dominance(const CoefVector& zg, const CoefVector& zh) {
  DominanceReport r;
  RatPoly pg = coeffs_to_poly(zg);
  RatPoly ph = coeffs_to_poly(zh);
  int len = static_cast<int>(std::max(zg.size(), zh.size()));

  auto fail = [&](const char* flag, std::optional<int> idx,
                  std::optional<BigRat> pt) {
    r.witnesses.push_back({flag, idx, pt});
  };

  BigInt sg = 0, sh = 0;
  for (const auto& a : zg) sg += a;
  for (const auto& b : zh) sh += b;
  r.total_count = sg >= sh;
  if (!r.total_count) fail("total_count", {}, BigRat(1));

  auto part = poly_nonneg_on_nonneg_axis(poly_sub(pg, ph));
  r.partition = part.nonneg;
  if (!r.partition) fail("partition", {}, part.witness);

  r.coefficient = true;
  for (int k = 0; k < len; ++k)
    if (at(zg, k) < at(zh, k)) {
      r.coefficient = false;
      fail("coefficient", k, {});
      break;
    }

  auto occ = log_deriv_compare(pg, ph);
  r.occupancy = occ.dominates;
  if (!r.occupancy) fail("occupancy", {}, occ.witness);

  int nt = std::max(top_index(zg), top_index(zh));
  r.top = at(zg, nt) >= at(zh, nt);
  if (!r.top) fail("top", nt, {});

  // Ratio comparison a_{k+1}/a_k >= b_{k+1}/b_k by cross multiplication.
  // Once the right-hand side dies (b_k = 0 with no later positive entry)
  // every remaining ratio is -infinity and nothing is left to check.  A
  // positive entry after an internal zero would make the ratio jump back
  // from -infinity, which nothing can dominate, so that fails; likewise
  // a_k = 0 against a positive right-hand ratio fails.
  r.free_volume = true;
  for (int k = 0; k + 1 < len; ++k) {
    BigInt ak = at(zg, k), a1 = at(zg, k + 1);
    BigInt bk = at(zh, k), b1 = at(zh, k + 1);
    if (bk == 0) {
      for (int j = k + 1; j < len; ++j)
        if (at(zh, j) > 0) {
          r.free_volume = false;
          fail("free_volume", j, {});
          break;
        }
      break;
    }
    bool ok = (ak == 0) ? (b1 == 0) : (a1 * bk >= b1 * ak);
    if (!ok) {
      r.free_volume = false;
      fail("free_volume", k, {});
      break;
    }
  }
  return r;
}

}  // namespace

DominanceReport dominance(const CoefVector& zg, const CoefVector& zh) {
  validate_pair(zg, zh);
  DominanceReport r = raw_dominance(zg, zh);
  // the implication lattice is a theorem under the preconditions above
  assert(!r.partition || r.total_count);
  assert(!r.partition || r.top);
  assert(!r.coefficient || r.partition);
  assert(!r.occupancy || r.partition);
  assert(!r.free_volume || r.coefficient);
  assert(!r.free_volume || r.occupancy);
  return r;
}

std::vector<BigRat> rk_coefficients(const CoefVector& zg, const CoefVector& zh) {
  if (zg.empty() || zh.empty()) throw UsageError("rk_coefficients: empty input");
  int da = static_cast<int>(zg.size()) - 1;
  int db = static_cast<int>(zh.size()) - 1;
  int len = std::max(da + db, 0);
  std::vector<BigRat> r(len, BigRat(0));
  for (int k = 0; k < len; ++k) {
    BigInt acc = 0;
    for (int j = 0; j <= k + 1; ++j)
      acc += BigInt(k - 2 * j + 1) * at(zh, j) * at(zg, k - j + 1);
    r[k] = BigRat(acc);
  }
  return r;
}

bool hierarchy_consistency(const CoefVector& zg, const CoefVector& zh,
                           std::string* violated) {
  validate_pair(zg, zh);
  DominanceReport r = raw_dominance(zg, zh);
  struct Rule {
    bool from, to;
    const char* text;
  };
  const Rule rules[] = {
      {r.partition, r.total_count, "partition holds but total_count fails"},
      {r.partition, r.top, "partition holds but top fails"},
      {r.coefficient, r.partition, "coefficient holds but partition fails"},
      {r.occupancy, r.partition, "occupancy holds but partition fails"},
      {r.free_volume, r.coefficient, "free_volume holds but coefficient fails"},
      {r.free_volume, r.occupancy, "free_volume holds but occupancy fails"},
  };
  for (const auto& rule : rules)
    if (rule.from && !rule.to) {
      if (violated) *violated = rule.text;
      return false;
    }
  return true;
}

bool cutler_radcliffe_check(const Graph& g, int d, int n) {
  if (g.n != n) throw UsageError("cutler_radcliffe_check: vertex count mismatch");
  if (n % (d + 1) != 0)
    throw UsageError("cutler_radcliffe_check: n must be divisible by d+1");
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) != d)
      throw UsageError("cutler_radcliffe_check: graph is not d-regular");
  CoefVector a = ind_coeffs(g);
  CoefVector b = ind_coeffs(make_cldn(d, n));
  int len = static_cast<int>(std::max(a.size(), b.size()));
  for (int k = 0; k < len; ++k)
    if (at(a, k) < at(b, k)) return false;
  // free volumes (k+1) c_{k+1}/c_k, compared over 1 <= k <= n/(d+1);
  // both c_k are positive there, so cross multiplication is safe
  int kmax = n / (d + 1);
  for (int k = 1; k <= kmax; ++k) {
    assert(at(a, k) > 0 && at(b, k) > 0);
    if (at(a, k + 1) * at(b, k) < at(b, k + 1) * at(a, k)) return false;
  }
  return true;
}

}  // namespace partfn
