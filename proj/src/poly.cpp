#include "partfn/poly.hpp"

#include <algorithm>
#include <cctype>

namespace partfn {

namespace {

// BigInt's string constructor honors C number prefixes, so "025" would be
// read as octal; every literal here is decimal
BigInt decimal_int(const std::string& t) {
  size_t i = 0;
  bool neg = false;
  if (i < t.size() && (t[i] == '+' || t[i] == '-')) neg = t[i++] == '-';
  if (i == t.size()) throw std::invalid_argument("bad integer literal");
  for (size_t j = i; j < t.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(t[j])))
      throw std::invalid_argument("bad integer literal");
  while (i + 1 < t.size() && t[i] == '0') ++i;
  BigInt v(t.substr(i));
  return neg ? BigInt(-v) : v;
}

}  // namespace

BigRat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num = decimal_int(s.substr(0, slash));
      BigInt den = decimal_int(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      return BigRat(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      size_t frac_len = s.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("bad decimal");
      BigInt num = decimal_int(digits);
      return BigRat(num, pow_int(BigInt(10), static_cast<unsigned>(frac_len)));
    }
    return BigRat(decimal_int(s));
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational: " + s);
  }
}

std::string rat_str(const BigRat& x) {
  if (rat_den(x) == 1) return rat_num(x).str();
  return rat_num(x).str() + "/" + rat_den(x).str();
}

std::string int_str(const BigInt& x) { return x.str(); }

BigInt pow_int(const BigInt& base, unsigned e) {
  BigInt r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

BigRat pow_rat(const BigRat& base, int e) {
  if (e < 0) {
    if (base == 0) throw std::invalid_argument("0^negative");
    BigRat inv = BigRat(rat_den(base), rat_num(base));
    return pow_rat(inv, -e);
  }
  BigRat r = 1, b = base;
  unsigned u = static_cast<unsigned>(e);
  while (u) {
    if (u & 1) r *= b;
    b *= b;
    u >>= 1;
  }
  return r;
}

BigInt binom(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

void RatPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

RatPoly poly_from_ints(const std::vector<long long>& v) {
  std::vector<BigRat> c;
  c.reserve(v.size());
  for (long long x : v) c.emplace_back(x);
  return RatPoly(std::move(c));
}

RatPoly poly_add(const RatPoly& a, const RatPoly& b) {
  std::vector<BigRat> c(std::max(a.c.size(), b.c.size()), BigRat(0));
  for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
  return RatPoly(std::move(c));
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  std::vector<BigRat> c(std::max(a.c.size(), b.c.size()), BigRat(0));
  for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
  return RatPoly(std::move(c));
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<BigRat> c(a.c.size() + b.c.size() - 1, BigRat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
  }
  return RatPoly(std::move(c));
}

RatPoly poly_scale(const RatPoly& a, const BigRat& s) {
  if (s == 0) return RatPoly();
  std::vector<BigRat> c = a.c;
  for (auto& x : c) x *= s;
  return RatPoly(std::move(c));
}

RatPoly poly_derivative(const RatPoly& a) {
  if (a.c.size() <= 1) return RatPoly();
  std::vector<BigRat> c(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) c[i - 1] = a.c[i] * BigRat(static_cast<long>(i));
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<BigRat> rem = a.c;
  int db = b.degree();
  int da = static_cast<int>(rem.size()) - 1;
  if (da < db) return {RatPoly(), a};
  std::vector<BigRat> quot(da - db + 1, BigRat(0));
  const BigRat lead = b.c[db];
  for (int i = da; i >= db; --i) {
    if (rem[i] == 0) continue;
    BigRat f = rem[i] / lead;
    quot[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c[j];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly poly_divexact(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("poly_divexact: nonzero remainder");
  return q;
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = poly_divmod(x, y);
    x = y;
    y = r;
  }
  if (!x.is_zero() && x.c.back() != 1) x = poly_scale(x, BigRat(1) / x.c.back());
  return x;
}

RatPoly poly_pow(const RatPoly& a, unsigned e) {
  RatPoly r(std::vector<BigRat>{BigRat(1)});
  RatPoly b = a;
  while (e) {
    if (e & 1) r = poly_mul(r, b);
    if (e >>= 1) b = poly_mul(b, b);
  }
  return r;
}

BigRat poly_eval(const RatPoly& p, const BigRat& x) {
  BigRat acc = 0;
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain;
  chain.push_back(p);
  RatPoly d = poly_derivative(p);
  if (!d.is_zero()) chain.push_back(d);
  while (chain.back().degree() > 0) {
    auto [q, r] = poly_divmod(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(poly_scale(r, BigRat(-1)));
  }
  return chain;
}

static int sgn(const BigRat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int sturm_sign_changes(const std::vector<RatPoly>& chain, const BigRat& x) {
  int changes = 0, prev = 0;
  for (const auto& q : chain) {
    int s = sgn(poly_eval(q, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

namespace {

// Strict upper bound on every real root: 1 + max |c_i / c_deg|.
BigRat cauchy_root_bound(const RatPoly& p) {
  BigRat m = 0;
  const BigRat& lead = p.c.back();
  for (size_t i = 0; i + 1 < p.c.size(); ++i) {
    BigRat t = abs(p.c[i] / lead);
    if (t > m) m = t;
  }
  return m + 1;
}

// Distinct real roots of squarefree q in (a, b), both endpoints non-roots.
int roots_between(const std::vector<RatPoly>& chain, const BigRat& a, const BigRat& b) {
  return sturm_sign_changes(chain, a) - sturm_sign_changes(chain, b);
}

// Splits (a, b) into subintervals each holding exactly one root of the
// squarefree polynomial behind chain. Exact rational midpoints; if a midpoint
// hits a root it becomes a degenerate [m, m] entry.
void isolate(const std::vector<RatPoly>& chain, const RatPoly& q, const BigRat& a,
             const BigRat& b, std::vector<std::pair<BigRat, BigRat>>& out) {
  int nroots = roots_between(chain, a, b);
  if (nroots == 0) return;
  if (nroots == 1) {
    out.emplace_back(a, b);
    return;
  }
  BigRat m = (a + b) / 2;
  while (poly_eval(q, m) == 0) {
    out.emplace_back(m, m);
    // nudge the split point off the root; thirds keep it rational and inside
    m = (a + 2 * m) / 3;
  }
  isolate(chain, q, a, m, out);
  isolate(chain, q, m, b, out);
}

}  // namespace

NonnegResult poly_nonneg_on_nonneg_axis(const RatPoly& p) {
  if (p.is_zero()) return {true, std::nullopt};
  if (p.degree() == 0) {
    if (p.c[0] >= 0) return {true, std::nullopt};
    return {false, BigRat(0)};
  }
  if (poly_eval(p, BigRat(0)) < 0) return {false, BigRat(0)};
  // strip the root at zero; x^k does not change sign on x > 0
  const RatPoly x_mono({BigRat(0), BigRat(1)});
  RatPoly pt = p;
  while (poly_eval(pt, BigRat(0)) == 0) pt = poly_divexact(pt, x_mono);
  if (poly_eval(pt, BigRat(0)) < 0) {
    // p dips negative immediately right of zero
    BigRat w(1, 2);
    while (poly_eval(p, w) >= 0) w /= 2;
    return {false, w};
  }
  if (pt.degree() == 0) return {true, std::nullopt};
  if (pt.c.back() < 0) {
    // negative leading coefficient: walk out past the root bound
    BigRat x = cauchy_root_bound(pt);
    while (poly_eval(p, x) >= 0) x *= 2;  // bound is strict; first try succeeds
    return {false, x};
  }
  // squarefree part shares pt's distinct roots; sign analysis between roots
  RatPoly g = poly_gcd(pt, poly_derivative(pt));
  RatPoly q = g.degree() > 0 ? poly_divexact(pt, g) : pt;
  if (q.degree() <= 0) return {true, std::nullopt};
  auto chain = sturm_chain(q);
  BigRat bound = cauchy_root_bound(q);
  if (roots_between(chain, BigRat(0), bound) == 0) return {true, std::nullopt};
  std::vector<std::pair<BigRat, BigRat>> iso;
  isolate(chain, q, BigRat(0), bound, iso);
  // p's sign is constant between consecutive distinct roots; the isolation
  // endpoints provide one sample point inside every such gap
  std::vector<BigRat> samples;
  for (const auto& [a, b] : iso) {
    if (a > 0) samples.push_back(a);
    samples.push_back(b);
  }
  samples.push_back(bound);
  for (const auto& x : samples) {
    if (poly_eval(p, x) < 0) return {false, x};
  }
  return {true, std::nullopt};
}

LogDerivResult log_deriv_compare(const RatPoly& zg, const RatPoly& zh) {
  for (const auto& v : zg.c)
    if (v < 0) throw std::invalid_argument("log_deriv_compare: negative coefficient");
  for (const auto& v : zh.c)
    if (v < 0) throw std::invalid_argument("log_deriv_compare: negative coefficient");
  if (zg.coeff(0) <= 0 || zh.coeff(0) <= 0)
    throw std::invalid_argument("log_deriv_compare: constant term must be positive");
  // lambda cancels; denominators are positive on [0, inf)
  RatPoly num = poly_sub(poly_mul(poly_derivative(zg), zh), poly_mul(poly_derivative(zh), zg));
  auto r = poly_nonneg_on_nonneg_axis(num);
  if (r.nonneg) return {true, std::nullopt};
  BigRat w = *r.witness;
  if (w == 0) {
    // need a strictly positive witness; the violation persists nearby
    w = BigRat(1, 2);
    while (poly_eval(num, w) >= 0) w /= 2;
  }
  return {false, w};
}

}  // namespace partfn
