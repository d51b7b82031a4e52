#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "partfn/rational.hpp"

namespace partfn {

// Dense univariate polynomial over the rationals.
// Invariant: no trailing zero coefficients; the zero polynomial has an empty
// coefficient vector and degree() == -1.
struct RatPoly {
  std::vector<BigRat> c;

  RatPoly() = default;
  explicit RatPoly(std::vector<BigRat> coeffs) : c(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  BigRat coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : BigRat(0);
  }
  void trim();
};

RatPoly poly_from_ints(const std::vector<long long>& v);

RatPoly poly_add(const RatPoly& a, const RatPoly& b);
RatPoly poly_sub(const RatPoly& a, const RatPoly& b);
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);
RatPoly poly_scale(const RatPoly& a, const BigRat& s);
RatPoly poly_derivative(const RatPoly& a);
// quotient of exact division; throws if remainder nonzero
RatPoly poly_divexact(const RatPoly& a, const RatPoly& b);
std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b);
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);  // monic gcd
RatPoly poly_pow(const RatPoly& a, unsigned e);        // repeated squaring

BigRat poly_eval(const RatPoly& p, const BigRat& x);

struct NonnegResult {
  bool nonneg;
  // a rational x >= 0 with p(x) < 0 when nonneg is false
  std::optional<BigRat> witness;
};

// Decides p(x) >= 0 for all real x >= 0, exactly, via Sturm root isolation.
NonnegResult poly_nonneg_on_nonneg_axis(const RatPoly& p);

struct LogDerivResult {
  bool dominates;
  std::optional<BigRat> witness;  // lambda > 0 violating the comparison
};

// True iff  lambda zg'(l)/zg(l) >= lambda zh'(l)/zh(l)  for all lambda > 0.
// Both inputs must have nonnegative coefficients and positive constant term.
LogDerivResult log_deriv_compare(const RatPoly& zg, const RatPoly& zh);

// Number of sign changes in the Sturm chain evaluated at x (exposed for tests).
int sturm_sign_changes(const std::vector<RatPoly>& chain, const BigRat& x);
std::vector<RatPoly> sturm_chain(const RatPoly& p);

}  // namespace partfn
