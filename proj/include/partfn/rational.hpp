#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace partfn {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

// "a/b", "a", or a plain decimal like "0.25". Throws std::invalid_argument.
BigRat parse_rat(const std::string& s);

std::string rat_str(const BigRat& x);
std::string int_str(const BigInt& x);

inline BigInt rat_num(const BigRat& x) { return boost::multiprecision::numerator(x); }
inline BigInt rat_den(const BigRat& x) { return boost::multiprecision::denominator(x); }

BigInt pow_int(const BigInt& base, unsigned e);
BigRat pow_rat(const BigRat& base, int e);

// binomial coefficient, exact
BigInt binom(unsigned n, unsigned k);
BigInt factorial(unsigned n);

}  // namespace partfn
