#pragma once

#include <string>
#include <vector>

#include "partfn/graph.hpp"
#include "partfn/poly.hpp"
#include "partfn/rational.hpp"

namespace partfn {

enum class Kind { Match, Ind, Potts };

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& s);

// coefficient vector of a partition function; index = configuration size
// (matching size, independent-set size, or monochromatic edge count)
using CoefVector = std::vector<BigInt>;

// m_k: matchings of size k, via the edge deletion recursion with
// memoization on canonical forms
CoefVector match_coeffs(const Graph& g);

// i_k: independent sets of size k, via vertex branching with memoization
CoefVector ind_coeffs(const Graph& g);

// c^q_k: q-colorings with exactly k monochromatic edges, via the
// random-cluster edge-subset expansion re-expanded into powers of lambda
CoefVector potts_coeffs(const Graph& g, int q);

CoefVector coeffs_for(const Graph& g, Kind kind, int q = 0);

// coefficient convolution; equals coeffs of the disjoint union
CoefVector disjoint_union_coeffs(const CoefVector& a, const CoefVector& b);

// coefficients of H_{d,n} (n/2d disjoint K_{d,d} blocks) as a convolution
// power of one block; far cheaper than recursing on the big graph
CoefVector hdn_coeffs(int d, int n, Kind kind, int q = 0);

// m_{n/2}; zero for odd n (no perfect matching exists)
BigInt perfect_matching_count(const Graph& g);

RatPoly coeffs_to_poly(const CoefVector& c);
BigRat eval_coeffs(const CoefVector& c, const BigRat& lambda);

}  // namespace partfn
