#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partfn/counts.hpp"
#include "partfn/graph.hpp"
#include "partfn/rational.hpp"

namespace partfn {

// Six senses in which a coefficient vector can dominate another, from the
// weakest (total count) to the strongest (free volume), plus witnesses
// for every comparison that fails.
struct DominanceWitness {
  std::string flag;
  std::optional<int> index;     // failing coefficient index
  std::optional<BigRat> point;  // failing evaluation point
};

struct DominanceReport {
  bool total_count = false;    // Z_G(1) >= Z_H(1)
  bool partition = false;      // Z_G(x) >= Z_H(x) on x >= 0
  bool coefficient = false;    // a_k >= b_k for all k
  bool occupancy = false;      // x Z_G'/Z_G >= x Z_H'/Z_H on x > 0
  bool top = false;            // a_n >= b_n at the common top index
  bool free_volume = false;    // a_{k+1}/a_k >= b_{k+1}/b_k for all k
  std::vector<DominanceWitness> witnesses;
};

// does zg dominate zh? requires equal positive constant terms
DominanceReport dominance(const CoefVector& zg, const CoefVector& zh);

// coefficients r_k of Z_G' Z_H - Z_H' Z_G, via the closed form
// r_k = sum_j (k - 2j + 1) b_j a_{k-j+1}
std::vector<BigRat> rk_coefficients(const CoefVector& zg, const CoefVector& zh);

// true iff the implication lattice holds on this pair:
// partition => count, partition => top, coefficient => partition,
// occupancy => partition, free volume => coefficient and occupancy
bool hierarchy_consistency(const CoefVector& zg, const CoefVector& zh,
                           std::string* violated = nullptr);

// clique-cover minimality: free volumes of g at least those of CL_{d,n}
// for 1 <= k <= n/(d+1), and i_k(g) >= i_k(CL_{d,n}) for all k
bool cutler_radcliffe_check(const Graph& g, int d, int n);

}  // namespace partfn
