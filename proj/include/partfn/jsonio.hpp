#pragma once

#include <string>

#include "partfn/counts.hpp"
#include "partfn/distance.hpp"
#include "partfn/dominance.hpp"
#include "partfn/graph.hpp"
#include "partfn/llt.hpp"
#include "partfn/lp.hpp"
#include "partfn/observables.hpp"
#include "partfn/verify.hpp"

namespace partfn {

// Serialization boundary.  Numbers that must stay exact travel as decimal
// or "num/den" strings; keys are emitted in a fixed order so identical
// inputs give identical bytes.

std::string graph_json(const Graph& g);
Graph graph_from_json(const std::string& text);

std::string coef_json(Kind kind, int q, const CoefVector& c);
CoefVector coef_from_json(const std::string& text, Kind* kind = nullptr,
                          int* q = nullptr);

std::string size_dist_json(const SizeDistribution& d, bool with_float);
std::string views_json(const LocalViewDistribution& v, bool with_float);
std::string distance_json(const DistanceResult& r, bool with_float);
std::string dominance_json(const DominanceReport& r);
std::string verdict_json(const Verdict& v);
std::string audit_json(const AuditReport& r, bool with_float);
std::string ratio_json(const RatioLemmaResult& r);
std::string gnedenko_json(const GnedenkoResult& r);
std::string lp_json(int d, Kind kind, const BigRat& lambda, const LpReport& r,
                    const StabilityResult* stab, bool with_float);

// lossy decimal rendering used by the --float views
double rat_approx(const BigRat& x);

}  // namespace partfn
