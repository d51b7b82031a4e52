#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "partfn/counts.hpp"
#include "partfn/errors.hpp"
#include "partfn/graph.hpp"
#include "partfn/jsonio.hpp"
#include "partfn/verify.hpp"

using namespace partfn;

TEST_CASE("lambda grids") {
  std::vector<BigRat> grid = default_lambda_grid();
  REQUIRE(grid.size() == 7);
  CHECK(grid.front() == BigRat(1, 10));
  CHECK(grid.back() == BigRat(10));
  std::vector<BigRat> pg = potts_lambda_grid();
  REQUIRE(pg.size() == 4);
  CHECK(pg.back() == 1);
  for (const BigRat& l : pg) CHECK(l <= 1);
}

TEST_CASE("coefficient dominance among the cubic graphs on six vertices") {
  Verdict v = verify_coefficient_dominance(3, 6, Kind::Match);
  CHECK(v.statement == "coefficient-dominance");
  CHECK(v.checked == 2);
  CHECK(v.failed == 0);
  CHECK(v.ok());
  CHECK_FALSE(v.theorem_backed);
  REQUIRE(v.items.size() == 2);
  for (const auto& it : v.items) {
    CHECK(it.pass);
    CHECK(it.witness.empty());
  }
  bool noted = false;
  for (const auto& n : v.notes)
    noted |= n.find("largest k with dominance") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("coefficient dominance for two-regular graphs") {
  Verdict v = verify_coefficient_dominance(2, 8, Kind::Match);
  CHECK(v.checked == 3);  // C8, C5+C3, C4+C4
  CHECK(v.failed == 0);
  Verdict vi = verify_coefficient_dominance(2, 8, Kind::Ind);
  CHECK(vi.checked == 3);
  CHECK(vi.failed == 0);
}

TEST_CASE("potts coefficient comparison at six vertices") {
  // the coloring dominance is asymptotic; at n = 6 it already fails at
  // k = 1 (the prism has 90 colorings with one monochromatic edge, K33
  // only 54) and the checker must say exactly that
  Verdict v = verify_coefficient_dominance(3, 6, Kind::Potts, 3);
  CHECK(v.checked == 2);
  CHECK(v.failed == 1);
  CHECK_FALSE(v.theorem_backed);
  std::string kmax;
  for (const auto& [key, val] : v.params)
    if (key == "k_max") kmax = val;
  CHECK(kmax == "3");
  bool witnessed = false;
  for (const auto& it : v.items)
    witnessed |= !it.pass && it.witness == "k=1: 90 > 54";
  CHECK(witnessed);
  bool prefix0 = false;
  for (const auto& n : v.notes)
    prefix0 |= n.find("largest k with dominance for every graph: 0") !=
               std::string::npos;
  CHECK(prefix0);

  // proper colorings (k = 0) are maximized by K33 for both q; that part
  // holds at every n
  Verdict v4 = verify_coefficient_dominance(3, 6, Kind::Potts, 4);
  CHECK(v4.failed == 1);
  for (const auto& it : v4.items)
    if (!it.pass) CHECK(it.witness == "k=1: 936 > 648");

  // q = 2 is outside the proven range: computed, reported, never asserted
  Verdict v2 = verify_coefficient_dominance(3, 6, Kind::Potts, 2);
  CHECK(v2.failed == 0);
  bool noted = false;
  for (const auto& n : v2.notes)
    noted |= n.find("not asserted") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("partition dominance") {
  Verdict v =
      verify_partition_dominance(3, 6, Kind::Match, default_lambda_grid());
  CHECK(v.statement == "partition-dominance");
  CHECK(v.theorem_backed);
  CHECK(v.checked == 2);
  CHECK(v.failed == 0);

  Verdict vi =
      verify_partition_dominance(3, 6, Kind::Ind, default_lambda_grid());
  CHECK(vi.theorem_backed);
  CHECK(vi.failed == 0);

  Verdict vp =
      verify_partition_dominance(3, 6, Kind::Potts, potts_lambda_grid(), 3);
  CHECK(vp.theorem_backed);
  CHECK(vp.failed == 0);

  // the potts grid must stay at lambda <= 1: the proof direction flips there
  CHECK_THROWS_AS(verify_partition_dominance(3, 6, Kind::Potts,
                                             default_lambda_grid(), 3),
                  UsageError);
}

TEST_CASE("independent sets against the cage") {
  Verdict v = verify_girth5(14, 2);
  CHECK(v.statement == "girth5-heawood");
  CHECK(v.checked == 9);
  CHECK(v.failed == 0);
  CHECK_FALSE(v.theorem_backed);
  CHECK_THROWS_AS(verify_girth5(10), UsageError);
}

TEST_CASE("top coefficient bound") {
  Verdict v = verify_bregman_regular(3, 6);
  CHECK(v.statement == "bregman-top");
  CHECK(v.theorem_backed);
  CHECK(v.checked == 2);
  CHECK(v.failed == 0);
  // the block itself attains the bound; the prism does not
  int extremal = 0;
  for (const auto& n : v.notes)
    extremal += n.find("(extremal)") != std::string::npos;
  CHECK(extremal == 1);

  // 2d does not divide 8; the power form of the bound still applies,
  // and the cube's nine perfect matchings stay below it
  Verdict v8 = verify_bregman_regular(3, 8);
  CHECK(v8.checked == 6);
  CHECK(v8.failed == 0);
}

TEST_CASE("restricting to one graph") {
  std::string prism6 = to_graph6(make_named("Prism"));
  Verdict v = verify_coefficient_dominance(3, 6, Kind::Match, 0, -1, 0, prism6);
  CHECK(v.checked == 1);
  REQUIRE(v.items.size() == 1);
  CHECK(v.items[0].graph6 == prism6);

  // a graph of the wrong degree cannot be smuggled in
  CHECK_THROWS_AS(verify_coefficient_dominance(3, 6, Kind::Match, 0, -1, 0,
                                               to_graph6(cycle_graph(6))),
                  UsageError);
  CHECK_THROWS_AS(verify_coefficient_dominance(3, 6, Kind::Match, 0, -1, 0,
                                               "not graph6 at all"),
                  UsageError);
}

TEST_CASE("verdicts are deterministic across thread counts") {
  Verdict a = verify_coefficient_dominance(2, 12, Kind::Match, 0, -1, 2);
  Verdict b = verify_coefficient_dominance(2, 12, Kind::Match, 0, -1, 5);
  CHECK(verdict_json(a) == verdict_json(b));
  CHECK(a.checked == 9);  // cycle partitions of 12 with parts >= 3

  Verdict c = verify_bregman_regular(3, 8, 3);
  Verdict d = verify_bregman_regular(3, 8, 1);
  CHECK(verdict_json(c) == verdict_json(d));
}

TEST_CASE("verdict parameter echo") {
  Verdict v = verify_partition_dominance(2, 6, Kind::Match,
                                         {BigRat(1, 2), BigRat(1)});
  bool has_d = false, has_grid = false;
  for (const auto& [key, val] : v.params) {
    has_d |= key == "d" && val == "2";
    has_grid |= key == "grid";
  }
  CHECK(has_d);
  CHECK(has_grid);
  for (const auto& r : v.repro) CHECK(r.rfind("partfn_cli verify", 0) == 0);
}

TEST_CASE("usage guards") {
  CHECK_THROWS_AS(verify_coefficient_dominance(3, 7, Kind::Match), UsageError);
  CHECK_THROWS_AS(verify_coefficient_dominance(3, 6, Kind::Potts, 1),
                  UsageError);
  CHECK_THROWS_AS(verify_partition_dominance(3, 6, Kind::Match, {}),
                  UsageError);
  CHECK_THROWS_AS(verify_bregman_regular(0, 6), UsageError);
}
