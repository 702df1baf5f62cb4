#include "tidal/error.hpp"
#include "tidal/orbits.hpp"

#include <doctest.h>

using tidal::OrbitPoset;
using tidal::Partition;

TEST_CASE("orbits: partition counts") {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n) CHECK(tidal::partitions_of(n).size() == p[static_cast<std::size_t>(n)]);
  CHECK(tidal::format_partition({2, 1}) == "(2,1)");
}

TEST_CASE("orbits: dominance order") {
  CHECK(tidal::dominance_leq({1, 1, 1}, {3}));
  CHECK(tidal::dominance_leq({2, 1}, {2, 1}));
  CHECK_FALSE(tidal::dominance_leq({3}, {2, 1}));
  // first incomparable pair
  CHECK_FALSE(tidal::dominance_leq({3, 3}, {4, 1, 1}));
  CHECK_FALSE(tidal::dominance_leq({4, 1, 1}, {3, 3}));
}

TEST_CASE("orbits: sl3 is a chain of three orbits") {
  const OrbitPoset sl3 = tidal::orbit_poset("sl3");
  REQUIRE(sl3.nodes.size() == 3);
  CHECK(sl3.nodes[0] == "(1,1,1)");
  CHECK(sl3.covers.size() == 2);
  const auto ideals = tidal::thick_ideal_lattice(sl3);
  CHECK(ideals.size() == 3);
  for (const auto& t : ideals) {
    CHECK(t.prime);
    CHECK(t.orbit.has_value());
  }
  CHECK(tidal::prime_thick_ideals(sl3).size() == 3);
}

TEST_CASE("orbits: primes are exactly the ideals with one cover") {
  for (const char* a : {"sl2", "sl3", "sl4", "sl5", "sl6", "sl7", "sl8", "so5", "g2"}) {
    const auto poset = tidal::orbit_poset(a);
    const auto rep = tidal::unique_cover_check(poset);
    CAPTURE(a);
    CHECK(rep.ok());
    CHECK(rep.primes == poset.nodes.size());
    CHECK(tidal::prime_thick_ideals(poset).size() == poset.nodes.size());
  }
}

TEST_CASE("orbits: sl6 has non-prime ideals") {
  const auto sl6 = tidal::orbit_poset("sl6");
  const auto ideals = tidal::thick_ideal_lattice(sl6);
  std::size_t primes = 0;
  for (const auto& t : ideals) primes += t.prime;
  CHECK(primes == 11);
  CHECK(ideals.size() > primes);
  CHECK(sl6.leq[sl6.index_of("(3,3)")][sl6.index_of("(4,1,1)")] == false);
}

TEST_CASE("orbits: rank-2 posets and lookups") {
  CHECK(tidal::orbit_poset("so5").nodes.size() == 4);
  CHECK(tidal::orbit_poset("sp4").nodes.size() == 4);
  CHECK(tidal::orbit_poset("g2").nodes.size() == 5);
  CHECK(tidal::lie_algebra_of(tidal::CartanType::B2) == "so5");
  CHECK_THROWS_AS(tidal::orbit_poset("e8"), tidal::InvalidArgument);
  CHECK_THROWS_AS(tidal::orbit_poset("sl9"), tidal::InvalidArgument);
  CHECK_THROWS_AS(tidal::orbit_poset("sl3").index_of("(4)"), tidal::InvalidArgument);
}

TEST_CASE("orbits: DOT output") {
  const auto sl4 = tidal::orbit_poset("sl4");
  const std::string dot = tidal::lattice_dot(sl4, tidal::thick_ideal_lattice(sl4));
  CHECK(dot.rfind("digraph ideals {", 0) == 0);
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(tidal::poset_dot(sl4).find("->") != std::string::npos);
}
