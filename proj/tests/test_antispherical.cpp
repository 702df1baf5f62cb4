#include "tidal/antispherical.hpp"
#include "tidal/error.hpp"

#include <doctest.h>

using tidal::CoxeterSystem;
using tidal::HeckeAlgebra;
using tidal::LaurentPoly;
using tidal::ModuleKind;
using tidal::ParabolicModule;

TEST_CASE("antispherical: affine A1 canonical basis by hand") {
  // W^+ is the chain e < 0 < 0-1 < 0-1-0 < ..., and each canonical element
  // is N_x + v N_{x'} with x' the predecessor.
  const auto sys = CoxeterSystem::build("A1", true);
  ParabolicModule asph(sys, ModuleKind::Antispherical);
  const auto reps = sys.min_coset_reps(9);
  REQUIRE(reps.size() == 10);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const auto c = asph.coeff(sys.intern(reps[j]), sys.intern(reps[i]));
      const LaurentPoly expected = i == j ? LaurentPoly(1) : (j + 1 == i ? LaurentPoly::monomial(1) : LaurentPoly());
      CHECK(c == expected);
    }
  }
}

TEST_CASE("antispherical: module recursion agrees with the projection formula") {
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    const auto sys = CoxeterSystem::build(label, true);
    HeckeAlgebra hecke(sys);
    for (ModuleKind kind : {ModuleKind::Antispherical, ModuleKind::Spherical}) {
      ParabolicModule module(sys, kind);
      const auto rep = tidal::cross_check(module, hecke, 9);
      CAPTURE(label);
      CHECK(rep.elements > 0);
      CHECK(rep.mismatches.empty());
    }
  }
}

TEST_CASE("antispherical: canonical elements are unitriangular in vZ[v]") {
  const auto sys = CoxeterSystem::build("B2", true);
  for (ModuleKind kind : {ModuleKind::Antispherical, ModuleKind::Spherical}) {
    ParabolicModule module(sys, kind);
    for (const auto x : sys.min_coset_rep_ids(10)) {
      for (const auto& [y, p] : module.canonical(x)) {
        CHECK(sys.in_min_coset_reps(y));
        if (y == x) {
          CHECK(p == LaurentPoly(1));
        } else {
          CHECK(p.in_vZv());
          CHECK(sys.bruhat_leq(y, x));
        }
      }
    }
  }
}

TEST_CASE("antispherical: taint margin and domain") {
  const auto sys = CoxeterSystem::build("G2", true);
  ParabolicModule asph(sys, ModuleKind::Antispherical);
  CHECK(asph.certified_length(20) == 14);
  CHECK(asph.certified_length(5) == -1);
  CHECK_THROWS_AS(asph.canonical(sys.intern(sys.element("1"))), tidal::InvalidArgument);
}

TEST_CASE("antispherical: degree bound on a small A2 ball") {
  const auto sys = CoxeterSystem::build("A2", true);
  ParabolicModule asph(sys, ModuleKind::Antispherical);
  const auto rep = tidal::bound_check(asph, 12);
  CHECK(rep.bound == 3);
  CHECK(rep.certified_length == 9);
  CHECK(rep.violations.empty());
  CHECK(rep.attained());
}

TEST_CASE("antispherical: spherical inversion on affine A1 and B2") {
  for (const char* label : {"A1", "B2"}) {
    const auto sys = CoxeterSystem::build(label, true);
    ParabolicModule sph(sys, ModuleKind::Spherical);
    const auto inv = tidal::spherical_inverse(sph, 8);
    CAPTURE(label);
    CHECK(inv.orthogonality_failures.empty());
    CHECK(inv.flagged_rows.empty());
    CHECK(inv.pairs_verified > 0);
    for (const auto& [zx, m] : inv.entries)
      if (zx.first == zx.second) CHECK(m == LaurentPoly(1));
  }
}

TEST_CASE("antispherical: spherical inverse needs the spherical module") {
  const auto sys = CoxeterSystem::build("A1", true);
  ParabolicModule asph(sys, ModuleKind::Antispherical);
  CHECK_THROWS_AS(tidal::spherical_inverse(asph, 4), tidal::InvalidArgument);
}
