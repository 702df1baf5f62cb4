#include "oracles.hpp"

#include "tidal/coxeter.hpp"
#include "tidal/error.hpp"

#include <doctest.h>

#include <map>

using tidal::CartanType;
using tidal::CoxeterSystem;
using tidal::Side;

TEST_CASE("coxeter: finite group orders and longest elements") {
  const std::map<CartanType, std::pair<std::size_t, unsigned>> expected{
      {CartanType::A1, {2, 1}}, {CartanType::A2, {6, 3}}, {CartanType::A3, {24, 6}},
      {CartanType::B2, {8, 4}}, {CartanType::G2, {12, 6}}};
  for (const auto& [type, ord] : expected) {
    const auto sys = CoxeterSystem::build(type, false);
    CAPTURE(tidal::to_string(type));
    CHECK(sys.enumerate_ball(20).size() == ord.first);
    CHECK(sys.longest_finite_length() == ord.second);
  }
}

TEST_CASE("coxeter: affine ball sizes follow Bott's formula") {
  for (CartanType type : {CartanType::A1, CartanType::A2, CartanType::B2, CartanType::G2, CartanType::A3}) {
    const auto sys = CoxeterSystem::build(type, true);
    const unsigned L = type == CartanType::A3 ? 7 : 12;
    const auto series = oracle::affine_poincare(type, L);
    const auto reps = oracle::min_coset_poincare(type, L);
    std::vector<long long> counts(L + 1, 0), rep_counts(L + 1, 0);
    for (const auto& x : sys.enumerate_ball(L)) ++counts[x.length()];
    for (const auto& x : sys.min_coset_reps(L)) ++rep_counts[x.length()];
    CAPTURE(tidal::to_string(type));
    CHECK(counts == series);
    CHECK(rep_counts == reps);
  }
}

TEST_CASE("coxeter: normal forms are ShortLex") {
  const auto a2 = CoxeterSystem::build("A2", false);
  CHECK(a2.element("2-1-2").str() == "1-2-1");
  CHECK(a2.element("1-1").is_identity());
  CHECK(a2.element("e").is_identity());
  const auto g2 = CoxeterSystem::build("G2", false);
  CHECK(g2.element("2-1-2-1-2-1").str() == "1-2-1-2-1-2");
  const auto aff = CoxeterSystem::build("A2", true);
  CHECK(aff.element("0-1-0").str() == "0-1-0");
  CHECK(aff.element("1-0-1").str() == "0-1-0");
  CHECK_THROWS_AS(aff.element("0-4"), tidal::InvalidArgument);
  CHECK_THROWS_AS(CoxeterSystem::build("E8", false), tidal::InvalidArgument);
}

TEST_CASE("coxeter: multiplication, inverses and descents") {
  const auto sys = CoxeterSystem::build("B2", true);
  for (const auto& x : sys.enumerate_ball(6)) {
    const auto xi = sys.inverse(x);
    CHECK(sys.multiply(x, xi).is_identity());
    CHECK(xi.length() == x.length());
    for (auto s : sys.generators()) {
      const bool right = sys.is_descent(x, s, Side::Right);
      CHECK(right == (sys.multiply(x, sys.generator(s)).length() < x.length()));
      CHECK(sys.is_descent(x, s, Side::Left) == sys.is_descent(xi, s, Side::Right));
    }
  }
}

TEST_CASE("coxeter: interned handles agree with values") {
  const auto sys = CoxeterSystem::build("G2", true);
  for (const auto& x : sys.enumerate_ball(5)) {
    const auto id = sys.intern(x);
    CHECK(sys.elt(id) == x);
    CHECK(sys.length(id) == x.length());
    for (auto s : sys.generators()) {
      CHECK(sys.elt(sys.mul_right(id, s)) == sys.multiply(x, sys.generator(s)));
      CHECK(sys.elt(sys.mul_left(s, id)) == sys.multiply(sys.generator(s), x));
    }
    CHECK(sys.in_min_coset_reps(id) == sys.in_min_coset_reps(x));
  }
}

TEST_CASE("coxeter: Bruhat order matches the subword property") {
  for (const char* label : {"A2", "B2", "G2", "A3"}) {
    const auto sys = CoxeterSystem::build(label, false);
    const auto elts = sys.enumerate_ball(6);
    CAPTURE(label);
    for (const auto& x : elts)
      for (const auto& y : elts) CHECK(sys.bruhat_leq(y, x) == oracle::bruhat_by_subwords(sys, y, x));
  }
  const auto aff = CoxeterSystem::build("A2", true);
  const auto elts = aff.enumerate_ball(5);
  for (const auto& x : elts)
    for (const auto& y : elts) CHECK(aff.bruhat_leq(y, x) == oracle::bruhat_by_subwords(aff, y, x));
}

TEST_CASE("coxeter: double coset minimality") {
  const auto sys = CoxeterSystem::build("A2", true);
  CHECK(sys.is_min_double_coset(sys.identity()));
  CHECK(sys.is_min_double_coset(sys.element("0")));
  CHECK_FALSE(sys.is_min_double_coset(sys.element("0-1")));
  CHECK(sys.in_min_coset_reps(sys.element("0-1")));
  CHECK_FALSE(sys.in_min_coset_reps(sys.element("1-0")));
}
