#include "tidal/error.hpp"
#include "tidal/rootdata.hpp"

#include <doctest.h>

using tidal::CartanType;
using tidal::CoxeterSystem;
using tidal::QuantumParam;
using tidal::Rational;
using tidal::RootDatum;
using tidal::Weight;

namespace {

Weight w(std::initializer_list<long long> xs) {
  Weight out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("rootdata: invariants of each type") {
  struct Row {
    CartanType type;
    unsigned h, w0, positive;
  };
  for (const Row& r : {Row{CartanType::A1, 2, 1, 1}, Row{CartanType::A2, 3, 3, 3}, Row{CartanType::B2, 4, 4, 4},
                       Row{CartanType::G2, 6, 6, 6}}) {
    const auto rd = RootDatum::build(r.type);
    CAPTURE(tidal::to_string(r.type));
    CHECK(rd.coxeter_number == r.h);
    CHECK(rd.w0_length == r.w0);
    CHECK(rd.positive_roots.size() == r.positive);
    // rho pairs to 1 with every simple coroot, fundamental weights are dual
    for (std::size_t i = 0; i < rd.simple_coroots.size(); ++i) {
      CHECK(RootDatum::pair(rd.simple_coroots[i], rd.rho) == 1);
      for (std::size_t j = 0; j < rd.fundamental_weights.size(); ++j)
        CHECK(RootDatum::pair(rd.simple_coroots[i], rd.fundamental_weights[j]) == (i == j ? 1 : 0));
    }
    // h = theta^vee(rho) + 1 for the highest short root
    CHECK(RootDatum::pair(rd.theta_coroot, rd.rho) + 1 == Rational(r.h));
  }
  CHECK(RootDatum::build(CartanType::G2).rho == w({2, 1, -3}));
  CHECK_THROWS_AS(RootDatum::build(CartanType::A3), tidal::InvalidArgument);
}

TEST_CASE("rootdata: quantum parameter validation") {
  const auto g2 = RootDatum::build(CartanType::G2);
  CHECK(QuantumParam::make(g2, 7).ell == 7);
  CHECK_THROWS_AS(QuantumParam::make(g2, 9), tidal::InvalidArgument);
  CHECK_THROWS_AS(QuantumParam::make(g2, 5), tidal::InvalidArgument);
  CHECK_THROWS_AS(QuantumParam::make(g2, 8), tidal::InvalidArgument);
  CHECK(QuantumParam::make(g2, 9, false).ell == 9);
}

TEST_CASE("rootdata: dot action fixes -rho and is an involution per generator") {
  for (CartanType t : {CartanType::A1, CartanType::A2, CartanType::B2, CartanType::G2}) {
    const auto rd = RootDatum::build(t);
    const auto q = QuantumParam::make(rd, t == CartanType::G2 ? 7 : 5);
    Weight minus_rho = rd.rho;
    for (auto& c : minus_rho) c = -c;
    const auto sys = CoxeterSystem::build(t, true);
    for (auto s : sys.finite_subset()) CHECK(tidal::dot_gen(rd, q, s, minus_rho) == minus_rho);
    const Weight lambda = rd.from_fundamental(std::vector<long long>(rd.simple_roots.size(), 2));
    for (auto s : sys.generators()) CHECK(tidal::dot_gen(rd, q, s, tidal::dot_gen(rd, q, s, lambda)) == lambda);
  }
}

TEST_CASE("rootdata: W^+ elements and alcoves correspond") {
  for (CartanType t : {CartanType::A1, CartanType::A2, CartanType::B2, CartanType::G2}) {
    const auto rd = RootDatum::build(t);
    const auto q = QuantumParam::make(rd, t == CartanType::G2 ? 7 : 5);
    const auto sys = CoxeterSystem::build(t, true);
    CAPTURE(tidal::to_string(t));
    for (const auto& x : sys.min_coset_reps(10)) {
      const Weight lambda = tidal::w_to_weight(rd, q, sys, x);
      CHECK(rd.is_dominant(lambda));
      CHECK(rd.is_integral(lambda));
      CHECK(tidal::weight_to_element(rd, q, sys, lambda) == x);
      CHECK(tidal::affine_length_geometric(rd, sys, x) == x.length());
    }
    for (const auto& x : sys.enumerate_ball(7)) CHECK(tidal::affine_length_geometric(rd, sys, x) == x.length());
  }
}

TEST_CASE("rootdata: alcove addresses in A2") {
  const auto rd = RootDatum::build(CartanType::A2);
  const auto q = QuantumParam::make(rd, 5);
  const auto origin = tidal::alcove_address(rd, q, rd.zero());
  CHECK(origin.n == std::vector<long long>{1, 1, 1});
  CHECK(origin.interior());
  // s0.0 = 3 rho lies across the wall theta^vee = ell
  const Weight three_rho = rd.from_fundamental({3, 3});
  const auto addr = tidal::alcove_address(rd, q, three_rho);
  CHECK(addr.n == std::vector<long long>{1, 1, 2});
  CHECK(addr.interior());
  const auto wall = tidal::alcove_address(rd, q, rd.from_fundamental({4, -1}));
  CHECK_FALSE(wall.interior());
  CHECK(tidal::weight_to_element(rd, q, CoxeterSystem::build("A2", true), three_rho).str() == "0");
}

TEST_CASE("rootdata: affine decomposition reassembles the action") {
  const auto rd = RootDatum::build(CartanType::B2);
  const auto sys = CoxeterSystem::build("B2", true);
  for (const auto& x : sys.enumerate_ball(6)) {
    const auto dec = tidal::affine_decomposition(rd, sys, x);
    CHECK(dec.finite_part.length() <= 4);
    for (auto s : dec.finite_part.word()) CHECK(s != 0);
    // translations are integral weights
    CHECK(rd.is_integral(dec.translation));
  }
  CHECK(tidal::affine_decomposition(rd, sys, sys.identity()).translation == rd.zero());
}

TEST_CASE("rootdata: formatting") {
  CHECK(tidal::format_rational(Rational(-3, 2)) == "-3/2");
  CHECK(tidal::format_weight(w({8, -4, -4})) == "(8,-4,-4)");
}
