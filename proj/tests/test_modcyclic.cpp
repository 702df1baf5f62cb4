#include "oracles.hpp"

#include "tidal/error.hpp"
#include "tidal/modcyclic.hpp"

#include <doctest.h>

using tidal::FGLAlgebra;
using tidal::JordanType;

TEST_CASE("modcyclic: Clebsch-Gordan range") {
  for (unsigned p : {3u, 5u, 7u}) {
    const auto alg = FGLAlgebra::multiplicative(p, 1);
    for (unsigned a = 1; a <= p; ++a)
      for (unsigned b = 1; a + b - 1 <= p; ++b) {
        CAPTURE(p);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(tidal::tensor_decompose(alg, a, b) == oracle::clebsch_gordan(a, b));
      }
  }
}

TEST_CASE("modcyclic: rank chain agrees with dense matrices") {
  struct Case {
    unsigned p, n;
  };
  for (const Case& c : {Case{2, 2}, Case{2, 3}, Case{3, 2}, Case{5, 1}, Case{2, 4}}) {
    const auto mult = FGLAlgebra::multiplicative(c.p, c.n);
    const auto add = FGLAlgebra::additive(c.p, c.n);
    for (unsigned a = 1; a <= mult.order(); ++a)
      for (unsigned b = a; b <= mult.order(); b += (b < 6 ? 1 : 3)) {
        CAPTURE(c.p);
        CAPTURE(c.n);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(tidal::tensor_decompose(mult, a, b) == oracle::dense_tensor(c.p, oracle::multiplicative_law(), a, b));
        CHECK(tidal::tensor_decompose(add, a, b) == oracle::dense_tensor(c.p, oracle::additive_law(), a, b));
      }
  }
}

TEST_CASE("modcyclic: known small products") {
  const auto alg = FGLAlgebra::multiplicative(3, 1);
  CHECK(tidal::tensor_decompose(alg, 2, 2).str() == "[3,1]");
  CHECK(tidal::tensor_decompose(alg, 2, 3).str() == "[3,3]");
  CHECK(tidal::tensor_decompose(alg, 3, 3).str() == "[3,3,3]");
  const auto two = FGLAlgebra::additive(2, 2);
  CHECK(tidal::tensor_decompose(two, 2, 2).str() == "[2,2]");
  CHECK(tidal::tensor_decompose(two, 3, 3).str() == "[4,4,1]");
  CHECK_THROWS_AS(tidal::tensor_decompose(two, 0, 2), tidal::InvalidArgument);
  CHECK_THROWS_AS(tidal::tensor_decompose(two, 5, 2), tidal::InvalidArgument);
}

TEST_CASE("modcyclic: restriction along Frobenius powers") {
  const auto alg = FGLAlgebra::multiplicative(3, 2);
  CHECK(tidal::restriction_type(alg, 3, 1).str() == "[1,1,1]");
  CHECK(tidal::restriction_type(alg, 4, 1).str() == "[2,1,1]");
  CHECK(tidal::restriction_type(alg, 9, 1).str() == "[3,3,3]");
  CHECK(tidal::negligible_after_restriction(alg, 9, 1));
  CHECK_FALSE(tidal::negligible_after_restriction(alg, 4, 1));
}

TEST_CASE("modcyclic: thick closures") {
  const auto alg = FGLAlgebra::additive(2, 2);
  CHECK(tidal::thick_closure(alg, {4}) == std::set<unsigned>{4});
  CHECK(tidal::thick_closure(alg, {2}) == std::set<unsigned>{2, 4});
  CHECK(tidal::thick_closure(alg, {1}) == std::set<unsigned>{1, 2, 3, 4});
  CHECK(tidal::thick_closure(alg, {3}) == std::set<unsigned>{1, 2, 3, 4});
}

TEST_CASE("modcyclic: id membership matches the retraction solve") {
  struct Case {
    unsigned p, n;
  };
  for (const Case& c : {Case{2, 2}, Case{2, 3}, Case{3, 2}, Case{5, 1}}) {
    for (const auto& alg : {FGLAlgebra::multiplicative(c.p, c.n), FGLAlgebra::additive(c.p, c.n)}) {
      for (unsigned j = 0; j < alg.order(); ++j)
        for (unsigned k = 1; k <= alg.order(); ++k) {
          CAPTURE(alg.name());
          CAPTURE(j);
          CAPTURE(k);
          CHECK(tidal::id_membership(alg, k, j) == tidal::id_membership_by_retraction(alg, k, j));
        }
    }
  }
}

TEST_CASE("modcyclic: Ob of the socle ideals") {
  const auto alg = FGLAlgebra::multiplicative(2, 3);
  CHECK(tidal::ob(alg, 0) == std::vector<unsigned>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(tidal::ob(alg, 1) == std::vector<unsigned>{2, 4, 6, 8});
  CHECK(tidal::ob(alg, 3) == std::vector<unsigned>{4, 8});
  CHECK(tidal::ob(alg, 5) == std::vector<unsigned>{8});
}

TEST_CASE("modcyclic: prime test follows Lucas") {
  for (unsigned p : {2u, 3u, 5u}) {
    const unsigned order = p * p * (p == 2 ? 2 : 1);
    const unsigned n = p == 2 ? 3 : 2;
    for (unsigned j = 1; j < order; ++j) {
      const auto t = tidal::prime_test(p, n, j);
      bool power = false;
      for (unsigned q = 1; q <= j; q *= p) power = power || q == j;
      CAPTURE(p);
      CAPTURE(j);
      CHECK(t.prime == power);
      CHECK(t.witness.has_value() == !power);
      if (t.witness) {
        const auto [a, b] = *t.witness;
        CHECK(a + b == j);
        CHECK(oracle::binomial_mod(j, a, p) != 0);
        for (unsigned smaller = 1; smaller < a; ++smaller) CHECK(oracle::binomial_mod(j, smaller, p) == 0);
      }
    }
  }
}

TEST_CASE("modcyclic: socle witnesses") {
  const auto alg = FGLAlgebra::multiplicative(3, 1);
  const auto w = tidal::socle_witness(alg, 1, 1);
  CHECK(w.binomial_nonzero);
  CHECK(w.height == 2);
  CHECK(w.summand == 3);
  CHECK(w.verified());
  const auto five = tidal::socle_witness(FGLAlgebra::additive(5, 1), 2, 1);
  CHECK(five.verified());
  CHECK(five.height == 3);
  // binom(2,1) = 0 mod 2: the tensor of socle maps is not a split summand
  const auto two = tidal::socle_witness(FGLAlgebra::multiplicative(2, 2), 1, 1);
  CHECK_FALSE(two.binomial_nonzero);
  CHECK_FALSE(two.verified());
}

TEST_CASE("modcyclic: formal group law parsing and validation") {
  CHECK(FGLAlgebra::parse(3, 1, "mult").kind() == tidal::FGLKind::Multiplicative);
  CHECK(FGLAlgebra::parse(3, 1, "add").kind() == tidal::FGLKind::Additive);
  const auto custom = FGLAlgebra::parse(3, 2, "u + v + 2*u*v");
  CHECK(custom.kind() == tidal::FGLKind::Custom);
  CHECK(custom.terms().size() == 3);
  CHECK_THROWS_AS(FGLAlgebra::parse(3, 1, "u + v + u^2*v"), tidal::InvalidArgument);
  CHECK_THROWS_AS(FGLAlgebra::parse(3, 1, "2*u + v"), tidal::InvalidArgument);
  CHECK_THROWS_AS(FGLAlgebra::parse(3, 1, "u + v + u*w"), tidal::InvalidArgument);
  // symmetric but not associative: F(F(u,v),w) picks up u^2 v w terms
  CHECK_THROWS_AS(FGLAlgebra::parse(5, 1, "u + v + u^2*v^2"), tidal::InvalidArgument);
  CHECK_THROWS_AS(FGLAlgebra::multiplicative(4, 1), tidal::InvalidArgument);
  CHECK_THROWS_AS(FGLAlgebra::multiplicative(5, 3), tidal::InvalidArgument);
}

TEST_CASE("modcyclic: custom law matches the dense oracle and the Green ring") {
  const auto custom = FGLAlgebra::parse(3, 2, "u + v + 2*u*v");
  const oracle::LawCoeffs law{{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 2}};
  for (unsigned a = 1; a <= 9; ++a)
    for (unsigned b = a; b <= 9; ++b) CHECK(tidal::tensor_decompose(custom, a, b) == oracle::dense_tensor(3, law, a, b));
  const auto cmp = tidal::green_independence(custom, FGLAlgebra::additive(3, 2));
  CHECK(cmp.equal);
  CHECK(cmp.pairs == 45);
}

TEST_CASE("modcyclic: classification on a small case") {
  const auto c = tidal::classify(FGLAlgebra::multiplicative(2, 2));
  CHECK(c.all_pass());
  REQUIRE(c.chain.size() == 2);
  CHECK(c.chain[0].indecomposables == std::vector<unsigned>{2, 4});
  CHECK(c.chain[1].indecomposables == std::vector<unsigned>{4});
  CHECK(c.primes.size() == 3);
}
