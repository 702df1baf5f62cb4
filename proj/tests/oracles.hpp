// Independent reference computations shared by the unit tests and the
// acceptance runner. Each one takes a different route from the library code
// it checks; they are slow and only meant for small inputs.
#pragma once

#include "tidal/coxeter.hpp"
#include "tidal/hecke.hpp"
#include "tidal/modcyclic.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oracle {

/// Bruhat order by the subword property on a reduced word of x.
bool bruhat_by_subwords(const tidal::CoxeterSystem& sys, const tidal::CoxElt& y, const tidal::CoxElt& x);

/// Coefficients of sum_w q^{l(w)} for an affine Weyl group up to q^L, from
/// Bott's product over the exponents.
std::vector<long long> affine_poincare(tidal::CartanType type, unsigned max_length);
/// Coefficients of prod_i 1/(1 - q^{m_i}), the length generating function of W^+.
std::vector<long long> min_coset_poincare(tidal::CartanType type, unsigned max_length);

/// Full KL table of a finite system by solving bar-invariance directly:
/// h_{z,x} - bar(h_{z,x}) = sum_{z<y<=x} bar(h_{y,x}) r_{z,y}, where
/// bar(H_y) = sum_z r_{z,y} H_z is built from H_s^{-1} = H_s + (v - v^{-1}).
/// Keys are (y, x) normal forms; zero entries are absent.
std::map<std::pair<std::string, std::string>, tidal::LaurentPoly> kl_by_bar_solve(const tidal::CoxeterSystem& sys);

/// Coefficients of u^i v^j in a formal group law, written out by hand.
using LawCoeffs = std::map<std::pair<unsigned, unsigned>, unsigned>;
LawCoeffs multiplicative_law();
LawCoeffs additive_law();

/// Jordan type of Delta(x) on J_a (x) J_b from dense matrices: ranks of all
/// powers by plain Gaussian elimination mod p.
tidal::JordanType dense_tensor(unsigned p, const LawCoeffs& law, unsigned a, unsigned b);

/// J_a (x) J_b = sum_i J_{a+b-1-2i}, valid for a + b - 1 <= p.
tidal::JordanType clebsch_gordan(unsigned a, unsigned b);

/// binom(n, k) mod p from the product formula, no Lucas.
unsigned binomial_mod(unsigned n, unsigned k, unsigned p);

}  // namespace oracle
