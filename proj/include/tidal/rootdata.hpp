#pragma once

#include "tidal/coxeter.hpp"
#include "tidal/laurent.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace tidal {

using Rational = boost::multiprecision::cpp_rational;
/// Weight in ambient coordinates: R^2 for A1 and B2, R^3 for A2 and G2.
using Weight = std::vector<Rational>;

std::string format_rational(const Rational& r);
std::string format_weight(const Weight& w);

/// Root datum of a finite type in fixed coordinates:
///   A1: alpha = (1,-1)                     (R^2)
///   A2: (1,-1,0), (0,1,-1)                 (R^3)
///   B2: (1,-1) long, (0,1) short           (R^2)
///   G2: (1,-1,0) short, (-1,2,-1) long     (R^3)
/// Coroots are 2 alpha / (alpha, alpha) for the standard inner product.
struct RootDatum {
  CartanType type = CartanType::A1;
  unsigned dim = 0;
  std::vector<Weight> simple_roots, simple_coroots;
  std::vector<Weight> positive_roots, positive_coroots;  // by height, then lex
  std::vector<Weight> fundamental_weights;
  Weight rho, theta, theta_coroot;                       // theta: highest short root
  unsigned coxeter_number = 0;
  unsigned w0_length = 0;

  static RootDatum build(CartanType type);

  static Rational pair(const Weight& coroot, const Weight& lambda);
  /// (alpha_1^vee(lambda), ..., alpha_r^vee(lambda)).
  std::vector<Rational> fundamental_coords(const Weight& lambda) const;
  Weight from_fundamental(const std::vector<long long>& coords) const;
  bool is_dominant(const Weight& lambda) const;
  /// Integral: every simple coroot pairs to an integer.
  bool is_integral(const Weight& lambda) const;
  Weight zero() const { return Weight(dim, 0); }
};

/// Order of the root of unity. Strict construction enforces ell odd,
/// ell > h, and 3 not dividing ell for G2.
struct QuantumParam {
  unsigned ell = 0;
  static QuantumParam make(const RootDatum& rd, unsigned ell, bool strict = true);
};

/// s . lambda = s(lambda + rho) - rho, where s_0 acts by
/// mu -> mu + (ell - theta^vee(mu)) theta.
Weight dot_gen(const RootDatum& rd, QuantumParam q, Generator s, const Weight& lambda);
/// w . lambda, applying the letters of w from the right.
Weight dot_action(const RootDatum& rd, QuantumParam q, const CoxElt& w, const Weight& lambda);
/// x . 0 for x in W^+; throws InvalidArgument otherwise.
Weight w_to_weight(const RootDatum& rd, QuantumParam q, const CoxeterSystem& sys, const CoxElt& x);

/// n_alpha with (n_alpha - 1) ell <= alpha^vee(lambda + rho) < n_alpha ell,
/// in the order of rd.positive_roots.
struct AlcoveAddress {
  std::vector<long long> n;
  std::vector<bool> on_lower_wall;  // equality on the left
  bool interior() const;
  friend bool operator==(const AlcoveAddress& a, const AlcoveAddress& b) { return a.n == b.n; }
};

AlcoveAddress alcove_address(const RootDatum& rd, QuantumParam q, const Weight& lambda);
/// The x in W^+ whose alcove has lambda in its lower closure.
CoxElt weight_to_element(const RootDatum& rd, QuantumParam q, const CoxeterSystem& sys, const Weight& lambda);
/// Number of reflection hyperplanes separating the alcove of x from the
/// fundamental alcove.
unsigned affine_length_geometric(const RootDatum& rd, const CoxeterSystem& sys, const CoxElt& x);

/// Affine decomposition x = t_mu u with u in W_f acting linearly:
/// x(lambda) = u(lambda) + ell * mu in the ell-scaled action at rho-shift 0.
struct AffineDecomposition {
  Weight translation;   // mu, in the coroot lattice
  CoxElt finite_part;   // u, as an element of the affine system
};
AffineDecomposition affine_decomposition(const RootDatum& rd, const CoxeterSystem& sys, const CoxElt& x);

}  // namespace tidal
