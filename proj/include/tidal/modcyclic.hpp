#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace tidal {

enum class FGLKind { Multiplicative, Additive, Custom };
std::string to_string(FGLKind k);

/// The Hopf algebra k[x]/x^{p^n} over F_p with Delta(x) = F(x(x)1, 1(x)x)
/// for a one-dimensional formal group law F. Coefficients live in the
/// truncation u^{p^n} = v^{p^n} = 0, which is all the coproduct sees.
/// Copies share one tensor-product memo; all members are thread safe.
class FGLAlgebra {
 public:
  static FGLAlgebra multiplicative(unsigned p, unsigned n);
  static FGLAlgebra additive(unsigned p, unsigned n);
  /// F from its coefficients c[(i, j)] of u^i v^j. Validates F(u,0) = u,
  /// F(0,v) = v, symmetry and associativity in the truncated ring.
  static FGLAlgebra custom(unsigned p, unsigned n, const std::map<std::pair<unsigned, unsigned>, long long>& coeffs);
  /// "mult", "add", or a polynomial such as "u + v + 2*u^2*v + 2*u*v^2".
  static FGLAlgebra parse(unsigned p, unsigned n, std::string_view fgl);

  unsigned p() const { return p_; }
  unsigned n() const { return n_; }
  /// p^n, the dimension of the algebra and the largest block size.
  unsigned order() const { return order_; }
  FGLKind kind() const { return kind_; }
  std::string name() const;
  /// Nonzero terms (i, j, c) of F with c in [1, p).
  const std::vector<std::tuple<unsigned, unsigned, std::uint32_t>>& terms() const { return terms_; }

  struct Cache;

 private:
  FGLAlgebra() = default;
  static FGLAlgebra make(unsigned p, unsigned n, FGLKind kind,
                         const std::map<std::pair<unsigned, unsigned>, long long>& coeffs);
  unsigned p_ = 2, n_ = 1, order_ = 2;
  FGLKind kind_ = FGLKind::Multiplicative;
  std::vector<std::tuple<unsigned, unsigned, std::uint32_t>> terms_;
  std::shared_ptr<Cache> cache_;

  friend const std::shared_ptr<Cache>& cache_of(const FGLAlgebra& alg);
};

/// Jordan type of a nilpotent operator: block sizes, weakly decreasing.
struct JordanType {
  std::vector<unsigned> blocks;
  unsigned dimension() const;
  std::string str() const;  // "[3,1]"
  friend bool operator==(const JordanType&, const JordanType&) = default;
};

/// J_a (x) J_b by ranks of powers of Delta(x) on the ab-dimensional space.
JordanType tensor_decompose(const FGLAlgebra& alg, unsigned a, unsigned b);
/// Jordan type of x^{p^m} on J_k.
JordanType restriction_type(const FGLAlgebra& alg, unsigned k, unsigned m);
/// Every block of restriction_type(k, m) is divisible by p.
bool negligible_after_restriction(const FGLAlgebra& alg, unsigned k, unsigned m);
/// Least set of block sizes containing seed and closed under tensoring with
/// every J_i and taking summands.
std::set<unsigned> thick_closure(const FGLAlgebra& alg, const std::set<unsigned>& seed);

/// Whether id_{J_k} lies in the tensor ideal generated by the socle
/// embedding 1 -> J_{j+1}, i.e. whether J_k -> J_k (x) J_{j+1},
/// w |-> w (x) x^j is split.
bool id_membership(const FGLAlgebra& alg, unsigned k, unsigned j);
/// Same question decided by solving for a module retraction directly.
/// Much slower; used as a cross-check.
bool id_membership_by_retraction(const FGLAlgebra& alg, unsigned k, unsigned j);
/// Indecomposables J_k whose identity lies in the ideal of 1 -> J_{j+1}.
std::vector<unsigned> ob(const FGLAlgebra& alg, unsigned j);

struct PrimeTest {
  unsigned j = 0;
  bool prime = false;
  /// Smallest 0 < a < j with binom(j, a) nonzero mod p, as (a, j - a).
  std::optional<std::pair<unsigned, unsigned>> witness;
};
/// Primeness of the ideal generated by 1 -> J_{j+1}, 1 <= j < p^n.
PrimeTest prime_test(unsigned p, unsigned n, unsigned j);

/// Where the image of (1 -> J_{a+1}) (x) (1 -> J_{b+1}) sits in
/// J_{a+1} (x) J_{b+1}: the socle vector x^a (x) x^b has height h, and a
/// preimage w of it under N^h generates a summand J_{h+1}.
struct SocleWitness {
  unsigned a = 0, b = 0;
  bool binomial_nonzero = false;  // binom(a+b, a) mod p
  unsigned height = 0;
  unsigned summand = 0;  // h + 1
  bool summand_split = false;
  /// binom(a+b, a) nonzero, summand >= a+b+1 and the summand splits.
  bool verified() const;
};
SocleWitness socle_witness(const FGLAlgebra& alg, unsigned a, unsigned b);

/// Tensor products J_a (x) J_b for 1 <= a <= b <= p^n.
using TensorTable = std::map<std::pair<unsigned, unsigned>, JordanType>;
TensorTable tensor_table(const FGLAlgebra& alg);

struct GreenComparison {
  bool equal = true;
  std::size_t pairs = 0;
  std::vector<std::pair<unsigned, unsigned>> mismatches;
};
GreenComparison green_independence(const FGLAlgebra& first, const FGLAlgebra& second);

/// Full classification report for one (p, n, F).
struct Classification {
  unsigned p = 0, n = 0;
  std::string fgl;

  struct ChainIdeal {
    std::optional<unsigned> level;          // m with this = I_m, if any
    std::vector<unsigned> indecomposables;  // block sizes
    std::vector<unsigned> seeds;            // singletons generating it
  };
  /// Proper thick ideals from singleton seeds, largest first.
  std::vector<ChainIdeal> chain;
  bool chain_ok = false;  // equals {J_{a p^{m+1}}} for m = 0..n-1

  struct ObEntry {
    unsigned j = 0;
    std::vector<unsigned> members;
    std::optional<unsigned> level;  // floor(log_p j); none for j = 0
    bool ok = false;
  };
  std::vector<ObEntry> ob;
  bool ob_ok = false;

  std::vector<PrimeTest> primes;
  bool primes_ok = false;  // prime iff j is a power of p

  struct RestrictionCheck {
    unsigned m = 0, k = 0;
    JordanType type, expected;
  };
  /// J_{p^m} and J_{p^m + 1} restricted along x -> x^{p^m}.
  std::vector<RestrictionCheck> restrictions;
  bool restrictions_ok = false;

  bool all_pass() const { return chain_ok && ob_ok && primes_ok && restrictions_ok; }
};
Classification classify(const FGLAlgebra& alg);

}  // namespace tidal
