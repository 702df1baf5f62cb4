#pragma once

#include "tidal/antispherical.hpp"
#include "tidal/orbits.hpp"
#include "tidal/rootdata.hpp"

#include <string>

namespace tidal {

/// sum_i dim Hom(T(x.0), T(y.0))_i v^i = sum_{z in W^+} n_{z,x} n_{z,y}.
struct GradedHom {
  CoxElt x, y;
  LaurentPoly poly;
};

GradedHom graded_hom(ParabolicModule& asph, const CoxElt& x, const CoxElt& y);
/// Hom from the unit into T(x.0): equals n_{e,x}.
LaurentPoly unit_hom(ParabolicModule& asph, const CoxElt& x);

struct CensusEntry {
  CoxElt element;
  Weight weight;
  std::vector<Rational> fundamental;  // alpha_i^vee(weight)
  int degree = 0;
  LaurentPoly poly;
};

struct Census {
  std::string label;
  unsigned ell = 0;
  unsigned max_length = 0;
  int certified_length = 0;
  std::vector<CensusEntry> entries;
  /// Entries whose unit Hom is not a monomial with coefficient 1.
  std::vector<CoxElt> non_monomial;
  /// Certified x with nonzero unit Hom that are not minimal in W_f\W/W_f.
  std::vector<CoxElt> double_coset_violations;
  std::size_t scanned = 0;
};

/// All certified x in W^+ with nonzero unit Hom, with weight labels.
Census census(ParabolicModule& asph, const RootDatum& rd, QuantumParam q, unsigned max_length);

struct NilpotenceReport {
  std::string label;
  unsigned max_length = 0;
  int certified_length = 0;
  unsigned bound = 0;  // 2 l(w_0)
  int max_deg = 0;
  std::size_t pairs = 0;
  std::vector<std::pair<CoxElt, CoxElt>> degree_violations;
  std::vector<std::pair<CoxElt, CoxElt>> constant_term_violations;  // constant term != delta
  std::vector<std::pair<CoxElt, CoxElt>> symmetry_violations;
  std::vector<std::pair<CoxElt, CoxElt>> negative_coefficients;
  bool ok() const {
    return degree_violations.empty() && constant_term_violations.empty() && symmetry_violations.empty() &&
           negative_coefficients.empty();
  }
};

/// Scans graded_hom over all certified pairs of the ball.
NilpotenceReport nilpotence_bound_check(ParabolicModule& asph, unsigned max_length);

/// A unit morphism 1 -> T(x.0) used as an ideal generator.
struct UnitGenerator {
  std::string name;
  CoxElt element;
  Weight weight;
  int degree = 0;
  /// Orbit of the largest prime ideal the generator lies in.
  std::string level;
};

enum class Provenance { PaperGiven, HomCertifiedIncomparable };
std::string to_string(Provenance p);

struct GeneratorRelation {
  std::size_t lower, upper;  // indices into generators; lower <= upper
  Provenance provenance;
};

struct IdealLattice {
  std::vector<UnitGenerator> generators;
  std::vector<GeneratorRelation> relations;  // covers and certified incomparabilities
  struct Ideal {
    std::string name;
    std::vector<std::size_t> generators;  // down-closed set
    bool prime = false;
    std::string orbit;  // when prime
  };
  std::vector<Ideal> ideals;                                  // all proper ideals
  std::vector<std::pair<std::size_t, std::size_t>> hasse;     // (smaller, larger)
  std::size_t prime_count() const;
  std::string dot() const;
  std::string generator_dot() const;
};

/// Proper tensor ideals of tilting modules for quantum sl3 at ell = 5.
IdealLattice ideal_lattice_A2();

struct AntichainCertificate {
  long long i = 0;
  CoxElt element;
  Weight weight;
  LaurentPoly unit;
  bool unit_ok = false;  // unit Hom is v^3
};

struct AntichainReport {
  unsigned ell = 0;
  unsigned max_length = 0;
  long long i_max_verified = 0;  // verified for 3 <= i <= i_max
  std::vector<AntichainCertificate> members;
  /// (i, j) pairs whose graded Hom has a nonzero constant term.
  std::vector<std::pair<long long, long long>> comparable_pairs;
  std::size_t pairs_checked = 0;
  bool ok() const;
};

/// For i in [i_lo, i_hi]: certifies unit Hom v^3 into T(i ell - 3, 0) and
/// zero degree-0 Homs between distinct members. Elements beyond the certified
/// length are skipped and reported through i_max_verified.
AntichainReport b2_antichain_certificates(ParabolicModule& asph, const RootDatum& rd, QuantumParam q,
                                          long long i_lo, long long i_hi, unsigned max_length);

}  // namespace tidal
