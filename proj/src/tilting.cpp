#include "tidal/tilting.hpp"

#include "tidal/error.hpp"

#include <algorithm>
#include <sstream>

namespace tidal {

namespace {

ElemId checked_id(ParabolicModule& asph, const CoxElt& x) {
  const auto& sys = asph.system();
  const ElemId id = sys.intern(x);
  if (!sys.in_min_coset_reps(id)) throw InvalidArgument("element " + x.str() + " is not in W^+");
  return id;
}

}  // namespace

GradedHom graded_hom(ParabolicModule& asph, const CoxElt& x, const CoxElt& y) {
  const SparseVec nx = asph.canonical(checked_id(asph, x));
  const SparseVec& ny = asph.canonical(checked_id(asph, y));
  GradedHom out{x, y, {}};
  for (const auto& [z, p] : nx) {
    auto it = ny.find(z);
    if (it != ny.end()) out.poly += p * it->second;
  }
  return out;
}

LaurentPoly unit_hom(ParabolicModule& asph, const CoxElt& x) {
  return asph.coeff(asph.system().identity_id(), checked_id(asph, x));
}

Census census(ParabolicModule& asph, const RootDatum& rd, QuantumParam q, unsigned max_length) {
  const auto& sys = asph.system();
  if (rd.type != sys.type() || !sys.affine()) throw InvalidArgument("census needs the affine system of the root datum");
  Census out;
  out.label = sys.label();
  out.ell = q.ell;
  out.max_length = max_length;
  out.certified_length = asph.certified_length(max_length);
  if (out.certified_length < 0) return out;
  for (ElemId x : sys.min_coset_rep_ids(static_cast<unsigned>(out.certified_length))) {
    ++out.scanned;
    const LaurentPoly h = asph.coeff(sys.identity_id(), x);
    if (h.is_zero()) continue;
    const CoxElt& e = sys.elt(x);
    CensusEntry entry;
    entry.element = e;
    entry.weight = w_to_weight(rd, q, sys, e);
    entry.fundamental = rd.fundamental_coords(entry.weight);
    entry.degree = h.degree();
    entry.poly = h;
    if (!h.is_monomial() || h.coeffs().front() != 1) out.non_monomial.push_back(e);
    if (!sys.is_min_double_coset(e)) out.double_coset_violations.push_back(e);
    out.entries.push_back(std::move(entry));
  }
  return out;
}

NilpotenceReport nilpotence_bound_check(ParabolicModule& asph, unsigned max_length) {
  const auto& sys = asph.system();
  NilpotenceReport rep;
  rep.label = sys.label();
  rep.max_length = max_length;
  rep.certified_length = asph.certified_length(max_length);
  rep.bound = 2 * sys.longest_finite_length();
  if (rep.certified_length < 0) return rep;
  const auto ball = sys.min_coset_rep_ids(static_cast<unsigned>(rep.certified_length));
  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (std::size_t j = i; j < ball.size(); ++j) {
      const CoxElt& x = sys.elt(ball[i]);
      const CoxElt& y = sys.elt(ball[j]);
      const LaurentPoly p = graded_hom(asph, x, y).poly;
      ++rep.pairs;
      if (!p.is_zero()) rep.max_deg = std::max(rep.max_deg, p.degree());
      if (!p.is_zero() && p.degree() > static_cast<int>(rep.bound)) rep.degree_violations.emplace_back(x, y);
      if (p.coeff(0) != (i == j ? 1 : 0) || (!p.is_zero() && p.valuation() < 0))
        rep.constant_term_violations.emplace_back(x, y);
      if (!p.nonnegative()) rep.negative_coefficients.emplace_back(x, y);
      if (i != j && graded_hom(asph, y, x).poly != p) rep.symmetry_violations.emplace_back(x, y);
    }
  }
  return rep;
}

std::string to_string(Provenance p) {
  return p == Provenance::PaperGiven ? "paper-given" : "hom-certified-incomparable";
}

std::size_t IdealLattice::prime_count() const {
  return static_cast<std::size_t>(std::count_if(ideals.begin(), ideals.end(), [](const Ideal& i) { return i.prime; }));
}

std::string IdealLattice::dot() const {
  std::ostringstream os;
  os << "digraph a2_ideals {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    os << "  n" << i << " [label=\"" << ideals[i].name;
    if (ideals[i].prime) os << " = I_" << ideals[i].orbit;
    os << "\"" << (ideals[i].prime ? ", shape=box" : "") << "];\n";
  }
  for (auto [a, b] : hasse) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string IdealLattice::generator_dot() const {
  std::ostringstream os;
  os << "digraph a2_generators {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < generators.size(); ++i)
    os << "  g" << i << " [label=\"" << generators[i].name << " (deg " << generators[i].degree << ")\"];\n";
  for (const auto& r : relations) {
    if (r.provenance == Provenance::PaperGiven)
      os << "  g" << r.lower << " -> g" << r.upper << " [label=\"paper-given\"];\n";
    else
      os << "  g" << r.lower << " -> g" << r.upper << " [style=dashed, dir=none, label=\"incomparable\"];\n";
  }
  os << "}\n";
  return os.str();
}

IdealLattice ideal_lattice_A2() {
  const auto sys = CoxeterSystem::build(CartanType::A2, true);
  const auto rd = RootDatum::build(CartanType::A2);
  const auto q = QuantumParam::make(rd, 5);
  ParabolicModule asph(sys, ModuleKind::Antispherical);
  const Census c = census(asph, rd, q, 14);

  IdealLattice lat;
  // Census entries other than the unit, named by degree and the side of the
  // fundamental weight they point to.
  for (const auto& e : c.entries) {
    if (e.degree == 0) continue;
    UnitGenerator g;
    g.element = e.element;
    g.weight = e.weight;
    g.degree = e.degree;
    g.name = "alpha" + std::to_string(e.degree);
    if (e.degree == 2) g.name += e.fundamental[1] == 0 ? "L" : "R";
    // Only 1 -> T_1 is outside the projective ideal.
    g.level = e.degree == 1 ? "(3)" : "(2,1)";
    lat.generators.push_back(std::move(g));
  }
  if (lat.generators.size() != 4) throw ConsistencyError("expected four unit generators for sl3");
  std::sort(lat.generators.begin(), lat.generators.end(),
            [](const UnitGenerator& a, const UnitGenerator& b) { return a.name < b.name; });
  auto idx = [&](const std::string& name) {
    for (std::size_t i = 0; i < lat.generators.size(); ++i)
      if (lat.generators[i].name == name) return i;
    throw ConsistencyError("missing generator " + name);
  };
  const std::size_t a1 = idx("alpha1"), a2l = idx("alpha2L"), a2r = idx("alpha2R"), a3 = idx("alpha3");
  // 1 -> T_3 factors through both T_2's, which factor through T_1.
  lat.relations = {{a3, a2l, Provenance::PaperGiven},
                   {a3, a2r, Provenance::PaperGiven},
                   {a2l, a1, Provenance::PaperGiven},
                   {a2r, a1, Provenance::PaperGiven}};
  const LaurentPoly cross = graded_hom(asph, lat.generators[a2l].element, lat.generators[a2r].element).poly;
  if (cross.coeff(0) != 0) throw ConsistencyError("T_2^L and T_2^R have a degree-zero morphism");
  lat.relations.push_back({a2l, a2r, Provenance::HomCertifiedIncomparable});

  const std::size_t n = lat.generators.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& r : lat.relations)
    if (r.provenance == Provenance::PaperGiven) le[r.lower][r.upper] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && le[i][j] && lat.generators[i].degree < lat.generators[j].degree)
        throw ConsistencyError("factorization order contradicts degrees");

  auto name_of = [&](const std::vector<std::size_t>& gens) -> std::string {
    auto has = [&](std::size_t g) { return std::find(gens.begin(), gens.end(), g) != gens.end(); };
    if (gens.empty()) return "0";
    if (has(a1)) return "N";
    if (has(a2l) && has(a2r)) return "I_(2,1)";
    if (has(a2l)) return "J^L";
    if (has(a2r)) return "J^R";
    return "J";
  };

  // Prime ideal of an orbit: generators whose level lies below it.
  const OrbitPoset orbits = orbit_poset("sl3");
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool closed = true;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> j & 1) && le[i][j] && !(mask >> i & 1)) closed = false;
    if (!closed) continue;
    IdealLattice::Ideal ideal;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) ideal.generators.push_back(i);
    ideal.name = name_of(ideal.generators);
    for (std::size_t o = 0; o < orbits.nodes.size(); ++o) {
      std::vector<std::size_t> below;
      for (std::size_t i = 0; i < n; ++i)
        if (orbits.leq[orbits.index_of(lat.generators[i].level)][o]) below.push_back(i);
      if (below == ideal.generators) {
        ideal.prime = true;
        ideal.orbit = orbits.nodes[o];
      }
    }
    lat.ideals.push_back(std::move(ideal));
  }
  std::sort(lat.ideals.begin(), lat.ideals.end(), [](const auto& a, const auto& b) {
    if (a.generators.size() != b.generators.size()) return a.generators.size() < b.generators.size();
    return a.name < b.name;
  });
  for (std::size_t i = 0; i < lat.ideals.size(); ++i)
    for (std::size_t j = 0; j < lat.ideals.size(); ++j) {
      const auto& a = lat.ideals[i].generators;
      const auto& b = lat.ideals[j].generators;
      if (b.size() == a.size() + 1 && std::includes(b.begin(), b.end(), a.begin(), a.end()))
        lat.hasse.emplace_back(i, j);
    }
  return lat;
}

bool AntichainReport::ok() const {
  return comparable_pairs.empty() &&
         std::all_of(members.begin(), members.end(), [](const AntichainCertificate& c) { return c.unit_ok; });
}

AntichainReport b2_antichain_certificates(ParabolicModule& asph, const RootDatum& rd, QuantumParam q,
                                          long long i_lo, long long i_hi, unsigned max_length) {
  const auto& sys = asph.system();
  if (sys.type() != CartanType::B2 || !sys.affine() || rd.type != CartanType::B2)
    throw InvalidArgument("b2_antichain_certificates needs affine B2");
  if (i_lo < 3 || i_hi < i_lo) throw InvalidArgument("family index range must satisfy 3 <= i_lo <= i_hi");
  AntichainReport rep;
  rep.ell = q.ell;
  rep.max_length = max_length;
  rep.i_max_verified = i_lo - 1;
  const int cert = asph.certified_length(max_length);
  for (long long i = i_lo; i <= i_hi; ++i) {
    Weight lambda{Rational(i * static_cast<long long>(q.ell) - 3), Rational(0)};
    const CoxElt x = weight_to_element(rd, q, sys, lambda);
    if (static_cast<int>(x.length()) > cert) break;
    if (w_to_weight(rd, q, sys, x) != lambda) throw ConsistencyError("family weight is not an alcove vertex image");
    AntichainCertificate c;
    c.i = i;
    c.element = x;
    c.weight = lambda;
    c.unit = unit_hom(asph, x);
    c.unit_ok = c.unit == LaurentPoly::monomial(3);
    rep.members.push_back(std::move(c));
    rep.i_max_verified = i;
  }
  for (std::size_t a = 0; a < rep.members.size(); ++a)
    for (std::size_t b = a + 1; b < rep.members.size(); ++b) {
      ++rep.pairs_checked;
      if (graded_hom(asph, rep.members[a].element, rep.members[b].element).poly.coeff(0) != 0)
        rep.comparable_pairs.emplace_back(rep.members[a].i, rep.members[b].i);
    }
  return rep;
}

}  // namespace tidal
