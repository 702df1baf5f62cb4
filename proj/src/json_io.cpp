#include "json_io.hpp"

#include "tidal/error.hpp"

#include <algorithm>
#include <limits>

namespace tidal::io {

namespace {

Json pairs(const std::vector<std::pair<CoxElt, CoxElt>>& v) {
  Json out = Json::array();
  for (const auto& [a, b] : v) out.push_back(Json::array({a.str(), b.str()}));
  return out;
}

Json words(const std::vector<CoxElt>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json blocks(const std::vector<unsigned>& v) { return Json(v); }

}  // namespace

Json integer(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(z));
  return Json(z.str());
}

Integer integer_from(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw InvalidArgument("expected an integer");
}

Json poly(const LaurentPoly& p) {
  Json c = Json::array();
  for (const auto& z : p.coeffs()) c.push_back(integer(z));
  return Json{{"lo", p.is_zero() ? 0 : p.lo()}, {"coeffs", c}};
}

LaurentPoly poly_from(const Json& j) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("coeffs")) throw InvalidArgument("malformed polynomial");
  std::vector<Integer> c;
  for (const auto& z : j.at("coeffs")) c.push_back(integer_from(z));
  return LaurentPoly(j.at("lo").get<int>(), std::move(c));
}

Json sparse(const CoxeterSystem& sys, const SparseVec& vec) {
  std::vector<std::pair<CoxElt, const LaurentPoly*>> items;
  for (const auto& [id, p] : vec) items.emplace_back(sys.elt(id), &p);
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Json out = Json::object();
  for (const auto& [x, p] : items) out[x.str()] = poly(*p);
  return out;
}

Json kl_vector(const KLVector& v) {
  Json terms = Json::object();
  for (const auto& [x, p] : v.terms) terms[x.str()] = poly(p);
  return Json{{"basis", v.basis == Basis::Standard ? "standard" : "canonical"}, {"terms", terms}};
}

Json weight(const Weight& w) {
  Json out = Json::array();
  for (const auto& r : w) out.push_back(format_rational(r));
  return out;
}

Json report(const BoundReport& r) {
  Json v = Json::array();
  for (const auto& b : r.violations) v.push_back(Json{{"y", b.y.str()}, {"x", b.x.str()}, {"poly", poly(b.poly)}});
  return Json{{"type", r.label},
              {"max_length", r.max_length},
              {"certified_length", r.certified_length},
              {"bound", r.bound},
              {"max_degree", r.max_deg},
              {"attained", r.attained()},
              {"pairs_checked", r.pairs_checked},
              {"violations", v}};
}

Json report(const SphericalInverse& r, bool with_entries) {
  Json out{{"max_length", r.max_length},
           {"max_degree", r.max_deg},
           {"pairs_verified", r.pairs_verified},
           {"flagged_rows", words(r.flagged_rows)},
           {"orthogonality_failures", pairs(r.orthogonality_failures)}};
  if (with_entries) {
    Json e = Json::array();
    for (const auto& [zx, p] : r.entries) e.push_back(Json{{"z", zx.first.str()}, {"x", zx.second.str()}, {"poly", poly(p)}});
    out["entries"] = e;
  }
  return out;
}

Json report(const CrossCheckReport& r) {
  return Json{{"elements", r.elements}, {"mismatches", words(r.mismatches)}};
}

Json report(const CellPartition& r) {
  Json classes = Json::array();
  for (std::size_t i = 0; i < r.classes.size(); ++i)
    classes.push_back(Json{{"members", words(r.classes[i])}, {"certified", static_cast<bool>(r.certified[i])}});
  Json edges = Json::array();
  for (auto [a, b] : r.edges) edges.push_back(Json::array({a, b}));
  return Json{{"side", to_string(r.side)},
              {"max_length", r.max_length},
              {"stability_margin", r.stability_margin},
              {"classes", classes},
              {"edges", edges}};
}

Json report(const PReport& r) {
  Json f = Json::object();
  for (const auto& [k, v] : r.failures) f[k] = v;
  return Json{{"P", r.all_pass() ? "all pass" : "fail"},
              {"failures", f},
              {"duflo", words(r.duflo)},
              {"a", r.duflo_a},
              {"left_cells", r.left_cells},
              {"right_cells", r.right_cells},
              {"one_per_left_cell", r.one_per_left_cell},
              {"one_per_right_cell", r.one_per_right_cell}};
}

Json report(const CellOrbitDiagnostic& r) {
  Json cells = Json::array();
  for (const auto& [x, stable] : r.cells) cells.push_back(Json{{"lowest", x.str()}, {"stable", stable}});
  return Json{{"type", r.label},
              {"max_length", r.max_length},
              {"margin", r.margin},
              {"two_sided_cells", r.certified_cells},
              {"orbits", r.orbit_count},
              {"match", r.match()},
              {"cells", cells}};
}

Json report(const std::vector<CellData>& r) {
  Json out = Json::array();
  for (const auto& d : r)
    out.push_back(Json{{"x", d.element.str()},
                       {"a", d.a.value},
                       {"a_exact", d.a.exact},
                       {"delta", d.delta ? Json(*d.delta) : Json(nullptr)},
                       {"left", d.left},
                       {"right", d.right},
                       {"two_sided", d.twosided},
                       {"duflo", d.is_duflo}});
  return out;
}

Json report(const GradedHom& r) { return Json{{"x", r.x.str()}, {"y", r.y.str()}, {"hom", poly(r.poly)}}; }

Json report(const Census& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json fund = Json::array();
    for (const auto& q : e.fundamental) fund.push_back(format_rational(q));
    entries.push_back(Json{{"x", e.element.str()},
                           {"length", e.element.length()},
                           {"weight", weight(e.weight)},
                           {"fundamental", fund},
                           {"degree", e.degree},
                           {"hom", poly(e.poly)}});
  }
  return Json{{"type", r.label},
              {"ell", r.ell},
              {"max_length", r.max_length},
              {"certified_length", r.certified_length},
              {"scanned", r.scanned},
              {"entries", entries},
              {"non_monomial", words(r.non_monomial)},
              {"double_coset_violations", words(r.double_coset_violations)}};
}

Json report(const NilpotenceReport& r) {
  return Json{{"type", r.label},
              {"max_length", r.max_length},
              {"certified_length", r.certified_length},
              {"bound", r.bound},
              {"max_degree", r.max_deg},
              {"pairs", r.pairs},
              {"degree_violations", pairs(r.degree_violations)},
              {"constant_term_violations", pairs(r.constant_term_violations)},
              {"symmetry_violations", pairs(r.symmetry_violations)},
              {"negative_coefficients", pairs(r.negative_coefficients)}};
}

Json report(const IdealLattice& r) {
  Json gens = Json::array();
  for (const auto& g : r.generators)
    gens.push_back(Json{{"name", g.name}, {"x", g.element.str()}, {"weight", weight(g.weight)}, {"degree", g.degree}});
  Json rel = Json::array();
  for (const auto& x : r.relations)
    rel.push_back(Json{{"lower", r.generators[x.lower].name},
                       {"upper", r.generators[x.upper].name},
                       {"provenance", to_string(x.provenance)}});
  Json ideals = Json::array();
  for (const auto& i : r.ideals) {
    Json g = Json::array();
    for (auto k : i.generators) g.push_back(r.generators[k].name);
    Json e{{"name", i.name}, {"generators", g}, {"prime", i.prime}};
    if (i.prime) e["orbit"] = i.orbit;
    ideals.push_back(e);
  }
  Json hasse = Json::array();
  for (auto [a, b] : r.hasse) hasse.push_back(Json::array({r.ideals[a].name, r.ideals[b].name}));
  return Json{{"generators", gens},
              {"relations", rel},
              {"ideals", ideals},
              {"hasse", hasse},
              {"ideal_count", r.ideals.size()},
              {"prime_count", r.prime_count()}};
}

Json report(const AntichainReport& r) {
  Json members = Json::array();
  for (const auto& c : r.members)
    members.push_back(Json{{"i", c.i},
                           {"x", c.element.str()},
                           {"length", c.element.length()},
                           {"weight", weight(c.weight)},
                           {"unit_hom", poly(c.unit)},
                           {"unit_ok", c.unit_ok}});
  Json comparable = Json::array();
  for (auto [a, b] : r.comparable_pairs) comparable.push_back(Json::array({a, b}));
  return Json{{"ell", r.ell},
              {"max_length", r.max_length},
              {"i_max_verified", r.i_max_verified},
              {"members", members},
              {"pairs_checked", r.pairs_checked},
              {"comparable_pairs", comparable}};
}

Json report(const OrbitPoset& poset) {
  Json covers = Json::array();
  for (auto [a, b] : poset.covers) covers.push_back(Json::array({poset.nodes[a], poset.nodes[b]}));
  Json ideals = Json::array();
  for (const auto& t : thick_ideal_lattice(poset)) {
    Json e{{"orbits", Json::array()}, {"principal", t.principal}, {"prime", t.prime}};
    for (auto k : t.downset) e["orbits"].push_back(poset.nodes[k]);
    if (t.orbit) e["prime_for"] = poset.nodes[*t.orbit];
    ideals.push_back(e);
  }
  return Json{{"algebra", poset.algebra}, {"orbits", poset.nodes}, {"covers", covers}, {"proper_ideals", ideals}};
}

Json report(const CoverReport& r) {
  return Json{{"ideals", r.ideals},
              {"primes", r.primes},
              {"prime_without_unique_cover", r.prime_without_unique_cover},
              {"unique_cover_not_prime", r.unique_cover_not_prime},
              {"ok", r.ok()}};
}

Json report(const Classification& r) {
  Json chain = Json::array();
  for (const auto& c : r.chain)
    chain.push_back(Json{{"label", c.level ? "I_" + std::to_string(*c.level) : "unmatched"},
                         {"indecomposables", blocks(c.indecomposables)},
                         {"seeds", blocks(c.seeds)}});
  Json ob = Json::array();
  for (const auto& e : r.ob)
    ob.push_back(Json{{"j", e.j},
                      {"ideal", e.level ? "I_" + std::to_string(*e.level) : "all"},
                      {"members", blocks(e.members)},
                      {"ok", e.ok}});
  Json primes = Json::array(), prime_js = Json::array();
  for (const auto& t : r.primes) {
    Json e{{"j", t.j}, {"prime", t.prime}};
    if (t.witness) e["witness"] = Json::array({t.witness->first, t.witness->second});
    primes.push_back(e);
    if (t.prime) prime_js.push_back(t.j);
  }
  Json restr = Json::array();
  for (const auto& c : r.restrictions)
    restr.push_back(Json{{"m", c.m}, {"k", c.k}, {"type", blocks(c.type.blocks)}, {"expected", blocks(c.expected.blocks)}});
  return Json{{"p", r.p},
              {"n", r.n},
              {"fgl", r.fgl},
              {"prime_js", prime_js},
              {"chain", chain},
              {"chain_ok", r.chain_ok},
              {"ob", ob},
              {"ob_ok", r.ob_ok},
              {"primes", primes},
              {"primes_ok", r.primes_ok},
              {"restrictions", restr},
              {"restrictions_ok", r.restrictions_ok},
              {"all_pass", r.all_pass()}};
}

Json report(const SocleWitness& r) {
  return Json{{"a", r.a},
              {"b", r.b},
              {"binomial_nonzero", r.binomial_nonzero},
              {"height", r.height},
              {"summand", r.summand},
              {"summand_split", r.summand_split},
              {"verified", r.verified()}};
}

Json report(const GreenComparison& r) {
  Json m = Json::array();
  for (auto [a, b] : r.mismatches) m.push_back(Json::array({a, b}));
  return Json{{"equal", r.equal}, {"pairs", r.pairs}, {"mismatches", m}};
}

Json report(const TensorTable& t) {
  Json out = Json::object();
  for (const auto& [ab, j] : t) out[std::to_string(ab.first) + "," + std::to_string(ab.second)] = blocks(j.blocks);
  return out;
}

Json report(const JordanType& t) { return blocks(t.blocks); }

Json kl_snapshot(const HeckeAlgebra& hecke) {
  const auto& sys = hecke.system();
  Json cols = Json::array();
  for (const auto& [x, col] : hecke.table_snapshot())
    cols.push_back(Json{{"x", sys.elt(x).str()}, {"column", sparse(sys, col)}});
  return Json{{"format", "tidal-kl-table"},
              {"version", kCacheVersion},
              {"type", to_string(sys.type())},
              {"affine", sys.affine()},
              {"columns", cols}};
}

std::size_t load_kl_snapshot(HeckeAlgebra& hecke, const Json& j) {
  const auto& sys = hecke.system();
  if (j.value("format", "") != "tidal-kl-table" || j.value("version", -1) != kCacheVersion)
    throw InvalidArgument("KL cache has an unknown format or version");
  if (j.value("type", "") != to_string(sys.type()) || j.value("affine", !sys.affine()) != sys.affine())
    throw InvalidArgument("KL cache belongs to a different Coxeter system");
  std::size_t loaded = 0;
  for (const auto& c : j.at("columns")) {
    const ElemId x = sys.intern(sys.element(c.at("x").get<std::string>()));
    SparseVec col;
    for (const auto& [w, p] : c.at("column").items()) {
      const ElemId y = sys.intern(sys.element(w));
      LaurentPoly q = poly_from(p);
      const bool ok = y == x ? q == LaurentPoly(1) : (q.in_vZv() && sys.bruhat_leq(y, x));
      if (!ok) throw InvalidArgument("KL cache column for '" + c.at("x").get<std::string>() + "' is malformed");
      col.emplace(y, std::move(q));
    }
    if (!col.count(x)) throw InvalidArgument("KL cache column lacks its diagonal entry");
    hecke.seed_column(x, std::move(col));
    ++loaded;
  }
  return loaded;
}

}  // namespace tidal::io
