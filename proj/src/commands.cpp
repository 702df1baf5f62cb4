#include "commands.hpp"

#include "json_io.hpp"
#include "tidal/error.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace tidal {

using io::Json;
namespace fs = std::filesystem;

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("run config must be a JSON object");
  static const std::set<std::string> known{"command", "type",   "affine",      "ell",         "max_length", "p",
                                           "n",       "fgl",    "fgl2",        "format",      "output",     "cache_dir",
                                           "x",       "y",      "side",        "algebra",     "bound_check", "cross_check",
                                           "spherical", "generators", "a",     "b",           "i_lo",       "i_hi"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw InvalidArgument("unknown config key '" + k + "'");
  RunConfig c;
  try {
    c.command = j.at("command").get<std::string>();
    c.type = j.value("type", c.type);
    c.affine = j.value("affine", c.affine);
    if (j.contains("ell") && !j["ell"].is_null()) c.ell = j["ell"].get<unsigned>();
    if (j.contains("max_length") && !j["max_length"].is_null()) c.max_length = j["max_length"].get<unsigned>();
    c.p = j.value("p", c.p);
    c.n = j.value("n", c.n);
    c.fgl = j.value("fgl", c.fgl);
    c.fgl2 = j.value("fgl2", c.fgl2);
    c.format = j.value("format", c.format);
    c.output = j.value("output", c.output);
    c.cache_dir = j.value("cache_dir", c.cache_dir);
    c.x = j.value("x", c.x);
    c.y = j.value("y", c.y);
    c.side = j.value("side", c.side);
    c.algebra = j.value("algebra", c.algebra);
    c.bound_check = j.value("bound_check", false);
    c.cross_check = j.value("cross_check", false);
    c.spherical = j.value("spherical", false);
    c.generators = j.value("generators", false);
    if (j.contains("a") && !j["a"].is_null()) c.a = j["a"].get<unsigned>();
    if (j.contains("b") && !j["b"].is_null()) c.b = j["b"].get<unsigned>();
    c.i_lo = j.value("i_lo", c.i_lo);
    c.i_hi = j.value("i_hi", c.i_hi);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad run config: ") + e.what());
  }
  return c;
}

namespace {

// Check commands report violations through this.
struct Output {
  Json json;
  std::string dot;
  bool violation = false;
};

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Generic rendering of a report as aligned text.
void render_table(const Json& j, std::ostream& os, const std::string& prefix = "") {
  if (!j.is_object()) {
    os << prefix << scalar_text(j) << "\n";
    return;
  }
  for (const auto& [key, v] : j.items()) {
    const std::string name = prefix + key;
    if (v.is_object() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& e) { return !e.is_structured(); })) {
      os << name << ":\n";
      for (const auto& [k2, v2] : v.items()) os << "  " << k2 << "  " << scalar_text(v2) << "\n";
    } else if (v.is_object()) {
      render_table(v, os, name + ".");
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << name << ":\n";
      std::vector<std::string> cols;
      for (const auto& [k2, v2] : v.front().items()) cols.push_back(k2);
      std::vector<std::vector<std::string>> rows{cols};
      for (const auto& row : v) {
        std::vector<std::string> cells;
        for (const auto& c : cols) cells.push_back(row.contains(c) ? scalar_text(row[c]) : "");
        rows.push_back(std::move(cells));
      }
      std::vector<std::size_t> width(cols.size(), 0);
      for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
      for (const auto& r : rows) {
        os << " ";
        for (std::size_t i = 0; i < r.size(); ++i) {
          os << " " << r[i];
          if (i + 1 < r.size()) os << std::string(width[i] - r[i].size(), ' ');
        }
        os << "\n";
      }
    } else {
      os << name << "  " << scalar_text(v) << "\n";
    }
  }
}

CartanType parse_type(const std::string& t) { return parse_cartan_type(t); }

unsigned default_ell(CartanType type) {
  const RootDatum rd = RootDatum::build(type);
  unsigned ell = rd.coxeter_number + 1;
  while (ell % 2 == 0 || (type == CartanType::G2 && ell % 3 == 0)) ++ell;
  return ell;
}

unsigned length_or(const RunConfig& c, unsigned fallback) { return c.max_length.value_or(fallback); }

// Per-type ball for the antispherical bound: every element up to 20 (rank 1
// and A2) or 16 (B2, G2) is certified.
unsigned bound_default_length(const CoxeterSystem& sys) {
  const unsigned target = (sys.type() == CartanType::A1 || sys.type() == CartanType::A2) ? 20 : 16;
  return target + sys.longest_finite_length();
}

unsigned census_default_length(CartanType t) {
  switch (t) {
    case CartanType::A1: return 12;
    case CartanType::A2: return 14;
    case CartanType::B2: return 26;
    case CartanType::G2: return 32;
    default: return 12;
  }
}

// KL table persistence for commands that build a HeckeAlgebra.
class KLCache {
 public:
  KLCache(const RunConfig& c, HeckeAlgebra& hecke, std::string& err) : hecke_(hecke), err_(err) {
    if (c.cache_dir.empty()) return;
    const auto& sys = hecke.system();
    path_ = fs::path(c.cache_dir) / ("kl-" + to_string(sys.type()) + (sys.affine() ? "-affine" : "-finite") + ".json");
    if (!fs::exists(path_)) return;
    try {
      std::ifstream in(path_);
      const auto loaded = io::load_kl_snapshot(hecke, Json::parse(in));
      before_ = loaded;
    } catch (const std::exception& e) {
      err_ += "warning: ignoring KL cache " + path_.string() + ": " + e.what() + "\n";
    }
  }

  void save() {
    if (path_.empty() || hecke_.table_size() == before_) return;
    std::error_code ec;
    fs::create_directories(path_.parent_path(), ec);
    const fs::path tmp = path_.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << io::kl_snapshot(hecke_).dump() << "\n";
      if (!out) {
        err_ += "warning: could not write KL cache " + path_.string() + "\n";
        return;
      }
    }
    fs::rename(tmp, path_, ec);
    if (ec) err_ += "warning: could not write KL cache " + path_.string() + ": " + ec.message() + "\n";
  }

 private:
  HeckeAlgebra& hecke_;
  std::string& err_;
  fs::path path_;
  std::size_t before_ = 0;
};

Json header(const CoxeterSystem& sys) { return Json{{"type", to_string(sys.type())}, {"affine", sys.affine()}}; }

Output cmd_kl(const RunConfig& c, std::string& err) {
  HeckeAlgebra hecke(CoxeterSystem::build(parse_type(c.type), c.affine));
  const auto& sys = hecke.system();
  KLCache cache(c, hecke, err);
  Output o;
  o.json = header(sys);
  if (!c.x.empty()) {
    const CoxElt x = sys.element(c.x);
    o.json["x"] = x.str();
    if (!c.y.empty()) {
      const CoxElt y = sys.element(c.y);
      o.json["y"] = y.str();
      o.json["poly"] = io::poly(hecke.kl_poly(sys.intern(y), sys.intern(x)));
      o.json["mu"] = io::integer(hecke.mu(sys.intern(y), sys.intern(x)));
    } else {
      o.json["column"] = io::sparse(sys, hecke.kl_basis(sys.intern(x)));
    }
  } else {
    const unsigned L = length_or(c, sys.affine() ? 6 : sys.longest_finite_length());
    o.json["max_length"] = L;
    Json cols = Json::array();
    for (ElemId x : sys.ball_ids(L)) cols.push_back(Json{{"x", sys.elt(x).str()}, {"column", io::sparse(sys, hecke.kl_basis(x))}});
    o.json["columns"] = cols;
  }
  cache.save();
  return o;
}

Output cmd_asph(const RunConfig& c, std::string&) {
  const auto sys = CoxeterSystem::build(parse_type(c.type), c.affine);
  ParabolicModule module(sys, c.spherical ? ModuleKind::Spherical : ModuleKind::Antispherical);
  const unsigned L = length_or(c, 10);
  Output o;
  o.json = header(sys);
  o.json["module"] = c.spherical ? "spherical" : "antispherical";
  o.json["max_length"] = L;
  o.json["certified_length"] = module.certified_length(L);
  const bool plain = !c.bound_check && !c.cross_check && !c.spherical;
  if (plain) {
    Json cols = Json::array();
    const int cert = module.certified_length(L);
    if (cert >= 0)
      for (ElemId x : sys.min_coset_rep_ids(static_cast<unsigned>(cert)))
        cols.push_back(Json{{"x", sys.elt(x).str()}, {"canonical", io::sparse(sys, module.canonical(x))}});
    o.json["canonical"] = cols;
  }
  if (c.bound_check) {
    const BoundReport r = bound_check(module, L);
    o.json["bound_check"] = io::report(r);
    o.violation |= !r.violations.empty();
  }
  if (c.cross_check) {
    HeckeAlgebra hecke(sys);
    const CrossCheckReport r = cross_check(module, hecke, L);
    o.json["cross_check"] = io::report(r);
    o.violation |= !r.mismatches.empty();
  }
  if (c.spherical && !c.bound_check && !c.cross_check) {
    const SphericalInverse r = spherical_inverse(module, L);
    o.json["spherical_inverse"] = io::report(r, false);
    o.violation |= !r.orthogonality_failures.empty();
  }
  return o;
}

Output cmd_bound(const RunConfig& c, std::string&) {
  const auto sys = CoxeterSystem::build(parse_type(c.type), true);
  ParabolicModule module(sys, ModuleKind::Antispherical);
  const BoundReport r = bound_check(module, length_or(c, bound_default_length(sys)));
  Output o;
  o.json = io::report(r);
  o.violation = !r.violations.empty() || !r.attained();
  return o;
}

Output cmd_cells(const RunConfig& c, std::string& err) {
  HeckeAlgebra hecke(CoxeterSystem::build(parse_type(c.type), c.affine));
  KLCache cache(c, hecke, err);
  const auto& sys = hecke.system();
  CellSide side;
  if (c.side == "left") side = CellSide::Left;
  else if (c.side == "right") side = CellSide::Right;
  else if (c.side == "two-sided" || c.side == "twosided") side = CellSide::TwoSided;
  else throw InvalidArgument("side must be left, right or two-sided");
  const unsigned L = length_or(c, sys.affine() ? 8 : sys.longest_finite_length());
  const CellPartition part = cell_partition(hecke, side, L);
  Output o;
  o.json = header(sys);
  o.json.update(io::report(part));
  std::ostringstream dot;
  dot << "digraph cells {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < part.classes.size(); ++i) {
    dot << "  c" << i << " [label=\"";
    for (std::size_t k = 0; k < part.classes[i].size(); ++k) {
      if (k) dot << "\\n";
      dot << (part.classes[i][k].is_identity() ? "e" : part.classes[i][k].str());
    }
    dot << "\"" << (part.certified[i] ? "" : ", style=dashed") << "];\n";
  }
  for (auto [a, b] : part.edges) dot << "  c" << a << " -> c" << b << ";\n";
  dot << "}\n";
  o.dot = dot.str();
  cache.save();
  return o;
}

Output cmd_cell_orbits(const RunConfig& c, std::string& err) {
  HeckeAlgebra hecke(CoxeterSystem::build(parse_type(c.type), true));
  KLCache cache(c, hecke, err);
  const unsigned L = length_or(c, c.type == "A1" ? 8 : 10);
  Output o;
  o.json = io::report(cell_orbit_diagnostic(hecke, L));
  // Report only: never a violation.
  cache.save();
  return o;
}

Output cmd_duflo(const RunConfig& c, std::string& err) {
  HeckeAlgebra hecke(CoxeterSystem::build(parse_type(c.type), false));
  KLCache cache(c, hecke, err);
  const PReport r = check_P(hecke);
  Output o;
  Json d = Json::array();
  for (const auto& x : r.duflo) d.push_back(x.str());
  o.json = Json{{"duflo", d},
                {"P", r.all_pass() ? "all pass" : "fail"},
                {"a", r.duflo_a},
                {"certified", "whole group"}};
  o.violation = !r.all_pass();
  cache.save();
  return o;
}

Output cmd_check_p(const RunConfig& c, std::string& err) {
  HeckeAlgebra hecke(CoxeterSystem::build(parse_type(c.type), false));
  KLCache cache(c, hecke, err);
  const PReport r = check_P(hecke);
  Output o;
  o.json = Json{{"type", c.type}, {"certified", "whole group"}};
  o.json.update(io::report(r));
  o.json["cells"] = io::report(cell_data(hecke, hecke.system().longest_finite_length()));
  o.violation = !r.all_pass();
  cache.save();
  return o;
}

struct TiltSetup {
  CoxeterSystem sys;
  RootDatum rd;
  QuantumParam q;
};

TiltSetup tilt_setup(const RunConfig& c) {
  const CartanType t = parse_type(c.type);
  RootDatum rd = RootDatum::build(t);
  const QuantumParam q = QuantumParam::make(rd, c.ell.value_or(default_ell(t)));
  return {CoxeterSystem::build(t, true), std::move(rd), q};
}

Output cmd_tilt_hom(const RunConfig& c, std::string&) {
  auto [sys, rd, q] = tilt_setup(c);
  ParabolicModule asph(sys, ModuleKind::Antispherical);
  if (c.x.empty()) throw InvalidArgument("tilt hom needs --x");
  const CoxElt x = sys.element(c.x);
  Output o;
  o.json = Json{{"type", c.type}, {"ell", q.ell}, {"x", x.str()}, {"weight_x", io::weight(w_to_weight(rd, q, sys, x))}};
  if (c.y.empty()) {
    o.json["unit_hom"] = io::poly(unit_hom(asph, x));
  } else {
    const CoxElt y = sys.element(c.y);
    o.json["y"] = y.str();
    o.json["weight_y"] = io::weight(w_to_weight(rd, q, sys, y));
    o.json["hom"] = io::poly(graded_hom(asph, x, y).poly);
  }
  return o;
}

Output cmd_tilt_census(const RunConfig& c, std::string&) {
  auto [sys, rd, q] = tilt_setup(c);
  ParabolicModule asph(sys, ModuleKind::Antispherical);
  const Census r = census(asph, rd, q, length_or(c, census_default_length(sys.type())));
  Output o;
  o.json = io::report(r);
  o.violation = !r.non_monomial.empty() || !r.double_coset_violations.empty();
  return o;
}

Output cmd_tilt_nilpotence(const RunConfig& c, std::string&) {
  const auto sys = CoxeterSystem::build(parse_type(c.type), true);
  ParabolicModule asph(sys, ModuleKind::Antispherical);
  const NilpotenceReport r = nilpotence_bound_check(asph, length_or(c, 14));
  Output o;
  o.json = io::report(r);
  o.violation = !r.ok();
  return o;
}

Output cmd_lattice_a2(const RunConfig& c, std::string&) {
  const IdealLattice lat = ideal_lattice_A2();
  Output o;
  o.json = io::report(lat);
  o.dot = c.generators ? lat.generator_dot() : lat.dot();
  o.violation = lat.ideals.size() != 6 || lat.prime_count() != 3;
  return o;
}

Output cmd_b2_family(const RunConfig& c, std::string&) {
  const auto sys = CoxeterSystem::build(CartanType::B2, true);
  const RootDatum rd = RootDatum::build(CartanType::B2);
  const QuantumParam q = QuantumParam::make(rd, c.ell.value_or(5));
  ParabolicModule asph(sys, ModuleKind::Antispherical);
  const AntichainReport r = b2_antichain_certificates(asph, rd, q, c.i_lo, c.i_hi, length_or(c, 30));
  Output o;
  o.json = io::report(r);
  o.violation = !r.ok();
  return o;
}

Output cmd_orbits(const RunConfig& c, std::string&) {
  const OrbitPoset poset = orbit_poset(c.algebra);
  const CoverReport cover = unique_cover_check(poset);
  Output o;
  o.json = io::report(poset);
  o.json["cover_check"] = io::report(cover);
  o.dot = lattice_dot(poset, thick_ideal_lattice(poset));
  o.violation = !cover.ok();
  return o;
}

Json cyclic_header(const FGLAlgebra& alg) { return Json{{"p", alg.p()}, {"n", alg.n()}, {"fgl", alg.name()}}; }

Output cmd_cyclic_decompose(const RunConfig& c, std::string&) {
  const FGLAlgebra alg = FGLAlgebra::parse(c.p, c.n, c.fgl);
  Output o;
  o.json = cyclic_header(alg);
  if (c.a || c.b) {
    if (!c.a || !c.b) throw InvalidArgument("give both --a and --b, or neither");
    o.json["a"] = *c.a;
    o.json["b"] = *c.b;
    o.json["blocks"] = io::report(tensor_decompose(alg, *c.a, *c.b));
  } else {
    o.json["table"] = io::report(tensor_table(alg));
  }
  return o;
}

Output cmd_cyclic_classify(const RunConfig& c, std::string&) {
  const Classification r = classify(FGLAlgebra::parse(c.p, c.n, c.fgl));
  Output o;
  o.json = io::report(r);
  o.violation = !r.all_pass();
  return o;
}

Output cmd_cyclic_green(const RunConfig& c, std::string&) {
  const FGLAlgebra first = FGLAlgebra::parse(c.p, c.n, c.fgl);
  const FGLAlgebra second = FGLAlgebra::parse(c.p, c.n, c.fgl2);
  const GreenComparison r = green_independence(first, second);
  Output o;
  o.json = Json{{"p", c.p}, {"n", c.n}, {"fgl", first.name()}, {"fgl2", second.name()}};
  o.json.update(io::report(r));
  o.violation = !r.equal;
  return o;
}

Output cmd_cyclic_socle(const RunConfig& c, std::string&) {
  const FGLAlgebra alg = FGLAlgebra::parse(c.p, c.n, c.fgl);
  if (!c.a || !c.b) throw InvalidArgument("cyclic socle needs --a and --b");
  const SocleWitness w = socle_witness(alg, *c.a, *c.b);
  Output o;
  o.json = cyclic_header(alg);
  o.json.update(io::report(w));
  o.violation = w.binomial_nonzero && !w.verified();
  return o;
}

using Handler = std::function<Output(const RunConfig&, std::string&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"kl", cmd_kl},
      {"asph", cmd_asph},
      {"bound", cmd_bound},
      {"cells", cmd_cells},
      {"cell-orbits", cmd_cell_orbits},
      {"duflo", cmd_duflo},
      {"check-p", cmd_check_p},
      {"tilt-hom", cmd_tilt_hom},
      {"tilt-census", cmd_tilt_census},
      {"tilt-nilpotence", cmd_tilt_nilpotence},
      {"lattice-a2", cmd_lattice_a2},
      {"b2-family", cmd_b2_family},
      {"orbits", cmd_orbits},
      {"cyclic-decompose", cmd_cyclic_decompose},
      {"cyclic-classify", cmd_cyclic_classify},
      {"cyclic-green", cmd_cyclic_green},
      {"cyclic-socle", cmd_cyclic_socle},
  };
  return table;
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult res;
  try {
    auto it = handlers().find(config.command);
    if (it == handlers().end()) throw InvalidArgument("unknown command '" + config.command + "'");
    if (config.format != "json" && config.format != "table" && config.format != "dot")
      throw InvalidArgument("format must be json, table or dot");
    Output o = it->second(config, res.err);
    if (config.format == "dot") {
      if (o.dot.empty()) throw InvalidArgument("dot output is not available for '" + config.command + "'");
      res.out = o.dot;
    } else if (config.format == "table") {
      std::ostringstream os;
      render_table(o.json, os);
      res.out = os.str();
    } else {
      res.out = o.json.dump() + "\n";
    }
    res.exit_code = o.violation ? 1 : 0;
  } catch (const InvalidArgument& e) {
    res.err += std::string("error: ") + e.what() + "\n";
    res.exit_code = 2;
    return res;
  } catch (const ConsistencyError& e) {
    res.err += std::string("consistency failure: ") + e.what() + "\n";
    res.exit_code = 1;
    return res;
  } catch (const std::exception& e) {
    res.err += std::string("error: ") + e.what() + "\n";
    res.exit_code = 1;
    return res;
  }
  if (!config.output.empty()) {
    std::ofstream out(config.output, std::ios::binary);
    out << res.out;
    if (!out) {
      res.err += "error: cannot write " + config.output + "\n";
      res.exit_code = 2;
    }
    res.out.clear();
  }
  return res;
}

}  // namespace tidal
