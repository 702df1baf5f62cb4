#include "tidal/cells.hpp"

#include "tidal/error.hpp"
#include "tidal/orbits.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

#include <algorithm>
#include <set>

namespace tidal {

std::string to_string(CellSide side) {
  switch (side) {
    case CellSide::Left: return "left";
    case CellSide::Right: return "right";
    case CellSide::TwoSided: return "twosided";
  }
  return "?";
}

std::size_t CellPartition::class_of(const CoxElt& x) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (std::binary_search(classes[i].begin(), classes[i].end(), x)) return i;
  throw InvalidArgument("element " + x.str() + " is outside the ball");
}

namespace {

int stability_margin(const CoxeterSystem& sys, unsigned max_length) {
  if (!sys.affine()) return static_cast<int>(max_length);
  return static_cast<int>(max_length) - 2 * static_cast<int>(sys.longest_finite_length());
}

unsigned effective_length(const CoxeterSystem& sys, unsigned max_length) {
  return sys.affine() ? max_length : std::max(max_length, sys.longest_finite_length());
}

/// f_{y,z,.} for every pair in the ball with l(y) + l(z) <= L, built in the
/// canonical basis from
///   \underline{H}_z = \underline{H}_{z'} \underline{H}_s - sum_{w<z', ws<w} mu(w,z') \underline{H}_w.
class ProductTable {
 public:
  ProductTable(HeckeAlgebra& hecke, unsigned max_length) : hecke_(hecke), sys_(hecke.system()) {
    ball_ = sys_.ball_ids(max_length);
    for (ElemId y : ball_) {
      auto& row = table_[y];
      const unsigned budget = max_length - sys_.length(y);
      for (ElemId z : ball_) {
        if (sys_.length(z) > budget) break;
        row.emplace(z, product(row, y, z));
      }
    }
  }

  const std::vector<ElemId>& ball() const { return ball_; }

  const SparseVec* find(ElemId y, ElemId z) const {
    auto r = table_.find(y);
    if (r == table_.end()) return nullptr;
    auto c = r->second.find(z);
    return c == r->second.end() ? nullptr : &c->second;
  }

  template <class F>
  void for_each(F&& f) const {
    for (const auto& [y, row] : table_)
      for (const auto& [z, vec] : row) f(y, z, vec);
  }

 private:
  SparseVec product(const std::unordered_map<ElemId, SparseVec>& row, ElemId y, ElemId z) {
    SparseVec out;
    if (z == sys_.identity_id()) {
      out.emplace(y, LaurentPoly(1));
      return out;
    }
    const Generator s = sys_.elt(z).word().back();
    const ElemId prefix = sys_.mul_right(z, s);
    for (const auto& [t, c] : row.at(prefix))
      for (const auto& [u, q] : right_gen(t, s)) accumulate(out, u, q * c);
    for (const auto& [w, h] : hecke_.kl_basis(prefix)) {
      if (w == prefix || !sys_.is_descent(w, s, Side::Right)) continue;
      const Integer m = h.coeff(1);
      if (m == 0) continue;
      for (const auto& [u, q] : row.at(w)) accumulate(out, u, q, 0, -m);
    }
    for (const auto& [u, q] : out)
      if (!q.nonnegative())
        throw ConsistencyError("structure constant f_{" + sys_.elt(y).str() + "," + sys_.elt(z).str() +
                               "," + sys_.elt(u).str() + "} = " + q.to_string() +
                               " has a negative coefficient");
    return out;
  }

  const SparseVec& right_gen(ElemId t, Generator s) {
    const std::uint64_t key = (std::uint64_t(index(t)) << 8) | s;
    auto it = gen_cache_.find(key);
    if (it == gen_cache_.end()) it = gen_cache_.emplace(key, hecke_.mult_kl_gen(s, t, Side::Right)).first;
    return it->second;
  }

  HeckeAlgebra& hecke_;
  const CoxeterSystem& sys_;
  std::vector<ElemId> ball_;
  std::unordered_map<ElemId, std::unordered_map<ElemId, SparseVec>> table_;
  std::unordered_map<std::uint64_t, SparseVec> gen_cache_;
};

std::map<CoxElt, int> a_sweep(HeckeAlgebra& hecke, unsigned max_length) {
  const auto& sys = hecke.system();
  // finite groups: every pair, so a(w_0) sees \underline{H}_{w_0}^2
  ProductTable table(hecke, sys.affine() ? max_length : 2 * max_length);
  std::unordered_map<ElemId, int> best;
  for (ElemId x : table.ball()) best.emplace(x, 0);
  table.for_each([&](ElemId, ElemId, const SparseVec& f) {
    for (const auto& [x, p] : f) {
      auto it = best.find(x);
      if (it != best.end()) it->second = std::max(it->second, p.degree());
    }
  });
  std::map<CoxElt, int> out;
  for (const auto& [x, d] : best) out.emplace(sys.elt(x), d);
  return out;
}

}  // namespace

CellPartition cell_partition(HeckeAlgebra& hecke, CellSide side, unsigned max_length) {
  const auto& sys = hecke.system();
  const unsigned len = effective_length(sys, max_length);
  const std::vector<ElemId> ball = sys.ball_ids(len);
  std::unordered_map<ElemId, std::size_t> pos;
  for (std::size_t i = 0; i < ball.size(); ++i) pos.emplace(ball[i], i);

  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
  Graph g(ball.size());
  const bool finite = !sys.affine();
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const ElemId x = ball[i];
    if (!finite && sys.length(x) >= len) continue;
    for (Generator s : sys.generators()) {
      for (Side sd : {Side::Left, Side::Right}) {
        if (side == CellSide::Left && sd != Side::Left) continue;
        if (side == CellSide::Right && sd != Side::Right) continue;
        for (const auto& [z, p] : hecke.mult_kl_gen(s, x, sd)) {
          auto it = pos.find(z);
          if (it != pos.end() && it->second != i) boost::add_edge(i, it->second, g);
        }
      }
    }
  }
  std::vector<std::size_t> comp(ball.size());
  const std::size_t ncomp = boost::strong_components(g, comp.data());

  std::vector<std::vector<CoxElt>> raw(ncomp);
  for (std::size_t i = 0; i < ball.size(); ++i) raw[comp[i]].push_back(sys.elt(ball[i]));
  for (auto& c : raw) std::sort(c.begin(), c.end());
  std::vector<std::size_t> order(ncomp);
  for (std::size_t i = 0; i < ncomp; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return raw[a].front() < raw[b].front(); });
  std::vector<std::size_t> rank(ncomp);
  for (std::size_t i = 0; i < ncomp; ++i) rank[order[i]] = i;

  CellPartition out;
  out.side = side;
  out.max_length = len;
  out.stability_margin = stability_margin(sys, len);
  for (std::size_t i : order) {
    bool cert = true;
    for (const auto& m : raw[i]) cert = cert && static_cast<int>(m.length()) <= out.stability_margin;
    out.classes.push_back(std::move(raw[i]));
    out.certified.push_back(cert);
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (auto [e, end] = boost::edges(g); e != end; ++e) {
    const std::size_t a = rank[comp[boost::source(*e, g)]], b = rank[comp[boost::target(*e, g)]];
    if (a != b) edges.emplace(a, b);
  }
  out.edges.assign(edges.begin(), edges.end());
  return out;
}

std::map<CoxElt, AValue> a_function(HeckeAlgebra& hecke, unsigned max_length) {
  const auto& sys = hecke.system();
  const unsigned len = effective_length(sys, max_length);
  std::map<CoxElt, AValue> out;
  const auto here = a_sweep(hecke, len);
  if (!sys.affine()) {
    for (const auto& [x, d] : here) out.emplace(x, AValue{d, true});
    return out;
  }
  const auto wider = a_sweep(hecke, len + 2);
  const int margin = stability_margin(sys, len);
  for (const auto& [x, d] : here)
    out.emplace(x, AValue{d, static_cast<int>(x.length()) <= margin && wider.at(x) == d});
  return out;
}

AValue a_function(HeckeAlgebra& hecke, const CoxElt& x, unsigned max_length) {
  const auto all = a_function(hecke, max_length);
  auto it = all.find(x);
  if (it == all.end()) throw InvalidArgument("element " + x.str() + " is outside the ball");
  return it->second;
}

std::optional<int> delta_function(HeckeAlgebra& hecke, ElemId x) {
  const LaurentPoly h = hecke.kl_poly(hecke.system().identity_id(), x);
  if (h.is_zero()) return std::nullopt;
  return h.valuation();
}

std::vector<CellData> cell_data(HeckeAlgebra& hecke, unsigned max_length) {
  const auto& sys = hecke.system();
  const auto a = a_function(hecke, max_length);
  const auto left = cell_partition(hecke, CellSide::Left, max_length);
  const auto right = cell_partition(hecke, CellSide::Right, max_length);
  const auto two = cell_partition(hecke, CellSide::TwoSided, max_length);
  std::vector<CellData> out;
  for (const auto& [x, av] : a) {
    CellData d;
    d.element = x;
    d.a = av;
    d.delta = delta_function(hecke, sys.intern(x));
    d.left = left.class_of(x);
    d.right = right.class_of(x);
    d.twosided = two.class_of(x);
    d.is_duflo = av.exact && d.delta && *d.delta == av.value;
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<CoxElt> duflo_elements(HeckeAlgebra& hecke, unsigned max_length) {
  std::vector<CoxElt> out;
  for (const auto& d : cell_data(hecke, max_length))
    if (d.is_duflo) out.push_back(d.element);
  return out;
}

bool PReport::all_pass() const {
  for (const auto& [k, v] : failures)
    if (!v.empty()) return false;
  return one_per_left_cell && one_per_right_cell;
}

PReport check_P(HeckeAlgebra& hecke) {
  const auto& sys = hecke.system();
  if (sys.affine()) throw InvalidArgument("check_P needs a finite Coxeter system");
  const unsigned len = sys.longest_finite_length();
  const ProductTable table(hecke, 2 * len);
  const auto& ball = table.ball();

  std::unordered_map<ElemId, int> a, delta;
  for (ElemId x : ball) a[x] = 0;
  table.for_each([&](ElemId, ElemId, const SparseVec& f) {
    for (const auto& [x, p] : f) a[x] = std::max(a[x], p.degree());
  });
  PReport rep;
  for (const char* k : {"P1", "P2", "P3", "P5", "P6", "P13"}) rep.failures[k];
  std::vector<ElemId> duflo;
  for (ElemId x : ball) {
    const auto d = delta_function(hecke, x);
    delta[x] = d ? *d : -1;
    if (!d || a[x] > *d)
      rep.failures["P1"].push_back(sys.elt(x).str());
    if (d && a[x] == *d) duflo.push_back(x);
  }
  std::sort(duflo.begin(), duflo.end(), [&](ElemId p, ElemId q) { return sys.elt(p) < sys.elt(q); });

  auto top_coeff = [&](ElemId y, ElemId z, ElemId d) -> Integer {
    const SparseVec* f = table.find(y, z);
    if (!f) throw ConsistencyError("missing product in finite table");
    auto it = f->find(d);
    return it == f->end() ? Integer(0) : it->second.coeff(a.at(d));
  };

  for (ElemId d : duflo) {
    rep.duflo.push_back(sys.elt(d));
    rep.duflo_a.push_back(a[d]);
    if (sys.inverse(d) != d) rep.failures["P6"].push_back(sys.elt(d).str());
    if (hecke.kl_poly(sys.identity_id(), d).coeff(delta[d]) != 1)
      rep.failures["P5"].push_back("h_{e," + sys.elt(d).str() + "}");
    for (ElemId y : ball)
      for (ElemId z : ball)
        if (top_coeff(y, z, d) != 0 && y != sys.inverse(z))
          rep.failures["P2"].push_back("(" + sys.elt(y).str() + "," + sys.elt(z).str() + "," + sys.elt(d).str() + ")");
  }

  const auto left = cell_partition(hecke, CellSide::Left, len);
  const auto right = cell_partition(hecke, CellSide::Right, len);
  rep.left_cells = left.classes.size();
  rep.right_cells = right.classes.size();
  std::vector<int> per_left(left.classes.size(), 0), per_right(right.classes.size(), 0);
  std::unordered_map<std::size_t, ElemId> left_duflo;
  for (ElemId d : duflo) {
    const std::size_t c = left.class_of(sys.elt(d));
    ++per_left[c];
    left_duflo[c] = d;
    ++per_right[right.class_of(sys.elt(d))];
  }
  rep.one_per_left_cell = std::all_of(per_left.begin(), per_left.end(), [](int c) { return c == 1; });
  rep.one_per_right_cell = std::all_of(per_right.begin(), per_right.end(), [](int c) { return c == 1; });

  for (ElemId z : ball) {
    const ElemId zi = sys.inverse(z);
    std::vector<ElemId> hits;
    for (ElemId d : duflo) {
      const Integer c = top_coeff(zi, z, d);
      if (c == 0) continue;
      hits.push_back(d);
      if (c != 1) rep.failures["P5"].push_back("f_{" + sys.elt(zi).str() + "," + sys.elt(z).str() + "," + sys.elt(d).str() + "}");
    }
    if (hits.size() != 1) rep.failures["P3"].push_back(sys.elt(z).str());
    const std::size_t c = left.class_of(sys.elt(z));
    if (per_left[c] != 1) {
      rep.failures["P13"].push_back("cell of " + sys.elt(z).str());
    } else if (top_coeff(zi, z, left_duflo.at(c)) == 0) {
      rep.failures["P13"].push_back(sys.elt(z).str());
    }
  }
  for (auto& [k, v] : rep.failures) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return rep;
}

namespace {

struct TwoSidedSummary {
  std::vector<std::vector<CoxElt>> cells;  // certified cells meeting W^+
};

TwoSidedSummary certified_cells_meeting_wplus(HeckeAlgebra& hecke, unsigned max_length) {
  const auto& sys = hecke.system();
  const auto part = cell_partition(hecke, CellSide::TwoSided, max_length);
  TwoSidedSummary out;
  for (const auto& cls : part.classes) {
    bool meets = false;
    for (const auto& x : cls)
      meets = meets || (static_cast<int>(x.length()) <= part.stability_margin && sys.in_min_coset_reps(x));
    if (meets) out.cells.push_back(cls);
  }
  return out;
}

}  // namespace

CellOrbitDiagnostic cell_orbit_diagnostic(HeckeAlgebra& hecke, unsigned max_length) {
  const auto& sys = hecke.system();
  if (!sys.affine()) throw InvalidArgument("cell_orbit_diagnostic needs an affine system");
  CellOrbitDiagnostic rep;
  rep.label = sys.label();
  rep.max_length = max_length;
  rep.margin = stability_margin(sys, max_length);
  rep.orbit_count = orbit_poset(lie_algebra_of(sys.type())).nodes.size();
  const auto here = certified_cells_meeting_wplus(hecke, max_length);
  const auto wider = certified_cells_meeting_wplus(hecke, max_length + 2);
  rep.certified_cells = here.cells.size();
  for (const auto& cls : here.cells) {
    bool stable = false;
    for (const auto& other : wider.cells)
      if (other.front() == cls.front()) stable = other == cls;
    rep.cells.emplace_back(cls.front(), stable);
  }
  return rep;
}

}  // namespace tidal
