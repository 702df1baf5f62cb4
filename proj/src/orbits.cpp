#include "tidal/orbits.hpp"

#include "tidal/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace tidal {

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  int a = 0, b = 0;
  const std::size_t n = std::max(lambda.size(), mu.size());
  for (std::size_t i = 0; i < n; ++i) {
    a += i < lambda.size() ? lambda[i] : 0;
    b += i < mu.size() ? mu[i] : 0;
    if (a > b) return false;
  }
  return a == b;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  // Smallest (1^n) first so node 0 is the zero orbit.
  std::reverse(out.begin(), out.end());
  return out;
}

std::string format_partition(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::size_t OrbitPoset::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i] == label) return i;
  throw InvalidArgument("no orbit '" + std::string(label) + "' in " + algebra);
}

namespace {

OrbitPoset from_order(std::string algebra, std::vector<std::string> nodes,
                      const std::function<bool(std::size_t, std::size_t)>& le) {
  OrbitPoset p;
  p.algebra = std::move(algebra);
  p.nodes = std::move(nodes);
  const std::size_t n = p.nodes.size();
  p.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.leq[i][j] = le(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !p.leq[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && p.leq[i][k] && p.leq[k][j]) cover = false;
      if (cover) p.covers.emplace_back(i, j);
    }
  return p;
}

OrbitPoset chain(std::string algebra, std::vector<std::string> nodes) {
  return from_order(std::move(algebra), std::move(nodes), [](std::size_t i, std::size_t j) { return i <= j; });
}

}  // namespace

OrbitPoset orbit_poset(std::string_view algebra) {
  std::string a(algebra);
  std::transform(a.begin(), a.end(), a.begin(), [](unsigned char c) { return std::tolower(c); });
  if (a == "so5" || a == "sp4") return chain("so5", {"zero", "min", "subreg", "reg"});
  if (a == "g2") return chain("g2", {"zero", "min", "supmin", "subreg", "reg"});
  if (a.size() >= 3 && a.rfind("sl", 0) == 0 &&
      std::all_of(a.begin() + 2, a.end(), [](unsigned char c) { return std::isdigit(c); })) {
    const int n = std::stoi(a.substr(2));
    if (n < 2 || n > 8) throw InvalidArgument("sl_n orbit posets are built for 2 <= n <= 8");
    const auto parts = partitions_of(n);
    std::vector<std::string> names;
    for (const auto& p : parts) names.push_back(format_partition(p));
    return from_order(a, names, [&](std::size_t i, std::size_t j) { return dominance_leq(parts[i], parts[j]); });
  }
  throw InvalidArgument("unknown Lie algebra '" + a + "' (expected sl<n>, so5, sp4 or g2)");
}

std::string lie_algebra_of(CartanType type) {
  switch (type) {
    case CartanType::A1: return "sl2";
    case CartanType::A2: return "sl3";
    case CartanType::A3: return "sl4";
    case CartanType::B2: return "so5";
    case CartanType::G2: return "g2";
  }
  return "?";
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> all_downsets(const OrbitPoset& p) {
  const std::size_t n = p.nodes.size();
  if (n > 24) throw InvalidArgument("orbit poset too large for exhaustive ideal enumeration");
  std::vector<Mask> below(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq[i][j]) below[j] |= Mask(1) << i;
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask(1) << n); ++m) {
    bool closed = true;
    for (std::size_t j = 0; j < n && closed; ++j)
      if ((m >> j & 1) && (below[j] & ~m)) closed = false;
    if (closed) out.push_back(m);
  }
  return out;
}

std::vector<std::size_t> members(Mask m, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (m >> i & 1) out.push_back(i);
  return out;
}

ThickIdeal describe(const OrbitPoset& p, Mask m) {
  const std::size_t n = p.nodes.size();
  ThickIdeal t;
  t.downset = members(m, n);
  for (std::size_t o = 0; o < n && !t.principal; ++o) {
    Mask gen = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq[i][o]) gen |= Mask(1) << i;
    if (gen == m) t.principal = true;
  }
  for (std::size_t o = 0; o < n; ++o) {
    Mask filter = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (p.leq[o][j]) filter |= Mask(1) << j;
    const Mask full = (Mask(1) << n) - 1;
    if ((full & ~filter) == m) {
      t.prime = true;
      t.orbit = o;
    }
  }
  return t;
}

}  // namespace

std::string format_downset(const OrbitPoset& poset, const std::vector<std::size_t>& downset) {
  std::string s = "{";
  for (std::size_t i = 0; i < downset.size(); ++i) {
    if (i) s += ",";
    s += poset.nodes[downset[i]];
  }
  return s + "}";
}

std::vector<ThickIdeal> thick_ideal_lattice(const OrbitPoset& poset) {
  const std::size_t n = poset.nodes.size();
  const Mask full = (Mask(1) << n) - 1;
  std::vector<ThickIdeal> out;
  for (Mask m : all_downsets(poset))
    if (m != full) out.push_back(describe(poset, m));
  std::sort(out.begin(), out.end(), [](const ThickIdeal& a, const ThickIdeal& b) {
    if (a.downset.size() != b.downset.size()) return a.downset.size() < b.downset.size();
    return a.downset < b.downset;
  });
  return out;
}

namespace {

bool subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::string lattice_dot(const OrbitPoset& poset, const std::vector<ThickIdeal>& ideals) {
  std::ostringstream os;
  os << "digraph ideals {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    os << "  i" << i << " [label=\"" << format_downset(poset, ideals[i].downset) << "\"";
    if (ideals[i].prime) os << ", shape=box";
    os << "];\n";
  }
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      if (ideals[j].downset.size() != ideals[i].downset.size() + 1) continue;
      if (subset(ideals[i].downset, ideals[j].downset)) os << "  i" << i << " -> i" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

std::string poset_dot(const OrbitPoset& poset) {
  std::ostringstream os;
  os << "digraph orbits {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) os << "  o" << i << " [label=\"" << poset.nodes[i] << "\"];\n";
  for (auto [a, b] : poset.covers) os << "  o" << a << " -> o" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<std::pair<std::size_t, ThickIdeal>> prime_thick_ideals(const OrbitPoset& poset) {
  std::vector<std::pair<std::size_t, ThickIdeal>> out;
  for (const auto& t : thick_ideal_lattice(poset))
    if (t.prime) out.emplace_back(*t.orbit, t);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

CoverReport unique_cover_check(const OrbitPoset& poset) {
  const std::size_t n = poset.nodes.size();
  const auto downs = all_downsets(poset);
  CoverReport rep;
  rep.ideals = downs.size();
  for (Mask m : downs) {
    std::size_t covers = 0;
    for (Mask k : downs)
      if ((k & m) == m && __builtin_popcount(k & ~m) == 1) ++covers;
    const ThickIdeal t = describe(poset, m);
    if (t.prime) ++rep.primes;
    const std::string name = format_downset(poset, members(m, n));
    if (t.prime && covers != 1) rep.prime_without_unique_cover.push_back(name);
    if (!t.prime && covers == 1) rep.unique_cover_not_prime.push_back(name);
  }
  return rep;
}

}  // namespace tidal
