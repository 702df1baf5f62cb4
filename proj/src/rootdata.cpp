#include "tidal/rootdata.hpp"

#include "tidal/error.hpp"

#include <algorithm>
#include <set>

namespace tidal {

std::string format_rational(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_weight(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += format_rational(w[i]);
  }
  return s + ")";
}

namespace {

Integer floor_div(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);  // positive
  Integer q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Weight scaled(const Weight& w, const Rational& c) {
  Weight out = w;
  for (auto& x : out) x *= c;
  return out;
}

Weight plus(Weight a, const Weight& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Weight minus(Weight a, const Weight& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Weight w_of(std::initializer_list<long long> xs) {
  Weight w;
  for (long long x : xs) w.emplace_back(x);
  return w;
}

Rational dot(const Weight& a, const Weight& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Weight coroot_of(const Weight& alpha) { return scaled(alpha, Rational(2) / dot(alpha, alpha)); }

}  // namespace

Rational RootDatum::pair(const Weight& coroot, const Weight& lambda) { return dot(coroot, lambda); }

RootDatum RootDatum::build(CartanType type) {
  RootDatum rd;
  rd.type = type;
  switch (type) {
    case CartanType::A1:
      rd.simple_roots = {w_of({1, -1})};
      rd.coxeter_number = 2;
      rd.w0_length = 1;
      break;
    case CartanType::A2:
      rd.simple_roots = {w_of({1, -1, 0}), w_of({0, 1, -1})};
      rd.coxeter_number = 3;
      rd.w0_length = 3;
      break;
    case CartanType::B2:
      rd.simple_roots = {w_of({1, -1}), w_of({0, 1})};
      rd.coxeter_number = 4;
      rd.w0_length = 4;
      break;
    case CartanType::G2:
      rd.simple_roots = {w_of({1, -1, 0}), w_of({-1, 2, -1})};
      rd.coxeter_number = 6;
      rd.w0_length = 6;
      break;
    case CartanType::A3:
      throw InvalidArgument("no root datum for A3 (finite cell computations only)");
  }
  rd.dim = static_cast<unsigned>(rd.simple_roots.front().size());
  for (const auto& a : rd.simple_roots) rd.simple_coroots.push_back(coroot_of(a));

  // Positive roots as the closure of the simple roots under simple reflections.
  std::set<Weight> seen(rd.simple_roots.begin(), rd.simple_roots.end());
  std::vector<Weight> queue(rd.simple_roots.begin(), rd.simple_roots.end());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t k = 0; k < rd.simple_roots.size(); ++k) {
      const Weight& a = rd.simple_roots[k];
      const Weight b = queue[i];
      if (b == a) continue;
      const Weight r = minus(b, scaled(a, pair(rd.simple_coroots[k], b)));
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  rd.positive_roots = queue;
  // Height from the coordinates in the simple-root basis.
  const std::size_t r = rd.simple_roots.size();
  auto simple_coords = [&](const Weight& b) {
    // Gram system (alpha_i, alpha_j) c = (alpha_i, b).
    std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r + 1));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) m[i][j] = dot(rd.simple_roots[i], rd.simple_roots[j]);
      m[i][r] = dot(rd.simple_roots[i], b);
    }
    for (std::size_t c = 0; c < r; ++c) {
      std::size_t p = c;
      while (m[p][c] == 0) ++p;
      std::swap(m[p], m[c]);
      for (std::size_t i = 0; i < r; ++i) {
        if (i == c || m[i][c] == 0) continue;
        const Rational f = m[i][c] / m[c][c];
        for (std::size_t j = c; j <= r; ++j) m[i][j] -= f * m[c][j];
      }
    }
    std::vector<Rational> out(r);
    for (std::size_t i = 0; i < r; ++i) out[i] = m[i][r] / m[i][i];
    return out;
  };
  auto height = [&](const Weight& b) {
    Rational h = 0;
    for (const auto& c : simple_coords(b)) h += c;
    return h;
  };
  std::sort(rd.positive_roots.begin(), rd.positive_roots.end(), [&](const Weight& a, const Weight& b) {
    const Rational ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  for (const auto& a : rd.positive_roots) rd.positive_coroots.push_back(coroot_of(a));

  rd.rho = rd.zero();
  for (const auto& a : rd.positive_roots) rd.rho = plus(rd.rho, scaled(a, Rational(1, 2)));

  // Highest short root: the highest root of minimal length.
  Rational short_len = -1;
  for (const auto& a : rd.positive_roots)
    if (short_len < 0 || dot(a, a) < short_len) short_len = dot(a, a);
  for (const auto& a : rd.positive_roots)
    if (dot(a, a) == short_len) rd.theta = a;  // sorted by height
  rd.theta_coroot = coroot_of(rd.theta);

  // Fundamental weights inside the span of the roots.
  for (std::size_t i = 0; i < r; ++i) {
    // omega_i = sum_j c_j alpha_j with alpha_k^vee(omega_i) = delta_ik.
    std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r + 1));
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t j = 0; j < r; ++j) m[k][j] = pair(rd.simple_coroots[k], rd.simple_roots[j]);
      m[k][r] = k == i ? 1 : 0;
    }
    for (std::size_t c = 0; c < r; ++c) {
      std::size_t p = c;
      while (m[p][c] == 0) ++p;
      std::swap(m[p], m[c]);
      for (std::size_t k = 0; k < r; ++k) {
        if (k == c || m[k][c] == 0) continue;
        const Rational f = m[k][c] / m[c][c];
        for (std::size_t j = c; j <= r; ++j) m[k][j] -= f * m[c][j];
      }
    }
    Weight w = rd.zero();
    for (std::size_t j = 0; j < r; ++j) w = plus(w, scaled(rd.simple_roots[j], m[j][r] / m[j][j]));
    rd.fundamental_weights.push_back(w);
  }
  return rd;
}

std::vector<Rational> RootDatum::fundamental_coords(const Weight& lambda) const {
  std::vector<Rational> out;
  for (const auto& c : simple_coroots) out.push_back(pair(c, lambda));
  return out;
}

Weight RootDatum::from_fundamental(const std::vector<long long>& coords) const {
  if (coords.size() != fundamental_weights.size())
    throw InvalidArgument("expected " + std::to_string(fundamental_weights.size()) + " fundamental coordinates");
  Weight w = zero();
  for (std::size_t i = 0; i < coords.size(); ++i) w = plus(w, scaled(fundamental_weights[i], coords[i]));
  return w;
}

bool RootDatum::is_dominant(const Weight& lambda) const {
  for (const auto& c : fundamental_coords(lambda))
    if (c < 0) return false;
  return true;
}

bool RootDatum::is_integral(const Weight& lambda) const {
  for (const auto& c : fundamental_coords(lambda))
    if (boost::multiprecision::denominator(c) != 1) return false;
  return true;
}

QuantumParam QuantumParam::make(const RootDatum& rd, unsigned ell, bool strict) {
  if (strict) {
    if (ell % 2 == 0) throw InvalidArgument("ell must be odd");
    if (ell <= rd.coxeter_number)
      throw InvalidArgument("ell must exceed the Coxeter number " + std::to_string(rd.coxeter_number));
    if (rd.type == CartanType::G2 && ell % 3 == 0) throw InvalidArgument("ell must be prime to 3 for G2");
  } else if (ell == 0) {
    throw InvalidArgument("ell must be positive");
  }
  return QuantumParam{ell};
}

Weight dot_gen(const RootDatum& rd, QuantumParam q, Generator s, const Weight& lambda) {
  const Weight mu = plus(lambda, rd.rho);
  Weight image;
  if (s == 0) {
    image = plus(mu, scaled(rd.theta, Rational(q.ell) - RootDatum::pair(rd.theta_coroot, mu)));
  } else {
    if (s > rd.simple_roots.size()) throw InvalidArgument("generator out of range");
    image = minus(mu, scaled(rd.simple_roots[s - 1], RootDatum::pair(rd.simple_coroots[s - 1], mu)));
  }
  return minus(image, rd.rho);
}

Weight dot_action(const RootDatum& rd, QuantumParam q, const CoxElt& w, const Weight& lambda) {
  Weight out = lambda;
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) out = dot_gen(rd, q, *it, out);
  return out;
}

Weight w_to_weight(const RootDatum& rd, QuantumParam q, const CoxeterSystem& sys, const CoxElt& x) {
  if (!sys.in_min_coset_reps(x)) throw InvalidArgument("element " + x.str() + " is not in W^+");
  return dot_action(rd, q, x, rd.zero());
}

bool AlcoveAddress::interior() const {
  return std::none_of(on_lower_wall.begin(), on_lower_wall.end(), [](bool b) { return b; });
}

AlcoveAddress alcove_address(const RootDatum& rd, QuantumParam q, const Weight& lambda) {
  const Weight mu = plus(lambda, rd.rho);
  AlcoveAddress a;
  for (const auto& c : rd.positive_coroots) {
    const Rational t = RootDatum::pair(c, mu) / Rational(q.ell);
    const Integer f = floor_div(t);
    a.n.push_back(static_cast<long long>(f) + 1);
    a.on_lower_wall.push_back(Rational(f) == t);
  }
  return a;
}

namespace {

long long address_distance(const AlcoveAddress& a, const AlcoveAddress& b) {
  long long d = 0;
  for (std::size_t i = 0; i < a.n.size(); ++i) d += std::llabs(a.n[i] - b.n[i]);
  return d;
}

}  // namespace

CoxElt weight_to_element(const RootDatum& rd, QuantumParam q, const CoxeterSystem& sys, const Weight& lambda) {
  if (!rd.is_dominant(lambda)) throw InvalidArgument("weight " + format_weight(lambda) + " is not dominant");
  const AlcoveAddress target = alcove_address(rd, q, lambda);
  ElemId x = sys.identity_id();
  AlcoveAddress cur = alcove_address(rd, q, rd.zero());
  long long dist = address_distance(cur, target);
  while (dist > 0) {
    bool moved = false;
    for (Generator s : sys.generators()) {
      const ElemId xs = sys.mul_right(x, s);
      if (!sys.in_min_coset_reps(xs)) continue;
      const AlcoveAddress next = alcove_address(rd, q, dot_action(rd, q, sys.elt(xs), rd.zero()));
      const long long d = address_distance(next, target);
      if (d < dist) {
        x = xs;
        cur = next;
        dist = d;
        moved = true;
        break;
      }
    }
    if (!moved) throw ConsistencyError("alcove walk stalled at " + sys.elt(x).str());
  }
  return sys.elt(x);
}

unsigned affine_length_geometric(const RootDatum& rd, const CoxeterSystem& sys, const CoxElt& x) {
  if (!sys.affine()) throw InvalidArgument("geometric length needs an affine system");
  const QuantumParam q{rd.coxeter_number + 1};
  const Weight mu = plus(dot_action(rd, q, x, rd.zero()), rd.rho);
  unsigned total = 0;
  for (const auto& c : rd.positive_coroots) {
    const Integer f = floor_div(RootDatum::pair(c, mu) / Rational(q.ell));
    total += static_cast<unsigned>(f < 0 ? -f : f);
  }
  return total;
}

AffineDecomposition affine_decomposition(const RootDatum& rd, const CoxeterSystem& sys, const CoxElt& x) {
  if (!sys.affine()) throw InvalidArgument("affine decomposition needs an affine system");
  // Unshifted action with ell = 1: x(mu) = u(mu) + t.
  const QuantumParam unit{1};
  auto act = [&](const Weight& mu) {
    // dot action conjugated back by rho: x(mu) = x.(mu - rho) + rho.
    return plus(dot_action(rd, unit, x, minus(mu, rd.rho)), rd.rho);
  };
  const Weight t = act(rd.zero());
  std::vector<Weight> images;
  for (const auto& a : rd.simple_roots) images.push_back(minus(act(a), t));
  // Find u in W_f with the same linear part.
  std::vector<ElemId> group{sys.identity_id()};
  for (std::size_t i = 0; i < group.size(); ++i)
    for (Generator s : sys.finite_subset()) {
      const ElemId u = sys.mul_right(group[i], s);
      if (std::find(group.begin(), group.end(), u) == group.end()) group.push_back(u);
    }
  for (ElemId u : group) {
    bool same = true;
    for (std::size_t k = 0; k < rd.simple_roots.size() && same; ++k) {
      Weight img = rd.simple_roots[k];
      const Word& w = sys.elt(u).word();
      for (auto it = w.rbegin(); it != w.rend(); ++it)
        img = minus(img, scaled(rd.simple_roots[*it - 1], RootDatum::pair(rd.simple_coroots[*it - 1], img)));
      same = img == images[k];
    }
    if (same) return {t, sys.elt(u)};
  }
  throw ConsistencyError("no finite part found for " + x.str());
}

}  // namespace tidal
