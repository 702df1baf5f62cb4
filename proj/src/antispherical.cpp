#include "tidal/antispherical.hpp"

#include "tidal/error.hpp"

#include <algorithm>

namespace tidal {

ParabolicModule::ParabolicModule(CoxeterSystem sys, ModuleKind kind)
    : sys_(std::move(sys)), kind_(kind), w0_(sys_.identity_id()) {
  const auto finite = sys_.finite_subset();
  for (bool grew = true; grew;) {
    grew = false;
    for (Generator s : finite) {
      if (!sys_.is_descent(w0_, s, Side::Right)) {
        w0_ = sys_.mul_right(w0_, s);
        grew = true;
      }
    }
  }
}

SparseVec ParabolicModule::act_gen(const SparseVec& vec, Generator s) const {
  SparseVec out;
  for (const auto& [y, p] : vec) {
    const ElemId ys = sys_.mul_right(y, s);
    if (sys_.is_descent(y, s, Side::Right)) {
      accumulate(out, ys, p);
      accumulate(out, y, p, -1);
    } else if (sys_.in_min_coset_reps(ys)) {
      accumulate(out, ys, p);
      accumulate(out, y, p, 1);
    } else if (kind_ == ModuleKind::Spherical) {
      accumulate(out, y, p * LaurentPoly::quantum_two());
    }
  }
  return out;
}

const SparseVec& ParabolicModule::canonical(ElemId x) {
  std::lock_guard lock(mu_);
  if (!sys_.in_min_coset_reps(x))
    throw InvalidArgument("element " + sys_.elt(x).str() + " is not a minimal coset representative");
  return canonical_locked(x);
}

const SparseVec& ParabolicModule::canonical_locked(ElemId x) {
  if (auto it = table_.find(x); it != table_.end()) return it->second;
  const Word& w = sys_.elt(x).word();
  SparseVec col;
  if (w.empty()) {
    col.emplace(x, LaurentPoly(1));
  } else {
    // Prefixes of elements of W^+ lie in W^+.
    const Generator s = w.back();
    SparseVec prod = act_gen(canonical_locked(sys_.mul_right(x, s)), s);
    const unsigned top = sys_.length(x);
    for (;;) {
      ElemId worst{};
      bool found = false;
      for (const auto& [z, p] : prod) {
        if (sys_.length(z) == top || p.in_vZv()) continue;
        if (!found || sys_.elt(worst) < sys_.elt(z)) {
          worst = z;
          found = true;
        }
      }
      if (!found) break;
      const LaurentPoly q = prod.at(worst).nonpositive_symmetric_part();
      for (const auto& [y, p] : canonical_locked(worst)) accumulate(prod, y, p * q, 0, -1);
    }
    col = std::move(prod);
  }
  for (const auto& [y, p] : col) {
    if (y != x && (!p.in_vZv() || !p.nonnegative()))
      throw ConsistencyError("canonical coefficient at (" + sys_.elt(y).str() + "," +
                             sys_.elt(x).str() + ") = " + p.to_string() +
                             " violates triangularity or positivity");
  }
  return table_.emplace(x, std::move(col)).first->second;
}

LaurentPoly ParabolicModule::coeff(ElemId y, ElemId x) {
  const SparseVec& col = canonical(x);
  auto it = col.find(y);
  return it == col.end() ? LaurentPoly() : it->second;
}

int ParabolicModule::certified_length(unsigned max_length) const {
  return static_cast<int>(max_length) - static_cast<int>(sys_.longest_finite_length());
}

SparseVec antispherical_by_projection(HeckeAlgebra& hecke, ElemId x) {
  const auto& sys = hecke.system();
  SparseVec out;
  for (const auto& [z, h] : hecke.kl_basis(x)) {
    // z = u w with w in W^+; strip the finite part from the left.
    ElemId w = z;
    unsigned finite_len = 0;
    for (bool moved = true; moved;) {
      moved = false;
      for (Generator s : sys.finite_subset()) {
        if (sys.is_descent(w, s, Side::Left)) {
          w = sys.mul_left(s, w);
          ++finite_len;
          moved = true;
        }
      }
    }
    accumulate(out, w, h, static_cast<int>(finite_len), finite_len % 2 ? -1 : 1);
  }
  return out;
}

SparseVec spherical_by_projection(HeckeAlgebra& hecke, ElemId x) {
  const auto& sys = hecke.system();
  ElemId w0 = sys.identity_id();
  for (bool grew = true; grew;) {
    grew = false;
    for (Generator s : sys.finite_subset()) {
      if (!sys.is_descent(w0, s, Side::Left)) {
        w0 = sys.mul_left(s, w0);
        grew = true;
      }
    }
  }
  const Word& w0_word = sys.elt(w0).word();
  auto times_w0 = [&](ElemId z) {
    for (Generator s : w0_word) z = sys.mul_left(s, z);
    return z;
  };
  SparseVec out;
  for (const auto& [z, h] : hecke.kl_basis(times_w0(x))) {
    bool full = true;
    for (Generator s : sys.finite_subset()) full = full && sys.is_descent(z, s, Side::Left);
    if (full) accumulate(out, times_w0(z), h);
  }
  return out;
}

BoundReport bound_check(ParabolicModule& asph, unsigned max_length) {
  const auto& sys = asph.system();
  BoundReport rep;
  rep.label = sys.label();
  rep.max_length = max_length;
  rep.certified_length = asph.certified_length(max_length);
  rep.bound = sys.longest_finite_length();
  if (rep.certified_length < 0) return rep;
  for (ElemId x : sys.min_coset_rep_ids(static_cast<unsigned>(rep.certified_length))) {
    for (const auto& [y, p] : asph.canonical(x)) {
      ++rep.pairs_checked;
      rep.max_deg = std::max(rep.max_deg, p.degree());
      if (p.degree() > static_cast<int>(rep.bound)) rep.violations.push_back({sys.elt(y), sys.elt(x), p});
    }
  }
  std::sort(rep.violations.begin(), rep.violations.end(), [](const auto& a, const auto& b) {
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  });
  return rep;
}

SphericalInverse spherical_inverse(ParabolicModule& sph, unsigned max_length) {
  if (sph.kind() != ModuleKind::Spherical) throw InvalidArgument("spherical_inverse needs the spherical module");
  const auto& sys = sph.system();
  const std::vector<ElemId> ball = sys.min_coset_rep_ids(max_length);
  const std::size_t n = ball.size();
  std::unordered_map<ElemId, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos.emplace(ball[i], i);

  // A[i][j] = m_{ball[i], ball[j]}; upper unitriangular in the sorted order.
  std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [z, p] : sph.canonical(ball[j])) a[pos.at(z)][j] = p;

  std::vector<std::vector<LaurentPoly>> b(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    b[i][i] = LaurentPoly(1);
    for (std::size_t j = i + 1; j < n; ++j) {
      LaurentPoly acc;
      for (std::size_t k = i; k < j; ++k)
        if (!b[i][k].is_zero() && !a[k][j].is_zero()) acc += b[i][k] * a[k][j];
      b[i][j] = -acc;
    }
  }

  SphericalInverse out;
  out.max_length = max_length;
  auto sign = [&](std::size_t i, std::size_t k) {
    return (sys.length(ball[i]) + sys.length(ball[k])) % 2 ? -1 : 1;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i; k < n; ++k) {
      if (b[i][k].is_zero()) continue;
      LaurentPoly entry = b[i][k];
      if (sign(i, k) < 0) entry = -entry;
      out.max_deg = std::max(out.max_deg, entry.degree());
      out.entries.emplace(std::pair{sys.elt(ball[k]), sys.elt(ball[i])}, std::move(entry));
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly sum;
      for (std::size_t k = 0; k < n; ++k) {
        if (a[k][j].is_zero()) continue;
        auto it = out.entries.find({sys.elt(ball[k]), sys.elt(ball[i])});
        if (it == out.entries.end()) continue;
        LaurentPoly term = it->second * a[k][j];
        if (sign(i, k) < 0) term = -term;
        sum += term;
      }
      ++out.pairs_verified;
      if (sum != LaurentPoly(i == j ? 1 : 0))
        out.orthogonality_failures.emplace_back(sys.elt(ball[i]), sys.elt(ball[j]));
    }
  return out;
}

CrossCheckReport cross_check(ParabolicModule& module, HeckeAlgebra& hecke, unsigned max_length) {
  const auto& sys = module.system();
  CrossCheckReport rep;
  for (ElemId x : sys.min_coset_rep_ids(max_length)) {
    ++rep.elements;
    const SparseVec proj = module.kind() == ModuleKind::Antispherical
                               ? antispherical_by_projection(hecke, x)
                               : spherical_by_projection(hecke, x);
    if (proj != module.canonical(x)) rep.mismatches.push_back(sys.elt(x));
  }
  return rep;
}

}  // namespace tidal
