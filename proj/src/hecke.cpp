#include "tidal/hecke.hpp"

#include "tidal/error.hpp"

#include <algorithm>

namespace tidal {

namespace {

const LaurentPoly kVinvMinusV = LaurentPoly(-1, {1, 0, -1});  // v^-1 - v
const LaurentPoly kVMinusVinv = LaurentPoly(-1, {-1, 0, 1});  // v - v^-1

}  // namespace

void accumulate(SparseVec& vec, ElemId key, const LaurentPoly& p, int k, const Integer& c) {
  if (p.is_zero() || c == 0) return;
  auto [it, inserted] = vec.try_emplace(key);
  it->second.add_scaled(p, k, c);
  if (it->second.is_zero()) vec.erase(it);
}

SparseVec HeckeAlgebra::mult_right_gen(const SparseVec& a, Generator s) const {
  SparseVec out;
  for (const auto& [y, p] : a) {
    accumulate(out, sys_.mul_right(y, s), p);
    if (sys_.is_descent(y, s, Side::Right)) accumulate(out, y, p * kVinvMinusV);
  }
  return out;
}

SparseVec HeckeAlgebra::mult_left_gen(Generator s, const SparseVec& a) const {
  SparseVec out;
  for (const auto& [y, p] : a) {
    accumulate(out, sys_.mul_left(s, y), p);
    if (sys_.is_descent(y, s, Side::Left)) accumulate(out, y, p * kVinvMinusV);
  }
  return out;
}

SparseVec HeckeAlgebra::mult_standard(const SparseVec& a, ElemId x) const {
  SparseVec out = a;
  for (Generator s : sys_.elt(x).word()) out = mult_right_gen(out, s);
  return out;
}

SparseVec HeckeAlgebra::multiply(const SparseVec& a, const SparseVec& b) const {
  SparseVec out;
  for (const auto& [z, c] : b) {
    for (const auto& [y, p] : mult_standard(a, z)) accumulate(out, y, p * c);
  }
  return out;
}

SparseVec HeckeAlgebra::bar(const SparseVec& a) const {
  SparseVec out;
  for (const auto& [y, p] : a) {
    // bar(H_y) = H_{s1}^-1 ... H_{sk}^-1 with H_s^-1 = H_s + (v - v^-1).
    SparseVec term{{sys_.identity_id(), p.bar()}};
    for (Generator s : sys_.elt(y).word()) {
      SparseVec next = mult_right_gen(term, s);
      for (const auto& [z, q] : term) accumulate(next, z, q * kVMinusVinv);
      term = std::move(next);
    }
    for (const auto& [z, q] : term) accumulate(out, z, q);
  }
  return out;
}

const SparseVec& HeckeAlgebra::kl_basis(ElemId x) {
  std::lock_guard lock(mu_);
  return kl_basis_locked(x);
}

const SparseVec& HeckeAlgebra::kl_basis_locked(ElemId x) {
  if (auto it = table_.find(x); it != table_.end()) return it->second;
  SparseVec col;
  const Word& w = sys_.elt(x).word();
  if (w.empty()) {
    col.emplace(x, LaurentPoly(1));
  } else {
    // \underline{H}_{x'} \underline{H}_s with \underline{H}_s = H_s + v.
    const Generator s = w.back();
    const ElemId prefix = sys_.mul_right(x, s);
    SparseVec prod;
    for (const auto& [y, p] : kl_basis_locked(prefix)) {
      accumulate(prod, sys_.mul_right(y, s), p);
      accumulate(prod, y, p, sys_.is_descent(y, s, Side::Right) ? -1 : 1);
    }
    const unsigned top = sys_.length(x);
    for (;;) {
      // Largest non-top element whose coefficient is not yet in vZ[v].
      ElemId worst{};
      unsigned worst_len = 0;
      bool found = false;
      for (const auto& [z, p] : prod) {
        const unsigned lz = sys_.length(z);
        if (lz == top || p.in_vZv()) continue;
        if (!found || lz > worst_len || (lz == worst_len && sys_.elt(z) < sys_.elt(worst))) {
          worst = z;
          worst_len = lz;
          found = true;
        }
      }
      if (!found) break;
      const LaurentPoly q = prod.at(worst).nonpositive_symmetric_part();
      const SparseVec& lower = kl_basis_locked(worst);
      for (const auto& [y, p] : lower) accumulate(prod, y, p * q, 0, -1);
    }
    col = std::move(prod);
  }
  for (const auto& [y, p] : col) {
    if (y != x && (!p.in_vZv() || !p.nonnegative()))
      throw ConsistencyError("KL polynomial h_{" + sys_.elt(y).str() + "," + sys_.elt(x).str() +
                             "} = " + p.to_string() + " violates triangularity or positivity");
  }
  return table_.emplace(x, std::move(col)).first->second;
}

LaurentPoly HeckeAlgebra::kl_poly(ElemId y, ElemId x) {
  std::lock_guard lock(mu_);
  const SparseVec& col = kl_basis_locked(x);
  auto it = col.find(y);
  return it == col.end() ? LaurentPoly() : it->second;
}

Integer HeckeAlgebra::mu(ElemId y, ElemId x) { return kl_poly(y, x).coeff(1); }

SparseVec HeckeAlgebra::to_canonical(SparseVec a) {
  std::lock_guard lock(mu_);
  return to_canonical_locked(std::move(a));
}

SparseVec HeckeAlgebra::to_canonical_locked(SparseVec a) {
  SparseVec out;
  while (!a.empty()) {
    auto best = a.begin();
    for (auto it = a.begin(); it != a.end(); ++it) {
      const unsigned l1 = sys_.length(it->first), l0 = sys_.length(best->first);
      if (l1 > l0 || (l1 == l0 && sys_.elt(it->first) < sys_.elt(best->first))) best = it;
    }
    const ElemId z = best->first;
    const LaurentPoly c = best->second;
    out.emplace(z, c);
    for (const auto& [y, p] : kl_basis_locked(z)) accumulate(a, y, p * c, 0, -1);
  }
  return out;
}

SparseVec HeckeAlgebra::mult_kl(ElemId y, ElemId x) {
  std::lock_guard lock(mu_);
  const SparseVec prod = multiply(kl_basis_locked(y), kl_basis_locked(x));
  SparseVec f = to_canonical_locked(prod);
  for (const auto& [z, p] : f) {
    if (!p.nonnegative())
      throw ConsistencyError("structure constant f_{" + sys_.elt(y).str() + "," +
                             sys_.elt(x).str() + "," + sys_.elt(z).str() + "} = " + p.to_string() +
                             " has a negative coefficient");
  }
  return f;
}

SparseVec HeckeAlgebra::mult_kl_gen(Generator s, ElemId x, Side side) {
  std::lock_guard lock(mu_);
  SparseVec out;
  if (sys_.is_descent(x, s, side)) {
    out.emplace(x, LaurentPoly::quantum_two());
    return out;
  }
  out.emplace(side == Side::Left ? sys_.mul_left(s, x) : sys_.mul_right(x, s), LaurentPoly(1));
  for (const auto& [z, p] : kl_basis_locked(x)) {
    if (z == x || !sys_.is_descent(z, s, side)) continue;
    const Integer m = p.coeff(1);
    if (m != 0) out.emplace(z, LaurentPoly::monomial(0, m));
  }
  return out;
}

KLVector HeckeAlgebra::to_kl_vector(const SparseVec& a, Basis basis) const {
  KLVector out;
  out.basis = basis;
  for (const auto& [y, p] : a) out.terms.emplace(sys_.elt(y), p);
  return out;
}

SparseVec HeckeAlgebra::from_kl_vector(const KLVector& a) const {
  SparseVec out;
  for (const auto& [y, p] : a.terms) accumulate(out, sys_.intern(y), p);
  return out;
}

std::size_t HeckeAlgebra::table_size() const {
  std::lock_guard lock(mu_);
  return table_.size();
}

void HeckeAlgebra::seed_column(ElemId x, SparseVec column) {
  std::lock_guard lock(mu_);
  table_.try_emplace(x, std::move(column));
}

std::vector<std::pair<ElemId, SparseVec>> HeckeAlgebra::table_snapshot() const {
  std::lock_guard lock(mu_);
  std::vector<std::pair<ElemId, SparseVec>> out(table_.begin(), table_.end());
  std::sort(out.begin(), out.end(),
            [this](const auto& a, const auto& b) { return sys_.elt(a.first) < sys_.elt(b.first); });
  return out;
}

KLVector mult_standard(HeckeAlgebra& hecke, const CoxElt& x, const KLVector& vec) {
  if (vec.basis != Basis::Standard) throw InvalidArgument("mult_standard expects a standard-basis vector");
  const auto& sys = hecke.system();
  return hecke.to_kl_vector(hecke.mult_standard(hecke.from_kl_vector(vec), sys.intern(x)),
                            Basis::Standard);
}

}  // namespace tidal
