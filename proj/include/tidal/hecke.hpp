#pragma once

#include "tidal/coxeter.hpp"
#include "tidal/laurent.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

namespace tidal {

/// Sparse element of a free Z[v,v^-1]-module with basis indexed by interned
/// group elements. Zero coefficients are never stored.
using SparseVec = std::unordered_map<ElemId, LaurentPoly>;

/// Adds c * v^k * p to the entry for key, erasing it if it cancels.
void accumulate(SparseVec& vec, ElemId key, const LaurentPoly& p, int k = 0, const Integer& c = 1);

enum class Basis { Standard, Canonical };

/// Expansion keyed by normal forms, in deterministic (length, ShortLex) order.
struct KLVector {
  Basis basis = Basis::Standard;
  std::map<CoxElt, LaurentPoly> terms;
  friend bool operator==(const KLVector&, const KLVector&) = default;
};

/// Hecke algebra of a Coxeter system, normalized by
/// H_s^2 = (v^-1 - v) H_s + 1, with a lazily filled table of
/// Kazhdan-Lusztig basis elements
///   \underline{H}_x = sum_y h_{y,x} H_y,  h_{x,x} = 1,  h_{y,x} in vZ[v] for y < x.
/// The table is guarded internally; a single object may be shared by threads.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(CoxeterSystem sys) : sys_(std::move(sys)) {}
  HeckeAlgebra(const HeckeAlgebra&) = delete;
  HeckeAlgebra& operator=(const HeckeAlgebra&) = delete;

  const CoxeterSystem& system() const { return sys_; }

  // Standard basis arithmetic.
  SparseVec mult_right_gen(const SparseVec& a, Generator s) const;  // a * H_s
  SparseVec mult_left_gen(Generator s, const SparseVec& a) const;   // H_s * a
  SparseVec mult_standard(const SparseVec& a, ElemId x) const;      // a * H_x
  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  /// Bar involution: v -> v^-1 and H_x -> (H_{x^-1})^-1.
  SparseVec bar(const SparseVec& a) const;

  /// Column x of the KL table: y -> h_{y,x}.
  const SparseVec& kl_basis(ElemId x);
  LaurentPoly kl_poly(ElemId y, ElemId x);
  /// Coefficient of v in h_{y,x}.
  Integer mu(ElemId y, ElemId x);

  /// Rewrites a standard-basis vector in the canonical basis.
  SparseVec to_canonical(SparseVec a);
  /// \underline{H}_y \underline{H}_x = sum_z f_{y,x,z} \underline{H}_z. Throws
  /// ConsistencyError if some f has a negative coefficient.
  SparseVec mult_kl(ElemId y, ElemId x);
  /// \underline{H}_s \underline{H}_x (Left) or \underline{H}_x \underline{H}_s
  /// (Right) from the mu-coefficients, without a standard-basis detour.
  SparseVec mult_kl_gen(Generator s, ElemId x, Side side);

  KLVector to_kl_vector(const SparseVec& a, Basis basis) const;
  SparseVec from_kl_vector(const KLVector& a) const;

  /// Number of KL columns computed so far.
  std::size_t table_size() const;
  /// Inserts a precomputed column (used when restoring a cache snapshot).
  void seed_column(ElemId x, SparseVec column);
  /// All computed columns, for snapshotting.
  std::vector<std::pair<ElemId, SparseVec>> table_snapshot() const;

 private:
  const SparseVec& kl_basis_locked(ElemId x);
  SparseVec to_canonical_locked(SparseVec a);

  CoxeterSystem sys_;
  mutable std::recursive_mutex mu_;
  std::unordered_map<ElemId, SparseVec> table_;
};

/// Standard-basis helpers on value types.
KLVector mult_standard(HeckeAlgebra& hecke, const CoxElt& x, const KLVector& vec);

}  // namespace tidal
