#pragma once

#include "tidal/hecke.hpp"

#include <map>
#include <optional>

namespace tidal {

/// Which one-dimensional character of the finite Hecke algebra the module is
/// induced from: H_s -> -v (antispherical) or H_s -> v^-1 (spherical).
enum class ModuleKind { Antispherical, Spherical };

/// The right H-module with standard basis {N_y : y in W^+} and its canonical
/// basis \underline{N}_x = sum_y n_{y,x} N_y (m_{y,x} in the spherical case).
///
/// Right action of \underline{H}_s on N_y:
///   ys > y, ys in W^+ : N_{ys} + v N_y
///   ys < y            : N_{ys} + v^-1 N_y
///   ys not in W^+     : 0 (antispherical) or (v + v^-1) N_y (spherical)
class ParabolicModule {
 public:
  ParabolicModule(CoxeterSystem sys, ModuleKind kind);
  ParabolicModule(const ParabolicModule&) = delete;
  ParabolicModule& operator=(const ParabolicModule&) = delete;

  const CoxeterSystem& system() const { return sys_; }
  ModuleKind kind() const { return kind_; }

  /// Right action of \underline{H}_s on standard-basis vectors.
  SparseVec act_gen(const SparseVec& vec, Generator s) const;
  /// y -> n_{y,x}. Throws InvalidArgument unless x in W^+.
  const SparseVec& canonical(ElemId x);
  LaurentPoly coeff(ElemId y, ElemId x);

  /// Longest length whose canonical elements are certified in a ball of
  /// length L: L - l(w_0), or -1 if nothing is.
  int certified_length(unsigned max_length) const;

  /// The longest element of the finite parabolic subgroup.
  ElemId finite_longest() const { return w0_; }

 private:
  const SparseVec& canonical_locked(ElemId x);

  CoxeterSystem sys_;
  ModuleKind kind_;
  ElemId w0_{};
  std::recursive_mutex mu_;
  std::unordered_map<ElemId, SparseVec> table_;
};

/// n_{w,x} = sum_{u in W_f} (-v)^{l(u)} h_{uw,x}, from the full KL table.
SparseVec antispherical_by_projection(HeckeAlgebra& hecke, ElemId x);
/// m_{y,x} = h_{w_0 y, w_0 x}, from the full KL table.
SparseVec spherical_by_projection(HeckeAlgebra& hecke, ElemId x);

struct BoundViolation {
  CoxElt y, x;
  LaurentPoly poly;
};

struct BoundReport {
  std::string label;
  unsigned max_length = 0;
  int certified_length = 0;
  unsigned bound = 0;
  int max_deg = 0;
  std::size_t pairs_checked = 0;
  std::vector<BoundViolation> violations;
  bool attained() const { return max_deg == static_cast<int>(bound); }
};

/// Scans every certified n_{y,x} with x in W^+ of length <= L.
BoundReport bound_check(ParabolicModule& asph, unsigned max_length);

struct SphericalInverse {
  unsigned max_length = 0;
  /// (z, x) -> m^{z,x}, for x <= z in the ball.
  std::map<std::pair<CoxElt, CoxElt>, LaurentPoly> entries;
  /// Rows that could be truncated by the ball boundary; empty because W^+
  /// intervals below an element of the ball stay in the ball.
  std::vector<CoxElt> flagged_rows;
  int max_deg = 0;
  std::size_t pairs_verified = 0;
  std::vector<std::pair<CoxElt, CoxElt>> orthogonality_failures;
};

/// Solves sum_z (-1)^{l(z)+l(x)} m^{z,x} m_{z,y} = delta_{x,y} on the ball
/// and re-verifies the identity for every pair.
SphericalInverse spherical_inverse(ParabolicModule& sph, unsigned max_length);

struct CrossCheckReport {
  std::size_t elements = 0;
  std::vector<CoxElt> mismatches;
};

/// Compares the in-module recursion with the projection formula for all
/// x in W^+ of length <= L.
CrossCheckReport cross_check(ParabolicModule& module, HeckeAlgebra& hecke, unsigned max_length);

}  // namespace tidal
