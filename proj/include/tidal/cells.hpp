#pragma once

#include "tidal/hecke.hpp"

#include <map>
#include <optional>
#include <string>

namespace tidal {

enum class CellSide { Left, Right, TwoSided };
std::string to_string(CellSide side);

/// Cells of the ball of length L: strongly connected components of the
/// graph with an edge x -> z whenever \underline{H}_z occurs in
/// \underline{H}_s \underline{H}_x (left), \underline{H}_x \underline{H}_s (right)
/// or either (two-sided), for x of length < L.
struct CellPartition {
  CellSide side = CellSide::Left;
  unsigned max_length = 0;
  /// Members of length <= margin are certified; the whole group when finite.
  int stability_margin = 0;
  std::vector<std::vector<CoxElt>> classes;  // members sorted, classes by first member
  std::vector<bool> certified;               // every member within the margin
  /// Condensation edges (i, j): some member of class j occurs in a product with
  /// a member of class i.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t class_of(const CoxElt& x) const;
};

CellPartition cell_partition(HeckeAlgebra& hecke, CellSide side, unsigned max_length);

struct AValue {
  int value = 0;
  bool exact = false;
};

/// Max degree of f_{y,z,x} over all pairs in the ball: a(x) for every x with
/// l(x) <= L. Finite groups get the full sweep; for affine groups only pairs
/// with l(y) + l(z) <= L are visited and a value is exact when it lies
/// within the margin L - 2 l(w_0) and does not change at L + 2.
std::map<CoxElt, AValue> a_function(HeckeAlgebra& hecke, unsigned max_length);
AValue a_function(HeckeAlgebra& hecke, const CoxElt& x, unsigned max_length);

/// Valuation of h_{e,x}; empty when h_{e,x} = 0.
std::optional<int> delta_function(HeckeAlgebra& hecke, ElemId x);

struct CellData {
  CoxElt element;
  AValue a;
  std::optional<int> delta;
  std::size_t left = 0, right = 0, twosided = 0;
  bool is_duflo = false;
};

std::vector<CellData> cell_data(HeckeAlgebra& hecke, unsigned max_length);
/// Certified x with a(x) = Delta(x).
std::vector<CoxElt> duflo_elements(HeckeAlgebra& hecke, unsigned max_length);

struct PReport {
  /// "P1", "P2", "P3", "P5", "P6", "P13" -> witness descriptions (empty = pass).
  std::map<std::string, std::vector<std::string>> failures;
  std::vector<CoxElt> duflo;
  std::vector<int> duflo_a;
  std::size_t left_cells = 0, right_cells = 0;
  bool one_per_left_cell = false, one_per_right_cell = false;
  bool all_pass() const;
};

/// Decategorified P1, P2, P3, P5, P6, P13 for a finite system.
PReport check_P(HeckeAlgebra& hecke);

struct CellOrbitDiagnostic {
  std::string label;
  unsigned max_length = 0;
  int margin = 0;
  std::size_t certified_cells = 0;  // two-sided cells meeting W^+ within the margin
  std::size_t orbit_count = 0;
  /// Lowest member of each counted cell, and whether the cell stopped growing
  /// between L and L + 2.
  std::vector<std::pair<CoxElt, bool>> cells;
  bool match() const { return certified_cells == orbit_count; }
};

CellOrbitDiagnostic cell_orbit_diagnostic(HeckeAlgebra& hecke, unsigned max_length);

}  // namespace tidal
