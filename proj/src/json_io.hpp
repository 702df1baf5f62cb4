#pragma once

#include "tidal/antispherical.hpp"
#include "tidal/cells.hpp"
#include "tidal/hecke.hpp"
#include "tidal/modcyclic.hpp"
#include "tidal/orbits.hpp"
#include "tidal/tilting.hpp"

#include <json.hpp>

namespace tidal::io {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become numbers, larger ones decimal strings.
Json integer(const Integer& z);
Integer integer_from(const Json& j);

/// {"lo": k, "coeffs": [c_k, c_{k+1}, ...]}; zero is {"lo": 0, "coeffs": []}.
Json poly(const LaurentPoly& p);
LaurentPoly poly_from(const Json& j);

/// Word -> polynomial object, in (length, ShortLex) order.
Json sparse(const CoxeterSystem& sys, const SparseVec& vec);
Json kl_vector(const KLVector& v);
Json weight(const Weight& w);

Json report(const BoundReport& r);
Json report(const SphericalInverse& r, bool with_entries);
Json report(const CrossCheckReport& r);
Json report(const CellPartition& r);
Json report(const PReport& r);
Json report(const CellOrbitDiagnostic& r);
Json report(const std::vector<CellData>& r);
Json report(const GradedHom& r);
Json report(const Census& r);
Json report(const NilpotenceReport& r);
Json report(const IdealLattice& r);
Json report(const AntichainReport& r);
Json report(const OrbitPoset& poset);
Json report(const CoverReport& r);
Json report(const Classification& r);
Json report(const SocleWitness& r);
Json report(const GreenComparison& r);
Json report(const TensorTable& t);
Json report(const JordanType& t);

/// Versioned snapshot of a KL table.
inline constexpr int kCacheVersion = 1;
Json kl_snapshot(const HeckeAlgebra& hecke);
/// Seeds hecke from a snapshot; returns the number of columns loaded, or
/// throws InvalidArgument if the header does not match.
std::size_t load_kl_snapshot(HeckeAlgebra& hecke, const Json& j);

}  // namespace tidal::io
