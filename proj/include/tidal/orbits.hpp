#pragma once

#include "tidal/coxeter.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tidal {

using Partition = std::vector<int>;

/// Dominance order: partial sums of lambda never exceed those of mu.
bool dominance_leq(const Partition& lambda, const Partition& mu);
std::vector<Partition> partitions_of(int n);
std::string format_partition(const Partition& p);

/// Nilpotent orbits under the closure order. Node 0 is the zero orbit.
struct OrbitPoset {
  std::string algebra;
  std::vector<std::string> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)
  std::vector<std::vector<bool>> leq;                         // reflexive-transitive closure

  std::size_t index_of(std::string_view label) const;
};

/// "sl<n>" (partitions, n <= 8), "so5" (alias "sp4") or "g2".
OrbitPoset orbit_poset(std::string_view algebra);
/// Lie algebra whose orbits match the type: A1 -> sl2, B2 -> so5, ...
std::string lie_algebra_of(CartanType type);

/// Down-closed set of orbits; the thick tensor ideal of objects supported
/// there.
struct ThickIdeal {
  std::vector<std::size_t> downset;  // sorted node indices
  bool principal = false;            // generated by a single orbit
  bool prime = false;                // complement is a principal filter
  std::optional<std::size_t> orbit;  // the O with I_O == this ideal, when prime
};

/// All proper down-sets (the full set excluded), by size then lexicographically.
std::vector<ThickIdeal> thick_ideal_lattice(const OrbitPoset& poset);
/// Hasse diagram of the proper ideals in DOT.
std::string lattice_dot(const OrbitPoset& poset, const std::vector<ThickIdeal>& ideals);
std::string poset_dot(const OrbitPoset& poset);

/// I_O = complement of the principal filter above O, for each orbit O.
std::vector<std::pair<std::size_t, ThickIdeal>> prime_thick_ideals(const OrbitPoset& poset);

struct CoverReport {
  std::size_t ideals = 0;  // including the full set
  std::size_t primes = 0;
  std::vector<std::string> prime_without_unique_cover;
  std::vector<std::string> unique_cover_not_prime;
  bool ok() const { return prime_without_unique_cover.empty() && unique_cover_not_prime.empty(); }
};

/// In the lattice of all down-sets, an ideal has a unique cover iff it is prime.
CoverReport unique_cover_check(const OrbitPoset& poset);

std::string format_downset(const OrbitPoset& poset, const std::vector<std::size_t>& downset);

}  // namespace tidal
