#pragma once

#include <json.hpp>

#include <optional>
#include <string>

namespace tidal {

/// One CLI invocation. Unset optionals take per-command defaults.
struct RunConfig {
  std::string command;  // kl, asph, bound, cells, cell-orbits, duflo, check-p, tilt-hom,
                        // tilt-census, tilt-nilpotence, lattice-a2, b2-family, orbits,
                        // cyclic-decompose, cyclic-classify, cyclic-green, cyclic-socle
  std::string type = "A2";
  bool affine = false;
  std::optional<unsigned> ell;
  std::optional<unsigned> max_length;
  unsigned p = 2, n = 1;
  std::string fgl = "mult";
  std::string fgl2 = "add";
  std::string format = "json";  // json | table | dot
  std::string output;           // empty: stdout
  std::string cache_dir;

  std::string x, y;               // words
  std::string side = "left";      // cells: left | right | two-sided
  std::string algebra = "sl3";    // orbits
  bool bound_check = false, cross_check = false, spherical = false;
  bool generators = false;        // lattice-a2: emit the generator diagram
  std::optional<unsigned> a, b;   // cyclic-decompose / cyclic-socle
  long long i_lo = 3, i_hi = 8;   // b2-family

  static RunConfig from_json(const nlohmann::json& j);
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 check violation, 2 usage error
  std::string out;
  std::string err;
};

RunResult run(const RunConfig& config);

}  // namespace tidal
