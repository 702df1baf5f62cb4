#include "commands.hpp"
#include "json_io.hpp"

#include "tidal/error.hpp"

#include <doctest.h>

using tidal::LaurentPoly;
using tidal::parse_laurent;
namespace io = tidal::io;

TEST_CASE("io: polynomials round trip, big coefficients as strings") {
  for (const char* text : {"0", "v^-2 + 3v", "-7v^5"}) {
    const LaurentPoly p = parse_laurent(text);
    CHECK(io::poly_from(io::poly(p)) == p);
  }
  CHECK(io::poly(LaurentPoly()).dump() == R"({"lo":0,"coeffs":[]})");
  const tidal::Integer big("123456789012345678901234567890");
  const auto j = io::integer(big);
  CHECK(j.is_string());
  CHECK(io::integer_from(j) == big);
  CHECK(io::integer(tidal::Integer(-5)).get<long long>() == -5);
}

TEST_CASE("io: KL snapshots restore the same table") {
  const auto sys = tidal::CoxeterSystem::build("G2", false);
  tidal::HeckeAlgebra source(sys);
  for (const auto& x : sys.enumerate_ball(6)) source.kl_basis(sys.intern(x));
  const auto snap = io::kl_snapshot(source);
  CHECK(snap["format"] == "tidal-kl-table");
  CHECK(snap["version"] == io::kCacheVersion);

  tidal::HeckeAlgebra target(sys);
  CHECK(io::load_kl_snapshot(target, snap) == source.table_size());
  for (const auto& x : sys.enumerate_ball(6)) CHECK(target.kl_basis(sys.intern(x)) == source.kl_basis(sys.intern(x)));
}

TEST_CASE("io: snapshots with the wrong header or bad entries are refused") {
  const auto sys = tidal::CoxeterSystem::build("A2", false);
  tidal::HeckeAlgebra h(sys);
  h.kl_basis(sys.intern(sys.element("1-2-1")));
  auto snap = io::kl_snapshot(h);

  auto wrong_version = snap;
  wrong_version["version"] = 99;
  tidal::HeckeAlgebra a(sys);
  CHECK_THROWS_AS(io::load_kl_snapshot(a, wrong_version), tidal::InvalidArgument);

  tidal::HeckeAlgebra b(tidal::CoxeterSystem::build("B2", false));
  CHECK_THROWS_AS(io::load_kl_snapshot(b, snap), tidal::InvalidArgument);

  // an off-diagonal constant term is not a KL polynomial
  auto corrupt = snap;
  for (auto& col : corrupt["columns"])
    for (auto& [word, p] : col["column"].items())
      if (word != col["x"].get<std::string>()) p = io::poly(LaurentPoly(1));
  tidal::HeckeAlgebra c(sys);
  CHECK_THROWS_AS(io::load_kl_snapshot(c, corrupt), tidal::InvalidArgument);
}

TEST_CASE("io: run configs reject unknown keys") {
  CHECK_THROWS_AS(tidal::RunConfig::from_json(nlohmann::json{{"command", "kl"}, {"tpye", "A2"}}),
                  tidal::InvalidArgument);
  const auto c = tidal::RunConfig::from_json(nlohmann::json{{"command", "kl"}, {"type", "B2"}, {"max_length", 3}});
  CHECK(c.type == "B2");
  CHECK(c.max_length == 3u);
}

TEST_CASE("io: run dispatches commands and reports exit codes") {
  tidal::RunConfig c;
  c.command = "orbits";
  c.algebra = "sl3";
  auto res = tidal::run(c);
  CHECK(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.out);
  CHECK(j["orbits"].size() == 3);

  c.command = "no-such-command";
  CHECK(tidal::run(c).exit_code == 2);

  c.command = "kl";
  c.type = "A2";
  c.format = "yaml";
  CHECK(tidal::run(c).exit_code == 2);
}
