// Command-line front end. Parses flags, builds a JSON run config and hands it
// to the C library.
#include "tidal/tidal.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct Flags {
  std::string type = "A2";
  bool affine = false;
  unsigned ell = 0, max_length = 0, p = 2, n = 1, a = 0, b = 0;
  long long i_lo = 3, i_hi = 8;
  std::string fgl = "mult", fgl2 = "add", format = "json", output, cache_dir;
  std::string x, y, side = "left", algebra = "sl3";
  bool bound_check = false, cross_check = false, spherical = false, generators = false;
};

// Remembers which optional numeric flags were given.
struct Given {
  std::vector<std::pair<std::string, CLI::Option*>> opts;
  void add(const std::string& key, CLI::Option* o) { opts.emplace_back(key, o); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig combinatorics, tilting Hom spaces and tensor ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(tidal_version()));

  Flags f;
  Given given;
  std::string command;

  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "table", "dot"}));
  app.add_option("-o,--output", f.output, "Write output to a file");
  app.add_option("--cache-dir", f.cache_dir, "Directory for persisted KL tables");

  auto type_opts = [&](CLI::App* sub, bool with_affine) {
    sub->add_option("--type", f.type, "Cartan type: A1, A2, A3, B2, G2")->capture_default_str();
    if (with_affine) sub->add_flag("--affine", f.affine, "Use the affine Weyl group");
    given.add("max_length", sub->add_option("-L,--max-length", f.max_length, "Ball radius (element length)"));
  };
  auto ell_opt = [&](CLI::App* sub) { given.add("ell", sub->add_option("--ell", f.ell, "Order of the root of unity")); };
  auto fgl_opts = [&](CLI::App* sub) {
    sub->add_option("--p", f.p, "Prime")->required();
    sub->add_option("--n", f.n, "Level: the algebra is k[x]/x^{p^n}")->required();
    sub->add_option("--fgl", f.fgl, "mult, add, or a polynomial in u, v")->capture_default_str();
  };
  auto leaf = [&](CLI::App* sub, std::string name) {
    sub->fallthrough();
    sub->callback([&command, name] { command = name; });
  };

  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials");
  type_opts(kl, true);
  kl->add_option("--x", f.x, "Column element (word)");
  kl->add_option("--y", f.y, "Row element; prints a single polynomial");
  leaf(kl, "kl");

  auto* asph = app.add_subcommand("asph", "Antispherical and spherical canonical bases");
  type_opts(asph, true);
  asph->add_flag("--bound-check", f.bound_check, "Check deg n_{y,x} <= l(w_0)");
  asph->add_flag("--cross-check", f.cross_check, "Compare with the projection formula");
  asph->add_flag("--spherical", f.spherical, "Spherical module; alone, checks the inversion formula");
  leaf(asph, "asph");

  auto* bound = app.add_subcommand("bound", "Degree bound for the antispherical module");
  type_opts(bound, false);
  leaf(bound, "bound");

  auto* cells = app.add_subcommand("cells", "Left, right or two-sided cells");
  type_opts(cells, true);
  cells->add_option("--side", f.side, "left, right or two-sided")->capture_default_str();
  leaf(cells, "cells");

  auto* cell_orbits = app.add_subcommand("cell-orbits", "Two-sided cells against nilpotent orbits (report only)");
  type_opts(cell_orbits, false);
  leaf(cell_orbits, "cell-orbits");

  auto* duflo = app.add_subcommand("duflo", "Duflo involutions of a finite Weyl group");
  type_opts(duflo, false);
  leaf(duflo, "duflo");

  auto* check_p = app.add_subcommand("check-p", "Properties P1-P13 of the a-function");
  type_opts(check_p, false);
  leaf(check_p, "check-p");

  auto* tilt = app.add_subcommand("tilt", "Graded Hom spaces between tilting modules");
  tilt->require_subcommand(1);
  tilt->fallthrough();
  auto* hom = tilt->add_subcommand("hom", "Graded Hom(T(x.0), T(y.0)), or from the unit if --y is omitted");
  type_opts(hom, false);
  ell_opt(hom);
  hom->add_option("--x", f.x, "Element of W^+")->required();
  hom->add_option("--y", f.y, "Element of W^+");
  leaf(hom, "tilt-hom");
  auto* census = tilt->add_subcommand("census", "Tilting modules receiving a unit morphism");
  type_opts(census, false);
  ell_opt(census);
  leaf(census, "tilt-census");
  auto* nil = tilt->add_subcommand("nilpotence", "Degree bound and constant terms of graded Homs");
  type_opts(nil, false);
  leaf(nil, "tilt-nilpotence");

  auto* lattice = app.add_subcommand("lattice", "Tensor ideal lattices");
  lattice->require_subcommand(1);
  lattice->fallthrough();
  auto* a2 = lattice->add_subcommand("a2", "Tensor ideals of tilting modules for sl3 at ell = 5");
  a2->add_flag("--generators", f.generators, "With --format dot, draw the generator order instead");
  leaf(a2, "lattice-a2");

  auto* b2 = app.add_subcommand("b2-family", "Antichain certificates for T(i ell - 3, 0) in type B2");
  given.add("max_length", b2->add_option("-L,--max-length", f.max_length, "Ball radius"));
  ell_opt(b2);
  b2->add_option("--i-lo", f.i_lo, "First family index")->capture_default_str();
  b2->add_option("--i-hi", f.i_hi, "Last family index")->capture_default_str();
  leaf(b2, "b2-family");

  auto* orbits = app.add_subcommand("orbits", "Nilpotent orbit poset and its thick ideals");
  orbits->add_option("--algebra", f.algebra, "sl<n>, so5 or g2")->capture_default_str();
  leaf(orbits, "orbits");

  auto* cyclic = app.add_subcommand("cyclic", "Representations of k[x]/x^{p^n}");
  cyclic->require_subcommand(1);
  cyclic->fallthrough();
  auto* dec = cyclic->add_subcommand("decompose", "Tensor products J_a (x) J_b");
  fgl_opts(dec);
  given.add("a", dec->add_option("--a", f.a, "First block size"));
  given.add("b", dec->add_option("--b", f.b, "Second block size"));
  leaf(dec, "cyclic-decompose");
  auto* cls = cyclic->add_subcommand("classify", "Thick ideals, Ob map and prime ideals");
  fgl_opts(cls);
  leaf(cls, "cyclic-classify");
  auto* green = cyclic->add_subcommand("green", "Compare tensor tables of two formal group laws");
  fgl_opts(green);
  green->add_option("--fgl2", f.fgl2, "Second formal group law")->capture_default_str();
  leaf(green, "cyclic-green");
  auto* socle = cyclic->add_subcommand("socle", "Locate x^a (x) x^b in J_{a+1} (x) J_{b+1}");
  fgl_opts(socle);
  given.add("a", socle->add_option("--a", f.a, "a")->required());
  given.add("b", socle->add_option("--b", f.b, "b")->required());
  leaf(socle, "cyclic-socle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  nlohmann::json cfg{{"command", command},
                     {"type", f.type},
                     {"affine", f.affine},
                     {"p", f.p},
                     {"n", f.n},
                     {"fgl", f.fgl},
                     {"fgl2", f.fgl2},
                     {"format", f.format},
                     {"output", f.output},
                     {"cache_dir", f.cache_dir},
                     {"x", f.x},
                     {"y", f.y},
                     {"side", f.side},
                     {"algebra", f.algebra},
                     {"bound_check", f.bound_check},
                     {"cross_check", f.cross_check},
                     {"spherical", f.spherical},
                     {"generators", f.generators},
                     {"i_lo", f.i_lo},
                     {"i_hi", f.i_hi}};
  for (const auto& [key, opt] : given.opts) {
    if (!opt->count()) continue;
    if (key == "max_length") cfg[key] = f.max_length;
    if (key == "ell") cfg[key] = f.ell;
    if (key == "a") cfg[key] = f.a;
    if (key == "b") cfg[key] = f.b;
  }

  char* out = nullptr;
  char* err = nullptr;
  int exit_code = 2;
  tidal_run(cfg.dump().c_str(), &out, &err, &exit_code);
  if (out) std::fputs(out, stdout);
  if (err) std::fputs(err, stderr);
  tidal_string_free(out);
  tidal_string_free(err);
  return exit_code;
}
