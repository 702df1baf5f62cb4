#include "tidal/cells.hpp"
#include "tidal/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using tidal::CellSide;
using tidal::CoxElt;
using tidal::CoxeterSystem;
using tidal::HeckeAlgebra;

namespace {

std::set<std::string> strs(const std::vector<CoxElt>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(x.str());
  return out;
}

std::vector<CoxElt> involutions(const CoxeterSystem& sys) {
  std::vector<CoxElt> out;
  for (const auto& x : sys.enumerate_ball(sys.longest_finite_length()))
    if (sys.inverse(x) == x) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("cells: finite cell counts") {
  struct Row {
    const char* label;
    std::size_t left, two_sided;
  };
  // type A: left cells are the involutions (RSK), two-sided cells the partitions
  for (const Row& r : {Row{"A1", 2, 2}, Row{"A2", 4, 3}, Row{"A3", 10, 5}, Row{"B2", 4, 3}, Row{"G2", 4, 3}}) {
    const auto sys = CoxeterSystem::build(r.label, false);
    HeckeAlgebra h(sys);
    const unsigned L = sys.longest_finite_length();
    const auto left = tidal::cell_partition(h, CellSide::Left, L);
    const auto right = tidal::cell_partition(h, CellSide::Right, L);
    const auto two = tidal::cell_partition(h, CellSide::TwoSided, L);
    CAPTURE(r.label);
    CHECK(left.classes.size() == r.left);
    CHECK(right.classes.size() == r.left);
    CHECK(two.classes.size() == r.two_sided);
    CHECK(std::all_of(left.certified.begin(), left.certified.end(), [](bool b) { return b; }));
  }
}

TEST_CASE("cells: right cells are inverses of left cells") {
  const auto sys = CoxeterSystem::build("A3", false);
  HeckeAlgebra h(sys);
  const auto left = tidal::cell_partition(h, CellSide::Left, 6);
  const auto right = tidal::cell_partition(h, CellSide::Right, 6);
  for (const auto& cls : left.classes) {
    std::vector<CoxElt> inv;
    for (const auto& x : cls) inv.push_back(sys.inverse(x));
    const std::size_t j = right.class_of(inv.front());
    CHECK(strs(right.classes[j]) == strs(inv));
  }
}

TEST_CASE("cells: a-function of finite A2 and A3") {
  const auto a2 = CoxeterSystem::build("A2", false);
  HeckeAlgebra h2(a2);
  CHECK(tidal::a_function(h2, a2.element(""), 3).value == 0);
  CHECK(tidal::a_function(h2, a2.element("1-2"), 3).value == 1);
  CHECK(tidal::a_function(h2, a2.element("1-2-1"), 3).value == 3);
  // in type A, a is n(lambda') on the two-sided cell: 0, 1, 2, 3, 6 for S4
  const auto a3 = CoxeterSystem::build("A3", false);
  HeckeAlgebra h3(a3);
  std::set<int> values;
  for (const auto& [x, a] : tidal::a_function(h3, 6)) {
    CHECK(a.exact);
    values.insert(a.value);
  }
  CHECK(values == std::set<int>{0, 1, 2, 3, 6});
}

TEST_CASE("cells: Duflo elements in type A are the involutions") {
  for (const char* label : {"A2", "A3"}) {
    const auto sys = CoxeterSystem::build(label, false);
    HeckeAlgebra h(sys);
    CHECK(strs(tidal::duflo_elements(h, sys.longest_finite_length())) == strs(involutions(sys)));
  }
}

TEST_CASE("cells: Duflo elements of B2 and G2") {
  for (const char* label : {"B2", "G2"}) {
    const auto sys = CoxeterSystem::build(label, false);
    HeckeAlgebra h(sys);
    const CoxElt w0 = sys.enumerate_ball(6).back();
    CHECK(strs(tidal::duflo_elements(h, 6)) == std::set<std::string>{"", "1", "2", w0.str()});
  }
}

TEST_CASE("cells: check_P passes on every finite type") {
  for (const char* label : {"A1", "A2", "A3", "B2", "G2"}) {
    const auto sys = CoxeterSystem::build(label, false);
    HeckeAlgebra h(sys);
    const auto rep = tidal::check_P(h);
    CAPTURE(label);
    CHECK(rep.all_pass());
    CHECK(rep.one_per_left_cell);
    CHECK(rep.one_per_right_cell);
    for (const auto& [name, failures] : rep.failures) CHECK_MESSAGE(failures.empty(), name);
  }
  const auto aff = CoxeterSystem::build("A1", true);
  HeckeAlgebra ha(aff);
  CHECK_THROWS_AS(tidal::check_P(ha), tidal::InvalidArgument);
}

TEST_CASE("cells: Delta is the valuation of h_{e,x}") {
  const auto sys = CoxeterSystem::build("B2", false);
  HeckeAlgebra h(sys);
  for (const auto& x : sys.enumerate_ball(4)) {
    const auto d = tidal::delta_function(h, sys.intern(x));
    REQUIRE(d.has_value());
    CHECK(*d == static_cast<int>(x.length()));
  }
}

TEST_CASE("cells: affine A1 has two two-sided cells") {
  const auto sys = CoxeterSystem::build("A1", true);
  HeckeAlgebra h(sys);
  const auto two = tidal::cell_partition(h, CellSide::TwoSided, 10);
  std::set<std::size_t> within_margin;
  for (const auto& x : sys.enumerate_ball(static_cast<unsigned>(two.stability_margin)))
    within_margin.insert(two.class_of(x));
  CHECK(within_margin.size() == 2);
  CHECK(two.class_of(sys.element("0-1")) == two.class_of(sys.element("1-0-1-0")));
  CHECK(two.class_of(sys.identity()) != two.class_of(sys.element("0")));
  CHECK_THROWS_AS(two.class_of(sys.element("0-1-0-1-0-1-0-1-0-1-0-1")), tidal::InvalidArgument);
}
