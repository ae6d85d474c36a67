#include <random>
#include <set>

#include "doctest.h"
#include "mapenum/bijections.hpp"
#include "mapenum/error.hpp"
#include "mapenum/solver.hpp"

using namespace mapenum;

namespace {

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::internal;
}

WeightSpec random_spec(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> num(-2, 3);
  std::uniform_int_distribution<int> den(1, 2);
  std::map<int, Rat> w;
  for (int n = 1; n <= max_degree; ++n) w[n] = make_rat(num(rng), den(rng));
  return WeightSpec::numeric(w);
}

}  // namespace

TEST_CASE("blossom grammar examples") {
  CHECK(enumerate_blossom(TreeClass::S, 4, WeightSpec()).trees.empty());

  const auto cubic = enumerate_blossom(TreeClass::S, 2, WeightSpec({{3, WPolynomial::weight(3)}}));
  REQUIRE(cubic.trees.size() == 2);
  std::set<std::string> shapes;
  for (const auto& t : cubic.trees) shapes.insert(t.to_string());
  CHECK(shapes == std::set<std::string>{"S[W,B]", "S[B,W]"});
  CHECK(cubic.series[2] == WPolynomial::weight(3) * Rat(2));
  CHECK(cubic.series[1].is_zero());

  const auto r0 = enumerate_blossom(TreeClass::R, 6, WeightSpec());
  REQUIRE(r0.trees.size() == 1);
  CHECK(r0.trees[0].to_string() == "W");
  CHECK(r0.series == TSeries::monomial(6, 1));

  for (int order = 1; order <= 7; ++order) {
    const auto q = enumerate_blossom(TreeClass::S, order, WeightSpec::quartic());
    CHECK(q.trees.empty());
    CHECK(q.series.is_zero());
  }
  CHECK(error_code([] { enumerate_blossom(TreeClass::R, kMaxTreeOrder + 1, WeightSpec()); }) ==
        Errc::too_large);
}

TEST_CASE("blossom series equal the R, S solution") {
  for (TreeClass cls : {TreeClass::R, TreeClass::S}) {
    const auto formal = enumerate_blossom(cls, 5, WeightSpec::formal(6));
    const auto rs = solve_rs(WeightSpec::formal(6), 5);
    CHECK(formal.series == (cls == TreeClass::R ? rs.R : rs.S));
    for (const auto& t : formal.trees) CHECK(t.valid());
  }
  std::mt19937 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    const auto V = random_spec(rng, 1 + trial % 5);
    const auto rs = solve_rs(V, 5);
    CHECK(enumerate_blossom(TreeClass::R, 5, V).series == rs.R);
    CHECK(enumerate_blossom(TreeClass::S, 5, V).series == rs.S);
  }
  CHECK(enumerate_blossom(TreeClass::R, 9, WeightSpec::quartic()).series ==
        solve_rs(WeightSpec::quartic(), 9).R);
}

TEST_CASE("closure of small trees") {
  const auto smallest = BlossomTree::node(TreeClass::S, {BlossomTree::white(), BlossomTree::black()});
  const auto closed = closure_s(smallest);
  CHECK(euler_genus(closed.map).genus == 0);
  CHECK(degree_profile(closed.map, CellKind::vertex) == DegreeProfile({{1, 1}, {3, 1}}));
  CHECK(closed.map.edges() == 2);

  const auto path = closure(BlossomTree::white());
  CHECK(path.map.edges() == 1);
  CHECK(degree_profile(path.map, CellKind::vertex) == DegreeProfile({{1, 2}}));

  CHECK(error_code([] { closure_s(BlossomTree::white()); }) == Errc::wrong_class);
  CHECK(error_code([] {
          closure_s(BlossomTree::node(TreeClass::R, {BlossomTree::white(), BlossomTree::white()}));
        }) == Errc::wrong_class);
  CHECK(error_code([] {
          closure(BlossomTree::node(TreeClass::S, {BlossomTree::white()}));
        }) == Errc::invalid_argument);
}

TEST_CASE("closure is genus 0, degree preserving and injective") {
  const auto V = WeightSpec::formal(8);
  for (TreeClass cls : {TreeClass::S, TreeClass::R}) {
    const auto trees = enumerate_blossom(cls, 4, V).trees;
    std::set<std::pair<CanonicalCode, int>> keys;
    for (const auto& t : trees) {
      const auto closed = closure(t);
      CHECK(euler_genus(closed.map).genus == 0);
      CHECK(closed.map.edges() == t.weight());
      // Internal-node degrees plus the distinguished degree-1 vertices.
      auto expected = t.node_degrees().counts();
      expected[1] += cls == TreeClass::S ? 1 : 2;
      CHECK(degree_profile(closed.map, CellKind::vertex) == DegreeProfile(expected));
      CHECK(closed.map.sigma()(closed.root) == closed.root);
      if (cls == TreeClass::R) CHECK(closed.map.sigma()(closed.marked) == closed.marked);
      keys.insert(marked_code(closed, cls));
    }
    CHECK(keys.size() == trees.size());
  }
}

TEST_CASE("the unmarked closure alone is not injective") {
  const auto a = closure_s(BlossomTree::node(TreeClass::S, {BlossomTree::white(), BlossomTree::black()}));
  const auto b = closure_s(BlossomTree::node(TreeClass::S, {BlossomTree::black(), BlossomTree::white()}));
  CHECK(canonical_code(a.map) == canonical_code(b.map));
  CHECK(marked_code(a, TreeClass::S) != marked_code(b, TreeClass::S));
}

TEST_CASE("well-labeled trees") {
  const auto one = enumerate_well_labeled(1, 1);
  REQUIRE(one.trees.size() == 1);
  CHECK(one.trees[0].to_string() == "1");
  CHECK(one.series == TSeries::monomial(1, 1));

  CHECK(enumerate_well_labeled(1, 3).series[3] == WPolynomial(2));
  CHECK(enumerate_well_labeled(2, 3).series[3] == WPolynomial(3));
  for (const auto& t : enumerate_well_labeled(2, 7).trees) CHECK(t.valid());
  CHECK(error_code([] { enumerate_well_labeled(0, 3); }) == Errc::invalid_argument);
  CHECK(error_code([] { enumerate_well_labeled(1, kMaxTreeOrder + 1); }) == Errc::too_large);
}

TEST_CASE("well-labeled series satisfy the two-point recursion") {
  const int order = 7;
  std::vector<TSeries> r{TSeries(order)};
  for (int ell = 1; ell <= 6; ++ell) r.push_back(enumerate_well_labeled(ell, order).series);
  const TSeries t = TSeries::monomial(order, 1);
  for (int ell = 1; ell <= 5; ++ell)
    CHECK(r[ell] == t + t * r[ell] * (r[ell - 1] + r[ell] + r[ell + 1]));

  const auto solved = two_point_r(5, order);
  for (int ell = 1; ell <= 5; ++ell) CHECK(solved[ell - 1] == r[ell]);
}
