#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "mapenum/combmap.hpp"
#include "mapenum/error.hpp"
#include "mapenum/oracle.hpp"

using namespace mapenum;

namespace {

CombMap fig1_map() {
  return make_map(Permutation::parse("(1 2)(3 4 5)(6 7 8 9)(10)", 10),
                  Permutation::parse("(1 3)(2 7)(4 6)(5 9)(8 10)", 10));
}
CombMap loop_map() { return make_map(Permutation::parse("(1 2)"), Permutation::parse("(1 2)")); }
CombMap path_map() { return make_map(Permutation::identity(2), Permutation::parse("(1 2)")); }
CombMap torus_map() {
  return make_map(Permutation::parse("(1 2 3 4)"), Permutation::parse("(1 3)(2 4)"));
}

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::internal;
}

// Test-only oracle: count rho in S_p commuting with sigma and alpha by brute force.
long brute_force_automorphisms(const CombMap& map) {
  std::vector<int> rho(static_cast<std::size_t>(map.half_edges()));
  std::iota(rho.begin(), rho.end(), 1);
  long count = 0;
  do {
    bool ok = true;
    for (int i = 1; ok && i <= map.half_edges(); ++i) {
      const int ri = rho[static_cast<std::size_t>(i - 1)];
      ok = rho[static_cast<std::size_t>(map.sigma()(i) - 1)] == map.sigma()(ri) &&
           rho[static_cast<std::size_t>(map.alpha()(i) - 1)] == map.alpha()(ri);
    }
    if (ok) ++count;
  } while (std::next_permutation(rho.begin(), rho.end()));
  return count;
}

Permutation random_permutation(int p, std::mt19937& rng) {
  std::vector<int> images(static_cast<std::size_t>(p));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

}  // namespace

TEST_CASE("compose") {
  const auto q = Permutation::parse("(1 3)(2 4)");
  CHECK(compose(Permutation::identity(4), q) == q);
  CHECK(compose(Permutation::parse("(1 2 3 4)"), q) == Permutation::parse("(1 4 3 2)"));
  const auto p = Permutation::parse("(1 5 2)(3 4)", 6);
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(error_code([&] { compose(p, q); }) == Errc::invalid_argument);
}

TEST_CASE("permutation validation and notation") {
  CHECK(error_code([] { Permutation({1, 1, 2}); }) == Errc::invalid_argument);
  CHECK(error_code([] { Permutation::parse("(1 2"); }) == Errc::parse);
  const auto p = Permutation::parse("(3 4 5)(1 2)", 6);
  CHECK(p.to_cycle_string() == "(1 2)(3 4 5)(6)");
  CHECK(p.cycle_type() == std::vector<int>{1, 2, 3});
  CHECK(p.cycle_count() == 3);
}

TEST_CASE("make_map") {
  CHECK_NOTHROW(fig1_map());
  CHECK_NOTHROW(path_map());
  CHECK(error_code([] {
          make_map(Permutation::identity(4), Permutation::parse("(1 2)(3 4)"));
        }) == Errc::violates_b);
  CHECK(error_code([] {
          make_map(Permutation::parse("(1 2 3 4)"), Permutation::parse("(1 2)", 4));
        }) == Errc::violates_a);
  CHECK(error_code([] {
          make_map(Permutation::parse("(1 2 3)"), Permutation::parse("(1 2 3)"));
        }) == Errc::invalid_size);
  CHECK(error_code([] {
          make_map(Permutation::identity(3), Permutation::parse("(1 2)", 3));
        }) == Errc::invalid_size);
}

TEST_CASE("euler_genus") {
  const auto fig1 = euler_genus(fig1_map());
  CHECK(fig1.vertices == 4);
  CHECK(fig1.edges == 5);
  CHECK(fig1.faces == 3);
  CHECK(fig1.chi == 2);
  CHECK(fig1.genus == 0);

  const auto loop = euler_genus(loop_map());
  CHECK(loop.chi == 2);
  CHECK(loop.genus == 0);

  const auto torus = euler_genus(torus_map());
  CHECK(torus_map().phi() == Permutation::parse("(1 4 3 2)"));
  CHECK(torus.chi == 0);
  CHECK(torus.genus == 1);
}

TEST_CASE("dual") {
  const auto d = dual(loop_map());
  CHECK(d.sigma().is_identity());
  CHECK(d.alpha() == Permutation::parse("(1 2)"));
  CHECK(canonical_code(d) == canonical_code(path_map()));
  CHECK(degree_profile(dual(fig1_map()), CellKind::vertex) ==
        degree_profile(fig1_map(), CellKind::face));
}

TEST_CASE("degree_profile") {
  CHECK(degree_profile(fig1_map(), CellKind::vertex) ==
        DegreeProfile({{1, 1}, {2, 1}, {3, 1}, {4, 1}}));
  CHECK(degree_profile(loop_map(), CellKind::vertex) == DegreeProfile({{2, 1}}));
  CHECK(degree_profile(loop_map(), CellKind::face) == DegreeProfile({{1, 2}}));
  CHECK(degree_profile(path_map(), CellKind::vertex) == DegreeProfile({{1, 2}}));
  CHECK(DegreeProfile::parse("4:1, 3:2").to_string() == "3:2,4:1");
  CHECK(error_code([] { DegreeProfile::parse("4"); }) == Errc::parse);
}

TEST_CASE("automorphism_count") {
  CHECK(automorphism_count(loop_map()) == 2);
  CHECK(automorphism_count(path_map()) == 2);
  CHECK(automorphism_count(torus_map()) == 4);
  CHECK(automorphism_count(fig1_map()) == 1);
}

TEST_CASE("automorphism_count agrees with brute force over S_2m for m <= 3") {
  for (int m = 1; m <= 3; ++m)
    for (const auto& [map, mult] : enumerate_maps(m)) {
      REQUIRE(automorphism_count(map) == brute_force_automorphisms(map));
    }
}

TEST_CASE("canonical_code") {
  std::mt19937 rng(20261016);
  const CombMap maps[] = {fig1_map(), loop_map(), path_map(), torus_map()};
  for (const auto& map : maps) {
    const auto code = canonical_code(map);
    for (int trial = 0; trial < 20; ++trial) {
      const auto rho = random_permutation(map.half_edges(), rng);
      CHECK(canonical_code(relabel(map, rho)) == code);
    }
  }
  CHECK(canonical_code(loop_map()) != canonical_code(path_map()));

  // Exhaustive over S_2 x I_2: two classes.
  std::set<CanonicalCode> codes;
  for (const auto& sigma : {Permutation::identity(2), Permutation::parse("(1 2)")})
    codes.insert(canonical_code(make_map(sigma, Permutation::parse("(1 2)"))));
  CHECK(codes.size() == 2);
}

TEST_CASE("graph_distance") {
  CHECK(graph_distance(loop_map(), 0, 0) == 0);
  CHECK(graph_distance(path_map(), 0, 1) == 1);
  // The torus map has a single face, so its dual has a single vertex.
  const auto torus_dual = dual(torus_map());
  CHECK(torus_dual.sigma().cycle_count() == 1);
  CHECK(graph_distance(torus_dual, 0, 0) == 0);
  CHECK(graph_distance(dual(loop_map()), 0, 1) == 1);
  CHECK(graph_distance(fig1_map(), 0, 3) >= 1);
  CHECK(error_code([] { graph_distance(path_map(), 0, 2); }) == Errc::invalid_argument);
  CHECK(error_code([] { graph_distance(path_map(), -1, 0); }) == Errc::invalid_argument);
}

TEST_CASE("per-map invariants, exhaustive for m <= 4") {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& [map, mult] : enumerate_maps(m)) {
      const auto inv = euler_genus(map);
      REQUIRE(inv.chi % 2 == 0);
      REQUIRE(inv.genus >= 0);
      REQUIRE(degree_profile(map, CellKind::vertex).total_degree() == 2 * m);
      REQUIRE(degree_profile(map, CellKind::face).total_degree() == 2 * m);

      const auto d = dual(map);
      REQUIRE(euler_genus(d).genus == inv.genus);
      REQUIRE(degree_profile(d, CellKind::vertex) == degree_profile(map, CellKind::face));
      REQUIRE(degree_profile(d, CellKind::face) == degree_profile(map, CellKind::vertex));
      REQUIRE(canonical_code(dual(d)) == canonical_code(map));

      const long gamma = automorphism_count(map);
      REQUIRE((2 * m) % gamma == 0);

      // Gamma also equals the number of roots realising the canonical code.
      const auto best = canonical_code(map);
      long minimal_roots = 0;
      for (int r = 1; r <= 2 * m; ++r)
        if (rooted_code(map, r) == best) ++minimal_roots;
      REQUIRE(minimal_roots == gamma);
    }
  }
}
