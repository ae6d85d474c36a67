#include <random>

#include "doctest.h"
#include "mapenum/error.hpp"
#include "mapenum/oracle.hpp"
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

TSeries numbers(int order, const std::vector<long>& c) {
  TSeries s(order);
  for (std::size_t k = 0; k < c.size(); ++k) s[static_cast<int>(k)] = WPolynomial(c[k]);
  return s;
}

WeightSpec random_spec(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> num(-2, 2);
  std::uniform_int_distribution<int> den(1, 3);
  std::map<int, Rat> w;
  for (int n = 1; n <= max_degree; ++n) w[n] = make_rat(num(rng), den(rng));
  return WeightSpec::numeric(w);
}

}  // namespace

TEST_CASE("WeightSpec") {
  CHECK(WeightSpec().max_degree() == 0);
  CHECK(WeightSpec::formal(5).max_degree() == 5);
  CHECK(WeightSpec::numeric({{3, Rat(0)}, {2, Rat(1)}}).max_degree() == 2);
  CHECK(WeightSpec::quartic().only_even());
  CHECK_FALSE(WeightSpec::cubic().only_even());
  CHECK(WeightSpec::cubic().v(4).is_zero());
}

TEST_CASE("solve_rs worked families") {
  const auto q = solve_rs(WeightSpec::quartic(), 9);
  CHECK(q.R == numbers(9, {0, 1, 0, 3, 0, 18, 0, 135, 0, 1134}));
  CHECK(q.S.is_zero());

  const auto c = solve_rs(WeightSpec::cubic(), 8);
  CHECK(c.S == numbers(8, {0, 0, 2, 0, 0, 12, 0, 0, 128}));
  // R = t + 2tRS
  const TSeries t = TSeries::monomial(8, 1);
  CHECK(c.R == t + t * c.R * c.S * WPolynomial(2));

  const auto z = solve_rs(WeightSpec(), 5);
  CHECK(z.R == TSeries::monomial(5, 1));
  CHECK(z.S.is_zero());
  CHECK(error_code([] { solve_rs(WeightSpec(), -1); }) == Errc::invalid_argument);
}

TEST_CASE("solve_rs_joukowsky agrees with solve_rs") {
  const auto a = solve_rs(WeightSpec::quartic(), 12);
  const auto b = solve_rs_joukowsky(WeightSpec::quartic(), 12);
  CHECK(a.R == b.R);
  CHECK(a.S == b.S);
  CHECK(solve_rs_joukowsky(WeightSpec(), 4).R == TSeries::monomial(4, 1));

  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto V = random_spec(rng, 1 + trial % 6);
    const auto x = solve_rs(V, 10);
    const auto y = solve_rs_joukowsky(V, 10);
    CHECK(x.R == y.R);
    CHECK(x.S == y.S);
  }
  const auto f1 = solve_rs(WeightSpec::formal(5), 5);
  const auto f2 = solve_rs_joukowsky(WeightSpec::formal(5), 5);
  CHECK(f1.R == f2.R);
  CHECK(f1.S == f2.S);
}

TEST_CASE("R and S count planar maps with distinguished leaves") {
  const auto rs = solve_rs(WeightSpec::formal(8), 4);
  CHECK(rs.R == two_leaf_counts(4));
  CHECK(rs.S == leaf_face_counts(4));
}

TEST_CASE("rooted_map_gf worked families") {
  CHECK(rooted_map_gf(WeightSpec::quartic(), 10) ==
        numbers(10, {1, 0, 2, 0, 9, 0, 54, 0, 378, 0, 2916}));
  CHECK(rooted_map_gf(WeightSpec::cubic(), 9) == numbers(9, {1, 0, 0, 4, 0, 0, 32, 0, 0, 336}));
  CHECK(rooted_map_gf(WeightSpec(), 3) == numbers(3, {1}));

  const auto tetra = tetravalent_counts(5);
  const auto e4 = rooted_map_gf(WeightSpec::quartic(), 10);
  for (int k = 0; k <= 5; ++k) CHECK(e4[2 * k] == WPolynomial(tetra[static_cast<std::size_t>(k)]));
  const auto tri = trivalent_counts(3);
  const auto e3 = rooted_map_gf(WeightSpec::cubic(), 9);
  for (int k = 0; k <= 3; ++k) CHECK(e3[3 * k] == WPolynomial(tri[static_cast<std::size_t>(k)]));
}

TEST_CASE("closed-form families") {
  CHECK(tetravalent_counts(3) == std::vector<Rat>{1, 2, 9, 54});
  CHECK(trivalent_counts(2) == std::vector<Rat>{1, 4, 32});
}

TEST_CASE("rooted_map_gf matches the brute-force oracle for general weights") {
  const auto e = rooted_map_gf(WeightSpec::formal(8), 4);
  CHECK(e == rooted_counts(4).genus(0));
  CHECK(rooted_map_gf_joukowsky(WeightSpec::formal(8), 4) == e);
}

TEST_CASE("rooted_map_gf is 2t dF/dt") {
  const auto e = rooted_map_gf(WeightSpec::formal(8), 4);
  const auto f = labelled_free_energy(4).genus(0);
  for (int m = 1; m <= 4; ++m) CHECK(e[m] == f[m] * Rat(2 * m));
}

TEST_CASE("both E forms agree on random weights") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    const auto V = random_spec(rng, 2 + trial % 5);
    CHECK(rooted_map_gf(V, 8) == rooted_map_gf_joukowsky(V, 8));
  }
}

TEST_CASE("resolvent_w") {
  const auto cat = resolvent_w(WeightSpec(), 4, 8);
  const long catalan[] = {1, 1, 2, 5, 14};
  for (int n = 0; n <= 4; ++n) CHECK(cat.W[2 * n] == TSeries::monomial(4, n, WPolynomial(catalan[n])));
  for (int n = 1; n <= 7; n += 2) CHECK(cat.W[n].is_zero());
  CHECK(cat.W[2] == TSeries::monomial(4, 1));
  CHECK(cat.W[4] == TSeries::monomial(4, 2, WPolynomial(2)));

  const auto even = resolvent_w(WeightSpec::numeric({{2, 1}, {4, 3}, {6, Rat(1, 2)}}), 6, 7);
  for (int n = 1; n <= 7; n += 2) CHECK(even.W[n].is_zero());

  // W_2 is t times the rooted-map series.
  const auto quart = resolvent_w(WeightSpec::quartic(), 9, 2);
  TSeries tE(9);
  const auto e = rooted_map_gf(WeightSpec::quartic(), 8);
  for (int k = 0; k <= 8; ++k) tE[k + 1] = e[k];
  CHECK(quart.W[2] == tE);
}

TEST_CASE("W_n matches oracle rooted counts by root degree") {
  const auto table = resolvent_w(WeightSpec::formal(8), 4, 8);
  CHECK(table.W[0] == TSeries::constant(4, 1));
  for (int n = 1; n <= 8; ++n) CHECK_MESSAGE(table.W[n] == rooted_counts(4, n).genus(0), n);

  const auto e = rooted_map_gf(WeightSpec::formal(8), 3);
  TSeries tE(4);
  for (int k = 0; k <= 3; ++k) tE[k + 1] = e[k];
  CHECK(table.W[2] == tE);
}

TEST_CASE("master equation residual vanishes") {
  auto all_zero = [](const std::map<int, TSeries>& res) {
    for (const auto& [p, s] : res)
      if (!s.is_zero()) return false;
    return !res.empty();
  };
  CHECK(all_zero(master_equation_residual(WeightSpec(), 8)));
  CHECK(all_zero(master_equation_residual(WeightSpec::quartic(), 8)));
  CHECK(all_zero(master_equation_residual(WeightSpec::formal(3), 4)));
  std::mt19937 rng(23);
  for (int trial = 0; trial < 3; ++trial) CHECK(all_zero(master_equation_residual(random_spec(rng, 4), 6)));
}

TEST_CASE("tP is a polynomial of degree D - 2") {
  const auto table = resolvent_w(WeightSpec::numeric({{1, 1}, {5, 2}}), 4, 6);
  CHECK(table.tP.size() == 4);
  CHECK(table.tP[0][0] == WPolynomial(1));
}

TEST_CASE("eulerian_count") {
  CHECK(eulerian_count(DegreeProfile({{2, 1}})) == Rat(1));
  CHECK(eulerian_count(DegreeProfile({{4, 1}})) == Rat(2));
  CHECK(error_code([] { eulerian_count(DegreeProfile({{3, 2}})); }) == Errc::invalid_profile);
  CHECK(error_code([] { eulerian_count(DegreeProfile()); }) == Errc::invalid_profile);

  // Against the oracle for all even profiles with total degree <= 8.
  const auto e = rooted_counts(4).genus(0);
  int checked = 0;
  for (int m = 1; m <= 4; ++m) {
    for (const auto& [mono, c] : e[m].terms()) {
      std::map<int, int> counts;
      bool even = true;
      for (auto [label, exp] : mono.factors()) {
        counts[label] = exp;
        even = even && label % 2 == 0;
      }
      if (!even) continue;
      CHECK(eulerian_count(DegreeProfile(counts)) == c);
      ++checked;
    }
  }
  CHECK(checked == 11);
}

TEST_CASE("two_point_r") {
  const auto r = two_point_r(4, 9);
  REQUIRE(r.size() == 4);
  const auto e4 = rooted_map_gf(WeightSpec::quartic(), 8);
  CHECK(r[0].divided_by_t() == e4);

  const auto r_inf = solve_rs(WeightSpec::quartic(), 9).R;
  for (int k = 0; k <= 9; ++k) {
    for (std::size_t l = 1; l < r.size(); ++l)
      CHECK(evaluate(r[l][k], {}) >= evaluate(r[l - 1][k], {}));
    CHECK(evaluate(r.back()[k], {}) <= evaluate(r_inf[k], {}));
  }
  // Stabilization: l large relative to the order.
  const auto far = two_point_r(6, 5);
  CHECK(far[5] == r_inf.truncated(5));
  CHECK(error_code([] { two_point_r(0, 3); }) == Errc::invalid_argument);
}
