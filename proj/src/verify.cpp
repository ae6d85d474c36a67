#include "mapenum/verify.hpp"

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "mapenum/bijections.hpp"
#include "mapenum/error.hpp"
#include "mapenum/solver.hpp"

namespace mapenum {

namespace {

std::string join(const TSeries& s) {
  std::string out;
  for (int k = 0; k <= s.order(); ++k) {
    if (k > 0) out += ",";
    out += s[k].to_string();
  }
  return out;
}

WeightSpec random_spec(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> num(-2, 2);
  std::uniform_int_distribution<int> den(1, 3);
  std::map<int, Rat> w;
  for (int n = 1; n <= max_degree; ++n) w[n] = make_rat(num(rng), den(rng));
  return WeightSpec::numeric(w);
}

/// Rooted count 2m/(2m)! * (labelled maps) for one genus and vertex profile.
Rat oracle_rooted(const DegreeProfile& profile, int genus, const EnumerationOptions& opts) {
  const int m = profile.total_degree() / 2;
  BigInt labelled = 0;
  for (const auto& [key, count] : map_census(m, {genus, profile}, opts)) labelled += count;
  return Rat(labelled * (2 * m)) / Rat(factorial(2 * m));
}

/// All profiles with total degree exactly p (parts >= 1).
std::vector<DegreeProfile> profiles_of(int p) {
  std::vector<DegreeProfile> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(DegreeProfile::from_parts(parts));
      return;
    }
    for (int part = std::min(rest, max_part); part >= 1; --part) {
      parts.push_back(part);
      rec(rest - part, part);
      parts.pop_back();
    }
  };
  rec(p, p);
  return out;
}

bool all_zero(const std::map<int, TSeries>& residual) {
  for (const auto& [p, s] : residual)
    if (!s.is_zero()) return false;
  return true;
}

std::vector<NamedCheck> wick_checks(const VerifyOptions&) {
  return {{"wick", "trace product (Tr M^3)^2", [](std::string& d) {
             const std::vector<int> ct{3, 3};
             const auto w = wick_cycle_expectation(ct);
             d = w.to_string() + " over " + std::to_string(w.pairings) + " pairings";
             return w.t_power == 3 && w.pairings == 15 && w.by_n_exponent.size() == 2 &&
                    w.coefficient(0) == 12 && w.coefficient(-2) == 3;
           }},
          {"wick", "odd trace products vanish", [](std::string& d) {
             const std::vector<int> ct{3};
             const std::vector<int> ct2{2, 1, 2};
             d = "Tr M^3 and Tr M^2 Tr M Tr M^2";
             return wick_cycle_expectation(ct).empty() && wick_cycle_expectation(ct2).empty();
           }}};
}

std::vector<NamedCheck> tetravalent_checks(const VerifyOptions& options) {
  const auto opts = options.enumeration;
  return {{"tetravalent", "rooted_map_gf closed form to t^10", [](std::string& d) {
             const auto e = rooted_map_gf(WeightSpec::quartic(), 10);
             const auto closed = tetravalent_counts(5);
             d = join(e);
             for (int k = 0; k <= 10; ++k)
               if (e[k] != WPolynomial(k % 2 == 0 ? closed[static_cast<std::size_t>(k / 2)] : Rat(0)))
                 return false;
             return closed == std::vector<Rat>{1, 2, 9, 54, 378, 2916};
           }},
          {"tetravalent", "oracle reproduces t^0..t^4", [opts](std::string& d) {
             auto o = opts;
             o.max_edges = std::max(o.max_edges, 4);
             const Rat two = oracle_rooted(DegreeProfile({{4, 1}}), 0, o);
             const Rat nine = oracle_rooted(DegreeProfile({{4, 2}}), 0, o);
             const auto e = rooted_map_gf(WeightSpec::quartic(), 4);
             d = "oracle 1,0," + to_string(two) + ",0," + to_string(nine);
             return e[0] == WPolynomial(1) && e[1].is_zero() && e[3].is_zero() && e[2] == WPolynomial(two) &&
                    e[4] == WPolynomial(nine) && two == 2 && nine == 9;
           }}};
}

std::vector<NamedCheck> trivalent_checks(const VerifyOptions& options) {
  const auto opts = options.enumeration;
  return {{"trivalent", "rooted_map_gf closed form to t^9", [](std::string& d) {
             const auto e = rooted_map_gf(WeightSpec::cubic(), 9);
             const auto closed = trivalent_counts(3);
             d = join(e);
             for (int k = 0; k <= 9; ++k)
               if (e[k] != WPolynomial(k % 3 == 0 ? closed[static_cast<std::size_t>(k / 3)] : Rat(0)))
                 return false;
             return closed == std::vector<Rat>{1, 4, 32, 336};
           }},
          {"trivalent", "oracle at 3 edges", [opts](std::string& d) {
             const Rat four = oracle_rooted(DegreeProfile({{3, 2}}), 0, opts);
             d = "oracle " + to_string(four);
             return four == 4;
           }},
          {"trivalent", "oracle at 6 edges", [opts](std::string& d) {
             auto o = opts;
             o.max_edges = kHardEdgeCap;
             const Rat n = oracle_rooted(DegreeProfile({{3, 4}}), 0, o);
             d = "oracle " + to_string(n);
             return n == 32;
           }}};
}

std::vector<NamedCheck> eulerian_checks(const VerifyOptions& options) {
  const auto opts = options.enumeration;
  return {{"eulerian", "eulerian_count matches oracle, total degree <= 8", [opts](std::string& d) {
             auto o = opts;
             o.max_edges = std::max(o.max_edges, 4);
             int checked = 0;
             for (int p = 2; p <= 8; p += 2)
               for (const auto& prof : profiles_of(p)) {
                 bool even = true;
                 for (auto [deg, k] : prof.counts()) even = even && deg % 2 == 0;
                 if (!even) continue;
                 const Rat formula = eulerian_count(prof);
                 const Rat oracle = oracle_rooted(prof, 0, o);
                 if (formula != oracle) {
                   d = prof.to_string() + ": " + to_string(formula) + " vs oracle " + to_string(oracle);
                   return false;
                 }
                 ++checked;
               }
             d = std::to_string(checked) + " profiles";
             return checked == 11;
           }}};
}

std::vector<NamedCheck> topological_checks(const VerifyOptions& options) {
  const auto opts = options.enumeration;
  return {{"topological", "N-exponent of every labelled map is 2 - 2g", [opts](std::string& d) {
             long maps = 0;
             for (int m = 1; m <= 4; ++m) {
               auto o = opts;
               o.max_edges = std::max(o.max_edges, 4);
               for (const auto& [map, mult] : enumerate_maps(m, {}, o)) {
                 // V - E + F from the cycle structure of the permutations.
                 const int n_exp = map.sigma().cycle_count() - map.alpha().cycle_count() +
                                   map.phi().cycle_count();
                 const int g = euler_genus(map).genus;
                 if (n_exp != 2 - 2 * g || g < 0) {
                   d = "map " + map.sigma().to_cycle_string() + " has exponent " + std::to_string(n_exp);
                   return false;
                 }
                 ++maps;
               }
             }
             d = std::to_string(maps) + " maps up to relabelling of alpha";
             return true;
           }},
          {"topological", "log of the Wick partition function has only N^(2-2g)", [opts](std::string& d) {
             const int T = 4;
             auto o = opts;
             o.max_edges = std::max(o.max_edges, T);
             TSeries z = TSeries::constant(T, 1);
             for (int m = 1; m <= T; ++m)
               for (const auto& k : profiles_of(2 * m)) {
                 const auto pc = partition_coefficient(k);
                 z[m] += pc.as_polynomial() * weight_monomial(k);
               }
             const auto log_z = series_log(z);
             for (int m = 0; m <= T; ++m)
               for (const auto& [mono, c] : log_z[m].terms()) {
                 const int e = mono.exponent(kNLabel);
                 if (e > 2 || e % 2 != 0) {
                   d = "term " + mono.to_string() + " at t^" + std::to_string(m);
                   return false;
                 }
               }
             const auto f = labelled_free_energy(T, o).n_expansion();
             d = "orders t^1..t^" + std::to_string(T);
             return log_z == f;
           }}};
}

std::vector<NamedCheck> connected_checks(const VerifyOptions& options) {
  const auto opts = options.enumeration;
  return {{"connected", "exp(free energy) equals partition coefficients, total degree <= 6",
           [opts](std::string& d) {
             const int T = 3;
             const auto xi = series_exp(labelled_free_energy(T, opts).n_expansion());
             int checked = 0;
             for (int p = 1; p <= 2 * T; ++p)
               for (const auto& k : profiles_of(p)) {
                 const auto pc = partition_coefficient(k);
                 WPolynomial expected;
                 if (!pc.empty()) expected = pc.as_polynomial();
                 WPolynomial got;
                 if (p % 2 == 0)
                   for (const auto& [mono, c] : xi[p / 2].terms()) {
                     std::map<int, int> w;
                     for (auto [label, e] : mono.factors())
                       if (label != kNLabel) w[label] = e;
                     if (DegreeProfile(w) == k) got += WPolynomial::n_power(mono.exponent(kNLabel)) * c;
                   }
                 if (got != expected) {
                   d = k.to_string() + ": " + got.to_string() + " vs " + expected.to_string();
                   return false;
                 }
                 ++checked;
               }
             d = std::to_string(checked) + " profiles";
             return true;
           }}};
}

std::vector<NamedCheck> symmetry_checks(const VerifyOptions& options) {
  const auto opts = options.enumeration;
  return {{"symmetry", "sum of (2m)!/gamma equals the labelled total, m <= 4", [opts](std::string& d) {
             auto o = opts;
             o.max_edges = std::max(o.max_edges, 4);
             for (int m = 1; m <= 4; ++m) {
               BigInt sum = 0;
               const auto classes = symmetry_census(m, {}, o);
               for (const auto& cls : classes) sum += factorial(2 * m) / cls.gamma;
               const BigInt total = labelled_count(map_census(m, {}, o));
               d += (m > 1 ? ", " : "") + std::to_string(classes.size()) + " classes at m=" + std::to_string(m);
               if (sum != total) return false;
             }
             return true;
           }},
          {"symmetry", "one-edge and genus-1 two-edge censuses", [opts](std::string& d) {
             const auto c1 = symmetry_census(1, {}, opts);
             const auto c2 = symmetry_census(2, {1, std::nullopt}, opts);
             d = std::to_string(c1.size()) + " one-edge classes, " + std::to_string(c2.size()) +
                 " genus-1 two-edge classes";
             return c1.size() == 2 && c1[0].gamma == 2 && c1[1].gamma == 2 && c2.size() == 1 &&
                    c2[0].gamma == 4;
           }}};
}

std::vector<NamedCheck> solver_checks(const VerifyOptions&) {
  return {{"solver", "solve_rs equals solve_rs_joukowsky on random weights", [](std::string& d) {
             std::mt19937 rng(2024);
             for (int trial = 0; trial < 10; ++trial) {
               const auto V = random_spec(rng, 1 + trial % 6);
               const auto a = solve_rs(V, 10);
               const auto b = solve_rs_joukowsky(V, 10);
               if (a.R != b.R || a.S != b.S) {
                 d = "trial " + std::to_string(trial);
                 return false;
               }
             }
             d = "10 weight specs to t^10";
             return true;
           }},
          {"solver", "rooted_map_gf equals the oracle for formal weights", [](std::string& d) {
             d = "t^0..t^4, v1..v8";
             return rooted_map_gf(WeightSpec::formal(8), 4) == rooted_counts(4).genus(0);
           }}};
}

std::vector<NamedCheck> master_checks(const VerifyOptions&) {
  return {{"master-equation", "residual vanishes", [](std::string& d) {
             d = "V = 0, quartic, cubic and 3 random specs to t^8";
             if (!all_zero(master_equation_residual(WeightSpec(), 8))) return false;
             if (!all_zero(master_equation_residual(WeightSpec::quartic(), 8))) return false;
             if (!all_zero(master_equation_residual(WeightSpec::cubic(), 8))) return false;
             std::mt19937 rng(7);
             for (int trial = 0; trial < 3; ++trial)
               if (!all_zero(master_equation_residual(random_spec(rng, 4), 8))) return false;
             return true;
           }}};
}

std::vector<NamedCheck> resolvent_checks(const VerifyOptions& options) {
  const auto opts = options.enumeration;
  return {{"resolvent", "W_n equals oracle rooted counts by root degree", [opts](std::string& d) {
             auto o = opts;
             o.max_edges = std::max(o.max_edges, 4);
             const auto table = resolvent_w(WeightSpec::formal(8), 4, 8);
             for (int n = 0; n <= 8; ++n)
               if (table.W[static_cast<std::size_t>(n)] != rooted_counts(4, n, o).genus(0)) {
                 d = "W_" + std::to_string(n);
                 return false;
               }
             d = "W_0..W_8 to t^4";
             return true;
           }},
          {"resolvent", "W_2 = t E", [](std::string& d) {
             const auto w = resolvent_w(WeightSpec::quartic(), 10, 2).W[2];
             const auto e = rooted_map_gf(WeightSpec::quartic(), 9);
             d = "quartic to t^10";
             return w.divided_by_t() == e;
           }}};
}

std::vector<NamedCheck> twopoint_checks(const VerifyOptions&) {
  return {{"twopoint", "R_1 / t equals the tetravalent series to t^10", [](std::string& d) {
             const auto r = two_point_r(1, 11);
             const auto e = rooted_map_gf(WeightSpec::quartic(), 10);
             d = join(r[0]);
             return r[0].divided_by_t() == e;
           }},
          {"twopoint", "R_l increases to the quartic R", [](std::string& d) {
             const int T = 11;
             const auto r = two_point_r(8, T);
             const auto r_inf = solve_rs(WeightSpec::quartic(), T).R;
             for (int k = 0; k <= T; ++k) {
               const Rat limit = evaluate(r_inf[k], {});
               for (std::size_t l = 0; l < r.size(); ++l) {
                 const Rat c = evaluate(r[l][k], {});
                 if (c > limit || (l > 0 && c < evaluate(r[l - 1][k], {}))) {
                   d = "t^" + std::to_string(k) + " at l=" + std::to_string(l + 1);
                   return false;
                 }
               }
               if (k % 2 == 0) continue;
               // A tree with e edges has depth <= e, so the boundary is felt iff l <= e.
               const int e = (k - 1) / 2;
               for (int l = 1; l <= static_cast<int>(r.size()); ++l) {
                 const bool stable = r[static_cast<std::size_t>(l - 1)][k] == r_inf[k];
                 if (stable != (l > e)) {
                   d = "t^" + std::to_string(k) + " at l=" + std::to_string(l);
                   return false;
                 }
               }
             }
             d = "l = 1..8, t^0..t^11";
             return true;
           }}};
}

std::vector<NamedCheck> bijection_checks(const VerifyOptions&) {
  return {{"bijections", "blossom series equal R and S", [](std::string& d) {
             std::mt19937 rng(99);
             for (int trial = 0; trial < 6; ++trial) {
               const auto V = random_spec(rng, 1 + trial % 5);
               const auto rs = solve_rs(V, 5);
               if (enumerate_blossom(TreeClass::R, 5, V).series != rs.R ||
                   enumerate_blossom(TreeClass::S, 5, V).series != rs.S) {
                 d = "trial " + std::to_string(trial);
                 return false;
               }
             }
             d = "6 weight specs to t^5";
             return true;
           }},
          {"bijections", "closure of S-trees is injective, planar and degree preserving", [](std::string& d) {
             const auto trees = enumerate_blossom(TreeClass::S, 4, WeightSpec::formal(8)).trees;
             std::set<std::pair<CanonicalCode, int>> keys;
             for (const auto& t : trees) {
               const auto closed = closure_s(t);
               auto expected = t.node_degrees().counts();
               ++expected[1];
               if (euler_genus(closed.map).genus != 0 ||
                   degree_profile(closed.map, CellKind::vertex) != DegreeProfile(expected)) {
                 d = t.to_string();
                 return false;
               }
               keys.insert(marked_code(closed, TreeClass::S));
             }
             d = std::to_string(trees.size()) + " trees";
             return keys.size() == trees.size();
           }},
          {"bijections", "well-labeled trees satisfy the two-point recursion to t^7", [](std::string& d) {
             const int T = 7;
             std::vector<TSeries> r{TSeries(T)};
             for (int l = 1; l <= 6; ++l) r.push_back(enumerate_well_labeled(l, T).series);
             const TSeries t = TSeries::monomial(T, 1);
             const auto solved = two_point_r(5, T);
             for (int l = 1; l <= 5; ++l) {
               const auto& x = r[static_cast<std::size_t>(l)];
               if (x != t + t * x * (r[static_cast<std::size_t>(l - 1)] + x + r[static_cast<std::size_t>(l + 1)]) ||
                   x != solved[static_cast<std::size_t>(l - 1)]) {
                 d = "l = " + std::to_string(l);
                 return false;
               }
             }
             d = "R_1 = " + join(r[1]);
             return true;
           }}};
}

using SuiteFn = std::vector<NamedCheck> (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"wick", wick_checks},
      {"tetravalent", tetravalent_checks},
      {"trivalent", trivalent_checks},
      {"eulerian", eulerian_checks},
      {"topological", topological_checks},
      {"connected", connected_checks},
      {"symmetry", symmetry_checks},
      {"solver", solver_checks},
      {"master-equation", master_checks},
      {"resolvent", resolvent_checks},
      {"twopoint", twopoint_checks},
      {"bijections", bijection_checks},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<NamedCheck> suite_checks(const std::string& suite, const VerifyOptions& options) {
  std::vector<NamedCheck> out;
  for (const auto& [name, fn] : suites()) {
    if (suite != "all" && suite != name) continue;
    auto checks = fn(options);
    out.insert(out.end(), checks.begin(), checks.end());
  }
  if (out.empty()) throw Error(Errc::invalid_argument, "unknown suite '" + suite + "'");
  return out;
}

std::vector<CheckResult> run_checks(const std::vector<NamedCheck>& checks) {
  std::vector<CheckResult> results;
  for (const auto& check : checks) {
    CheckResult r{check.suite, check.name, false, ""};
    try {
      r.passed = check.run(r.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

}  // namespace mapenum
