#pragma once

#include <map>
#include <vector>

#include "mapenum/combmap.hpp"
#include "mapenum/polynomial.hpp"
#include "mapenum/rational.hpp"
#include "mapenum/series.hpp"

namespace mapenum {

/// Vertex weights v_n of the potential V(x) = sum_n (v_n / n) x^n. Only
/// finitely many are nonzero.
class WeightSpec {
 public:
  WeightSpec() = default;
  /// Zero entries are dropped.
  explicit WeightSpec(const std::map<int, WPolynomial>& weights);

  /// v_n = the formal variable v_n for n = 1..max_degree.
  static WeightSpec formal(int max_degree);
  static WeightSpec numeric(const std::map<int, Rat>& weights);
  /// v_4 = 1 (tetravalent maps).
  static WeightSpec quartic();
  /// v_3 = 1 (trivalent maps).
  static WeightSpec cubic();

  const std::map<int, WPolynomial>& weights() const noexcept { return weights_; }
  /// Zero when absent.
  const WPolynomial& v(int n) const;
  /// Largest n with v_n != 0; 0 when there are no weights.
  int max_degree() const noexcept;
  bool only_even() const;

 private:
  std::map<int, WPolynomial> weights_;
};

struct RSPair {
  TSeries R;
  TSeries S;
};

/// R and S to order T from the multinomial form of the planar system, via
/// fixed_point.
RSPair solve_rs(const WeightSpec& V, int order);

/// The same fixed point through the coefficients of u^0 and u^-1 in
/// V'(u + S + R/u).
RSPair solve_rs_joukowsky(const WeightSpec& V, int order);

/// Rooted planar maps, t per edge and v_n per vertex of degree n, to order
/// T. The empty map contributes the constant term 1.
TSeries rooted_map_gf(const WeightSpec& V, int order);

/// E^(0) from the Laurent coefficients u^-2, u^-3 of V'(u + S + R/u); an
/// independent check of rooted_map_gf.
TSeries rooted_map_gf_joukowsky(const WeightSpec& V, int order);

struct ResolventTable {
  /// W_0 .. W_{n_max}; W_n counts rooted planar maps with root degree n and
  /// no weight on the root vertex. W_0 = 1.
  std::vector<TSeries> W;
  /// t * P(z) as coefficients of z^0 .. z^{D-2}. P itself carries a 1/t
  /// in its constant term.
  std::vector<TSeries> tP;
};

/// Tutte's root-edge recursion solved order by order in t.
ResolventTable resolvent_w(const WeightSpec& V, int order, int n_max);

/// t * (W(z)^2 - (z/t - V'(z)) W(z) + P(z)) with W(z) = sum_n W_n z^{-n-1},
/// keyed by power of z. Every W_n that is nonzero to order T is included,
/// so all coefficients are determined and must vanish.
std::map<int, TSeries> master_equation_residual(const WeightSpec& V, int order);

/// 2 (2k)! 3^k / (k! (k+2)!), k = 0..k_max.
std::vector<Rat> tetravalent_counts(int k_max);
/// 2^{2k+1} (3k)!! / ((k+2)! k!!), k = 0..k_max.
std::vector<Rat> trivalent_counts(int k_max);

/// Rooted planar maps with vertex degrees given by `profile` (all even):
/// 2 (sum n k_n)! / (sum (n-1) k_n + 2)! prod_n binom(2n-1, n)^{k_n} / k_n!
/// with k_n the number of vertices of degree 2n. Errc::invalid_profile on an
/// odd or empty profile.
Rat eulerian_count(const DegreeProfile& profile);

/// R_1..R_{ell_max} to order T for the quartic two-point recursion
/// R_l = t + t R_l (R_{l-1} + R_l + R_{l+1}), R_0 = 0.
std::vector<TSeries> two_point_r(int ell_max, int order);

}  // namespace mapenum
