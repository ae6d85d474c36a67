#include "mapenum/solver.hpp"

#include <algorithm>

#include "mapenum/error.hpp"

namespace mapenum {

namespace {

const WPolynomial kZero;

/// s^0 .. s^max_power, all at the order of s.
std::vector<TSeries> powers(const TSeries& s, int max_power) {
  std::vector<TSeries> out;
  out.push_back(TSeries::constant(s.order(), 1));
  for (int k = 1; k <= max_power; ++k) out.push_back(out.back() * s);
  return out;
}

Rat fact(int n) { return Rat(factorial(n)); }

/// Laurent polynomial in u with series coefficients; coefficient of u^e is
/// c[e - low].
struct LaurentU {
  int low = 0;
  std::vector<TSeries> c;

  TSeries at(int e, int order) const {
    const int i = e - low;
    if (i < 0 || i >= static_cast<int>(c.size())) return TSeries(order);
    return c[static_cast<std::size_t>(i)];
  }
};

/// Coefficients [u^e] V'(u + S + R/u) for each requested e.
std::map<int, TSeries> joukowsky_coefficients(const WeightSpec& V, const TSeries& R,
                                              const TSeries& S, std::initializer_list<int> exps) {
  const int order = R.order();
  std::map<int, TSeries> out;
  for (int e : exps) out.emplace(e, TSeries(order));
  LaurentU p{0, {TSeries::constant(order, 1)}};
  for (int k = 0; k < V.max_degree(); ++k) {
    // p = (u + S + R/u)^k; contributes v_{k+1} z^k.
    const auto& vk = V.v(k + 1);
    if (!vk.is_zero())
      for (int e : exps) out[e] += p.at(e, order) * vk;
    LaurentU next{p.low - 1, std::vector<TSeries>(p.c.size() + 2, TSeries(order))};
    for (std::size_t i = 0; i < p.c.size(); ++i) {
      next.c[i + 2] += p.c[i];
      next.c[i + 1] += p.c[i] * S;
      next.c[i] += p.c[i] * R;
    }
    p = std::move(next);
  }
  return out;
}

RSPair to_pair(const SeriesVector& v) { return {v[0], v[1]}; }

}  // namespace

WeightSpec::WeightSpec(const std::map<int, WPolynomial>& weights) {
  for (const auto& [n, w] : weights) {
    if (n < 1) throw Error(Errc::invalid_argument, "weight index must be >= 1");
    if (!w.is_zero()) weights_[n] = w;
  }
}

WeightSpec WeightSpec::formal(int max_degree) {
  std::map<int, WPolynomial> w;
  for (int n = 1; n <= max_degree; ++n) w[n] = WPolynomial::weight(n);
  return WeightSpec(w);
}

WeightSpec WeightSpec::numeric(const std::map<int, Rat>& weights) {
  std::map<int, WPolynomial> w;
  for (const auto& [n, value] : weights) w[n] = WPolynomial(value);
  return WeightSpec(w);
}

WeightSpec WeightSpec::quartic() { return numeric({{4, Rat(1)}}); }
WeightSpec WeightSpec::cubic() { return numeric({{3, Rat(1)}}); }

const WPolynomial& WeightSpec::v(int n) const {
  auto it = weights_.find(n);
  return it == weights_.end() ? kZero : it->second;
}

int WeightSpec::max_degree() const noexcept {
  return weights_.empty() ? 0 : weights_.rbegin()->first;
}

bool WeightSpec::only_even() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const auto& kv) { return kv.first % 2 == 0; });
}

RSPair solve_rs(const WeightSpec& V, int order) {
  if (order < 0) throw Error(Errc::invalid_argument, "order must be >= 0");
  const int D = V.max_degree();
  // Exact multinomial coefficients, indexed [n][j].
  std::map<std::pair<int, int>, Rat> cr, cs;
  for (const auto& [n, w] : V.weights()) {
    for (int j = 1; j <= n / 2; ++j)
      cr[{n, j}] = fact(n - 1) / (fact(j) * fact(j - 1) * fact(n - 2 * j));
    for (int j = 0; j <= (n - 1) / 2; ++j)
      cs[{n, j}] = fact(n - 1) / (fact(j) * fact(j) * fact(n - 2 * j - 1));
  }
  const TSeries t = TSeries::monomial(order, 1);
  auto system = [&](const SeriesVector& x) {
    const auto rp = powers(x[0], D / 2);
    const auto sp = powers(x[1], std::max(D - 1, 0));
    TSeries r_sum(order), s_sum(order);
    for (const auto& [key, c] : cr) {
      const auto [n, j] = key;
      r_sum += rp[static_cast<std::size_t>(j)] * sp[static_cast<std::size_t>(n - 2 * j)] * (V.v(n) * c);
    }
    for (const auto& [key, c] : cs) {
      const auto [n, j] = key;
      s_sum += rp[static_cast<std::size_t>(j)] * sp[static_cast<std::size_t>(n - 2 * j - 1)] *
               (V.v(n) * c);
    }
    return SeriesVector{t + t * r_sum, t * s_sum};
  };
  return to_pair(fixed_point(system, 2, order));
}

RSPair solve_rs_joukowsky(const WeightSpec& V, int order) {
  if (order < 0) throw Error(Errc::invalid_argument, "order must be >= 0");
  const TSeries t = TSeries::monomial(order, 1);
  auto system = [&](const SeriesVector& x) {
    auto c = joukowsky_coefficients(V, x[0], x[1], {0, -1});
    return SeriesVector{t + t * c[-1], t * c[0]};
  };
  return to_pair(fixed_point(system, 2, order));
}

TSeries rooted_map_gf(const WeightSpec& V, int order) {
  if (order < 0) throw Error(Errc::invalid_argument, "order must be >= 0");
  const auto [R, S] = solve_rs(V, order + 1);
  const int D = V.max_degree();
  const auto rp = powers(R, (D + 2) / 2);
  const auto sp = powers(S, D);
  TSeries num = R + S * S;
  for (const auto& [n, w] : V.weights()) {
    for (int j = 2; j <= (n + 2) / 2; ++j) {
      const Rat c = Rat(2 * n - 3 * j + 2) * fact(n - 1) /
                    (fact(j) * fact(j - 2) * fact(n - 2 * j + 2));
      if (c == 0) continue;
      num -= rp[static_cast<std::size_t>(j)] * sp[static_cast<std::size_t>(n - 2 * j + 2)] * (w * c);
    }
  }
  return num.divided_by_t();
}

TSeries rooted_map_gf_joukowsky(const WeightSpec& V, int order) {
  if (order < 0) throw Error(Errc::invalid_argument, "order must be >= 0");
  const auto [R, S] = solve_rs(V, order + 1);
  auto c = joukowsky_coefficients(V, R, S, {-2, -3});
  const TSeries two_s = S * WPolynomial(2);
  return (R + S * S - c[-3] - two_s * c[-2]).divided_by_t();
}

ResolventTable resolvent_w(const WeightSpec& V, int order, int n_max) {
  if (order < 0) throw Error(Errc::invalid_argument, "order must be >= 0");
  if (n_max < 0) throw Error(Errc::invalid_argument, "n_max must be >= 0");
  const int D = V.max_degree();
  // A map with k edges has root degree at most 2k, so W_n vanishes to order T
  // for n > 2T and the table below is exact.
  const int top = std::max(n_max, 2 * order);
  std::vector<TSeries> W(static_cast<std::size_t>(top + 1), TSeries(order));
  W[0][0] = 1;
  auto w_at = [&](int n, int k) -> const WPolynomial& {
    if (n > top) return kZero;
    return W[static_cast<std::size_t>(n)][k];
  };
  for (int k = 1; k <= order; ++k) {
    for (int n = 1; n <= top; ++n) {
      WPolynomial acc;
      for (int i = 0; i <= n - 2; ++i)
        for (int a = 0; a <= k - 1; ++a) {
          const auto& x = w_at(i, a);
          if (x.is_zero()) continue;
          const auto& y = w_at(n - 2 - i, k - 1 - a);
          if (!y.is_zero()) acc += x * y;
        }
      for (const auto& [m, v] : V.weights()) {
        const auto& y = w_at(n + m - 2, k - 1);
        if (!y.is_zero()) acc += v * y;
      }
      W[static_cast<std::size_t>(n)][k] = std::move(acc);
    }
  }

  ResolventTable table;
  table.W.assign(W.begin(), W.begin() + n_max + 1);
  const TSeries t = TSeries::monomial(order, 1);
  for (int p = 0; p <= std::max(D - 2, 0); ++p) {
    TSeries sum(order);
    for (int m = p + 2; m <= D; ++m)
      if (m - 2 - p <= top) sum += W[static_cast<std::size_t>(m - 2 - p)] * V.v(m);
    TSeries tp = -(t * sum);
    if (p == 0) tp[0] += WPolynomial(1);
    table.tP.push_back(std::move(tp));
  }
  return table;
}

std::map<int, TSeries> master_equation_residual(const WeightSpec& V, int order) {
  const int n_max = 2 * order;
  const auto table = resolvent_w(V, order, n_max);
  const TSeries t = TSeries::monomial(order, 1);
  std::map<int, TSeries> res;
  auto add = [&](int zpow, const TSeries& s) {
    auto it = res.try_emplace(zpow, order).first;
    it->second += s;
  };
  const auto& W = table.W;
  for (int a = 0; a <= n_max; ++a)
    for (int b = 0; b <= n_max; ++b) add(-a - b - 2, t * W[a] * W[b]);
  for (int n = 0; n <= n_max; ++n) add(-n, -W[n]);
  for (const auto& [m, v] : V.weights())
    for (int n = 0; n <= n_max; ++n) add(m - n - 2, t * W[n] * v);
  for (std::size_t p = 0; p < table.tP.size(); ++p) add(static_cast<int>(p), table.tP[p]);
  return res;
}

std::vector<Rat> tetravalent_counts(int k_max) {
  if (k_max < 0) throw Error(Errc::invalid_argument, "k_max must be >= 0");
  std::vector<Rat> out;
  for (int k = 0; k <= k_max; ++k) {
    BigInt three_k;
    mpz_ui_pow_ui(three_k.get_mpz_t(), 3, static_cast<unsigned long>(k));
    out.push_back(Rat(2 * factorial(2 * k) * three_k) / Rat(factorial(k) * factorial(k + 2)));
  }
  return out;
}

std::vector<Rat> trivalent_counts(int k_max) {
  if (k_max < 0) throw Error(Errc::invalid_argument, "k_max must be >= 0");
  std::vector<Rat> out;
  for (int k = 0; k <= k_max; ++k) {
    BigInt pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(2 * k + 1));
    out.push_back(Rat(pow2 * double_factorial(3 * k)) /
                  Rat(factorial(k + 2) * double_factorial(k)));
  }
  return out;
}

Rat eulerian_count(const DegreeProfile& profile) {
  if (profile.empty()) throw Error(Errc::invalid_profile, "empty profile");
  int edges = 0;
  int shifted = 2;
  Rat prod = 1;
  for (auto [degree, k] : profile.counts()) {
    if (degree % 2 != 0)
      throw Error(Errc::invalid_profile, "odd degree " + std::to_string(degree) + " in Eulerian profile");
    const int n = degree / 2;
    edges += n * k;
    shifted += (n - 1) * k;
    BigInt b;
    mpz_pow_ui(b.get_mpz_t(), binomial(2 * n - 1, n).get_mpz_t(), static_cast<unsigned long>(k));
    prod *= Rat(b) / Rat(factorial(k));
  }
  Rat out = Rat(2 * factorial(edges)) / Rat(factorial(shifted)) * prod;
  out.canonicalize();
  if (out.get_den() != 1) throw Error(Errc::internal, "non-integral Eulerian count " + to_string(out));
  return out;
}

std::vector<TSeries> two_point_r(int ell_max, int order) {
  if (ell_max < 1) throw Error(Errc::invalid_argument, "ell_max must be >= 1");
  if (order < 1) throw Error(Errc::invalid_argument, "order must be >= 1");
  const TSeries r_inf = solve_rs(WeightSpec::quartic(), order).R;
  const TSeries t = TSeries::monomial(order, 1);
  auto run = [&](int L) {
    auto system = [&](const SeriesVector& x) {
      SeriesVector out;
      for (int l = 1; l <= L; ++l) {
        const TSeries& prev = l == 1 ? TSeries(order) : x[static_cast<std::size_t>(l - 2)];
        const TSeries& next = l == L ? r_inf : x[static_cast<std::size_t>(l)];
        const TSeries& cur = x[static_cast<std::size_t>(l - 1)];
        out.push_back(t + t * cur * (prev + cur + next));
      }
      return out;
    };
    return fixed_point(system, static_cast<std::size_t>(L), order);
  };
  const int L = ell_max + order;
  const auto a = run(L);
  const auto b = run(L + 2);
  std::vector<TSeries> out;
  for (int l = 0; l < ell_max; ++l) {
    if (a[static_cast<std::size_t>(l)] != b[static_cast<std::size_t>(l)])
      throw Error(Errc::internal, "two-point series depends on the boundary at l = " + std::to_string(l + 1));
    out.push_back(a[static_cast<std::size_t>(l)]);
  }
  return out;
}

}  // namespace mapenum
