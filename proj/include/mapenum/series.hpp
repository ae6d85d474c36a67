#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mapenum/polynomial.hpp"

namespace mapenum {

/// Power series in t with WPolynomial coefficients, truncated at order T:
/// coefficients of t^0 .. t^T are stored and everything beyond is unknown.
///
/// Arithmetic between series of different truncation orders is an error
/// rather than a silent re-truncation; use truncated() explicitly.
class TSeries {
 public:
  TSeries() : TSeries(0) {}
  explicit TSeries(int order);
  /// `coeffs` may be shorter than order + 1 (missing terms are zero) but not longer.
  TSeries(int order, std::vector<WPolynomial> coeffs);

  static TSeries constant(int order, const WPolynomial& value);
  /// value * t^power (zero when power > order).
  static TSeries monomial(int order, int power, const WPolynomial& value = WPolynomial(1));

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const WPolynomial> coefficients() const noexcept { return coeffs_; }
  const WPolynomial& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  WPolynomial& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }

  bool is_zero() const noexcept;
  /// Smallest k with a nonzero t^k coefficient; order() + 1 for the zero series.
  int valuation() const noexcept;

  TSeries& operator+=(const TSeries& other);
  TSeries& operator-=(const TSeries& other);
  TSeries& operator*=(const TSeries& other);
  TSeries& operator*=(const WPolynomial& scalar);

  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator-(TSeries a) { return a *= WPolynomial(-1); }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(TSeries a, const WPolynomial& s) { return a *= s; }
  friend TSeries operator*(const WPolynomial& s, TSeries a) { return a *= s; }

  bool operator==(const TSeries& other) const { return coeffs_ == other.coeffs_; }

  /// Keeps t^0 .. t^new_order; new_order must not exceed order().
  TSeries truncated(int new_order) const;
  /// Multiplies by t^k keeping the truncation order.
  TSeries shifted_up(int k) const;
  /// Divides by t; requires a zero constant term. The order drops by one.
  TSeries divided_by_t() const;

  /// True when every coefficient is a constant (no formal variable left).
  bool is_numeric() const noexcept;

  std::string to_string() const;

 private:
  std::vector<WPolynomial> coeffs_;
};

enum class SeriesOp { add, sub, mul };

/// Truncated ring arithmetic; Errc::invalid_argument on order mismatch.
TSeries arith(const TSeries& a, const TSeries& b, SeriesOp op);

/// The coefficient of t^m; Errc::out_of_range when m > order or m < 0.
const WPolynomial& coefficient(const TSeries& s, int m);

TSeries pow(const TSeries& s, int exponent);

/// exp(s) for s with zero constant term, via n E_n = sum_k k s_k E_{n-k}.
TSeries series_exp(const TSeries& s);
/// log(s) for s with constant term 1, via n L_n = n s_n - sum_k k L_k s_{n-k}.
TSeries series_log(const TSeries& s);

/// Termwise d/dt; the result has order T - 1 (order 0 input gives an order 0 zero).
TSeries derivative_t(const TSeries& s);

/// Substitutes exact values for the weights (and N, label 0, if present).
/// Errc::missing_value when a variable has no value.
Rat substitute_weights(const WPolynomial& p, const std::map<int, Rat>& values);
TSeries substitute_weights(const TSeries& s, const std::map<int, Rat>& values);

using SeriesVector = std::vector<TSeries>;
using SeriesSystem = std::function<SeriesVector(const SeriesVector&)>;

/// Solves X = system(X) to order `order` by iterating from the zero vector
/// order + 1 times.
///
/// The system must be a t-adic contraction: the order-k output coefficients
/// may only depend on input coefficients of order < k. This is checked on the
/// result by perturbing each component at every order with a fresh formal
/// marker and requiring the marker to stay out of the low-order output;
/// violations throw Errc::not_contractive. The returned vector is also
/// checked to be a fixed point (Errc::internal otherwise).
SeriesVector fixed_point(const SeriesSystem& system, std::size_t components, int order);

/// Genus-graded family of series F^(g), all truncated at the same order.
class GenusSeries {
 public:
  GenusSeries() = default;
  explicit GenusSeries(int order) : order_(order) {}

  int order() const noexcept { return order_; }
  const std::map<int, TSeries>& by_genus() const noexcept { return by_genus_; }
  /// F^(g); the zero series for genera never touched.
  TSeries genus(int g) const;
  void add(int g, int power, const WPolynomial& value);
  /// Largest genus with a nonzero series, or -1.
  int max_genus() const noexcept;

  /// sum_g N^(2-2g) F^(g), with N carried as the label-0 variable.
  TSeries n_expansion() const;

 private:
  int order_ = 0;
  std::map<int, TSeries> by_genus_;
};

}  // namespace mapenum
