#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mapenum/rational.hpp"

namespace mapenum {

/// Variable labels. Positive labels n are the vertex weights v_n; label 0 is
/// the matrix size N (which may carry negative exponents); negative labels
/// are scratch markers used internally by fixed_point.
inline constexpr int kNLabel = 0;

/// prod_n x_n^{e_n} as a sorted (label, exponent) list with no zero exponent.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<std::pair<int, int>> factors);
  explicit Monomial(const std::map<int, int>& exponents);

  static Monomial variable(int label, int exponent = 1);

  const std::vector<std::pair<int, int>>& factors() const noexcept { return factors_; }
  int exponent(int label) const noexcept;
  bool is_one() const noexcept { return factors_.empty(); }
  /// Sum of exponents over positive labels.
  int weight_degree() const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  auto operator<=>(const Monomial&) const = default;

  std::string to_string() const;

 private:
  std::vector<std::pair<int, int>> factors_;
};

/// Sparse exact-rational polynomial in the weights v_n (and optionally N).
class WPolynomial {
 public:
  WPolynomial() = default;
  WPolynomial(const Rat& constant);  // NOLINT: implicit scalars keep formulas readable
  WPolynomial(long constant) : WPolynomial(Rat(constant)) {}  // NOLINT
  WPolynomial(const Monomial& monomial, const Rat& coefficient);

  /// The formal weight v_n.
  static WPolynomial weight(int n);
  /// N^exponent.
  static WPolynomial n_power(int exponent);

  const std::map<Monomial, Rat>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// The coefficient of the empty monomial.
  Rat constant_term() const;
  Rat coefficient(const Monomial& monomial) const;
  /// True when some monomial mentions `label`.
  bool mentions(int label) const noexcept;

  WPolynomial& operator+=(const WPolynomial& other);
  WPolynomial& operator-=(const WPolynomial& other);
  WPolynomial& operator*=(const Rat& scalar);
  /// Adds coefficient * monomial.
  void add_term(const Monomial& monomial, const Rat& coefficient);

  friend WPolynomial operator+(WPolynomial a, const WPolynomial& b) { return a += b; }
  friend WPolynomial operator-(WPolynomial a, const WPolynomial& b) { return a -= b; }
  friend WPolynomial operator-(WPolynomial a) { return a *= Rat(-1); }
  friend WPolynomial operator*(const WPolynomial& a, const WPolynomial& b);
  friend WPolynomial operator*(WPolynomial a, const Rat& s) { return a *= s; }
  friend WPolynomial operator*(const Rat& s, WPolynomial a) { return a *= s; }

  bool operator==(const WPolynomial& other) const { return terms_ == other.terms_; }

  /// "3/2*v1^2*v2 + N^-2", terms in monomial order; "0" for zero.
  std::string to_string() const;

 private:
  std::map<Monomial, Rat> terms_;
};

/// Substitutes every variable. Throws Errc::missing_value naming the first
/// label without a value.
Rat evaluate(const WPolynomial& p, const std::map<int, Rat>& values);

/// Substitutes only the labels present in `values`.
WPolynomial specialize(const WPolynomial& p, const std::map<int, Rat>& values);

}  // namespace mapenum
