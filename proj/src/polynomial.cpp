#include "mapenum/polynomial.hpp"

#include <algorithm>

#include "mapenum/error.hpp"

namespace mapenum {

namespace {

Rat rat_pow(const Rat& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(Errc::invalid_argument, "negative power of zero");
    Rat inv = 1 / base;
    return rat_pow(inv, -exponent);
  }
  Rat out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::string label_name(int label) {
  if (label == kNLabel) return "N";
  if (label > 0) return "v" + std::to_string(label);
  return "e" + std::to_string(-label);
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::initializer_list<std::pair<int, int>> factors) {
  std::map<int, int> exps;
  for (auto [label, e] : factors) exps[label] += e;
  for (auto [label, e] : exps)
    if (e != 0) factors_.emplace_back(label, e);
}

Monomial::Monomial(const std::map<int, int>& exponents) {
  for (auto [label, e] : exponents)
    if (e != 0) factors_.emplace_back(label, e);
}

Monomial Monomial::variable(int label, int exponent) { return Monomial{{label, exponent}}; }

int Monomial::exponent(int label) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), std::make_pair(label, INT32_MIN));
  return (it != factors_.end() && it->first == label) ? it->second : 0;
}

int Monomial::weight_degree() const noexcept {
  int d = 0;
  for (auto [label, e] : factors_)
    if (label > 0) d += e;
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      const int e = i->second + j->second;
      if (e != 0) out.factors_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (auto [label, e] : factors_) {
    if (!out.empty()) out += '*';
    out += label_name(label);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// WPolynomial

WPolynomial::WPolynomial(const Rat& constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

WPolynomial::WPolynomial(const Monomial& monomial, const Rat& coefficient) {
  if (coefficient != 0) terms_.emplace(monomial, coefficient);
}

WPolynomial WPolynomial::weight(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "weight label must be >= 1");
  return WPolynomial(Monomial::variable(n), Rat(1));
}

WPolynomial WPolynomial::n_power(int exponent) {
  return WPolynomial(Monomial::variable(kNLabel, exponent), Rat(1));
}

bool WPolynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat WPolynomial::constant_term() const { return coefficient(Monomial()); }

Rat WPolynomial::coefficient(const Monomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Rat(0) : it->second;
}

bool WPolynomial::mentions(int label) const noexcept {
  for (const auto& [m, c] : terms_)
    if (m.exponent(label) != 0) return true;
  return false;
}

void WPolynomial::add_term(const Monomial& monomial, const Rat& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

WPolynomial& WPolynomial::operator+=(const WPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

WPolynomial& WPolynomial::operator-=(const WPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

WPolynomial& WPolynomial::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [m, c] : terms_) c *= scalar;
  }
  return *this;
}

WPolynomial operator*(const WPolynomial& a, const WPolynomial& b) {
  WPolynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

std::string WPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string coeff = mapenum::to_string(c);
    if (!out.empty()) {
      if (coeff.front() == '-') {
        out += " - ";
        coeff.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    if (m.is_one()) {
      out += coeff;
    } else if (coeff == "1") {
      out += m.to_string();
    } else if (coeff == "-1") {
      out += "-" + m.to_string();
    } else {
      out += coeff + "*" + m.to_string();
    }
  }
  return out;
}

Rat evaluate(const WPolynomial& p, const std::map<int, Rat>& values) {
  Rat sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rat term = c;
    for (auto [label, e] : m.factors()) {
      auto it = values.find(label);
      if (it == values.end())
        throw Error(Errc::missing_value, "no value for " + label_name(label));
      term *= rat_pow(it->second, e);
    }
    sum += term;
  }
  return sum;
}

WPolynomial specialize(const WPolynomial& p, const std::map<int, Rat>& values) {
  WPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    Rat coeff = c;
    std::map<int, int> rest;
    for (auto [label, e] : m.factors()) {
      auto it = values.find(label);
      if (it == values.end()) {
        rest[label] = e;
      } else {
        coeff *= rat_pow(it->second, e);
      }
    }
    out.add_term(Monomial(rest), coeff);
  }
  return out;
}

}  // namespace mapenum
