#include "mapenum/series.hpp"

#include <algorithm>

#include "mapenum/error.hpp"

namespace mapenum {

namespace {

void require_same_order(const TSeries& a, const TSeries& b, const char* what) {
  if (a.order() != b.order())
    throw Error(Errc::invalid_argument, std::string(what) + ": truncation orders " +
                                            std::to_string(a.order()) + " and " +
                                            std::to_string(b.order()) + " differ");
}

}  // namespace

TSeries::TSeries(int order) {
  if (order < 0) throw Error(Errc::invalid_argument, "negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order + 1));
}

TSeries::TSeries(int order, std::vector<WPolynomial> coeffs) : TSeries(order) {
  if (coeffs.size() > coeffs_.size())
    throw Error(Errc::invalid_argument, "more coefficients than the truncation order allows");
  std::move(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

TSeries TSeries::constant(int order, const WPolynomial& value) {
  return monomial(order, 0, value);
}

TSeries TSeries::monomial(int order, int power, const WPolynomial& value) {
  TSeries s(order);
  if (power < 0) throw Error(Errc::invalid_argument, "negative power of t");
  if (power <= order) s[power] = value;
  return s;
}

bool TSeries::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
}

int TSeries::valuation() const noexcept {
  for (int k = 0; k <= order(); ++k)
    if (!(*this)[k].is_zero()) return k;
  return order() + 1;
}

bool TSeries::is_numeric() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_constant(); });
}

TSeries& TSeries::operator+=(const TSeries& other) {
  require_same_order(*this, other, "add");
  for (int k = 0; k <= order(); ++k) (*this)[k] += other[k];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& other) {
  require_same_order(*this, other, "sub");
  for (int k = 0; k <= order(); ++k) (*this)[k] -= other[k];
  return *this;
}

TSeries& TSeries::operator*=(const TSeries& other) {
  *this = *this * other;
  return *this;
}

TSeries& TSeries::operator*=(const WPolynomial& scalar) {
  for (auto& c : coeffs_) c = c * scalar;
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  require_same_order(a, b, "mul");
  const int order = a.order();
  TSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TSeries TSeries::truncated(int new_order) const {
  if (new_order > order())
    throw Error(Errc::invalid_argument, "cannot extend a truncated series");
  return TSeries(new_order, std::vector<WPolynomial>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TSeries TSeries::shifted_up(int k) const {
  TSeries out(order());
  for (int i = 0; i + k <= order(); ++i) out[i + k] = (*this)[i];
  return out;
}

TSeries TSeries::divided_by_t() const {
  if (!(*this)[0].is_zero())
    throw Error(Errc::invalid_argument, "divided_by_t: nonzero constant term");
  if (order() == 0) return TSeries(0);
  return TSeries(order() - 1, std::vector<WPolynomial>(coeffs_.begin() + 1, coeffs_.end()));
}

std::string TSeries::to_string() const {
  std::string out;
  for (int k = 0; k <= order(); ++k) {
    if ((*this)[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + (*this)[k].to_string() + ")";
    if (k > 0) out += "*t^" + std::to_string(k);
  }
  if (out.empty()) out = "0";
  return out + " + O(t^" + std::to_string(order() + 1) + ")";
}

TSeries arith(const TSeries& a, const TSeries& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::sub: return a - b;
    case SeriesOp::mul: return a * b;
  }
  throw Error(Errc::invalid_argument, "unknown series operation");
}

const WPolynomial& coefficient(const TSeries& s, int m) {
  if (m < 0 || m > s.order())
    throw Error(Errc::out_of_range, "coefficient t^" + std::to_string(m) +
                                        " beyond truncation order " + std::to_string(s.order()));
  return s[m];
}

TSeries pow(const TSeries& s, int exponent) {
  if (exponent < 0) throw Error(Errc::invalid_argument, "negative series power");
  TSeries result = TSeries::constant(s.order(), 1);
  TSeries base = s;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

TSeries series_exp(const TSeries& s) {
  if (!s[0].is_zero()) throw Error(Errc::invalid_argument, "series_exp needs a zero constant term");
  const int order = s.order();
  TSeries e(order);
  e[0] = 1;
  for (int n = 1; n <= order; ++n) {
    WPolynomial acc;
    for (int k = 1; k <= n; ++k) {
      if (s[k].is_zero() || e[n - k].is_zero()) continue;
      acc += (s[k] * e[n - k]) * Rat(k);
    }
    e[n] = acc * Rat(1, n);
  }
  return e;
}

TSeries series_log(const TSeries& s) {
  if (s[0] != WPolynomial(1)) throw Error(Errc::invalid_argument, "series_log needs constant term 1");
  const int order = s.order();
  TSeries l(order);
  for (int n = 1; n <= order; ++n) {
    WPolynomial acc = s[n] * Rat(n);
    for (int k = 1; k < n; ++k) {
      if (l[k].is_zero() || s[n - k].is_zero()) continue;
      acc -= (l[k] * s[n - k]) * Rat(k);
    }
    l[n] = acc * Rat(1, n);
  }
  return l;
}

TSeries derivative_t(const TSeries& s) {
  if (s.order() == 0) return TSeries(0);
  TSeries d(s.order() - 1);
  for (int k = 1; k <= s.order(); ++k) d[k - 1] = s[k] * Rat(k);
  return d;
}

Rat substitute_weights(const WPolynomial& p, const std::map<int, Rat>& values) {
  return evaluate(p, values);
}

TSeries substitute_weights(const TSeries& s, const std::map<int, Rat>& values) {
  TSeries out(s.order());
  for (int k = 0; k <= s.order(); ++k) out[k] = evaluate(s[k], values);
  return out;
}

SeriesVector fixed_point(const SeriesSystem& system, std::size_t components, int order) {
  SeriesVector x(components, TSeries(order));
  auto apply = [&](const SeriesVector& in) {
    SeriesVector out = system(in);
    if (out.size() != components)
      throw Error(Errc::invalid_argument, "system returned the wrong number of components");
    for (const auto& s : out)
      if (s.order() != order)
        throw Error(Errc::invalid_argument, "system changed the truncation order");
    return out;
  };

  for (int iter = 0; iter <= order; ++iter) x = apply(x);
  const SeriesVector y = apply(x);

  // Perturb every component from order j upward by a distinct marker; the
  // outputs at orders <= j must not move.
  for (int j = 0; j <= order; ++j) {
    SeriesVector perturbed = x;
    for (std::size_t c = 0; c < components; ++c) {
      const WPolynomial marker(Monomial::variable(-1 - static_cast<int>(c)), Rat(1));
      for (int i = j; i <= order; ++i) perturbed[c][i] += marker;
    }
    const SeriesVector out = apply(perturbed);
    for (std::size_t c = 0; c < components; ++c)
      for (int k = 0; k <= j; ++k)
        if (out[c][k] != y[c][k])
          throw Error(Errc::not_contractive,
                      "component " + std::to_string(c) + " at order " + std::to_string(k) +
                          " depends on input coefficients of order " + std::to_string(j));
  }

  if (y != x) throw Error(Errc::internal, "iteration did not reach a fixed point");
  return x;
}

// ---------------------------------------------------------------------------
// GenusSeries

TSeries GenusSeries::genus(int g) const {
  auto it = by_genus_.find(g);
  return it == by_genus_.end() ? TSeries(order_) : it->second;
}

void GenusSeries::add(int g, int power, const WPolynomial& value) {
  if (g < 0) throw Error(Errc::invalid_argument, "negative genus");
  if (power < 0 || power > order_)
    throw Error(Errc::out_of_range, "power of t outside the truncation order");
  auto [it, inserted] = by_genus_.try_emplace(g, TSeries(order_));
  it->second[power] += value;
}

int GenusSeries::max_genus() const noexcept {
  int g = -1;
  for (const auto& [genus, s] : by_genus_)
    if (!s.is_zero()) g = std::max(g, genus);
  return g;
}

TSeries GenusSeries::n_expansion() const {
  TSeries out(order_);
  for (const auto& [g, s] : by_genus_) out += s * WPolynomial::n_power(2 - 2 * g);
  return out;
}

}  // namespace mapenum
