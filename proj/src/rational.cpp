#include "mapenum/rational.hpp"

#include <cctype>

#include "mapenum/error.hpp"

namespace mapenum {

Rat make_rat(long numerator, long denominator) {
  if (denominator == 0) throw Error(Errc::invalid_argument, "zero denominator");
  Rat r(numerator, denominator);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num))
    throw Error(Errc::parse, "'" + std::string(text) + "' is not an exact rational");
  if (slash == std::string_view::npos) return Rat(parse_integer(num));
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw Error(Errc::parse, "'" + std::string(text) + "' is not an exact rational");
  BigInt d = parse_integer(den);
  if (d == 0) throw Error(Errc::parse, "zero denominator in '" + std::string(text) + "'");
  Rat r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& value) { return value.get_str(); }

BigInt factorial(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt double_factorial(int n) {
  if (n < -1) throw Error(Errc::invalid_argument, "double factorial below -1");
  if (n <= 0) return 1;
  BigInt out;
  mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace mapenum
