#include "signcert/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace signcert {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

Rational pow10(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational r(mpz_class(1), p);
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    exponent = parse_integer(text.substr(e + 1)).get_si();
  }
  bool neg = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    neg = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mantissa.substr(0, dot);
    std::string_view fp = mantissa.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    digits = std::string(ip) + std::string(fp);
    frac_len = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mantissa)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    digits = std::string(mantissa);
  }
  Rational r(mpz_class(digits, 10));
  r *= pow10(exponent - frac_len);
  if (neg) r = -r;
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_str();
}

Rational from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite double");
  Rational r(v);
  r.canonicalize();
  return r;
}

}  // namespace signcert
