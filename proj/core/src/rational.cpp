#include "mgh/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace mgh {

Rational::Rational(long n, long d) : value_(n, d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  value_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return Rational(mpq_class(value_ / o.value_));
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");

  auto dot = text.find('.');
  if (dot != std::string::npos) {
    // Exact decimal: "-12.375" -> -12375/1000.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || digits.empty())
      throw std::invalid_argument("Rational: malformed decimal '" + text + "'");
    mpq_class num;
    if (num.set_str(digits, 10) != 0)
      throw std::invalid_argument("Rational: malformed decimal '" + text + "'");
    mpz_class den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    mpq_class v(num.get_num(), den);
    v.canonicalize();
    return Rational(std::move(v));
  }

  mpq_class v;
  if (v.set_str(text, 10) != 0)
    throw std::invalid_argument("Rational: malformed rational '" + text + "'");
  if (sgn(v.get_den()) == 0)
    throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace mgh
