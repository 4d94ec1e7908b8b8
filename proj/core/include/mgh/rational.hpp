#ifndef MGH_RATIONAL_HPP
#define MGH_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mgh {

/// Exact rational number, always stored canonically (lowest terms,
/// positive denominator). All arithmetic and comparisons are exact;
/// there is deliberately no conversion to floating point in the API.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}
  Rational(long n, long d);

  /// Accepts "p/q", "p", "-p", and exact decimals like "2.5" or "-0.125".
  static Rational parse(const std::string& text);

  /// Canonical form: "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  const mpq_class& raw() const { return value_; }

  Rational operator+(const Rational& o) const { return Rational(value_ + o.value_); }
  Rational operator-(const Rational& o) const { return Rational(value_ - o.value_); }
  Rational operator*(const Rational& o) const { return Rational(value_ * o.value_); }
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

  bool operator==(const Rational& o) const { return mpq_equal(value_.get_mpq_t(), o.value_.get_mpq_t()) != 0; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return mpq_cmp(value_.get_mpq_t(), o.value_.get_mpq_t()) < 0; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_positive() const { return sgn(value_) > 0; }
  bool is_negative() const { return sgn(value_) < 0; }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

using RationalMatrix = std::vector<std::vector<Rational>>;

}  // namespace mgh

#endif
