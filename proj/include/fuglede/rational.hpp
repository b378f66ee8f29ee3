#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fuglede {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design of arithmetic
  Rational(BigInt num, BigInt den);

  // Accepts "a", "a/b" and finite decimals "a.bc" (optionally signed).
  // Symbolic tokens such as "pi" or "sqrt(2)" raise UnsupportedInput; any
  // other malformed string raises InvalidArgument.
  static Rational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  // Largest integer not exceeding the value.
  BigInt floor() const;
  BigInt ceil() const;
  // Representative of the value modulo a positive rational, in [0, modulus).
  Rational mod(const Rational& modulus) const;
  Rational abs() const;

  // Throws InvalidArgument when the value is not an integer or exceeds int64.
  std::int64_t to_int64() const;
  double to_double() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace fuglede
