#include "fuglede/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "fuglede/error.hpp"

namespace fuglede {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  // b > 0
  BigInt q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// cpp_int treats a leading 0 as an octal prefix.
BigInt decimal(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt(std::string(digits));
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw InvalidArgument("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::parse(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view s = text.substr(b, e - b);
  const std::string shown(text);
  if (s.empty()) throw InvalidArgument("empty rational");
  for (char c : s) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      throw UnsupportedInput("'" + shown + "' is not an exact rational (symbolic or irrational input)");
    }
  }
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  BigInt num, den;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto n = s.substr(0, slash), d = s.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) throw InvalidArgument("malformed rational '" + shown + "'");
    num = decimal(n);
    den = decimal(d);
    if (den == 0) throw InvalidArgument("zero denominator in '" + shown + "'");
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty())) {
      throw InvalidArgument("malformed decimal '" + shown + "'");
    }
    num = decimal(std::string(ip) + std::string(fp));
    den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(fp.size()));
  } else {
    if (!all_digits(s)) throw InvalidArgument("malformed rational '" + shown + "'");
    num = decimal(s);
    den = 1;
  }
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

BigInt Rational::floor() const { return floor_div(num_, den_); }

BigInt Rational::ceil() const { return -floor_div(-num_, den_); }

Rational Rational::mod(const Rational& modulus) const {
  if (modulus.num_ <= 0) throw InvalidArgument("modulus must be positive");
  Rational q = *this / modulus;
  return *this - modulus * Rational(q.floor(), 1);
}

Rational Rational::abs() const { return num_ < 0 ? -*this : *this; }

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw InvalidArgument("rational " + to_string() + " is not an integer");
  if (num_ > std::numeric_limits<std::int64_t>::max() || num_ < std::numeric_limits<std::int64_t>::min()) {
    throw InvalidArgument("integer " + to_string() + " out of 64-bit range");
  }
  return static_cast<std::int64_t>(num_);
}

double Rational::to_double() const {
  using boost::multiprecision::cpp_bin_float_double;
  return static_cast<double>(cpp_bin_float_double(num_) / cpp_bin_float_double(den_));
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw InvalidArgument("division by zero rational");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

}  // namespace fuglede
