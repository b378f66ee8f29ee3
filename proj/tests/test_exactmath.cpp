#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fuglede/error.hpp"
#include "fuglede/exactmath.hpp"
#include "oracles.hpp"

using namespace fuglede;

namespace {

std::vector<long long> coeffs(const IntPolynomial& p) {
  std::vector<long long> out;
  for (const auto& c : p.coefficients()) out.push_back(static_cast<long long>(c));
  return out;
}

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  Rational a = Rational::parse("6/8");
  CHECK(a.num() == 3);
  CHECK(a.den() == 4);
  CHECK(Rational::parse("-2/4") == Rational::parse("-1/2"));
  CHECK(Rational::parse("010") == Rational(10));
  CHECK(Rational::parse("007/08") == Rational(BigInt(7), BigInt(8)));
  CHECK(Rational::parse(".5") == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational::parse("0.25") == Rational(BigInt(1), BigInt(4)));
  CHECK(Rational::parse(" -3 ") == Rational(-3));
  CHECK((Rational::parse("1/3") + Rational::parse("1/6")).to_string() == "1/2");
  CHECK(Rational::parse("-7/2").floor() == -4);
  CHECK(Rational::parse("-7/2").ceil() == -3);
  CHECK(Rational::parse("-1/4").mod(Rational::parse("1/2")) == Rational::parse("1/4"));
  CHECK(Rational::parse("0/5").den() == 1);
  CHECK(Rational::parse("1/3") < Rational::parse("1/2"));
  CHECK(Rational::parse("3/4").to_double() == doctest::Approx(0.75));
}

TEST_CASE("rational parsing rejects malformed and symbolic input") {
  CHECK_THROWS_AS(Rational::parse("1/0"), InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("1//2"), InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("-2/-4"), InvalidArgument);
  CHECK_THROWS_AS(Rational::parse(""), InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("."), InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("sqrt(2)"), UnsupportedInput);
  CHECK_THROWS_AS(Rational::parse("pi"), UnsupportedInput);
  CHECK_THROWS_AS(Rational::parse("1/2").to_int64(), InvalidArgument);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(coeffs(cyclotomic_poly(1)) == std::vector<long long>{-1, 1});
  CHECK(coeffs(cyclotomic_poly(4)) == std::vector<long long>{1, 0, 1});
  CHECK(coeffs(cyclotomic_poly(6)) == std::vector<long long>{1, -1, 1});
  CHECK(cyclotomic_poly(6).to_string() == "x^2 - x + 1");
  CHECK_THROWS_AS(cyclotomic_poly(0), InvalidArgument);

  SUBCASE("agrees with the product over primitive roots") {
    for (int m : {1, 2, 3, 6, 12, 15, 30, 105}) {
      CAPTURE(m);
      CHECK(coeffs(cyclotomic_poly(static_cast<std::uint64_t>(m))) == oracle::cyclotomic_by_roots(m));
    }
  }
  SUBCASE("105 has the first coefficient of magnitude 2") {
    const auto c = coeffs(cyclotomic_poly(105));
    CHECK(std::count(c.begin(), c.end(), -2) == 2);
  }
}

TEST_CASE("cyclotomic polynomials divide x^m - 1 and their degrees add up") {
  for (std::uint64_t m = 1; m <= 200; ++m) {
    CAPTURE(m);
    const auto& phi = cyclotomic_poly(m);
    CHECK(static_cast<std::uint64_t>(phi.degree()) == euler_totient(m));
    CHECK(IntPolynomial::x_pow_minus_one(m).remainder_monic(phi).is_zero());
    std::uint64_t total = 0;
    for (std::uint64_t d = 1; d <= m; ++d) {
      if (m % d == 0) total += static_cast<std::uint64_t>(cyclotomic_poly(d).degree());
    }
    CHECK(total == m);
  }
}

TEST_CASE("polynomial division") {
  const IntPolynomial a{-1, 0, 0, 1};  // x^3 - 1
  const IntPolynomial b{-1, 1};        // x - 1
  auto qr = a.divmod_monic(b);
  CHECK(qr.quotient == IntPolynomial{1, 1, 1});
  CHECK(qr.remainder.is_zero());
  CHECK(qr.quotient * b == a);
  CHECK_THROWS_AS(a.divmod_monic(IntPolynomial{1, 2}), InvalidArgument);
  CHECK((a - a).is_zero());
}

TEST_CASE("root sums: examples") {
  CHECK(root_sum_is_zero(ResidueMultiset(2, {0, 1})));
  CHECK_FALSE(root_sum_is_zero(ResidueMultiset(4, {0, 1})));
  CHECK(root_sum_is_zero(ResidueMultiset(6, {0, 1, 2, 3, 4, 5})));
  CHECK(std::abs(root_sum_value(ResidueMultiset(6, {0, 1, 2, 3, 4, 5}))) < 1e-12);
  CHECK(root_sum_is_zero(ResidueMultiset(5, {})));
  CHECK_FALSE(root_sum_is_zero(ResidueMultiset(1, {0})));
  CHECK_FALSE(root_sum_is_zero(ResidueMultiset(4, {1, 1})));

  const auto one = root_sum_value(ResidueMultiset(1, {0}));
  CHECK(one.real() == 1.0);
  CHECK(one.imag() == 0.0);
  CHECK(std::abs(root_sum_value(ResidueMultiset(4, {0, 2}))) < 1e-15);
  CHECK(std::abs(root_sum_value(ResidueMultiset(3, {0, 1, 2}))) < 1e-15);
}

TEST_CASE("root sums: a minimal vanishing sum that mixes two primes") {
  // zeta_5 + ... + zeta_5^4 = -1 and -zeta_3 - zeta_3^2 = 1; in Z_30 these are
  // {6, 12, 18, 24} and {25, 5}.
  const ResidueMultiset e(30, {5, 6, 12, 18, 24, 25});
  CHECK(root_sum_is_zero(e));
  CHECK(std::abs(root_sum_value(e)) < 1e-12);
  CHECK_FALSE(root_sum_is_zero(ResidueMultiset(30, {5, 6, 12, 18, 24})));
  CHECK_FALSE(root_sum_is_zero(ResidueMultiset(15, {3, 6, 9, 12, 5, 10})));
}

TEST_CASE("root sums: residues are reduced into [0, m)") {
  const ResidueMultiset e(4, {-1, 5, 6});
  CHECK(e.entries() == std::vector<std::int64_t>{1, 2, 3});
  CHECK_THROWS_AS(ResidueMultiset(0, {}), InvalidArgument);
}

TEST_CASE("property: exact zero test matches the float sum and is shift invariant") {
  std::mt19937_64 rng(20240611);
  int zeros = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto m = std::uniform_int_distribution<std::int64_t>(1, 60)(rng);
    const auto n = std::uniform_int_distribution<int>(0, 20)(rng);
    std::vector<std::int64_t> entries;
    // Half the trials are built from whole cosets of a subgroup so zeros occur.
    if (trial % 2 == 0) {
      for (int i = 0; i < n; ++i) entries.push_back(std::uniform_int_distribution<std::int64_t>(0, m - 1)(rng));
    } else {
      std::int64_t d = std::uniform_int_distribution<std::int64_t>(1, m)(rng);
      while (m % d != 0) --d;
      const std::int64_t step = m / d;
      const int cosets = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int c = 0; c < cosets; ++c) {
        const auto shift = std::uniform_int_distribution<std::int64_t>(0, m - 1)(rng);
        for (std::int64_t k = 0; k < d; ++k) entries.push_back(shift + k * step);
      }
    }
    const ResidueMultiset e(m, entries);
    const bool exact = root_sum_is_zero(e);
    zeros += exact;
    CAPTURE(m);
    CHECK(exact == (std::abs(root_sum_value(e)) < 1e-9));
    const auto c = std::uniform_int_distribution<std::int64_t>(0, m - 1)(rng);
    CHECK(root_sum_is_zero(e.shifted(c)) == exact);
  }
  CHECK(zeros > 100);
}
