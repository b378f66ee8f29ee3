#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "fuglede/rational.hpp"

namespace fuglede {

// Dense integer polynomial, lowest degree first. The zero polynomial has no
// coefficients; otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<std::int64_t> coefficients);

  // x^n - 1
  static IntPolynomial x_pow_minus_one(std::size_t n);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  // -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  struct DivMod;
  // Division by a monic polynomial stays inside Z[x].
  DivMod divmod_monic(const IntPolynomial& divisor) const;
  IntPolynomial remainder_monic(const IntPolynomial& divisor) const;

  std::string to_string() const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct IntPolynomial::DivMod {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

// Multiset of residues modulo m. Entries are reduced into [0, m) on
// construction and kept sorted.
class ResidueMultiset {
 public:
  ResidueMultiset(std::int64_t modulus, std::vector<std::int64_t> entries);

  std::int64_t modulus() const noexcept { return modulus_; }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  ResidueMultiset shifted(std::int64_t c) const;
  // sum over entries of x^e, a polynomial of degree < m
  IntPolynomial mask_polynomial() const;

 private:
  std::int64_t modulus_;
  std::vector<std::int64_t> entries_;
};

// m-th cyclotomic polynomial, memoized for the lifetime of the process.
// Safe to call concurrently.
const IntPolynomial& cyclotomic_poly(std::uint64_t m);

// Exact test of sum_{e in E} exp(2 pi i e / m) == 0.
bool root_sum_is_zero(const ResidueMultiset& e);

// The same sum evaluated in double precision.
std::complex<double> root_sum_value(const ResidueMultiset& e);

std::uint64_t euler_totient(std::uint64_t m);

}  // namespace fuglede
