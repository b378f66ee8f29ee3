#include "fuglede/exactmath.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "fuglede/error.hpp"

namespace fuglede {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (auto c : coefficients) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t n) {
  std::vector<BigInt> c(n + 1);
  c[0] = -1;
  c[n] += 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial::DivMod IntPolynomial::divmod_monic(const IntPolynomial& divisor) const {
  if (!divisor.is_monic()) throw InvalidArgument("divisor must be a monic polynomial");
  const auto dd = static_cast<std::size_t>(divisor.degree());
  if (degree() < divisor.degree()) return {IntPolynomial{}, *this};

  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quo(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    const BigInt lead = rem[i];
    const std::size_t shift = i - dd;
    quo[shift] = lead;
    for (std::size_t j = 0; j <= dd; ++j) {
      if (divisor.coeffs_[j] != 0) rem[shift + j] -= lead * divisor.coeffs_[j];
    }
  }
  rem.resize(dd);
  return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem))};
}

IntPolynomial IntPolynomial::remainder_monic(const IntPolynomial& divisor) const {
  return divmod_monic(divisor).remainder;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

ResidueMultiset::ResidueMultiset(std::int64_t modulus, std::vector<std::int64_t> entries)
    : modulus_(modulus), entries_(std::move(entries)) {
  if (modulus_ <= 0) throw InvalidArgument("residue modulus must be positive");
  for (auto& e : entries_) {
    e %= modulus_;
    if (e < 0) e += modulus_;
  }
  std::sort(entries_.begin(), entries_.end());
}

ResidueMultiset ResidueMultiset::shifted(std::int64_t c) const {
  std::vector<std::int64_t> out = entries_;
  c %= modulus_;
  for (auto& e : out) e += c;
  return ResidueMultiset(modulus_, std::move(out));
}

IntPolynomial ResidueMultiset::mask_polynomial() const {
  std::vector<BigInt> c(static_cast<std::size_t>(modulus_));
  for (auto e : entries_) c[static_cast<std::size_t>(e)] += 1;
  return IntPolynomial(std::move(c));
}

namespace {

struct CyclotomicCache {
  std::shared_mutex mutex;
  std::unordered_map<std::uint64_t, std::unique_ptr<const IntPolynomial>> table;
};

CyclotomicCache& cache() {
  static CyclotomicCache c;
  return c;
}

}  // namespace

const IntPolynomial& cyclotomic_poly(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("cyclotomic_poly requires m >= 1");
  auto& c = cache();
  {
    std::shared_lock lock(c.mutex);
    if (auto it = c.table.find(m); it != c.table.end()) return *it->second;
  }
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d. Divisors are resolved
  // before taking the write lock so recursion never re-enters it.
  IntPolynomial p = IntPolynomial::x_pow_minus_one(m);
  for (std::uint64_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    p = p.divmod_monic(cyclotomic_poly(d)).quotient;
  }
  std::unique_lock lock(c.mutex);
  auto [it, inserted] = c.table.try_emplace(m, std::make_unique<const IntPolynomial>(std::move(p)));
  return *it->second;
}

bool root_sum_is_zero(const ResidueMultiset& e) {
  if (e.size() == 0) return true;
  const auto m = static_cast<std::uint64_t>(e.modulus());
  if (m == 1) return false;  // every term is 1
  // Factor out zeta^{e_0} and reduce to the smallest root of unity that
  // carries all remaining exponents.
  const std::int64_t base = e.entries().front();
  std::int64_t g = e.modulus();
  for (auto k : e.entries()) g = std::gcd(g, k - base);
  if (g == e.modulus()) return false;  // all terms equal
  std::vector<std::int64_t> reduced;
  reduced.reserve(e.size());
  for (auto k : e.entries()) reduced.push_back((k - base) / g);
  const ResidueMultiset r(e.modulus() / g, std::move(reduced));
  return r.mask_polynomial().remainder_monic(cyclotomic_poly(static_cast<std::uint64_t>(r.modulus()))).is_zero();
}

std::complex<double> root_sum_value(const ResidueMultiset& e) {
  std::complex<double> sum{0.0, 0.0};
  const double m = static_cast<double>(e.modulus());
  for (auto k : e.entries()) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / m;
    sum += std::polar(1.0, angle);
  }
  return sum;
}

std::uint64_t euler_totient(std::uint64_t m) {
  if (m == 0) return 0;
  std::uint64_t result = m;
  std::uint64_t n = m;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace fuglede
