#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "fuglede/rational.hpp"
#include "fuglede/spectra.hpp"
#include "fuglede/tilings.hpp"

namespace fuglede {

// Half-open [lo, hi) with lo < hi.
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x < hi; }
  std::string to_string() const;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Finite disjoint union of half-open rational intervals, sorted, with
// touching intervals merged.
class IntervalUnion {
 public:
  IntervalUnion() = default;

  // Pieces may touch but not overlap; overlap or an empty piece raises
  // InvalidArgument.
  static IntervalUnion from_disjoint(std::vector<Interval> pieces);
  // Parses "[a,b);[c,d)". Also rejects overlapping input.
  static IntervalUnion parse(std::string_view text);

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  bool contains(const Rational& x) const;
  const Rational& min() const { return intervals_.front().lo; }
  const Rational& max() const { return intervals_.back().hi; }

  IntervalUnion translated(const Rational& c) const;
  // c > 0
  IntervalUnion scaled(const Rational& c) const;

  std::string to_string() const;
  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> intervals_;
};

struct FiberCell {
  Interval cell;  // inside [0, 1/p)
  IntSet fiber;   // { k : x + k/p in Omega } for every x in the cell
};

struct FiberDecomposition {
  std::int64_t p;
  std::vector<FiberCell> cells;  // consecutive, covering [0, 1/p)
};

// Lambda = Gamma + pZ.
class PeriodicSpectrum {
 public:
  PeriodicSpectrum(FinitePointSet base, std::int64_t period);

  const FinitePointSet& base() const noexcept { return base_; }
  std::int64_t period() const noexcept { return period_; }
  bool contains(const Rational& x) const;
  // Elements of Lambda in the closed window [lo, hi], ascending.
  std::vector<Rational> points_in(const Rational& lo, const Rational& hi) const;
  // Smallest t > 0 with Lambda + t = Lambda, searched among the periods p/k
  // visible in this representation.
  Rational minimal_period() const;

 private:
  FinitePointSet base_;
  std::int64_t period_;
};

// Omega tiles R by T = (1/p)(R + mZ).
struct OmegaTilingCertificate {
  IntervalUnion omega;
  std::int64_t p;
  PeriodicSet translations;  // scaled by 1/p
};

Rational measure(const IntervalUnion& omega);

// Union over i of [r_i, r_{i+1}) + A_i / p.
IntervalUnion build_omega(std::int64_t p, const std::vector<IntSet>& family, const std::vector<Rational>& breakpoints);

FiberDecomposition fibers(const IntervalUnion& omega, std::int64_t p);

bool is_p_tile(const IntervalUnion& omega, std::int64_t p);

// Whether Gamma + pZ is a spectrum of Omega, decided cell by cell on the
// fibers. Gamma must have p elements in [0, p) and contain 0.
bool spectral_verdict(const IntervalUnion& omega, const FinitePointSet& gamma, std::int64_t p);

// Throws NotCommonComplement (naming the first failing cell) unless every
// fiber tiles Z by R + mZ.
OmegaTilingCertificate assemble_tiling(const IntervalUnion& omega, std::int64_t p,
                                       const std::vector<std::int64_t>& residues, std::int64_t m);

// Exact partition test of R by Omega + (1/p)(R + mZ), done on [0, m/p).
bool verify_omega_tiling(const IntervalUnion& omega, const std::vector<std::int64_t>& residues, std::int64_t m,
                         std::int64_t p);

// <e_lambda, e_lambda'> in L^2(Omega), divided by |Omega|.
std::complex<double> gram_entry(const IntervalUnion& omega, double lambda, double lambda_prime);
std::complex<double> gram_entry(const IntervalUnion& omega, const Rational& lambda, const Rational& lambda_prime);

// | G(lambda + p, lambda') - (lambda - lambda')/(lambda + p - lambda') G(lambda, lambda') |
// for Omega with endpoints in (1/p)Z; zero up to rounding.
double period_identity_residual(const IntervalUnion& omega, std::int64_t p, double lambda, double lambda_prime);

struct Normalized {
  IntervalUnion omega;  // measure 1
  Rational scale;       // original measure; spectra map as Lambda -> scale * Lambda
};
Normalized normalize(const IntervalUnion& omega);

// Minimal period k/N of a spectrum of an integer-endpoint set of measure N
// forces k | N.
bool divisibility_check(std::int64_t n, std::int64_t k);

struct GramReport {
  std::size_t size = 0;
  double max_off_diagonal = 0.0;
  double max_diagonal_deviation = 0.0;
  bool within(double tolerance) const { return max_off_diagonal < tolerance && max_diagonal_deviation < tolerance; }
};

// Float Gram matrix of e_lambda over Lambda ∩ [-bound, bound].
GramReport truncated_gram(const IntervalUnion& omega, const PeriodicSpectrum& spectrum, const Rational& bound);

}  // namespace fuglede
