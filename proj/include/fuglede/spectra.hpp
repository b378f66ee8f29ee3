#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "fuglede/rational.hpp"
#include "fuglede/search.hpp"

namespace fuglede {

// Sorted set of distinct rationals.
class FinitePointSet {
 public:
  FinitePointSet() = default;
  // Sorts the input; duplicates raise InvalidArgument.
  explicit FinitePointSet(std::vector<Rational> points);
  FinitePointSet(std::initializer_list<Rational> points) : FinitePointSet(std::vector<Rational>(points)) {}

  // Comma separated rationals, e.g. "0,1/2,1".
  static FinitePointSet parse(std::string_view text);

  const std::vector<Rational>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  bool contains(const Rational& x) const;

  FinitePointSet translated(const Rational& c) const;
  FinitePointSet scaled(const Rational& c) const;
  // Translate so the minimum is 0.
  FinitePointSet canonicalized() const;

  std::string to_string() const;
  friend bool operator==(const FinitePointSet&, const FinitePointSet&) = default;

 private:
  std::vector<Rational> points_;
};

// Sorted set of distinct integers: spectra numerators A, fibers, tiles.
class IntSet {
 public:
  IntSet() = default;
  explicit IntSet(std::vector<std::int64_t> elements);
  IntSet(std::initializer_list<std::int64_t> elements) : IntSet(std::vector<std::int64_t>(elements)) {}

  static IntSet parse(std::string_view text);

  const std::vector<std::int64_t>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(std::int64_t x) const;
  std::int64_t min() const { return elements_.front(); }
  std::int64_t max() const { return elements_.back(); }

  IntSet translated(std::int64_t c) const;
  IntSet canonicalized() const;
  // { a * scale : a in this }
  FinitePointSet scaled(const Rational& scale) const;

  std::string to_string() const;
  friend bool operator==(const IntSet&, const IntSet&) = default;
  friend auto operator<=>(const IntSet& a, const IntSet& b) { return a.elements_ <=> b.elements_; }

 private:
  std::vector<std::int64_t> elements_;
};

// True iff |B| = |G| and the exponentials indexed by B are pairwise
// orthogonal in L^2 of the counting measure on G.
bool is_spectrum(const FinitePointSet& g, const FinitePointSet& b);

// Nonzero d with |d| <= d_max such that sum_{g in G} exp(2 pi i g d / p) = 0.
std::vector<std::int64_t> admissible_differences(const FinitePointSet& g, std::int64_t p, std::int64_t d_max);

struct SpectraSearch {
  std::vector<IntSet> spectra;  // lexicographic
  bool complete = true;         // false when the deadline interrupted the walk
};

// All A in {0..n_max} with 0 in A and |A| = p such that A/p is a spectrum of G.
SpectraSearch search_spectra(const FinitePointSet& g, std::int64_t p, std::int64_t n_max,
                             const SearchOptions& options);
std::vector<IntSet> enumerate_spectra(const FinitePointSet& g, std::int64_t p, std::int64_t n_max);

// Exhaustive oracle for enumerate_spectra: every p-subset containing 0 is
// tested directly with is_spectrum. Throws ResourceLimit beyond `guard`
// candidate subsets.
std::vector<IntSet> brute_force_spectra(const FinitePointSet& g, std::int64_t p, std::int64_t n_max,
                                        std::uint64_t guard = 10'000'000);

}  // namespace fuglede
