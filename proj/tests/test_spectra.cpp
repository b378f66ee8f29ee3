#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fuglede/error.hpp"
#include "fuglede/spectra.hpp"
#include "oracles.hpp"

using namespace fuglede;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

std::vector<double> as_doubles(const FinitePointSet& g) {
  std::vector<double> out;
  for (const auto& x : g.points()) out.push_back(x.to_double());
  return out;
}

// Differences admitted by the float exponential sum; used to freeze the
// expected sets below.
std::vector<std::int64_t> float_admissible(const FinitePointSet& g, std::int64_t p, std::int64_t d_max) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = -d_max; d <= d_max; ++d) {
    if (d != 0 && oracle::exp_sum_magnitude(as_doubles(g), static_cast<double>(d) / static_cast<double>(p)) < 1e-9) {
      out.push_back(d);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("point sets are canonical") {
  const FinitePointSet g{q("3/2"), q("1/2"), q("1")};
  CHECK(g.to_string() == "{1/2,1,3/2}");
  CHECK(g.canonicalized() == FinitePointSet{q("0"), q("1/2"), q("1")});
  CHECK_THROWS_AS(FinitePointSet({q("1"), q("2/2")}), InvalidArgument);
  CHECK(FinitePointSet::parse(" 0, 1/2 ,1") == FinitePointSet{q("0"), q("1/2"), q("1")});
  CHECK(IntSet{5, 2, 3}.canonicalized() == IntSet{0, 1, 3});
  CHECK_THROWS_AS(IntSet({1, 1}), InvalidArgument);
  CHECK_THROWS_AS(IntSet::parse("0,1/2"), InvalidArgument);
}

TEST_CASE("is_spectrum examples") {
  CHECK(is_spectrum(FinitePointSet{q("0"), q("1/2")}, FinitePointSet{q("0"), q("1")}));
  CHECK_FALSE(is_spectrum(FinitePointSet{q("0"), q("1/2")}, FinitePointSet{q("0"), q("2")}));
  const FinitePointSet quarter{q("0"), q("1/4"), q("2/4"), q("3/4")};
  CHECK(is_spectrum(quarter, FinitePointSet{q("0"), q("1"), q("2"), q("3")}));
  // cardinality mismatch
  CHECK_FALSE(is_spectrum(quarter, FinitePointSet{q("0"), q("1")}));
  CHECK(is_spectrum(FinitePointSet{}, FinitePointSet{}));
}

TEST_CASE("admissible differences match the float sum") {
  const FinitePointSet g1{q("0"), q("1")};
  const std::vector<std::int64_t> odd{-5, -3, -1, 1, 3, 5};
  CHECK(float_admissible(g1, 2, 6) == odd);
  CHECK(admissible_differences(g1, 2, 6) == odd);

  const FinitePointSet g2{q("0"), q("1"), q("2"), q("3")};
  const std::vector<std::int64_t> not_mult4{-5, -3, -2, -1, 1, 2, 3, 5};
  CHECK(float_admissible(g2, 4, 5) == not_mult4);
  CHECK(admissible_differences(g2, 4, 5) == not_mult4);

  const FinitePointSet g3{q("0"), q("1/2"), q("1"), q("3/2")};
  const std::vector<std::int64_t> even_not8{-6, -4, -2, 2, 4, 6};
  CHECK(float_admissible(g3, 4, 8) == even_not8);
  CHECK(admissible_differences(g3, 4, 8) == even_not8);

  CHECK_THROWS_AS(admissible_differences(FinitePointSet{}, 2, 4), InvalidArgument);
}

TEST_CASE("admissible differences are closed under negation") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::int64_t p = std::uniform_int_distribution<std::int64_t>(2, 4)(rng);
    std::vector<Rational> pts{Rational(0)};
    while (static_cast<std::int64_t>(pts.size()) < p) {
      Rational x(std::uniform_int_distribution<std::int64_t>(1, 4 * p - 1)(rng), 4);
      if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
    }
    const FinitePointSet g(pts);
    const auto d = admissible_differences(g, p, 24);
    for (auto x : d) CHECK(std::binary_search(d.begin(), d.end(), -x));
    CHECK(d == float_admissible(g, p, 24));
  }
}

TEST_CASE("enumerate_spectra examples") {
  const FinitePointSet g1{q("0"), q("1")};
  CHECK(enumerate_spectra(g1, 2, 5) == std::vector<IntSet>{{0, 1}, {0, 3}, {0, 5}});
  CHECK(enumerate_spectra(g1, 2, 0).empty());

  const FinitePointSet g2{q("0"), q("1"), q("2"), q("3")};
  const std::vector<IntSet> residue_systems{{0, 1, 2, 3}, {0, 1, 2, 7}, {0, 1, 3, 6}, {0, 1, 6, 7},
                                            {0, 2, 3, 5}, {0, 2, 5, 7}, {0, 3, 5, 6}, {0, 5, 6, 7}};
  CHECK(enumerate_spectra(g2, 4, 7) == residue_systems);
  CHECK(brute_force_spectra(g2, 4, 7) == residue_systems);
  CHECK(brute_force_spectra(g1, 2, 5) == std::vector<IntSet>{{0, 1}, {0, 3}, {0, 5}});

  CHECK(enumerate_spectra(FinitePointSet{q("0")}, 1, 4) == std::vector<IntSet>{{0}});
  CHECK_THROWS_AS(enumerate_spectra(g1, 3, 5), InvalidArgument);
}

TEST_CASE("brute force oracle: pigeonhole and guard") {
  const FinitePointSet g{q("0"), q("1"), q("2"), q("3")};
  CHECK(brute_force_spectra(g, 4, 2).empty());
  CHECK(enumerate_spectra(g, 4, 2).empty());
  CHECK_THROWS_AS(brute_force_spectra(g, 4, 1000, 1000), ResourceLimit);
}

TEST_CASE("enumeration equals brute force on a corpus") {
  const std::vector<std::pair<FinitePointSet, std::int64_t>> corpus{
      {FinitePointSet{q("0"), q("1")}, 2},
      {FinitePointSet{q("0"), q("1/3")}, 2},
      {FinitePointSet{q("0"), q("1"), q("2")}, 3},
      {FinitePointSet{q("0"), q("1/3"), q("2/3")}, 3},
      {FinitePointSet{q("0"), q("1"), q("2"), q("3")}, 4},
      {FinitePointSet{q("0"), q("1/2"), q("1"), q("3/2")}, 4},
      {FinitePointSet{q("0"), q("1/2"), q("2"), q("5/2")}, 4},
      {FinitePointSet{q("0"), q("1"), q("2/3"), q("5/3")}, 4},
  };
  for (const auto& [g, p] : corpus) {
    for (std::int64_t n = 0; n <= 12; ++n) {
      CAPTURE(g.to_string());
      CAPTURE(n);
      CHECK(enumerate_spectra(g, p, n) == brute_force_spectra(g, p, n));
    }
  }
}

TEST_CASE("parallel enumeration returns the sequential order") {
  const FinitePointSet g{q("0"), q("1/2"), q("1"), q("3/2")};
  SearchOptions opts;
  opts.jobs = 4;
  CHECK(search_spectra(g, 4, 30, opts).spectra == enumerate_spectra(g, 4, 30));
}

TEST_CASE("an expired deadline interrupts the walk") {
  const FinitePointSet g{q("0"), q("1"), q("2"), q("3")};
  SearchOptions opts;
  opts.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  const auto r = search_spectra(g, 4, 400, opts);
  CHECK_FALSE(r.complete);
}

TEST_CASE("property: symmetry, translation and scaling of spectral pairs") {
  std::mt19937_64 rng(99);
  auto random_set = [&](std::size_t n, std::int64_t den, std::int64_t range) {
    std::vector<Rational> pts;
    while (pts.size() < n) {
      Rational x(std::uniform_int_distribution<std::int64_t>(0, range)(rng), den);
      if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
    }
    return FinitePointSet(pts);
  };
  int positives = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const auto g = random_set(n, std::uniform_int_distribution<std::int64_t>(1, 4)(rng), 8);
    const auto b = random_set(n, std::uniform_int_distribution<std::int64_t>(1, 4)(rng), 8);
    const bool v = is_spectrum(g, b);
    positives += v;
    CHECK(is_spectrum(b, g) == v);
    const Rational c(std::uniform_int_distribution<std::int64_t>(-9, 9)(rng), 7);
    CHECK(is_spectrum(g.translated(c), b) == v);
    CHECK(is_spectrum(g, b.translated(c)) == v);
    const Rational s(std::uniform_int_distribution<std::int64_t>(1, 5)(rng), std::uniform_int_distribution<std::int64_t>(1, 5)(rng));
    CHECK(is_spectrum(g.scaled(s), b.scaled(Rational(1) / s)) == v);
  }
  CHECK(positives > 20);
}
