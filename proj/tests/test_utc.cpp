#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fuglede/error.hpp"
#include "fuglede/utc.hpp"
#include "oracles.hpp"

using namespace fuglede;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

// Float reference: p-subsets of [0, n_max] containing 0 whose pairwise
// differences d satisfy |sum_g exp(2 pi i g d / p)| ~ 0.
std::vector<std::vector<std::int64_t>> spectra_by_floats(const std::vector<double>& g, std::int64_t p,
                                                         std::int64_t n_max) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur{0};
  auto rec = [&](auto&& self, std::int64_t next) -> void {
    if (static_cast<std::int64_t>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t b = next; b <= n_max; ++b) {
      bool ok = true;
      for (auto a : cur) ok = ok && oracle::exp_sum_magnitude(g, static_cast<double>(b - a) / p) < 1e-9;
      if (!ok) continue;
      cur.push_back(b);
      self(self, b + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// Smallest period with a common complement, by intersecting subset-enumerated
// complements of each member.
std::optional<std::pair<std::vector<std::int64_t>, std::int64_t>> common_by_subsets(
    const std::vector<std::vector<std::int64_t>>& fam, std::int64_t m_max) {
  for (std::int64_t m = 1; m <= m_max; ++m) {
    std::optional<std::set<std::vector<std::int64_t>>> common;
    for (const auto& a : fam) {
      auto c = oracle::complements_by_subsets(a, m);
      std::set<std::vector<std::int64_t>> s(c.begin(), c.end());
      if (!common) {
        common = std::move(s);
      } else {
        std::set<std::vector<std::int64_t>> keep;
        for (const auto& r : *common)
          if (s.count(r)) keep.insert(r);
        common = std::move(keep);
      }
    }
    if (common && !common->empty()) return std::make_pair(*common->begin(), m);
  }
  return std::nullopt;
}

void check_sound(const UtcReport& r) {
  REQUIRE(r.certificate.has_value());
  for (const auto& a : r.spectra_found) {
    CHECK(tiles_cyclic(a, r.certificate->residues(), r.certificate->period()));
    CHECK(is_tiling_of_Z(a, *r.certificate));
  }
}

}  // namespace

TEST_CASE("utc_verify examples") {
  SUBCASE("p = 2") {
    const auto r = utc_verify(2, FinitePointSet{q("0"), q("1")}, 5, 8);
    CHECK(r.verdict == UtcVerdict::verified_with_certificate);
    CHECK(r.spectra_found.size() == 3);
    CHECK(r.certificate == PeriodicSet({0}, 2));
    check_sound(r);
  }
  SUBCASE("p = 4") {
    const auto r = utc_verify(4, FinitePointSet{q("0"), q("1"), q("2"), q("3")}, 7, 8);
    CHECK(r.verdict == UtcVerdict::verified_with_certificate);
    CHECK(r.spectra_found.size() == 8);
    CHECK(r.certificate == PeriodicSet({0}, 4));
    check_sound(r);
  }
  SUBCASE("p = 2, gamma {0,1/3}: decided by the reference search") {
    const auto fam = spectra_by_floats({0.0, 1.0 / 3.0}, 2, 6);
    REQUIRE(fam == std::vector<std::vector<std::int64_t>>{{0, 3}});
    const auto ref = common_by_subsets(fam, 6);
    REQUIRE(ref.has_value());

    const auto r = utc_verify(2, FinitePointSet{q("0"), q("1/3")}, 6, 6);
    CHECK(r.spectra_found == std::vector<IntSet>{IntSet{0, 3}});
    CHECK(r.verdict == UtcVerdict::verified_with_certificate);
    CHECK(r.certificate == PeriodicSet(ref->first, ref->second));
    CHECK(r.certificate == PeriodicSet({0}, 2));
    check_sound(r);
  }
}

TEST_CASE("utc_verify other verdicts") {
  const auto none = utc_verify(2, FinitePointSet{q("0"), q("1/3")}, 2, 6);
  CHECK(none.verdict == UtcVerdict::no_spectra_in_bounds);
  CHECK_FALSE(none.certificate.has_value());

  const auto small = utc_verify(2, FinitePointSet{q("0"), q("1")}, 5, 1);
  CHECK(small.verdict == UtcVerdict::inconclusive_no_complement_in_bounds);
  CHECK_FALSE(small.certificate.has_value());

  CHECK_THROWS_AS(utc_verify(2, FinitePointSet{q("0")}, 5, 8), InvalidArgument);
  CHECK_THROWS_AS(utc_verify(2, FinitePointSet{q("1/2"), q("1")}, 5, 8), InvalidArgument);
  CHECK_THROWS_AS(utc_verify(2, FinitePointSet{q("0"), q("2")}, 5, 8), InvalidArgument);

  CHECK(to_string(UtcVerdict::verified_with_certificate) == "verified-with-certificate");
  CHECK(to_string(UtcVerdict::inconclusive_no_complement_in_bounds) == "inconclusive-no-complement-in-bounds");
  CHECK(to_string(UtcVerdict::no_spectra_in_bounds) == "no-spectra-in-bounds");
}

TEST_CASE("utc_verify timeout is reported, not thrown") {
  auto opts = SearchOptions::with_budget(0.0);
  const auto r = utc_verify(4, FinitePointSet{q("0"), q("1"), q("2"), q("3")}, 40, 16, opts);
  CHECK(r.timed_out);
  CHECK(r.verdict != UtcVerdict::verified_with_certificate);
}

TEST_CASE("utc_verify monotonicity") {
  const std::vector<FinitePointSet> gammas{FinitePointSet{q("0"), q("1")}, FinitePointSet{q("0"), q("1/3")},
                                           FinitePointSet{q("0"), q("1/2"), q("1")}};
  const std::vector<std::int64_t> ps{2, 2, 3};
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    std::vector<IntSet> prev;
    for (std::int64_t n = 1; n <= 10; ++n) {
      const auto r = utc_verify(ps[i], gammas[i], n, 6);
      for (const auto& a : prev) CHECK(std::find(r.spectra_found.begin(), r.spectra_found.end(), a) != r.spectra_found.end());
      prev = r.spectra_found;
    }
    bool was_verified = false;
    for (std::int64_t m = 1; m <= 12; ++m) {
      const auto r = utc_verify(ps[i], gammas[i], 8, m);
      if (was_verified) CHECK(r.verdict == UtcVerdict::verified_with_certificate);
      was_verified = was_verified || r.verdict == UtcVerdict::verified_with_certificate;
      if (r.verdict == UtcVerdict::verified_with_certificate) check_sound(r);
    }
  }
}

TEST_CASE("utc_verify agrees with the float reference") {
  const std::vector<std::pair<std::int64_t, std::vector<const char*>>> cases{
      {2, {"0", "1"}}, {2, {"0", "1/3"}}, {3, {"0", "1", "2"}}, {3, {"0", "1/2", "1"}}, {2, {"0", "1/5"}}};
  for (const auto& [p, gs] : cases) {
    std::vector<Rational> pts;
    std::vector<double> dbl;
    for (auto s : gs) {
      pts.push_back(q(s));
      dbl.push_back(q(s).to_double());
    }
    const FinitePointSet gamma(pts);
    const auto r = utc_verify(p, gamma, 9, 9);
    const auto fam = spectra_by_floats(dbl, p, 9);
    CAPTURE(gamma.to_string());
    REQUIRE(r.spectra_found.size() == fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) CHECK(r.spectra_found[i] == IntSet(fam[i]));
    const auto ref = fam.empty() ? std::nullopt : common_by_subsets(fam, 9);
    if (ref) {
      CHECK(r.verdict == UtcVerdict::verified_with_certificate);
      CHECK(r.certificate == PeriodicSet(ref->first, ref->second));
    } else {
      CHECK(r.verdict != UtcVerdict::verified_with_certificate);
    }
  }
}

TEST_CASE("roundtrip examples") {
  SUBCASE("worked instance") {
    const auto r = interval_roundtrip(2, FinitePointSet{q("0"), q("1")}, {IntSet{0, 1}, IntSet{0, 3}},
                                       {q("0"), q("1/4"), q("1/2")}, 4);
    CHECK(r.omega == IntervalUnion::parse("[0,3/4);[7/4,2)"));
    CHECK(r.p_tile);
    CHECK(r.spectral_ok);
    REQUIRE(r.projected_complement.has_value());
    CHECK(*r.projected_complement == PeriodicSet({0}, 2));
    REQUIRE(r.omega_tiling.has_value());
    CHECK(verify_omega_tiling(r.omega, r.omega_tiling->translations.residues(), r.omega_tiling->translations.period(), 2));
    CHECK(verify_omega_tiling(r.omega, {0}, 1, 1));
    CHECK(r.projection_tiles_family);
    CHECK(r.consistency);
  }
  SUBCASE("unit interval") {
    const auto r = interval_roundtrip(1, FinitePointSet{q("0")}, {IntSet{0}}, {q("0"), q("1")}, 4);
    CHECK(r.omega == IntervalUnion::parse("[0,1)"));
    CHECK(r.spectral_ok);
    CHECK(r.consistency);
    CHECK(verify_omega_tiling(r.omega, {0}, 1, 1));
  }
  SUBCASE("invalid family") {
    try {
      interval_roundtrip(2, FinitePointSet{q("0"), q("1")}, {IntSet{0, 1}, IntSet{0, 2}}, {q("0"), q("1/4"), q("1/2")},
                          4);
      FAIL("expected InvalidFamily");
    } catch (const InvalidFamily& e) {
      CHECK(e.index() == 1);
      CHECK(std::string(e.what()).find("{0,2}") != std::string::npos);
    }
  }
  SUBCASE("no complement within bounds is not consistent") {
    const auto r = interval_roundtrip(2, FinitePointSet{q("0"), q("1")}, {IntSet{0, 1}, IntSet{0, 3}},
                                       {q("0"), q("1/4"), q("1/2")}, 1);
    CHECK(r.spectral_ok);
    CHECK_FALSE(r.omega_tiling.has_value());
    CHECK_FALSE(r.consistency);
  }
}

TEST_CASE("roundtrip is consistent on sub-families of verified instances") {
  std::mt19937_64 rng(5);
  const std::vector<std::pair<std::int64_t, FinitePointSet>> instances{
      {2, FinitePointSet{q("0"), q("1")}}, {2, FinitePointSet{q("0"), q("1/3")}}, {3, FinitePointSet{q("0"), q("1"), q("2")}}};
  for (const auto& [p, gamma] : instances) {
    const auto rep = utc_verify(p, gamma, 8, 12);
    REQUIRE(rep.verdict == UtcVerdict::verified_with_certificate);
    const auto& fam = rep.spectra_found;
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<IntSet> sub;
      for (const auto& a : fam)
        if (std::uniform_int_distribution<int>(0, 1)(rng)) sub.push_back(a);
      if (sub.empty()) sub.push_back(fam.front());
      // random rational breakpoints 0 = r_0 < ... < r_n = 1/p
      const std::int64_t den = 7 * p * static_cast<std::int64_t>(sub.size());
      std::set<std::int64_t> cuts;
      while (cuts.size() + 1 < sub.size()) cuts.insert(std::uniform_int_distribution<std::int64_t>(1, den / p - 1)(rng));
      std::vector<Rational> br{Rational(0)};
      for (auto c : cuts) br.emplace_back(BigInt(c), BigInt(den));
      br.emplace_back(BigInt(1), BigInt(p));
      const auto r = interval_roundtrip(p, gamma, sub, br, 12);
      CAPTURE(r.omega.to_string());
      CHECK(r.spectral_ok);
      CHECK(r.consistency);
      REQUIRE(r.projected_complement.has_value());
      for (const auto& a : sub) CHECK(is_tiling_of_Z(a, *r.projected_complement));
    }
  }
}
