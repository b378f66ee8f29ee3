#include "fuglede/utc.hpp"

#include <algorithm>
#include <chrono>

#include "fuglede/error.hpp"

namespace fuglede {

std::string to_string(UtcVerdict v) {
  switch (v) {
    case UtcVerdict::verified_with_certificate:
      return "verified-with-certificate";
    case UtcVerdict::inconclusive_no_complement_in_bounds:
      return "inconclusive-no-complement-in-bounds";
    case UtcVerdict::no_spectra_in_bounds:
      return "no-spectra-in-bounds";
  }
  return "unknown";
}

namespace {

void check_gamma(std::int64_t p, const FinitePointSet& gamma) {
  if (p <= 0) throw InvalidArgument("p must be positive");
  if (static_cast<std::int64_t>(gamma.size()) != p) {
    throw InvalidArgument("Gamma has " + std::to_string(gamma.size()) + " points, expected p = " + std::to_string(p));
  }
  if (!gamma.contains(Rational(0))) throw InvalidArgument("Gamma must contain 0");
  for (const auto& g : gamma.points()) {
    if (g < Rational(0) || g >= Rational(p)) throw InvalidArgument("Gamma point " + g.to_string() + " outside [0, p)");
  }
}

}  // namespace

UtcReport utc_verify(std::int64_t p, const FinitePointSet& gamma, std::int64_t n_max, std::int64_t m_max,
                     const SearchOptions& options) {
  check_gamma(p, gamma);
  if (n_max < 0) throw InvalidArgument("n_max must be nonnegative");
  if (m_max <= 0) throw InvalidArgument("m_max must be positive");
  const auto start = std::chrono::steady_clock::now();

  UtcReport report;
  report.p = p;
  report.gamma = gamma;
  report.n_max = n_max;
  report.m_max = m_max;

  auto found = search_spectra(gamma, p, n_max, options);
  report.spectra_found = std::move(found.spectra);
  report.enumeration_complete = found.complete;
  report.timed_out = !found.complete;

  if (report.spectra_found.empty()) {
    report.verdict = found.complete ? UtcVerdict::no_spectra_in_bounds : UtcVerdict::inconclusive_no_complement_in_bounds;
  } else if (!found.complete) {
    report.verdict = UtcVerdict::inconclusive_no_complement_in_bounds;
  } else {
    auto search = search_common_complement(report.spectra_found, m_max, options);
    report.timed_out = search.status == SearchStatus::timed_out;
    report.verdict = UtcVerdict::inconclusive_no_complement_in_bounds;
    if (search.complement) {
      // Re-check before the certificate is allowed into the report.
      const bool sound = std::all_of(report.spectra_found.begin(), report.spectra_found.end(),
                                     [&](const IntSet& a) { return is_tiling_of_Z(a, *search.complement); });
      if (!sound) throw std::logic_error("common complement failed re-verification");
      report.certificate = std::move(search.complement);
      report.verdict = UtcVerdict::verified_with_certificate;
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

RoundTripReport interval_roundtrip(std::int64_t p, const FinitePointSet& gamma, const std::vector<IntSet>& family,
                                    const std::vector<Rational>& breakpoints, std::int64_t m_max,
                                    const SearchOptions& options) {
  check_gamma(p, gamma);
  const Rational w(BigInt(1), BigInt(p));
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!is_spectrum(gamma, family[i].scaled(w))) {
      throw InvalidFamily("family member " + std::to_string(i) + " " + family[i].to_string() + " / " +
                              std::to_string(p) + " is not a spectrum of " + gamma.to_string(),
                          i);
    }
  }

  RoundTripReport r;
  r.p = p;
  r.gamma = gamma;
  r.family = family;
  r.breakpoints = breakpoints;
  r.m_max = m_max;
  r.omega = build_omega(p, family, breakpoints);
  r.p_tile = is_p_tile(r.omega, p);
  r.spectral_ok = spectral_verdict(r.omega, gamma, p);

  std::vector<IntSet> fiber_family;
  for (auto& cell : fibers(r.omega, p).cells) fiber_family.push_back(std::move(cell.fiber));
  std::sort(fiber_family.begin(), fiber_family.end());
  fiber_family.erase(std::unique(fiber_family.begin(), fiber_family.end()), fiber_family.end());

  auto search = search_common_complement(fiber_family, m_max, options);
  if (search.complement) {
    const auto& t = *search.complement;
    r.omega_tiling = assemble_tiling(r.omega, p, t.residues(), t.period());
    r.projected_complement = t;
    r.projection_tiles_family =
        std::all_of(family.begin(), family.end(), [&](const IntSet& a) { return is_tiling_of_Z(a, t); });
  }
  r.consistency = r.p_tile && r.spectral_ok && r.omega_tiling.has_value() &&
                  verify_omega_tiling(r.omega, r.omega_tiling->translations.residues(),
                                      r.omega_tiling->translations.period(), p) &&
                  r.projection_tiles_family;
  return r;
}

}  // namespace fuglede
