#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuglede/intervals.hpp"
#include "fuglede/search.hpp"
#include "fuglede/spectra.hpp"
#include "fuglede/tilings.hpp"

namespace fuglede {

enum class UtcVerdict { verified_with_certificate, inconclusive_no_complement_in_bounds, no_spectra_in_bounds };

std::string to_string(UtcVerdict v);

// Outcome of checking the universal tiling property for one (p, Gamma) within
// explicit search bounds. Bounded searches never refute.
struct UtcReport {
  std::int64_t p = 0;
  FinitePointSet gamma;
  std::int64_t n_max = 0;
  std::int64_t m_max = 0;
  std::vector<IntSet> spectra_found;
  bool enumeration_complete = true;
  UtcVerdict verdict = UtcVerdict::no_spectra_in_bounds;
  std::optional<PeriodicSet> certificate;
  bool timed_out = false;
  double seconds = 0.0;
};

UtcReport utc_verify(std::int64_t p, const FinitePointSet& gamma, std::int64_t n_max, std::int64_t m_max,
                     const SearchOptions& options = {});

// Interval-union construction from a family of integer spectra and the
// checks linking it back to the family: spectral verdict for Omega, a common
// fiber complement, the assembled tiling of R, and that complement projected
// back onto each family member.
struct RoundTripReport {
  std::int64_t p = 0;
  FinitePointSet gamma;
  std::vector<IntSet> family;
  std::vector<Rational> breakpoints;
  std::int64_t m_max = 0;
  IntervalUnion omega;
  bool p_tile = false;
  bool spectral_ok = false;
  std::optional<OmegaTilingCertificate> omega_tiling;
  std::optional<PeriodicSet> projected_complement;
  bool projection_tiles_family = false;
  bool consistency = false;
};

// Throws InvalidFamily when some A_i / p is not a spectrum of Gamma.
RoundTripReport interval_roundtrip(std::int64_t p, const FinitePointSet& gamma, const std::vector<IntSet>& family,
                                    const std::vector<Rational>& breakpoints, std::int64_t m_max,
                                    const SearchOptions& options = {});

}  // namespace fuglede
