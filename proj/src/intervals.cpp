#include "fuglede/intervals.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "fuglede/error.hpp"
#include "text_util.hpp"

namespace fuglede {

namespace {

Rational unit_fraction(std::int64_t p) { return Rational(BigInt(1), BigInt(p)); }

void require_positive_p(std::int64_t p) {
  if (p <= 0) throw InvalidArgument("p must be a positive integer");
}

// exp(2 pi i * phase), with the phase reduced exactly mod 1 first.
std::complex<double> unit_phase(const Rational& phase) {
  return std::polar(1.0, 2.0 * std::numbers::pi * phase.mod(1).to_double());
}

}  // namespace

std::string Interval::to_string() const { return "[" + lo.to_string() + "," + hi.to_string() + ")"; }

IntervalUnion IntervalUnion::from_disjoint(std::vector<Interval> pieces) {
  for (const auto& iv : pieces) {
    if (!(iv.lo < iv.hi)) throw InvalidArgument("interval " + iv.to_string() + " is empty");
  }
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalUnion u;
  for (auto& iv : pieces) {
    if (!u.intervals_.empty()) {
      auto& last = u.intervals_.back();
      if (iv.lo < last.hi) {
        throw InvalidArgument("intervals " + last.to_string() + " and " + iv.to_string() + " overlap");
      }
      if (iv.lo == last.hi) {
        last.hi = std::move(iv.hi);
        continue;
      }
    }
    u.intervals_.push_back(std::move(iv));
  }
  return u;
}

IntervalUnion IntervalUnion::parse(std::string_view text) {
  std::vector<Interval> pieces;
  for (auto field : detail::split(text, ';')) {
    if (field.size() < 2 || field.front() != '[' || field.back() != ')') {
      throw InvalidArgument("interval '" + std::string(field) + "' must have the form [a,b)");
    }
    auto bounds = detail::split(field.substr(1, field.size() - 2), ',');
    if (bounds.size() != 2) throw InvalidArgument("interval '" + std::string(field) + "' needs two endpoints");
    pieces.push_back({Rational::parse(bounds[0]), Rational::parse(bounds[1])});
  }
  return from_disjoint(std::move(pieces));
}

bool IntervalUnion::contains(const Rational& x) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                             [](const Rational& v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) return false;
  return std::prev(it)->contains(x);
}

IntervalUnion IntervalUnion::translated(const Rational& c) const {
  IntervalUnion u = *this;
  for (auto& iv : u.intervals_) {
    iv.lo += c;
    iv.hi += c;
  }
  return u;
}

IntervalUnion IntervalUnion::scaled(const Rational& c) const {
  if (c <= Rational(0)) throw InvalidArgument("scale factor must be positive");
  IntervalUnion u = *this;
  for (auto& iv : u.intervals_) {
    iv.lo *= c;
    iv.hi *= c;
  }
  return u;
}

std::string IntervalUnion::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i) out += ";";
    out += intervals_[i].to_string();
  }
  return out;
}

PeriodicSpectrum::PeriodicSpectrum(FinitePointSet base, std::int64_t period)
    : base_(std::move(base)), period_(period) {
  require_positive_p(period_);
  for (const auto& g : base_.points()) {
    if (g < Rational(0) || g >= Rational(period_)) {
      throw InvalidArgument("spectrum base point " + g.to_string() + " outside [0, " + std::to_string(period_) + ")");
    }
  }
}

bool PeriodicSpectrum::contains(const Rational& x) const { return base_.contains(x.mod(Rational(period_))); }

std::vector<Rational> PeriodicSpectrum::points_in(const Rational& lo, const Rational& hi) const {
  std::vector<Rational> out;
  const Rational per(period_);
  for (const auto& g : base_.points()) {
    const BigInt first = ((lo - g) / per).ceil();
    const BigInt last = ((hi - g) / per).floor();
    for (BigInt n = first; n <= last; ++n) out.push_back(g + Rational(n, 1) * per);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational PeriodicSpectrum::minimal_period() const {
  if (base_.empty()) throw InvalidArgument("empty spectrum has no period");
  const auto n = static_cast<std::int64_t>(base_.size());
  const Rational per(period_);
  for (std::int64_t k = n; k > 1; --k) {
    if (n % k != 0) continue;
    const Rational shift = per / Rational(k);
    bool periodic = true;
    for (const auto& g : base_.points()) {
      if (!base_.contains((g + shift).mod(per))) {
        periodic = false;
        break;
      }
    }
    if (periodic) return shift;
  }
  return per;
}

Rational measure(const IntervalUnion& omega) {
  Rational total;
  for (const auto& iv : omega.intervals()) total += iv.length();
  return total;
}

IntervalUnion build_omega(std::int64_t p, const std::vector<IntSet>& family, const std::vector<Rational>& breakpoints) {
  require_positive_p(p);
  if (family.empty()) throw InvalidArgument("family must be nonempty");
  if (breakpoints.size() != family.size() + 1) {
    throw InvalidArgument("expected " + std::to_string(family.size() + 1) + " breakpoints, got " +
                          std::to_string(breakpoints.size()));
  }
  const Rational w = unit_fraction(p);
  if (breakpoints.front() != Rational(0)) throw InvalidArgument("first breakpoint must be 0");
  if (breakpoints.back() != w) throw InvalidArgument("last breakpoint must be 1/p = " + w.to_string());
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i - 1] < breakpoints[i])) throw InvalidArgument("breakpoints must be strictly increasing");
  }
  std::vector<Interval> pieces;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (static_cast<std::int64_t>(family[i].size()) != p) {
      throw InvalidArgument("family member " + std::to_string(i) + " has " + std::to_string(family[i].size()) +
                            " elements, expected " + std::to_string(p));
    }
    for (auto a : family[i].elements()) {
      const Rational shift = Rational(a) * w;
      pieces.push_back({breakpoints[i] + shift, breakpoints[i + 1] + shift});
    }
  }
  return IntervalUnion::from_disjoint(std::move(pieces));
}

FiberDecomposition fibers(const IntervalUnion& omega, std::int64_t p) {
  require_positive_p(p);
  const Rational w = unit_fraction(p);
  const Rational per(p);
  std::vector<Rational> cuts{Rational(0)};
  for (const auto& iv : omega.intervals()) {
    cuts.push_back(iv.lo.mod(w));
    cuts.push_back(iv.hi.mod(w));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(w);

  FiberDecomposition out{p, {}};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational mid = (cuts[i] + cuts[i + 1]) / Rational(2);
    std::vector<std::int64_t> members;
    if (!omega.empty()) {
      const auto kmin = Rational(((omega.min() - mid) * per).ceil(), 1).to_int64();
      const auto kmax = Rational(((omega.max() - mid) * per).floor(), 1).to_int64();
      for (auto k = kmin; k <= kmax; ++k) {
        if (omega.contains(mid + Rational(k) * w)) members.push_back(k);
      }
    }
    out.cells.push_back({Interval{cuts[i], cuts[i + 1]}, IntSet(std::move(members))});
  }
  return out;
}

bool is_p_tile(const IntervalUnion& omega, std::int64_t p) {
  const auto dec = fibers(omega, p);
  const bool tile = std::all_of(dec.cells.begin(), dec.cells.end(),
                                [p](const FiberCell& c) { return static_cast<std::int64_t>(c.fiber.size()) == p; });
  assert(!tile || measure(omega) == Rational(1));
  return tile;
}

bool spectral_verdict(const IntervalUnion& omega, const FinitePointSet& gamma, std::int64_t p) {
  require_positive_p(p);
  if (static_cast<std::int64_t>(gamma.size()) != p) {
    throw InvalidArgument("Gamma has " + std::to_string(gamma.size()) + " points, expected p = " + std::to_string(p));
  }
  if (!gamma.contains(Rational(0))) throw InvalidArgument("Gamma must contain 0");
  for (const auto& g : gamma.points()) {
    if (g < Rational(0) || g >= Rational(p)) throw InvalidArgument("Gamma point " + g.to_string() + " outside [0, p)");
  }
  const Rational w = unit_fraction(p);
  std::map<IntSet, bool> seen;
  for (const auto& cell : fibers(omega, p).cells) {
    auto [it, fresh] = seen.try_emplace(cell.fiber, false);
    if (fresh) {
      it->second = static_cast<std::int64_t>(cell.fiber.size()) == p && is_spectrum(gamma, cell.fiber.scaled(w));
    }
    if (!it->second) return false;
  }
  return true;
}

OmegaTilingCertificate assemble_tiling(const IntervalUnion& omega, std::int64_t p,
                                       const std::vector<std::int64_t>& residues, std::int64_t m) {
  require_positive_p(p);
  PeriodicSet translations(residues, m);
  for (const auto& cell : fibers(omega, p).cells) {
    if (!tiles_cyclic(cell.fiber, translations.residues(), m)) {
      throw NotCommonComplement("fiber " + cell.fiber.to_string() + " on cell " + cell.cell.to_string() +
                                " does not tile Z by " + translations.to_string());
    }
  }
  if (!verify_omega_tiling(omega, translations.residues(), m, p)) {
    throw std::logic_error("fiberwise tiling did not assemble into a tiling of R");
  }
  return OmegaTilingCertificate{omega, p, std::move(translations)};
}

bool verify_omega_tiling(const IntervalUnion& omega, const std::vector<std::int64_t>& residues, std::int64_t m,
                         std::int64_t p) {
  require_positive_p(p);
  const PeriodicSet t(residues, m);
  const Rational w = unit_fraction(p);
  const Rational period = Rational(m) * w;

  // Reduce every translate Omega + r/p into the fundamental domain [0, m/p).
  std::vector<Interval> pieces;
  Rational total;
  for (auto r : t.residues()) {
    const Rational shift = Rational(r) * w;
    for (const auto& iv : omega.intervals()) {
      const Rational len = iv.length();
      if (len > period) return false;  // overlaps its own period translate
      const Rational lo = (iv.lo + shift).mod(period);
      const Rational hi = lo + len;
      if (hi <= period) {
        pieces.push_back({lo, hi});
      } else {
        pieces.push_back({lo, period});
        pieces.push_back({Rational(0), hi - period});
      }
      total += len;
    }
  }
  if (total != period) return false;
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i].lo < pieces[i - 1].hi) return false;
  }
  return true;
}

std::complex<double> gram_entry(const IntervalUnion& omega, double lambda, double lambda_prime) {
  const double total = measure(omega).to_double();
  if (total <= 0.0) throw InvalidArgument("Gram entries need a set of positive measure");
  const double mu = lambda - lambda_prime;
  if (mu == 0.0) return {1.0, 0.0};
  // (e(mu b) - e(mu a)) / (2 pi i mu) = e(mu (a + b)/2) sin(pi mu (b - a)) / (pi mu)
  std::complex<double> sum{0.0, 0.0};
  for (const auto& iv : omega.intervals()) {
    const double a = iv.lo.to_double(), b = iv.hi.to_double();
    sum += std::polar(1.0, std::numbers::pi * mu * (a + b)) * (std::sin(std::numbers::pi * mu * (b - a)) /
                                                                (std::numbers::pi * mu));
  }
  return sum / total;
}

std::complex<double> gram_entry(const IntervalUnion& omega, const Rational& lambda, const Rational& lambda_prime) {
  const Rational total = measure(omega);
  if (total.is_zero()) throw InvalidArgument("Gram entries need a set of positive measure");
  const Rational mu = lambda - lambda_prime;
  if (mu.is_zero()) return {1.0, 0.0};
  const double mu_d = mu.to_double();
  std::complex<double> sum{0.0, 0.0};
  for (const auto& iv : omega.intervals()) {
    const Rational centre_phase = mu * (iv.lo + iv.hi) / Rational(2);
    // sin(pi x) only depends on x mod 2
    const Rational half_turns = (mu * iv.length()).mod(2);
    sum += unit_phase(centre_phase) * (std::sin(std::numbers::pi * half_turns.to_double()) / (std::numbers::pi * mu_d));
  }
  return sum / total.to_double();
}

double period_identity_residual(const IntervalUnion& omega, std::int64_t p, double lambda, double lambda_prime) {
  require_positive_p(p);
  const Rational per(p);
  for (const auto& iv : omega.intervals()) {
    if (!(iv.lo * per).is_integer() || !(iv.hi * per).is_integer()) {
      throw InvalidArgument("endpoints of " + iv.to_string() + " are not in (1/" + std::to_string(p) + ")Z");
    }
  }
  const double shifted = lambda + static_cast<double>(p) - lambda_prime;
  if (shifted == 0.0) throw InvalidArgument("lambda + p must differ from lambda'");
  const auto lhs = gram_entry(omega, lambda + static_cast<double>(p), lambda_prime);
  const auto rhs = ((lambda - lambda_prime) / shifted) * gram_entry(omega, lambda, lambda_prime);
  return std::abs(lhs - rhs);
}

Normalized normalize(const IntervalUnion& omega) {
  const Rational total = measure(omega);
  if (total.is_zero()) throw InvalidArgument("cannot normalize an empty set");
  return Normalized{omega.scaled(Rational(1) / total), total};
}

bool divisibility_check(std::int64_t n, std::int64_t k) {
  if (n <= 0 || k <= 0) throw InvalidArgument("divisibility_check needs positive N and k");
  return n % k == 0;
}

GramReport truncated_gram(const IntervalUnion& omega, const PeriodicSpectrum& spectrum, const Rational& bound) {
  const auto lambdas = spectrum.points_in(-bound, bound);
  GramReport report;
  report.size = lambdas.size();
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
      const auto g = gram_entry(omega, lambdas[i], lambdas[j]);
      if (i == j) {
        report.max_diagonal_deviation = std::max(report.max_diagonal_deviation, std::abs(g - 1.0));
      } else {
        report.max_off_diagonal = std::max(report.max_off_diagonal, std::abs(g));
      }
    }
  }
  return report;
}

}  // namespace fuglede
