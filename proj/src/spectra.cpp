#include "fuglede/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "fuglede/error.hpp"
#include "fuglede/exactmath.hpp"
#include "text_util.hpp"

namespace fuglede {

FinitePointSet::FinitePointSet(std::vector<Rational> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw InvalidArgument("point set contains duplicate values");
  }
}

FinitePointSet FinitePointSet::parse(std::string_view text) {
  std::vector<Rational> pts;
  for (auto field : detail::split(text, ',')) pts.push_back(Rational::parse(field));
  return FinitePointSet(std::move(pts));
}

bool FinitePointSet::contains(const Rational& x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

FinitePointSet FinitePointSet::translated(const Rational& c) const {
  std::vector<Rational> out;
  out.reserve(points_.size());
  for (const auto& x : points_) out.push_back(x + c);
  return FinitePointSet(std::move(out));
}

FinitePointSet FinitePointSet::scaled(const Rational& c) const {
  if (c.is_zero()) throw InvalidArgument("cannot scale a point set by zero");
  std::vector<Rational> out;
  out.reserve(points_.size());
  for (const auto& x : points_) out.push_back(x * c);
  return FinitePointSet(std::move(out));
}

FinitePointSet FinitePointSet::canonicalized() const {
  if (points_.empty()) return *this;
  return translated(-points_.front());
}

std::string FinitePointSet::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < points_.size(); ++i) os << (i ? "," : "") << points_[i];
  os << "}";
  return os.str();
}

IntSet::IntSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw InvalidArgument("integer set contains duplicate values");
  }
}

IntSet IntSet::parse(std::string_view text) {
  std::vector<std::int64_t> out;
  for (auto field : detail::split(text, ',')) out.push_back(Rational::parse(field).to_int64());
  return IntSet(std::move(out));
}

bool IntSet::contains(std::int64_t x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

IntSet IntSet::translated(std::int64_t c) const {
  std::vector<std::int64_t> out = elements_;
  for (auto& x : out) x += c;
  return IntSet(std::move(out));
}

IntSet IntSet::canonicalized() const {
  if (elements_.empty()) return *this;
  return translated(-elements_.front());
}

FinitePointSet IntSet::scaled(const Rational& scale) const {
  std::vector<Rational> out;
  out.reserve(elements_.size());
  for (auto x : elements_) out.push_back(Rational(x) * scale);
  return FinitePointSet(std::move(out));
}

std::string IntSet::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : "") << elements_[i];
  os << "}";
  return os.str();
}

namespace {

// Exact test of sum_{g in G} exp(2 pi i * freq * g) == 0 for rational freq.
bool exponential_sum_vanishes(const FinitePointSet& g, const Rational& freq) {
  std::vector<Rational> phases;
  phases.reserve(g.size());
  BigInt m = 1;
  for (const auto& x : g.points()) {
    phases.push_back(freq * x);
    m = lcm(m, phases.back().den());
  }
  const Rational modulus(m, 1);
  const std::int64_t m64 = modulus.to_int64();
  std::vector<std::int64_t> exps;
  exps.reserve(phases.size());
  for (const auto& ph : phases) exps.push_back((ph.mod(1) * modulus).to_int64());
  return root_sum_is_zero(ResidueMultiset(m64, std::move(exps)));
}

void check_family_preconditions(const FinitePointSet& g, std::int64_t p) {
  if (g.empty()) throw InvalidArgument("point set must be nonempty");
  if (p <= 0) throw InvalidArgument("p must be positive");
  if (static_cast<std::int64_t>(g.size()) != p) {
    throw InvalidArgument("point set has " + std::to_string(g.size()) + " elements, expected p = " +
                          std::to_string(p));
  }
}

}  // namespace

bool is_spectrum(const FinitePointSet& g, const FinitePointSet& b) {
  if (g.size() != b.size()) return false;
  const auto& pts = b.points();
  // Orthogonality for (b, b') is the conjugate of (b', b); one order suffices.
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!exponential_sum_vanishes(g, pts[j] - pts[i])) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> admissible_differences(const FinitePointSet& g, std::int64_t p, std::int64_t d_max) {
  if (g.empty()) throw InvalidArgument("admissible_differences requires a nonempty point set");
  if (p <= 0) throw InvalidArgument("p must be positive");
  if (d_max <= 0) throw InvalidArgument("d_max must be positive");
  std::vector<std::int64_t> out;
  const Rational inv_p(BigInt(1), BigInt(p));
  for (std::int64_t d = -d_max; d <= d_max; ++d) {
    if (d == 0) continue;
    if (exponential_sum_vanishes(g, Rational(d) * inv_p)) out.push_back(d);
  }
  return out;
}

namespace {

class SpectrumWalker {
 public:
  SpectrumWalker(std::size_t target, std::int64_t n_max, const std::vector<char>& allowed,
                 const SearchOptions& options)
      : target_(target), n_max_(n_max), allowed_(allowed), options_(options) {}

  // Explores every completion of `prefix`, appending hits in ascending order.
  void walk(std::vector<std::int64_t>& prefix, std::vector<IntSet>& out) {
    if (interrupted_) return;
    if (prefix.size() == target_) {
      out.emplace_back(prefix);
      return;
    }
    if ((visits_++ & 4095) == 0 && options_.expired()) {
      interrupted_ = true;
      return;
    }
    const std::size_t remaining = target_ - prefix.size();
    for (std::int64_t c = prefix.back() + 1; c + static_cast<std::int64_t>(remaining) - 1 <= n_max_; ++c) {
      bool ok = true;
      for (auto a : prefix) {
        if (!allowed_[static_cast<std::size_t>(c - a)]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      prefix.push_back(c);
      walk(prefix, out);
      prefix.pop_back();
      if (interrupted_) return;
    }
  }

  bool interrupted() const { return interrupted_; }

 private:
  std::size_t target_;
  std::int64_t n_max_;
  const std::vector<char>& allowed_;
  const SearchOptions& options_;
  std::uint64_t visits_ = 0;
  bool interrupted_ = false;
};

}  // namespace

SpectraSearch search_spectra(const FinitePointSet& g, std::int64_t p, std::int64_t n_max,
                             const SearchOptions& options) {
  check_family_preconditions(g, p);
  if (n_max < 0) throw InvalidArgument("n_max must be nonnegative");
  SpectraSearch result;
  if (p == 1) {
    result.spectra.push_back(IntSet{0});
    return result;
  }
  if (n_max < p - 1) return result;

  std::vector<char> allowed(static_cast<std::size_t>(n_max) + 1, 0);
  for (auto d : admissible_differences(g, p, n_max)) {
    if (d > 0) allowed[static_cast<std::size_t>(d)] = 1;
  }

  // Subtrees are keyed by the second element so they can be explored
  // independently; concatenating them in key order keeps the output
  // lexicographic.
  const std::int64_t first_max = n_max - (p - 2);
  std::vector<std::vector<IntSet>> buckets(static_cast<std::size_t>(first_max) + 1);
  std::atomic<std::int64_t> next{1};
  std::atomic<bool> interrupted{false};
  auto worker = [&] {
    for (std::int64_t c = next++; c <= first_max; c = next++) {
      if (!allowed[static_cast<std::size_t>(c)]) continue;
      if (options.expired()) {
        interrupted = true;
        break;
      }
      SpectrumWalker walker(static_cast<std::size_t>(p), n_max, allowed, options);
      std::vector<std::int64_t> prefix{0, c};
      walker.walk(prefix, buckets[static_cast<std::size_t>(c)]);
      if (walker.interrupted()) interrupted = true;
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(first_max)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }
  for (auto& b : buckets) {
    for (auto& s : b) result.spectra.push_back(std::move(s));
  }
  result.complete = !interrupted;
  return result;
}

std::vector<IntSet> enumerate_spectra(const FinitePointSet& g, std::int64_t p, std::int64_t n_max) {
  return search_spectra(g, p, n_max, SearchOptions{}).spectra;
}

std::vector<IntSet> brute_force_spectra(const FinitePointSet& g, std::int64_t p, std::int64_t n_max,
                                        std::uint64_t guard) {
  check_family_preconditions(g, p);
  if (n_max < 0) throw InvalidArgument("n_max must be nonnegative");
  const std::int64_t k = p - 1;
  if (n_max < k) return {};
  // binomial(n_max, k), stopping as soon as the guard is passed
  std::uint64_t count = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    count = count * static_cast<std::uint64_t>(n_max - k + i) / static_cast<std::uint64_t>(i);
    if (count > guard) {
      throw ResourceLimit("brute-force spectrum enumeration exceeds " + std::to_string(guard) + " subsets");
    }
  }
  const Rational inv_p(BigInt(1), BigInt(p));
  std::vector<IntSet> out;
  std::vector<std::int64_t> combo(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    std::vector<std::int64_t> elems{0};
    elems.insert(elems.end(), combo.begin(), combo.end());
    IntSet a(std::move(elems));
    if (is_spectrum(g, a.scaled(inv_p))) out.push_back(std::move(a));
    // next k-combination of {1..n_max} in lexicographic order
    std::int64_t i = k - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n_max - (k - 1 - i)) --i;
    if (i < 0) break;
    ++combo[static_cast<std::size_t>(i)];
    for (std::int64_t j = i + 1; j < k; ++j) combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace fuglede
