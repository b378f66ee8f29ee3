#include "fuglede/tilings.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "fuglede/error.hpp"

namespace fuglede {

namespace {

std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// Residues of A mod m, or nothing when two elements collide.
std::optional<std::vector<std::int64_t>> distinct_residues(const IntSet& a, std::int64_t m) {
  std::vector<std::int64_t> r;
  r.reserve(a.size());
  for (auto x : a.elements()) r.push_back(mod_floor(x, m));
  std::sort(r.begin(), r.end());
  if (std::adjacent_find(r.begin(), r.end()) != r.end()) return std::nullopt;
  return r;
}

// Simultaneous exact cover of Z_m by translates of several tiles using one
// shared translation set. Translates are chosen to cover the smallest
// uncovered residue of the first tile's table.
class JointCover {
 public:
  JointCover(std::vector<std::vector<std::int64_t>> tiles, std::int64_t m, const SearchOptions* options)
      : tiles_(std::move(tiles)),
        m_(m),
        options_(options),
        covered_(tiles_.size(), std::vector<char>(static_cast<std::size_t>(m), 0)) {}

  // Calls `visit` for each complement (0 always first); stops when it returns true.
  void run(const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
    visit_ = &visit;
    if (!fits(0)) return;
    place(0, 1);
    chosen_.push_back(0);
    recurse(0);
    chosen_.pop_back();
    place(0, 0);
  }

  bool timed_out() const { return timed_out_; }

 private:
  bool fits(std::int64_t t) const {
    for (std::size_t i = 0; i < tiles_.size(); ++i) {
      for (auto a : tiles_[i]) {
        if (covered_[i][static_cast<std::size_t>(mod_floor(t + a, m_))]) return false;
      }
    }
    return true;
  }

  void place(std::int64_t t, char value) {
    for (std::size_t i = 0; i < tiles_.size(); ++i) {
      for (auto a : tiles_[i]) covered_[i][static_cast<std::size_t>(mod_floor(t + a, m_))] = value;
    }
  }

  // Returns true to stop the whole search.
  bool recurse(std::int64_t from) {
    if (options_ && (visits_++ & 2047) == 0 && options_->expired()) {
      timed_out_ = true;
      return true;
    }
    const auto& first = covered_[0];
    auto u = from;
    while (u < m_ && first[static_cast<std::size_t>(u)]) ++u;
    if (u == m_) {
      std::vector<std::int64_t> r = chosen_;
      std::sort(r.begin(), r.end());
      return (*visit_)(r);
    }
    std::vector<std::int64_t> candidates;
    candidates.reserve(tiles_[0].size());
    for (auto a : tiles_[0]) candidates.push_back(mod_floor(u - a, m_));
    std::sort(candidates.begin(), candidates.end());
    for (auto t : candidates) {
      if (!fits(t)) continue;
      place(t, 1);
      chosen_.push_back(t);
      const bool stop = recurse(u + 1);
      chosen_.pop_back();
      place(t, 0);
      if (stop) return true;
    }
    return false;
  }

  std::vector<std::vector<std::int64_t>> tiles_;
  std::int64_t m_;
  const SearchOptions* options_;
  std::vector<std::vector<char>> covered_;
  std::vector<std::int64_t> chosen_;
  const std::function<bool(const std::vector<std::int64_t>&)>* visit_ = nullptr;
  std::uint64_t visits_ = 0;
  bool timed_out_ = false;
};

}  // namespace

PeriodicSet::PeriodicSet(std::vector<std::int64_t> residues, std::int64_t period)
    : residues_(std::move(residues)), period_(period) {
  if (period_ <= 0) throw InvalidArgument("period must be positive");
  std::sort(residues_.begin(), residues_.end());
  if (std::adjacent_find(residues_.begin(), residues_.end()) != residues_.end()) {
    throw InvalidArgument("periodic set residues must be distinct");
  }
  for (auto r : residues_) {
    if (r < 0 || r >= period_) {
      throw InvalidArgument("residue " + std::to_string(r) + " outside [0, " + std::to_string(period_) + ")");
    }
  }
}

bool PeriodicSet::contains(std::int64_t n) const {
  return std::binary_search(residues_.begin(), residues_.end(), mod_floor(n, period_));
}

std::string PeriodicSet::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < residues_.size(); ++i) os << (i ? "," : "") << residues_[i];
  os << "} + " << period_ << "Z";
  return os.str();
}

bool tiles_cyclic(const IntSet& a, const std::vector<std::int64_t>& residues, std::int64_t m) {
  if (m <= 0) throw InvalidArgument("modulus must be positive");
  for (auto r : residues) {
    if (r < 0 || r >= m) throw InvalidArgument("residue " + std::to_string(r) + " outside [0, m)");
  }
  if (static_cast<std::int64_t>(a.size() * residues.size()) != m) return false;
  if (!distinct_residues(a, m)) return false;
  std::vector<int> hits(static_cast<std::size_t>(m), 0);
  for (auto x : a.elements()) {
    for (auto r : residues) {
      if (++hits[static_cast<std::size_t>(mod_floor(x + r, m))] > 1) return false;
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

bool is_tiling_of_Z(const IntSet& a, const PeriodicSet& t) {
  if (static_cast<std::int64_t>(a.size() * t.residues().size()) != t.period()) return false;
  return tiles_cyclic(a, t.residues(), t.period());
}

TilingCertificate certify_tiling(const IntSet& a, const PeriodicSet& t) {
  if (a.empty() || !is_tiling_of_Z(a, t)) {
    throw InvalidArgument(a.to_string() + " does not tile Z by " + t.to_string());
  }
  // Count representations n = x + s (x in A, s in T) directly for one period.
  const std::int64_t begin = a.min();
  const std::int64_t end = begin + t.period();
  for (std::int64_t n = begin; n < end; ++n) {
    int reps = 0;
    for (auto x : a.elements()) reps += t.contains(n - x) ? 1 : 0;
    if (reps != 1) throw std::logic_error("cyclic tiling check disagrees with direct count");
  }
  return TilingCertificate{a, t, begin, end};
}

std::vector<std::vector<std::int64_t>> find_complements(const IntSet& a, std::int64_t m) {
  if (m <= 0) throw InvalidArgument("modulus must be positive");
  if (a.empty() || m % static_cast<std::int64_t>(a.size()) != 0) return {};
  auto residues = distinct_residues(a, m);
  if (!residues) return {};
  std::vector<std::vector<std::int64_t>> out;
  JointCover cover({*residues}, m, nullptr);
  cover.run([&](const std::vector<std::int64_t>& r) {
    out.push_back(r);
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

CommonComplementSearch search_common_complement(const std::vector<IntSet>& family, std::int64_t m_max,
                                                const SearchOptions& options) {
  if (family.empty()) throw InvalidArgument("family must be nonempty");
  const auto p = static_cast<std::int64_t>(family.front().size());
  if (p == 0) throw InvalidArgument("family members must be nonempty");
  for (const auto& a : family) {
    if (static_cast<std::int64_t>(a.size()) != p) throw InvalidArgument("family members have mixed cardinalities");
  }
  if (m_max <= 0) throw InvalidArgument("m_max must be positive");

  std::vector<std::int64_t> periods;
  for (std::int64_t m = p; m <= m_max; m += p) periods.push_back(m);

  enum class Outcome : int { pending, none, found, timed_out };
  std::vector<Outcome> outcome(periods.size(), Outcome::pending);
  std::vector<std::vector<std::int64_t>> solution(periods.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{periods.size()};

  auto search_one = [&](std::size_t k) {
    const std::int64_t m = periods[k];
    std::vector<std::vector<std::int64_t>> tiles;
    for (const auto& a : family) {
      auto r = distinct_residues(a, m);
      if (!r) {
        outcome[k] = Outcome::none;
        return;
      }
      tiles.push_back(std::move(*r));
    }
    // Identical residue patterns impose identical constraints.
    std::sort(tiles.begin() + 1, tiles.end());
    tiles.erase(std::unique(tiles.begin() + 1, tiles.end()), tiles.end());
    JointCover cover(std::move(tiles), m, &options);
    bool hit = false;
    cover.run([&](const std::vector<std::int64_t>& r) {
      solution[k] = r;
      hit = true;
      return true;
    });
    if (hit) {
      outcome[k] = Outcome::found;
      std::size_t cur = best.load();
      while (k < cur && !best.compare_exchange_weak(cur, k)) {
      }
    } else {
      outcome[k] = cover.timed_out() ? Outcome::timed_out : Outcome::none;
    }
  };
  auto worker = [&] {
    for (std::size_t k = next++; k < periods.size(); k = next++) {
      if (k > best.load()) break;
      if (options.expired()) {
        outcome[k] = Outcome::timed_out;
        continue;
      }
      search_one(k);
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(periods.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }

  // Resolve in ascending period order so the answer does not depend on
  // scheduling.
  CommonComplementSearch result;
  for (std::size_t k = 0; k < periods.size(); ++k) {
    if (outcome[k] == Outcome::none) continue;
    if (outcome[k] == Outcome::found) {
      result.complement = PeriodicSet(solution[k], periods[k]);
      result.status = SearchStatus::found;
    } else {
      result.status = SearchStatus::timed_out;
    }
    return result;
  }
  result.status = SearchStatus::exhausted;
  return result;
}

std::optional<PeriodicSet> find_common_complement(const std::vector<IntSet>& family, std::int64_t m_max) {
  return search_common_complement(family, m_max, SearchOptions{}).complement;
}

}  // namespace fuglede
