#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuglede/search.hpp"
#include "fuglede/spectra.hpp"

namespace fuglede {

// R + mZ for a set R of distinct residues in [0, m).
class PeriodicSet {
 public:
  PeriodicSet(std::vector<std::int64_t> residues, std::int64_t period);

  const std::vector<std::int64_t>& residues() const noexcept { return residues_; }
  std::int64_t period() const noexcept { return period_; }
  bool contains(std::int64_t n) const;
  std::string to_string() const;

  friend bool operator==(const PeriodicSet&, const PeriodicSet&) = default;

 private:
  std::vector<std::int64_t> residues_;
  std::int64_t period_;
};

// A ⊕ T = Z, verified both cyclically and by direct counting on one period
// [window_begin, window_end).
struct TilingCertificate {
  IntSet tile;
  PeriodicSet complement;
  std::int64_t window_begin;
  std::int64_t window_end;
};

// A ⊕ (R + mZ) = Z, decided in Z_m. Residues outside [0, m) raise
// InvalidArgument.
bool tiles_cyclic(const IntSet& a, const std::vector<std::int64_t>& residues, std::int64_t m);

bool is_tiling_of_Z(const IntSet& a, const PeriodicSet& t);

// Certificate for A ⊕ T = Z; throws InvalidArgument when the tiling fails.
TilingCertificate certify_tiling(const IntSet& a, const PeriodicSet& t);

// Every R ⊂ [0, m) with 0 ∈ R and A ⊕ R = Z_m, in lexicographic order.
std::vector<std::vector<std::int64_t>> find_complements(const IntSet& a, std::int64_t m);

enum class SearchStatus { found, exhausted, timed_out };

struct CommonComplementSearch {
  std::optional<PeriodicSet> complement;
  SearchStatus status = SearchStatus::exhausted;
};

// Smallest period m (a multiple of |A_i|, m <= m_max) admitting R with 0 ∈ R
// that tiles Z with every member of the family; for that m, the
// lexicographically first R found by the joint exact-cover walk.
CommonComplementSearch search_common_complement(const std::vector<IntSet>& family, std::int64_t m_max,
                                                const SearchOptions& options);
std::optional<PeriodicSet> find_common_complement(const std::vector<IntSet>& family, std::int64_t m_max);

}  // namespace fuglede
