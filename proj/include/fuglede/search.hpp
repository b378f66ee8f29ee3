#pragma once

#include <chrono>
#include <optional>

namespace fuglede {

// Cooperative limits shared by the bounded searches.
struct SearchOptions {
  // Worker threads a search may fan out to; 1 keeps everything on the caller.
  unsigned jobs = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  bool expired() const { return deadline && std::chrono::steady_clock::now() >= *deadline; }

  static SearchOptions with_budget(double seconds, unsigned jobs = 1) {
    SearchOptions o;
    o.jobs = jobs;
    o.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
    return o;
  }
};

}  // namespace fuglede
