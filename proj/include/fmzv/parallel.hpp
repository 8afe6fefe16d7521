#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>

namespace fmzv {

// Least i in [0, n) with pred(i), scanning in blocks so that a hit stops the
// search early. With workers > 1 each block is split across OpenMP threads;
// the result equals the serial scan.
template <class Pred>
std::optional<std::uint64_t> find_first(std::uint64_t n, Pred&& pred, int workers = 1) {
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t block = std::max<std::uint64_t>(1024, static_cast<std::uint64_t>(workers) * 256);
  for (std::uint64_t start = 0; start < n; start += block) {
    const std::uint64_t stop = std::min(n, start + block);
    std::uint64_t best = kNone;
    const auto count = static_cast<std::int64_t>(stop - start);
#pragma omp parallel for num_threads(workers) schedule(static)
    for (std::int64_t k = 0; k < count; ++k) {
      const std::uint64_t i = start + static_cast<std::uint64_t>(k);
      std::uint64_t seen;
#pragma omp atomic read
      seen = best;
      if (i > seen) continue;
      if (pred(i)) {
#pragma omp critical(fmzv_find_first)
        {
          if (i < best) {
#pragma omp atomic write
            best = i;
          }
        }
      }
    }
    if (best != kNone) return best;
  }
  return std::nullopt;
}

// FMZV_WORKERS if set to a positive integer, else 1.
inline int default_workers() {
  if (const char* env = std::getenv("FMZV_WORKERS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (...) {
    }
  }
  return 1;
}

}  // namespace fmzv
