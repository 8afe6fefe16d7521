#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "fmzv/oracle.hpp"

namespace test_support {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20241019);
  return engine;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

// Log-uniform in [lo, hi], so small moduli (where relations exist) show up often.
inline std::uint64_t log_uniform(std::uint64_t lo, std::uint64_t hi) {
  std::uniform_real_distribution<double> d(std::log(static_cast<double>(lo)), std::log(static_cast<double>(hi) + 1));
  return std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::exp(d(rng()))), lo, hi);
}

// Wraps scalar elements of Z/NZ for the oracle's product-group interface.
inline std::vector<fmzv::oracle::Element> as_oracle_elements(const std::vector<std::uint64_t>& x) {
  std::vector<fmzv::oracle::Element> out;
  for (std::uint64_t v : x) out.push_back({v});
  return out;
}

}  // namespace test_support
