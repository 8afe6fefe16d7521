#pragma once

// Brute-force references for tests. Nothing here calls into the harmonic,
// MITM or pipeline code; arithmetic is done directly on 128-bit integers.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fmzv/indices.hpp"

namespace fmzv::oracle {

inline constexpr std::uint64_t kEnumerationLimit = 100'000'000;

// Sum over 0 < m_0 < ... < m_{L-1} <= j of prod m_l^{-k_l} mod p.
// TooLarge if the number of sequences exceeds the enumeration limit.
std::uint64_t harmonic_oracle(std::uint64_t p, const Index& k, std::uint64_t j);

// Product of cyclic groups Z/n_0 x ... x Z/n_{r-1}; one component is Z/NZ.
struct CyclicProduct {
  std::vector<std::uint64_t> moduli;
};

using Element = std::vector<std::uint64_t>;

struct Witness {
  std::vector<std::int64_t> coefficients;
  friend bool operator==(const Witness&, const Witness&) = default;
};

using Admissible = std::function<bool(std::span<const std::int64_t>)>;

// First admissible coefficient tuple in [-B, B]^D with zero sum, tuples
// ordered lexicographically by position under 0, 1, -1, 2, -2, ...
// TooLarge when (2B+1)^D exceeds the enumeration limit.
std::optional<Witness> brute_relation(const CyclicProduct& group, std::span<const Element> x, std::uint32_t bound,
                                      const Admissible& admissible);

// Greedy over S using brute_relation for every generation test; returns the
// positions in S of the accepted generators.
std::vector<std::size_t> brute_generating_system(const CyclicProduct& group, std::span<const Element> S,
                                                 std::uint32_t bound);

}  // namespace fmzv::oracle
