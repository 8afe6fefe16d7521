#pragma once

// Greedy minimal generating systems with a persistent MITM dictionary that
// grows only when the cost model says a rebuild pays off.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fmzv/mitm.hpp"
#include "fmzv/parallel.hpp"

namespace fmzv {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

inline std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r = sat_mul(r, base);
    if (r == kSaturated || r == 0) break;
  }
  return r;
}

// Expected remaining scan work B^right * (H - h), saturating.
std::uint64_t cost_d(std::uint64_t bound, std::uint64_t right, std::uint64_t total, std::uint64_t processed);

// CostModel compares cost_d(B, right) against B^(left+1) + cost_d(B, right+1),
// which never holds for B >= 1. Balanced swaps the two scan costs and counts
// the full alphabet of 2B + 1 coefficients.
enum class RebuildPolicy { CostModel, Always, Never, Balanced };

RebuildPolicy parse_rebuild_policy(std::string_view name);

// True when the left side of the dictionary should grow after accepting a
// generator with `right` elements currently on the scan side.
bool should_grow_left(RebuildPolicy policy, std::uint64_t bound, std::uint64_t left, std::uint64_t right,
                      std::uint64_t total, std::uint64_t processed);

struct DynamicOptions {
  RebuildPolicy policy = RebuildPolicy::CostModel;
  // Store only dictionary keys, not the left tuples behind them.
  bool keys_only = false;
  int workers = 1;
};

template <AbelianGroup G>
struct GeneratingSystem {
  std::vector<typename G::Element> generators;
  std::vector<std::size_t> positions;  // position of each generator in S
  std::size_t rebuilds = 0;
  std::size_t left_length = 0;
};

// Dictionary over the first `left` generators: key of sum_d c[b_d] x_d to
// the ranks of the left tuples producing it.
template <AbelianGroup G>
class MitmDictionary {
 public:
  MitmDictionary(const G& group, bool keys_only) : group_(&group), keys_only_(keys_only) {
    buckets_[group.key(group.zero())].push_back(0);
  }

  void rebuild(std::span<const std::vector<typename G::Element>> multiples, std::size_t left, std::uint64_t base) {
    buckets_.clear();
    left_ = left;
    const std::uint64_t count = tuple_space_size(base, left);
    std::vector<std::uint32_t> digits(left);
    for (std::uint64_t rank = 0; rank < count; ++rank) {
      unrank_tuple(rank, base, digits);
      typename G::Element sum = group_->zero();
      for (std::size_t d = 0; d < left; ++d) sum = group_->add(sum, multiples[d][digits[d]]);
      auto& bucket = buckets_[group_->key(sum)];
      if (!keys_only_) bucket.push_back(rank);
    }
  }

  std::size_t left_length() const { return left_; }
  std::size_t key_count() const { return buckets_.size(); }
  bool keys_only() const { return keys_only_; }

  const std::vector<std::uint64_t>* find(const typename G::Key& key) const {
    auto it = buckets_.find(key);
    return it == buckets_.end() ? nullptr : &it->second;
  }

  template <class F>
  void for_each(F&& f) const {
    for (const auto& [key, bucket] : buckets_) f(key, bucket);
  }

 private:
  const G* group_;
  bool keys_only_;
  std::size_t left_ = 0;
  std::unordered_map<typename G::Key, std::vector<std::uint64_t>> buckets_;
};

// Greedy over S in order: s becomes a generator unless the generators so
// far generate it over c.
template <AbelianGroup G>
GeneratingSystem<G> minimal_generating_system(const G& group, std::span<const typename G::Element> S,
                                              const CoefficientArray& c, const DynamicOptions& options = {}) {
  using Element = typename G::Element;
  GeneratingSystem<G> out;
  const std::uint64_t base = c.size();
  const std::uint64_t total = S.size();
  std::vector<std::vector<Element>> multiples;  // multiples[d][b] = c[b] * x_d
  std::size_t left = 0;
  std::size_t right = 0;
  MitmDictionary<G> dictionary(group, options.keys_only);

  for (std::uint64_t h = 0; h < total; ++h) {
    const Element& s = S[h];
    const std::uint64_t right_count = tuple_space_size(base, right);
    bool generated = false;
    for (std::size_t b = 0; b < base && !generated; ++b) {
      if (c[b] == 0) continue;
      const Element target = group.scale(c[b], s);
      auto hit = [&](std::uint64_t rank) {
        std::vector<std::uint32_t> digits(right);
        unrank_tuple(rank, base, digits);
        Element y = target;
        for (std::size_t d = 0; d < right; ++d) y = group.add(y, multiples[left + d][digits[d]]);
        return dictionary.find(group.key(group.neg(y))) != nullptr;
      };
      generated = find_first(right_count, hit, options.workers).has_value();
    }
    if (generated) continue;

    out.generators.push_back(s);
    out.positions.push_back(h);
    multiples.emplace_back();
    multiples.back().reserve(base);
    for (std::size_t b = 0; b < base; ++b) multiples.back().push_back(group.scale(c[b], s));
    if (should_grow_left(options.policy, c.bound(), left, right, total, h)) {
      ++left;
      dictionary.rebuild(multiples, left, base);
      ++out.rebuilds;
    } else {
      ++right;
    }
  }
  out.left_length = left;
  return out;
}

// Reference greedy loop: one independent generates_over call per element.
template <AbelianGroup G>
std::vector<std::size_t> greedy_generating_system(const G& group, std::span<const typename G::Element> S,
                                                  const CoefficientArray& c) {
  std::vector<typename G::Element> x;
  std::vector<std::size_t> positions;
  for (std::size_t h = 0; h < S.size(); ++h) {
    if (!generates_over(group, std::span<const typename G::Element>(x), c, S[h])) {
      x.push_back(S[h]);
      positions.push_back(h);
    }
  }
  return positions;
}

}  // namespace fmzv
