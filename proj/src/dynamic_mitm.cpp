#include "fmzv/dynamic_mitm.hpp"

#include <string>

namespace fmzv {

std::uint64_t cost_d(std::uint64_t bound, std::uint64_t right, std::uint64_t total, std::uint64_t processed) {
  if (processed > total) throw Error("cost_d: processed count exceeds total");
  return sat_mul(sat_pow(bound, right), total - processed);
}

RebuildPolicy parse_rebuild_policy(std::string_view name) {
  if (name == "cost") return RebuildPolicy::CostModel;
  if (name == "always") return RebuildPolicy::Always;
  if (name == "never") return RebuildPolicy::Never;
  if (name == "balanced") return RebuildPolicy::Balanced;
  throw ConfigError("unknown rebuild policy '" + std::string(name) + "'");
}

bool should_grow_left(RebuildPolicy policy, std::uint64_t bound, std::uint64_t left, std::uint64_t right,
                      std::uint64_t total, std::uint64_t processed) {
  switch (policy) {
    case RebuildPolicy::Always: return true;
    case RebuildPolicy::Never: return false;
    case RebuildPolicy::CostModel: break;
    case RebuildPolicy::Balanced: {
      const std::uint64_t base = 2 * bound + 1;
      const std::uint64_t to_left = sat_add(sat_pow(base, left + 1), cost_d(base, right, total, processed));
      return to_left < cost_d(base, right + 1, total, processed);
    }
  }
  const std::uint64_t stay = cost_d(bound, right, total, processed);
  const std::uint64_t grow_right = cost_d(bound, right + 1, total, processed);
  return stay > sat_add(sat_pow(bound, left + 1), grow_right);
}

}  // namespace fmzv
