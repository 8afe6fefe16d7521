#include "fmzv/report.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include "fmzv/error.hpp"

namespace fmzv {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_unsigned(std::string_view text, std::string_view what) {
  text = trim(text);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("bad boolean '" + std::string(text) + "'");
}

const char* policy_name(RebuildPolicy p) {
  switch (p) {
    case RebuildPolicy::CostModel: return "cost";
    case RebuildPolicy::Always: return "always";
    case RebuildPolicy::Never: return "never";
    case RebuildPolicy::Balanced: return "balanced";
  }
  return "?";
}

const char* policy_name(KeyPolicy p) {
  switch (p) {
    case KeyPolicy::CostModel: return "cost";
    case KeyPolicy::AllPrimes: return "all";
    case KeyPolicy::NoPrimes: return "none";
  }
  return "?";
}

}  // namespace

std::vector<Prime> parse_prime_list(std::string_view text) {
  std::vector<Prime> primes;
  text = trim(text);
  if (text.empty()) throw ConfigError("empty prime list");
  while (true) {
    const std::size_t comma = text.find(',');
    const std::uint64_t v = parse_unsigned(text.substr(0, comma), "prime");
    try {
      primes.emplace_back(v);
    } catch (const NotPrime& e) {
      throw ConfigError(e.what());
    }
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return primes;
}

PipelineConfig parse_config(std::istream& in) {
  PipelineConfig config;
  bool have_weight = false, have_primes = false, have_bound = false;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const std::size_t eq = view.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected key = value: '" + line + "'");
    const std::string_view key = trim(view.substr(0, eq));
    const std::string_view value = trim(view.substr(eq + 1));
    if (key == "weight") {
      config.weight = static_cast<std::uint32_t>(parse_unsigned(value, "weight"));
      have_weight = true;
    } else if (key == "primes") {
      config.primes = parse_prime_list(value);
      have_primes = true;
    } else if (key == "bound") {
      config.bound = static_cast<std::uint32_t>(parse_unsigned(value, "bound"));
      have_bound = true;
    } else if (key == "safety_factor") {
      try {
        config.safety_factor = BigInt(std::string(value));
      } catch (const std::exception&) {
        throw ConfigError("bad safety_factor '" + std::string(value) + "'");
      }
    } else if (key == "workers") {
      config.workers = static_cast<int>(std::max<std::uint64_t>(1, parse_unsigned(value, "workers")));
    } else if (key == "keys_only") {
      config.keys_only = parse_bool(value);
    } else {
      throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
  }
  if (!have_weight || !have_primes || !have_bound) throw ConfigError("config needs weight, primes and bound");
  validate(config);
  return config;
}

PipelineConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_config(in);
}

void write_harmonic_csv(std::ostream& out, const HarmonicSums& sums) {
  out << "index,prime,value\n";
  for (const ResidueVector& v : sums.vectors()) {
    const std::string index = csv_field(v.index.to_string());
    for (std::size_t l = 0; l < sums.primes().size(); ++l) {
      out << index << ',' << sums.primes()[l].value() << ',' << v.values[l] << '\n';
    }
  }
}

nlohmann::json guard_json(const GuardReport& guard) {
  return {
      {"modulus", guard.modulus.str()},
      {"threshold", guard.threshold.str()},
      {"compact_threshold", guard.compact_threshold.str()},
      {"safety_factor", guard.safety_factor.str()},
      {"d_estimate", guard.d_estimate},
      {"pass", guard.pass},
      {"log10_ratio", guard.log10_ratio},
      {"log10_compact_ratio", guard.log10_compact_ratio},
  };
}

std::vector<RowVerification> verify_table(const RelationTable& table, std::span<const Prime> primes, int workers) {
  std::vector<Index> indices = table.basis;
  for (const RelationRow& row : table.rows) indices.push_back(row.target);
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (const Index& k : indices) {
    for (const Prime& p : primes) {
      if (p.value() <= k.weight()) throw ConfigError("prime " + std::to_string(p.value()) + " does not exceed the weight");
    }
  }
  HarmonicOptions options;
  options.workers = workers;
  const HarmonicSums sums = harmonic_sums_for(primes, indices, options);
  std::vector<RowVerification> out;
  out.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    out.push_back({table.rows[i].target, verify_relation(table.record(i), sums)});
  }
  return out;
}

nlohmann::json pipeline_json(const PipelineConfig& config, const PipelineResult& result, const GuardReport& guard,
                             std::span<const RowVerification> verification) {
  nlohmann::json j;
  std::vector<std::uint64_t> primes;
  for (const Prime& p : config.primes) primes.push_back(p.value());
  j["config"] = {
      {"weight", config.weight},        {"primes", primes},
      {"bound", config.bound},          {"safety_factor", config.safety_factor.str()},
      {"keys_only", config.keys_only},
      {"left_policy", policy_name(config.left_policy)}, {"key_policy", policy_name(config.key_policy)},
  };
  std::vector<std::string> basis;
  for (const Index& k : result.basis) basis.push_back(k.to_string());
  j["basis"] = basis;
  j["expected_dimension"] = dimension_recursion(config.weight);
  j["guard"] = guard_json(guard);
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < result.relations.size(); ++i) {
    const RelationRecord& rec = result.relations[i];
    nlohmann::json row = {{"target", rec.target.to_string()}, {"coefficients", rec.coefficients}};
    if (i < verification.size()) {
      row["residues"] = verification[i].report.residues;
      row["holds"] = verification[i].report.holds();
    }
    rows.push_back(std::move(row));
  }
  j["relations"] = std::move(rows);
  j["stats"] = {
      {"key_length", result.stats.key_length},   {"left_length", result.stats.left_length},
      {"right_length", result.stats.right_length}, {"rebuilds", result.stats.rebuilds},
      {"zero_vectors", result.stats.zero_vectors},
  };
  return j;
}

}  // namespace fmzv
