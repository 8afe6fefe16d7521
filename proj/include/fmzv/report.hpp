#pragma once

// Config files, harmonic-sum dumps and JSON reports shared by the CLI.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fmzv/crt_pipeline.hpp"
#include "fmzv/harmonic.hpp"
#include "fmzv/relation_table.hpp"

namespace fmzv {

// Comma-separated primes, e.g. "10007,10009".
std::vector<Prime> parse_prime_list(std::string_view text);

// key = value lines; '#' starts a comment. Keys: weight, primes, bound,
// safety_factor, workers, keys_only. Unknown keys are rejected.
PipelineConfig parse_config(std::istream& in);
PipelineConfig load_config(const std::string& path);

// CSV "index,prime,value", canonical index order, then prime order.
void write_harmonic_csv(std::ostream& out, const HarmonicSums& sums);

nlohmann::json guard_json(const GuardReport& guard);

struct RowVerification {
  Index target;
  VerificationReport report;
};

// Residues for every row, computed from one harmonic pass over the table's
// indices.
std::vector<RowVerification> verify_table(const RelationTable& table, std::span<const Prime> primes, int workers);

nlohmann::json pipeline_json(const PipelineConfig& config, const PipelineResult& result, const GuardReport& guard,
                             std::span<const RowVerification> verification);

}  // namespace fmzv
