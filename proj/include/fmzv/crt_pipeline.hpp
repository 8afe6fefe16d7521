#pragma once

// Relation discovery among weight-w finite multiple zeta values from
// harmonic sums modulo several primes, using a dynamic MITM search keyed by
// residue tuples over a growing prefix of the prime list.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fmzv/dynamic_mitm.hpp"
#include "fmzv/harmonic.hpp"
#include "fmzv/indices.hpp"
#include "fmzv/modarith.hpp"

namespace fmzv {

// How many leading primes form the dictionary key.
enum class KeyPolicy { CostModel, AllPrimes, NoPrimes };

KeyPolicy parse_key_policy(std::string_view name);

struct PipelineConfig {
  std::uint32_t weight = 0;
  std::vector<Prime> primes;
  std::uint32_t bound = 0;
  BigInt safety_factor = 1000000;
  int workers = 1;
  bool keys_only = false;
  RebuildPolicy left_policy = RebuildPolicy::CostModel;
  KeyPolicy key_policy = KeyPolicy::CostModel;
};

// Throws ConfigError on duplicate primes or a prime not exceeding the bound
// or the weight.
void validate(const PipelineConfig& config);

BigInt modulus_product(std::span<const Prime> primes);

// B^left * key_length + (H - h) * B^(right + 1) * floor(B^left / N), saturating.
// `generators` is accepted for signature parity and does not enter the value.
std::uint64_t cost_l(std::uint64_t bound, std::uint64_t generators, std::uint64_t left, std::uint64_t right,
                     std::uint64_t total, std::uint64_t processed, std::uint64_t key_length,
                     const BigInt& partial_modulus);

// d_0 = d_3 = 1, d_1 = d_2 = 0, d_w = d_{w-2} + d_{w-3}.
std::uint64_t dimension_recursion(std::uint32_t w);

struct GuardReport {
  BigInt modulus;            // N = product of the primes
  BigInt threshold;          // #K_w * B^(2d + 2)
  BigInt compact_threshold;  // #K_w * B^d
  BigInt safety_factor;
  std::uint64_t d_estimate = 0;
  bool pass = false;
  // log10(N / threshold); +inf when the threshold is 0.
  double log10_ratio = 0.0;
  double log10_compact_ratio = 0.0;
};

GuardReport vanishing_guard(const PipelineConfig& config, std::uint64_t d_estimate);

// sum_i coefficients[i] * zeta(basis[i]) + coefficients.back() * zeta(target) = 0.
struct RelationRecord {
  std::vector<Index> basis;
  Index target;
  std::vector<std::int64_t> coefficients;

  bool trivial() const;  // all basis coefficients zero
  friend bool operator==(const RelationRecord&, const RelationRecord&) = default;
};

struct PipelineStats {
  std::size_t key_length = 0;
  std::size_t left_length = 0;
  std::size_t right_length = 0;
  std::size_t rebuilds = 0;
  std::size_t zero_vectors = 0;
};

struct PipelineResult {
  std::vector<Index> basis;
  // One record per non-basis index of K_w, canonical order.
  std::vector<RelationRecord> relations;
  PipelineStats stats;
};

PipelineResult run_pipeline(const PipelineConfig& config);

// Same search on precomputed residue vectors (canonical K_w order).
PipelineResult run_pipeline(const PipelineConfig& config, const HarmonicSums& sums);

struct VerificationReport {
  std::vector<std::uint64_t> residues;  // one per prime
  bool holds() const;
};

VerificationReport verify_relation(const RelationRecord& record, std::span<const Prime> primes);

// Verification against residues computed once for many records.
VerificationReport verify_relation(const RelationRecord& record, const HarmonicSums& sums);

// Weight shared by every index in the record; WeightMismatch otherwise.
std::uint64_t record_weight(const RelationRecord& record);

}  // namespace fmzv
