#pragma once

// Mod-p multiple harmonic sums
//
//   rdp_p(k, j) = sum over 0 < m_0 < ... < m_{L-1} <= j of prod m_l^{-k_l}  (mod p)
//
// with rdp_p((), j) = 1. The finite multiple zeta value of k is represented
// by the family rdp_p(k, p - 1) over primes p.

#include <cstdint>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fmzv/indices.hpp"
#include "fmzv/modarith.hpp"

namespace fmzv {

enum class Engine { Naive, Horizontal, Vertical, Tree, Auto };

Engine parse_engine(std::string_view name);
std::string_view engine_name(Engine e);

// Direct nested enumeration, Theta(j^depth). Requires j < p.
Residue rdp_naive(Prime p, const Index& k, std::uint64_t j);

// One pass over j = 1..p-1 keeping a value per prefix; entry l is
// rdp_p(prefix of length l, p - 1).
std::vector<Residue> rdp_horizontal(Prime p, const Index& k);

// One pass per part over the array j -> rdp_p(prefix, j).
Residue rdp_vertical(Prime p, const Index& k,
                     std::uint64_t inverse_table_budget = kInverseTableBudget);

// Horizontal when depth <= log2(p), vertical otherwise.
Engine auto_engine(Prime p, const Index& k);

// rdp_p(k, p - 1) for every node of a tree of indices.
class HarmonicTable {
 public:
  HarmonicTable(Prime prime, const IndexTree& tree, std::vector<std::uint64_t> values);

  Prime prime() const { return prime_; }
  std::size_t size() const { return values_.size(); }
  bool contains(const Index& k) const { return lookup_.contains(k); }
  Residue at(const Index& k) const;
  Residue at_node(NodeId id) const { return Residue(values_[id], prime_); }
  std::span<const std::uint64_t> node_values() const { return values_; }

 private:
  Prime prime_;
  std::vector<std::uint64_t> values_;
  std::unordered_map<Index, NodeId, IndexHash> lookup_;
};

// Serial reference for the tree DP: values indexed by node id.
std::vector<std::uint64_t> tree_dp_serial(Prime p, const IndexTree& t);

// Tree DP with the tree split into independent subtree tasks run on
// `workers` OpenMP threads. Bit-identical to tree_dp_serial.
std::vector<std::uint64_t> tree_dp_parallel(Prime p, const IndexTree& t, int workers);

HarmonicTable parallel_horizontal_dp(Prime p, const IndexTree& t, int workers = 1);

// Residues of one index across a fixed prime list.
struct ResidueVector {
  Index index;
  std::vector<std::uint64_t> values;

  bool is_zero() const;
};

// Harmonic sums of every index of weight w, in canonical order.
class HarmonicSums {
 public:
  HarmonicSums(std::vector<Prime> primes, std::vector<ResidueVector> vectors);

  std::span<const Prime> primes() const { return primes_; }
  std::span<const ResidueVector> vectors() const { return vectors_; }
  const ResidueVector& at(const Index& k) const;
  bool contains(const Index& k) const { return lookup_.contains(k); }

 private:
  std::vector<Prime> primes_;
  std::vector<ResidueVector> vectors_;
  std::unordered_map<Index, std::size_t, IndexHash> lookup_;
};

struct HarmonicOptions {
  Engine engine = Engine::Tree;
  int workers = 1;
};

// Primes must be distinct and exceed w. Primes are processed concurrently.
HarmonicSums mod_harmonic_sums(std::span<const Prime> primes, std::uint32_t w,
                               const HarmonicOptions& options = {});

// Harmonic sums for an explicit index list (any weights), same engines.
HarmonicSums harmonic_sums_for(std::span<const Prime> primes, std::span<const Index> indices,
                               const HarmonicOptions& options = {});

}  // namespace fmzv
