#include "fmzv/harmonic.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fmzv {

Engine parse_engine(std::string_view name) {
  if (name == "naive") return Engine::Naive;
  if (name == "horizontal") return Engine::Horizontal;
  if (name == "vertical") return Engine::Vertical;
  if (name == "tree") return Engine::Tree;
  if (name == "auto") return Engine::Auto;
  throw ConfigError("unknown engine '" + std::string(name) + "'");
}

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::Naive: return "naive";
    case Engine::Horizontal: return "horizontal";
    case Engine::Vertical: return "vertical";
    case Engine::Tree: return "tree";
    case Engine::Auto: return "auto";
  }
  return "?";
}

namespace {

// inv^1 .. inv^max_part, written into powers[1..max_part].
void fill_inverse_powers(std::uint64_t inv, Part max_part, std::uint64_t p, std::vector<std::uint64_t>& powers) {
  powers.resize(max_part + 1);
  powers[0] = 1;
  for (Part e = 1; e <= max_part; ++e) powers[e] = mul_mod(powers[e - 1], inv, p);
}

// inv_powers[m * stride + a] = m^{-a}.
std::uint64_t naive_sum(std::uint64_t p, std::span<const Part> parts, std::uint64_t lo, std::uint64_t j,
                        const std::vector<std::uint64_t>& inv_powers, std::size_t stride) {
  if (parts.empty()) return 1;
  std::uint64_t total = 0;
  // m_0 ranges so that the remaining depth - 1 entries still fit below j.
  const std::uint64_t rest = parts.size() - 1;
  for (std::uint64_t m = lo; m + rest <= j; ++m) {
    const std::uint64_t term = inv_powers[m * stride + parts[0]];
    const std::uint64_t tail = naive_sum(p, parts.subspan(1), m + 1, j, inv_powers, stride);
    total = add_mod(total, mul_mod(term, tail, p), p);
  }
  return total;
}

}  // namespace

Residue rdp_naive(Prime p, const Index& k, std::uint64_t j) {
  if (j >= p.value()) throw Error("rdp_naive: j must be below p");
  const auto parts = k.parts();
  const Part max_part = parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
  const std::size_t stride = max_part + 1;
  std::vector<std::uint64_t> inv_powers((j + 1) * stride), row;
  for (std::uint64_t m = 1; m <= j && max_part > 0; ++m) {
    fill_inverse_powers(inverse_euclid(m, p.value()), max_part, p.value(), row);
    std::copy(row.begin(), row.end(), inv_powers.begin() + static_cast<std::ptrdiff_t>(m * stride));
  }
  return Residue(naive_sum(p.value(), parts, 1, j, inv_powers, stride), p);
}

std::vector<Residue> rdp_horizontal(Prime p, const Index& k) {
  const std::uint64_t m = p.value();
  const auto parts = k.parts();
  const Part max_part = parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
  std::vector<std::uint64_t> acc(parts.size() + 1, 0);
  acc[0] = 1;
  std::vector<std::uint64_t> powers;
  for (std::uint64_t j = 1; j < m && !parts.empty(); ++j) {
    fill_inverse_powers(inverse_euclid(j, m), max_part, m, powers);
    // Deepest prefix first so acc[l - 1] still holds its value at j - 1.
    for (std::size_t l = parts.size(); l >= 1; --l) {
      acc[l] = add_mod(acc[l], mul_mod(acc[l - 1], powers[parts[l - 1]], m), m);
    }
  }
  std::vector<Residue> out;
  out.reserve(acc.size());
  for (std::uint64_t v : acc) out.emplace_back(v, p);
  return out;
}

Residue rdp_vertical(Prime p, const Index& k, std::uint64_t inverse_table_budget) {
  const std::uint64_t m = p.value();
  std::vector<std::uint64_t> inv;
  if (m <= inverse_table_budget) {
    InverseTable table(p);
    inv.assign(table.values().begin(), table.values().end());
  } else {
    inv.resize(m);
    for (std::uint64_t j = 1; j < m; ++j) inv[j] = inverse_pow(j, m);
  }
  std::vector<std::uint64_t> row(m, 1);
  for (Part part : k.parts()) {
    std::uint64_t previous_old = row[0];
    row[0] = 0;
    for (std::uint64_t j = 1; j < m; ++j) {
      const std::uint64_t old = row[j];
      const std::uint64_t step = pow_mod(inv[j], part, m);
      row[j] = add_mod(row[j - 1], mul_mod(previous_old, step, m), m);
      previous_old = old;
    }
  }
  return Residue(row[m - 1], p);
}

Engine auto_engine(Prime p, const Index& k) {
  const auto log2p = static_cast<std::size_t>(std::bit_width(p.value()) - 1);
  return k.depth() <= log2p ? Engine::Horizontal : Engine::Vertical;
}

HarmonicTable::HarmonicTable(Prime prime, const IndexTree& tree, std::vector<std::uint64_t> values)
    : prime_(prime), values_(std::move(values)) {
  if (values_.size() != tree.size()) throw Error("HarmonicTable: value count differs from tree size");
  lookup_.reserve(tree.size());
  for (NodeId id = 0; id < tree.size(); ++id) lookup_.emplace(tree.index_of(id), id);
}

Residue HarmonicTable::at(const Index& k) const {
  auto it = lookup_.find(k);
  if (it == lookup_.end()) throw Error("index " + k.to_string() + " is not a node of the table");
  return Residue(values_[it->second], prime_);
}

std::vector<std::uint64_t> tree_dp_serial(Prime p, const IndexTree& t) {
  const std::uint64_t m = p.value();
  const auto nodes = t.nodes();
  std::vector<std::uint64_t> values(nodes.size(), 0);
  values[IndexTree::root()] = 1;
  std::vector<std::uint64_t> powers;
  for (std::uint64_t j = 1; j < m && nodes.size() > 1; ++j) {
    fill_inverse_powers(inverse_euclid(j, m), t.max_part(), m, powers);
    // Descending ids visit children before parents: each child reads its
    // parent's value at j - 1.
    for (NodeId id = static_cast<NodeId>(nodes.size() - 1); id >= 1; --id) {
      const auto& n = nodes[id];
      values[id] = add_mod(values[id], mul_mod(values[n.parent], powers[n.part], m), m);
    }
  }
  return values;
}

namespace {

struct SubtreeTask {
  std::vector<NodeId> local;       // ancestor chain plus subtree, descending ids
  std::vector<bool> owned;         // parallel to local
};

std::vector<std::size_t> subtree_sizes(const IndexTree& t) {
  std::vector<std::size_t> sizes(t.size(), 1);
  for (NodeId id = static_cast<NodeId>(t.size() - 1); id >= 1; --id) sizes[t.node(id).parent] += sizes[id];
  return sizes;
}

// Splits the tree into subtrees of at most ~size/target nodes each. A task
// recomputes its ancestor chain privately; every non-root node is owned by
// exactly one task.
std::vector<SubtreeTask> plan_tasks(const IndexTree& t, std::size_t target) {
  const auto sizes = subtree_sizes(t);
  const std::size_t limit = std::max<std::size_t>(1, (t.size() + target - 1) / target);
  std::vector<NodeId> frontier;
  std::vector<NodeId> pending;
  for (auto it = t.node(IndexTree::root()).children.rbegin(); it != t.node(IndexTree::root()).children.rend(); ++it) {
    pending.push_back(it->second);
  }
  while (!pending.empty()) {
    NodeId id = pending.back();
    pending.pop_back();
    const auto& ch = t.node(id).children;
    if (sizes[id] > limit && !ch.empty()) {
      // id itself is later claimed through an ancestor walk.
      for (auto it = ch.rbegin(); it != ch.rend(); ++it) pending.push_back(it->second);
    } else {
      frontier.push_back(id);
    }
  }

  std::vector<int> owner(t.size(), -1);
  std::vector<SubtreeTask> tasks(frontier.size());
  for (std::size_t ti = 0; ti < frontier.size(); ++ti) {
    std::vector<NodeId> members;
    std::vector<NodeId> stack{frontier[ti]};
    while (!stack.empty()) {
      NodeId id = stack.back();
      stack.pop_back();
      members.push_back(id);
      owner[id] = static_cast<int>(ti);
      for (const auto& [part, child] : t.node(id).children) stack.push_back(child);
    }
    for (NodeId a = t.node(frontier[ti]).parent; a != IndexTree::root(); a = t.node(a).parent) {
      members.push_back(a);
      if (owner[a] < 0) owner[a] = static_cast<int>(ti);
    }
    std::sort(members.begin(), members.end(), std::greater<>());
    tasks[ti].local = std::move(members);
  }
  for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
    tasks[ti].owned.resize(tasks[ti].local.size());
    for (std::size_t i = 0; i < tasks[ti].local.size(); ++i) {
      tasks[ti].owned[i] = owner[tasks[ti].local[i]] == static_cast<int>(ti);
    }
  }
  return tasks;
}

void run_task(std::uint64_t m, const IndexTree& t, const SubtreeTask& task, std::vector<std::uint64_t>& out) {
  const std::size_t n = task.local.size();
  // Position of each local node's parent within `local`, or n for the root.
  std::vector<std::size_t> parent_slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId parent = t.node(task.local[i]).parent;
    for (std::size_t k = i + 1; k < n && parent != IndexTree::root(); ++k) {
      if (task.local[k] == parent) {
        parent_slot[i] = k;
        break;
      }
    }
  }
  std::vector<std::uint64_t> values(n + 1, 0);
  values[n] = 1;
  std::vector<std::uint64_t> powers;
  for (std::uint64_t j = 1; j < m; ++j) {
    fill_inverse_powers(inverse_euclid(j, m), t.max_part(), m, powers);
    for (std::size_t i = 0; i < n; ++i) {
      values[i] = add_mod(values[i], mul_mod(values[parent_slot[i]], powers[t.node(task.local[i]).part], m), m);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (task.owned[i]) out[task.local[i]] = values[i];
  }
}

}  // namespace

std::vector<std::uint64_t> tree_dp_parallel(Prime p, const IndexTree& t, int workers) {
  if (workers <= 1 || t.size() <= 2) return tree_dp_serial(p, t);
  const auto tasks = plan_tasks(t, static_cast<std::size_t>(workers) * 4);
  std::vector<std::uint64_t> values(t.size(), 0);
  values[IndexTree::root()] = 1;
  const std::uint64_t m = p.value();
  const auto count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    run_task(m, t, tasks[static_cast<std::size_t>(i)], values);
  }
  return values;
}

HarmonicTable parallel_horizontal_dp(Prime p, const IndexTree& t, int workers) {
  return HarmonicTable(p, t, tree_dp_parallel(p, t, workers));
}

bool ResidueVector::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](std::uint64_t v) { return v == 0; });
}

HarmonicSums::HarmonicSums(std::vector<Prime> primes, std::vector<ResidueVector> vectors)
    : primes_(std::move(primes)), vectors_(std::move(vectors)) {
  lookup_.reserve(vectors_.size());
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (vectors_[i].values.size() != primes_.size()) throw Error("residue vector length differs from prime count");
    lookup_.emplace(vectors_[i].index, i);
  }
}

const ResidueVector& HarmonicSums::at(const Index& k) const {
  auto it = lookup_.find(k);
  if (it == lookup_.end()) throw Error("no harmonic sums stored for " + k.to_string());
  return vectors_[it->second];
}

namespace {

void check_primes(std::span<const Prime> primes) {
  std::set<std::uint64_t> seen;
  for (const Prime& p : primes) {
    if (!seen.insert(p.value()).second) throw DuplicatePrime("prime " + std::to_string(p.value()) + " repeated");
  }
}

// Trie over all prefixes of the given indices; node ids of the indices in `ids`.
IndexTree prefix_trie(std::span<const Index> indices, std::vector<NodeId>& ids) {
  IndexTree t;
  std::map<std::pair<NodeId, Part>, NodeId> edges;
  ids.clear();
  for (const Index& k : indices) {
    NodeId cur = IndexTree::root();
    for (Part part : k.parts()) {
      auto [it, inserted] = edges.try_emplace({cur, part}, 0);
      if (inserted) it->second = t.add_child(cur, part);
      cur = it->second;
    }
    ids.push_back(cur);
  }
  return t;
}

std::uint64_t single_index_value(Engine engine, Prime p, const Index& k) {
  if (engine == Engine::Auto) engine = auto_engine(p, k);
  switch (engine) {
    case Engine::Naive: return rdp_naive(p, k, p.value() - 1).value();
    case Engine::Horizontal: return rdp_horizontal(p, k).back().value();
    case Engine::Vertical: return rdp_vertical(p, k).value();
    default: break;
  }
  throw Error("single_index_value: tree engine handled elsewhere");
}

// Fills columns[prime][i] for each index; primes run concurrently.
HarmonicSums compute(std::span<const Prime> primes, std::span<const Index> indices, const IndexTree* tree,
                     std::span<const NodeId> node_ids, const HarmonicOptions& options) {
  check_primes(primes);
  const int workers = std::max(1, options.workers);
  std::vector<std::vector<std::uint64_t>> columns(primes.size());
  const auto count = static_cast<std::int64_t>(primes.size());
  // Concurrency goes to primes first; leftover workers split each tree.
  const int inner = primes.size() >= static_cast<std::size_t>(workers)
                        ? 1
                        : std::max(1, workers / std::max<int>(1, static_cast<int>(primes.size())));
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
  for (std::int64_t l = 0; l < count; ++l) {
    const Prime p = primes[static_cast<std::size_t>(l)];
    auto& column = columns[static_cast<std::size_t>(l)];
    column.resize(indices.size());
    if (options.engine == Engine::Tree) {
      const auto values = tree_dp_parallel(p, *tree, inner);
      for (std::size_t i = 0; i < indices.size(); ++i) column[i] = values[node_ids[i]];
    } else {
      for (std::size_t i = 0; i < indices.size(); ++i) column[i] = single_index_value(options.engine, p, indices[i]);
    }
  }
  std::vector<ResidueVector> vectors(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    vectors[i].index = indices[i];
    vectors[i].values.resize(primes.size());
    for (std::size_t l = 0; l < primes.size(); ++l) vectors[i].values[l] = columns[l][i];
  }
  return HarmonicSums(std::vector<Prime>(primes.begin(), primes.end()), std::move(vectors));
}

}  // namespace

HarmonicSums mod_harmonic_sums(std::span<const Prime> primes, std::uint32_t w, const HarmonicOptions& options) {
  for (const Prime& p : primes) {
    if (p.value() <= w) throw ConfigError("prime " + std::to_string(p.value()) + " does not exceed the weight");
  }
  const auto indices = enumerate_K(w);
  if (options.engine != Engine::Tree) return compute(primes, indices, nullptr, {}, options);

  const IndexTree tree = bounded_weight_tree(w);
  std::unordered_map<Index, NodeId, IndexHash> weight_w_nodes;
  for (NodeId id = 0; id < tree.size(); ++id) {
    if (tree.node(id).weight == w) weight_w_nodes.emplace(tree.index_of(id), id);
  }
  std::vector<NodeId> ids;
  ids.reserve(indices.size());
  for (const Index& k : indices) ids.push_back(weight_w_nodes.at(k));
  return compute(primes, indices, &tree, ids, options);
}

HarmonicSums harmonic_sums_for(std::span<const Prime> primes, std::span<const Index> indices,
                               const HarmonicOptions& options) {
  if (options.engine != Engine::Tree) return compute(primes, indices, nullptr, {}, options);
  std::vector<NodeId> ids;
  const IndexTree tree = prefix_trie(indices, ids);
  return compute(primes, indices, &tree, ids, options);
}

}  // namespace fmzv
