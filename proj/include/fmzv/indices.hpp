#pragma once

// Compositions (indices), the weight-w index set and trees of indices.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fmzv {

using Part = std::uint32_t;

// A finite sequence of positive integers; the empty index is allowed.
class Index {
 public:
  Index() = default;
  Index(std::initializer_list<Part> parts);
  explicit Index(std::vector<Part> parts);

  std::span<const Part> parts() const { return parts_; }
  std::size_t depth() const { return parts_.size(); }
  std::uint64_t weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }
  Part operator[](std::size_t i) const { return parts_[i]; }
  Part back() const { return parts_.back(); }

  Index appended(Part a) const;
  Index prefix(std::size_t length) const;

  std::string to_string() const;

  friend bool operator==(const Index& a, const Index& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Index& a, const Index& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<Part> parts_;
  std::uint64_t weight_ = 0;
};

// "(7,2,1)" or "()"; whitespace around tokens is tolerated.
Index parse_index(std::string_view text);

struct IndexHash {
  std::size_t operator()(const Index& k) const noexcept;
};

// Canonical order: larger leading parts first, compared left to right.
bool canonical_less(const Index& a, const Index& b);

// All compositions of w in canonical order.
std::vector<Index> enumerate_K(std::uint32_t w);

using NodeId = std::uint32_t;

// Rooted tree of indices. Node 0 is the empty index and every parent id is
// smaller than its children's ids.
class IndexTree {
 public:
  struct Node {
    NodeId parent = 0;
    Part part = 0;  // last entry; 0 for the root
    std::uint32_t depth = 0;
    std::uint64_t weight = 0;
    std::vector<std::pair<Part, NodeId>> children;
  };

  IndexTree();

  NodeId add_child(NodeId parent, Part part);

  std::size_t size() const { return nodes_.size(); }
  const Node& node(NodeId id) const { return nodes_[id]; }
  std::span<const Node> nodes() const { return nodes_; }
  static constexpr NodeId root() { return 0; }

  Index index_of(NodeId id) const;
  // Node ids in depth-first pre-order with children in insertion order.
  std::vector<NodeId> dfs_order() const;
  Part max_part() const { return max_part_; }

 private:
  std::vector<Node> nodes_;
  Part max_part_ = 0;
};

IndexTree prefix_tree(const Index& k);
IndexTree bounded_weight_tree(std::uint32_t w);
std::uint64_t depth_sum(const IndexTree& t);

}  // namespace fmzv
