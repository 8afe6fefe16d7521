#include "fmzv/indices.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "fmzv/error.hpp"

namespace fmzv {

Index::Index(std::initializer_list<Part> parts) : Index(std::vector<Part>(parts)) {}

Index::Index(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (Part p : parts_) {
    if (p == 0) throw Error("index parts must be positive");
    weight_ += p;
  }
}

Index Index::appended(Part a) const {
  std::vector<Part> parts = parts_;
  parts.push_back(a);
  return Index(std::move(parts));
}

Index Index::prefix(std::size_t length) const {
  return Index(std::vector<Part>(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(length)));
}

std::string Index::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

Index parse_index(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw ParseError("index must be parenthesised: '" + std::string(text) + "'");
  }
  s = trim(s.substr(1, s.size() - 2));
  std::vector<Part> parts;
  if (s.empty()) return Index();
  while (true) {
    std::size_t comma = s.find(',');
    std::string_view token = trim(s.substr(0, comma));
    Part value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value == 0) {
      throw ParseError("bad index part '" + std::string(token) + "' in '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return Index(std::move(parts));
}

std::size_t IndexHash::operator()(const Index& k) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Part p : k.parts()) {
    h ^= p;
    h *= 0x100000001b3ull;
  }
  return h ^ k.depth();
}

bool canonical_less(const Index& a, const Index& b) {
  auto pa = a.parts();
  auto pb = b.parts();
  return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
}

namespace {

void compositions(std::uint32_t remaining, std::vector<Part>& prefix, std::vector<Index>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (Part a = remaining; a >= 1; --a) {
    prefix.push_back(a);
    compositions(remaining - a, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Index> enumerate_K(std::uint32_t w) {
  std::vector<Index> out;
  if (w < 63) out.reserve(w == 0 ? 1 : std::size_t{1} << (w - 1));
  std::vector<Part> prefix;
  compositions(w, prefix, out);
  return out;
}

IndexTree::IndexTree() { nodes_.emplace_back(); }

NodeId IndexTree::add_child(NodeId parent, Part part) {
  if (parent >= nodes_.size()) throw Error("add_child: unknown parent node");
  if (part == 0) throw Error("add_child: parts must be positive");
  const auto id = static_cast<NodeId>(nodes_.size());
  Node child;
  child.parent = parent;
  child.part = part;
  child.depth = nodes_[parent].depth + 1;
  child.weight = nodes_[parent].weight + part;
  nodes_.push_back(std::move(child));
  nodes_[parent].children.emplace_back(part, id);
  max_part_ = std::max(max_part_, part);
  return id;
}

Index IndexTree::index_of(NodeId id) const {
  std::vector<Part> parts(nodes_[id].depth);
  for (NodeId cur = id; cur != root(); cur = nodes_[cur].parent) {
    parts[nodes_[cur].depth - 1] = nodes_[cur].part;
  }
  return Index(std::move(parts));
}

std::vector<NodeId> IndexTree::dfs_order() const {
  std::vector<NodeId> order;
  order.reserve(nodes_.size());
  std::vector<NodeId> stack{root()};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    order.push_back(id);
    const auto& ch = nodes_[id].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(it->second);
  }
  return order;
}

IndexTree prefix_tree(const Index& k) {
  IndexTree t;
  NodeId cur = IndexTree::root();
  for (Part p : k.parts()) cur = t.add_child(cur, p);
  return t;
}

namespace {

void grow(IndexTree& t, NodeId id, std::uint32_t w) {
  const std::uint64_t used = t.node(id).weight;
  for (Part a = 1; a + used <= w; ++a) {
    NodeId child = t.add_child(id, a);
    grow(t, child, w);
  }
}

}  // namespace

IndexTree bounded_weight_tree(std::uint32_t w) {
  IndexTree t;
  grow(t, IndexTree::root(), w);
  return t;
}

std::uint64_t depth_sum(const IndexTree& t) {
  std::uint64_t total = 0;
  for (const auto& n : t.nodes()) total += n.depth;
  return total;
}

}  // namespace fmzv
