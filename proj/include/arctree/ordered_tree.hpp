#pragma once

// Rooted ordered trees whose leaves are sentence tokens. Nodes live in a
// flat arena and refer to their children by id, so trees of any depth can
// be built, copied, compared and destroyed without recursion.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arctree/core.hpp"

namespace arctree {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

enum class NodeKind : std::uint8_t { kLeaf, kInternal };

struct OrderedNode {
  NodeKind kind = NodeKind::kLeaf;
  int anchor = 0;

  // Internal nodes. An absent label is a head whose own incoming arc has
  // not been built yet; it renders as UA.
  std::optional<std::string> label;
  std::vector<NodeId> children;

  // Leaves. The part-of-speech is carried for rendering only.
  std::string form;
  std::optional<std::string> upos;

  bool is_leaf() const { return kind == NodeKind::kLeaf; }
};

class OrderedTree {
 public:
  NodeId add_leaf(int anchor, std::string form, std::optional<std::string> upos = std::nullopt);
  NodeId add_leaf(const Token& token) { return add_leaf(token.index, token.form, token.upos); }
  NodeId add_internal(std::optional<std::string> label, int anchor, std::vector<NodeId> children);

  void set_root(NodeId id) { root_ = id; }
  NodeId root() const { return root_; }
  bool empty() const { return root_ == kNoNode; }

  const OrderedNode& node(NodeId id) const { return nodes_.at(id); }
  std::size_t arena_size() const { return nodes_.size(); }

  // Arena editing for incremental construction.
  void prepend_child(NodeId parent, NodeId child);
  void append_child(NodeId parent, NodeId child);
  void set_label(NodeId id, std::optional<std::string> label);

  // Copies the subtree under `id` into a fresh, compact tree rooted there.
  OrderedTree extract(NodeId id) const;

  // Node ids reachable from the root in preorder (children left to right).
  std::vector<NodeId> preorder() const { return preorder_from(root_); }
  std::vector<NodeId> preorder_from(NodeId start) const;

  // Structural equality of the reachable trees; arena layout is ignored.
  friend bool operator==(const OrderedTree& a, const OrderedTree& b);

 private:
  std::vector<OrderedNode> nodes_;
  NodeId root_ = kNoNode;
};

}  // namespace arctree
