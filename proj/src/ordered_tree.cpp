#include "arctree/ordered_tree.hpp"

#include <utility>

namespace arctree {

NodeId OrderedTree::add_leaf(int anchor, std::string form, std::optional<std::string> upos) {
  OrderedNode n;
  n.kind = NodeKind::kLeaf;
  n.anchor = anchor;
  n.form = std::move(form);
  n.upos = std::move(upos);
  nodes_.push_back(std::move(n));
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId OrderedTree::add_internal(std::optional<std::string> label, int anchor,
                                 std::vector<NodeId> children) {
  OrderedNode n;
  n.kind = NodeKind::kInternal;
  n.anchor = anchor;
  n.label = std::move(label);
  n.children = std::move(children);
  nodes_.push_back(std::move(n));
  return static_cast<NodeId>(nodes_.size() - 1);
}

void OrderedTree::prepend_child(NodeId parent, NodeId child) {
  auto& kids = nodes_.at(parent).children;
  kids.insert(kids.begin(), child);
}

void OrderedTree::append_child(NodeId parent, NodeId child) {
  nodes_.at(parent).children.push_back(child);
}

void OrderedTree::set_label(NodeId id, std::optional<std::string> label) {
  nodes_.at(id).label = std::move(label);
}

std::vector<NodeId> OrderedTree::preorder_from(NodeId start) const {
  std::vector<NodeId> order;
  if (start == kNoNode) return order;
  std::vector<NodeId> stack{start};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    order.push_back(id);
    const auto& kids = nodes_.at(id).children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

OrderedTree OrderedTree::extract(NodeId id) const {
  OrderedTree out;
  if (id == kNoNode) return out;
  // Copy in preorder, then rewrite child ids through the old->new map.
  const auto order = preorder_from(id);
  std::vector<NodeId> remap(nodes_.size(), kNoNode);
  out.nodes_.reserve(order.size());
  for (NodeId v : order) {
    remap[v] = static_cast<NodeId>(out.nodes_.size());
    out.nodes_.push_back(nodes_[v]);
  }
  for (auto& n : out.nodes_) {
    for (auto& c : n.children) c = remap.at(c);
  }
  out.root_ = 0;
  return out;
}

bool operator==(const OrderedTree& a, const OrderedTree& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  std::vector<std::pair<NodeId, NodeId>> stack{{a.root_, b.root_}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    const OrderedNode& p = a.nodes_.at(x);
    const OrderedNode& q = b.nodes_.at(y);
    if (p.kind != q.kind || p.anchor != q.anchor || p.label != q.label || p.form != q.form ||
        p.upos != q.upos || p.children.size() != q.children.size()) {
      return false;
    }
    for (std::size_t i = 0; i < p.children.size(); ++i) {
      stack.emplace_back(p.children[i], q.children[i]);
    }
  }
  return true;
}

}  // namespace arctree
