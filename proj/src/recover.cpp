#include "arctree/recover.hpp"

#include "arctree/builder.hpp"

namespace arctree {

int anchor_of(const OrderedTree& tree, NodeId node) {
  const auto& n = tree.node(node);
  if (n.is_leaf()) return n.anchor;
  int found = 0;
  int index = 0;
  for (NodeId k : n.children) {
    if (tree.node(k).is_leaf()) {
      ++found;
      index = tree.node(k).anchor;
    }
  }
  if (found != 1) {
    throw MalformedTreeError("node " + std::to_string(node) + " has " + std::to_string(found) +
                             " direct leaves, expected 1");
  }
  if (index != n.anchor) {
    throw MalformedTreeError("node " + std::to_string(node) + " records anchor " +
                             std::to_string(n.anchor) + " but its leaf is " +
                             std::to_string(index));
  }
  return index;
}

DependencyTree recover(const OrderedTree& tree, const Sentence& sentence) {
  if (tree.empty()) throw MalformedTreeError("recover: empty tree");
  const NodeId root = tree.root();
  if (tree.node(root).is_leaf()) throw MalformedTreeError("recover: root is a bare leaf");

  // Anchoring first, so the error names the offending node.
  const auto order = tree.preorder();
  for (NodeId id : order) {
    if (!tree.node(id).is_leaf()) anchor_of(tree, id);
  }
  const auto violations = check_ordered_tree(tree);
  if (!violations.empty()) {
    throw MalformedTreeError("recover: " + std::string(tree_rule_name(violations.front().rule)) +
                             " violated at node " + std::to_string(violations.front().node));
  }

  int leaves = 0;
  for (NodeId id : order) {
    const auto& n = tree.node(id);
    if (!n.is_leaf()) continue;
    ++leaves;
    // Surface order already holds, so the k-th leaf must be token k.
    if (n.anchor != leaves) {
      throw MalformedTreeError("recover: leaf set is not 1..n (found " + std::to_string(n.anchor) +
                               " at position " + std::to_string(leaves) + ")");
    }
    if (leaves > sentence.size() || sentence.at(leaves).form != n.form) {
      throw MalformedTreeError("recover: leaf " + std::to_string(leaves) +
                               " does not match the sentence");
    }
  }
  if (leaves != sentence.size()) {
    throw MalformedTreeError("recover: tree has " + std::to_string(leaves) +
                             " leaves, sentence has " + std::to_string(sentence.size()));
  }

  auto label_of = [&](NodeId id) {
    const auto& l = tree.node(id).label;
    return l ? *l : std::string(kUnlabeled);
  };

  DependencyTree out;
  out.sentence = sentence;
  out.arcs.reserve(static_cast<std::size_t>(leaves));
  out.arcs.push_back(Arc{kRootIndex, tree.node(root).anchor, label_of(root)});
  for (NodeId id : order) {
    const auto& n = tree.node(id);
    if (n.is_leaf()) continue;
    for (NodeId k : n.children) {
      const auto& child = tree.node(k);
      if (!child.is_leaf()) out.arcs.push_back(Arc{n.anchor, child.anchor, label_of(k)});
    }
  }
  sort_arcs(out.arcs);
  return out;
}

}  // namespace arctree
