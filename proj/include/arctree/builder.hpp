#pragma once

// Ordered tree representation of a projective dependency tree: one
// internal node per token, labelled with the token's incoming relation,
// whose children are the token's own leaf and its dependents' subtrees in
// surface order.

#include <optional>
#include <string_view>
#include <vector>

#include "arctree/core.hpp"
#include "arctree/ordered_tree.hpp"

namespace arctree {

struct Interval {
  int lo = 0;
  int hi = 0;

  bool operator==(const Interval&) const = default;
};

struct YieldReport {
  // Indexed by NodeId; nullopt for arena nodes not reachable from the root.
  std::vector<std::optional<Interval>> extent;
  // Nodes whose leaf-index set is not a full interval, in preorder.
  std::vector<NodeId> noncontiguous;

  bool contiguous() const { return noncontiguous.empty(); }
  Interval of(NodeId id) const { return extent.at(id).value(); }
};

// (min, max) leaf index under every reachable node plus contiguity report.
YieldReport yields(const OrderedTree& tree);

enum class TreeRule {
  kEmpty,
  kLeafWithChildren,
  kChildless,
  kDuplicateLeaf,
  kSurfaceOrder,
  kContiguity,
  kAnchoring,
  kAnchorMismatch,
  kChildOrder,
};

std::string_view tree_rule_name(TreeRule rule);

struct TreeViolation {
  TreeRule rule;
  NodeId node;

  bool operator==(const TreeViolation&) const = default;
};

// Surface order, contiguity, unique anchoring and canonical child order.
std::vector<TreeViolation> check_ordered_tree(const OrderedTree& tree);

// Throws InternalError when check_ordered_tree reports anything; `where`
// prefixes the message.
void assert_ordered_tree(const OrderedTree& tree, std::string_view where);

// Throws PreconditionError on an invalid tree and NonProjectiveError
// (naming the tightest crossing pair) on a non-projective one.
OrderedTree build(const DependencyTree& tree);

}  // namespace arctree
