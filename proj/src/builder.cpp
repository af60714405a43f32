#include "arctree/builder.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace arctree {

std::string_view tree_rule_name(TreeRule rule) {
  switch (rule) {
    case TreeRule::kEmpty: return "empty-tree";
    case TreeRule::kLeafWithChildren: return "leaf-with-children";
    case TreeRule::kChildless: return "childless-internal";
    case TreeRule::kDuplicateLeaf: return "duplicate-leaf";
    case TreeRule::kSurfaceOrder: return "surface-order";
    case TreeRule::kContiguity: return "contiguity";
    case TreeRule::kAnchoring: return "anchoring";
    case TreeRule::kAnchorMismatch: return "anchor-mismatch";
    case TreeRule::kChildOrder: return "child-order";
  }
  return "unknown";
}

YieldReport yields(const OrderedTree& tree) {
  YieldReport report;
  report.extent.assign(tree.arena_size(), std::nullopt);
  const auto order = tree.preorder();
  if (order.empty()) return report;

  std::vector<int> count(tree.arena_size(), 0);
  bool duplicates = false;
  {
    std::set<int> seen;
    for (NodeId id : order) {
      const auto& n = tree.node(id);
      if (n.is_leaf() && !seen.insert(n.anchor).second) duplicates = true;
    }
  }

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& n = tree.node(*it);
    if (n.is_leaf() && n.children.empty()) {
      report.extent[*it] = Interval{n.anchor, n.anchor};
      count[*it] = 1;
      continue;
    }
    std::optional<Interval> e;
    int c = 0;
    if (n.is_leaf()) {
      e = Interval{n.anchor, n.anchor};
      c = 1;
    }
    for (NodeId k : n.children) {
      const auto& ke = report.extent[k];
      if (!ke) continue;
      e = e ? Interval{std::min(e->lo, ke->lo), std::max(e->hi, ke->hi)} : *ke;
      c += count[k];
    }
    report.extent[*it] = e;
    count[*it] = c;
  }

  if (!duplicates) {
    for (NodeId id : order) {
      const auto& e = report.extent[id];
      if (e && count[id] != e->hi - e->lo + 1) report.noncontiguous.push_back(id);
    }
    return report;
  }

  // Repeated leaves make counts meaningless; fall back to explicit sets.
  std::vector<std::set<int>> sets(tree.arena_size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& n = tree.node(*it);
    if (n.is_leaf()) sets[*it].insert(n.anchor);
    for (NodeId k : n.children) sets[*it].insert(sets[k].begin(), sets[k].end());
  }
  for (NodeId id : order) {
    const auto& s = sets[id];
    if (!s.empty() && static_cast<int>(s.size()) != *s.rbegin() - *s.begin() + 1) {
      report.noncontiguous.push_back(id);
    }
  }
  return report;
}

std::vector<TreeViolation> check_ordered_tree(const OrderedTree& tree) {
  std::vector<TreeViolation> out;
  if (tree.empty()) {
    out.push_back({TreeRule::kEmpty, kNoNode});
    return out;
  }
  const auto order = tree.preorder();
  const auto report = yields(tree);

  std::set<int> seen;
  int last_leaf = -1;
  for (NodeId id : order) {
    const auto& n = tree.node(id);
    if (n.is_leaf()) {
      if (!n.children.empty()) out.push_back({TreeRule::kLeafWithChildren, id});
      if (!seen.insert(n.anchor).second) out.push_back({TreeRule::kDuplicateLeaf, id});
      if (n.anchor <= last_leaf) out.push_back({TreeRule::kSurfaceOrder, id});
      last_leaf = std::max(last_leaf, n.anchor);
      continue;
    }
    if (n.children.empty()) {
      out.push_back({TreeRule::kChildless, id});
      continue;
    }
    int direct_leaves = 0;
    int leaf_index = 0;
    for (NodeId k : n.children) {
      if (tree.node(k).is_leaf()) {
        ++direct_leaves;
        leaf_index = tree.node(k).anchor;
      }
    }
    if (direct_leaves != 1) {
      out.push_back({TreeRule::kAnchoring, id});
    } else if (leaf_index != n.anchor) {
      out.push_back({TreeRule::kAnchorMismatch, id});
    }
    for (std::size_t i = 1; i < n.children.size(); ++i) {
      const auto& prev = report.extent[n.children[i - 1]];
      const auto& cur = report.extent[n.children[i]];
      if (prev && cur && prev->lo >= cur->lo) {
        out.push_back({TreeRule::kChildOrder, id});
        break;
      }
    }
  }
  for (NodeId id : report.noncontiguous) out.push_back({TreeRule::kContiguity, id});
  return out;
}

void assert_ordered_tree(const OrderedTree& tree, std::string_view where) {
  const auto violations = check_ordered_tree(tree);
  if (violations.empty()) return;
  std::string msg(where);
  msg += ": ordered tree invariant broken:";
  for (const auto& v : violations) {
    msg += " ";
    msg += tree_rule_name(v.rule);
    msg += "@" + std::to_string(v.node);
  }
  throw InternalError(msg);
}

OrderedTree build(const DependencyTree& dtree) {
  require_valid(dtree);
  if (!is_projective(dtree)) {
    const auto pair = tightest_crossing_pair(dtree);
    throw NonProjectiveError("build: non-projective tree, crossing arcs " +
                             (pair ? to_string(*pair) : std::string("?")));
  }
  const int n = dtree.size();
  const auto heads = dtree.head_vector();
  const auto labels = dtree.label_vector();

  // dlookup(h); arcs may come in any order, so sort each list.
  std::vector<std::vector<int>> dependents(static_cast<std::size_t>(n) + 1);
  for (int d = 1; d <= n; ++d) dependents[static_cast<std::size_t>(heads[d])].push_back(d);
  for (auto& ds : dependents) std::sort(ds.begin(), ds.end());
  const int root = dependents[0].front();

  // Postorder over heads with an explicit stack so that deep chains are fine.
  OrderedTree out;
  std::vector<NodeId> built(static_cast<std::size_t>(n) + 1, kNoNode);
  std::vector<std::pair<int, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [h, expanded] = stack.back();
    stack.pop_back();
    const auto& deps = dependents[static_cast<std::size_t>(h)];
    if (!expanded) {
      stack.emplace_back(h, true);
      for (int d : deps) stack.emplace_back(d, false);
      continue;
    }
    // C(h): {h} ∪ dlookup(h), increasing.
    std::vector<NodeId> children;
    children.reserve(deps.size() + 1);
    bool leaf_placed = false;
    for (int d : deps) {
      if (!leaf_placed && h < d) {
        children.push_back(out.add_leaf(dtree.sentence.at(h)));
        leaf_placed = true;
      }
      children.push_back(built[static_cast<std::size_t>(d)]);
    }
    if (!leaf_placed) children.push_back(out.add_leaf(dtree.sentence.at(h)));
    built[static_cast<std::size_t>(h)] =
        out.add_internal(labels[static_cast<std::size_t>(h)], h, std::move(children));
  }
  out.set_root(built[static_cast<std::size_t>(root)]);
  assert_ordered_tree(out, "build");
  return out;
}

}  // namespace arctree
