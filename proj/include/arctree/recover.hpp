#pragma once

// Dependency arcs read back off an ordered tree: the root node gives the
// arc from 0, and every internal child of a node anchored at h gives an
// arc from h to the child's anchor, labelled with the child's label.

#include "arctree/core.hpp"
#include "arctree/ordered_tree.hpp"

namespace arctree {

// Index of the node's single direct leaf child (or of the leaf itself).
// Throws MalformedTreeError when there is not exactly one, or when it
// disagrees with the node's recorded anchor.
int anchor_of(const OrderedTree& tree, NodeId node);

// Requires a canonical tree whose leaves are exactly 1..n with the forms
// of `sentence`. Throws MalformedTreeError otherwise.
DependencyTree recover(const OrderedTree& tree, const Sentence& sentence);

}  // namespace arctree
