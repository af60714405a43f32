#pragma once

// Arc-standard derivations executed as ordered tree construction.
//
// Every stack item is a partial tree with a contiguous yield and a single
// lexical anchor. SHIFT pushes a bare leaf. LEFTARC(l) labels the second
// item with l (wrapping a bare leaf in a node first) and inserts it as the
// leftmost child of the top item's tree; RIGHTARC(l) labels the top item
// and appends it as the rightmost child of the second. A bare head grows a
// node of its own, whose label stays pending (rendered UA) until the head
// itself is attached. The final RIGHTARC from the root sentinel labels the
// finished tree and ends the derivation.

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "arctree/builder.hpp"
#include "arctree/oracle.hpp"
#include "arctree/ordered_tree.hpp"

namespace arctree {

struct StackEntry {
  int anchor = kRootIndex;  // 0 only for the root sentinel
  NodeId tree = kNoNode;    // kNoNode only for the root sentinel
  bool bare = false;        // a shifted token with no dependents yet
  Interval yield;
  int revision = 0;         // times this tree was extended as a head

  bool sentinel() const { return anchor == kRootIndex; }
};

class MappedConfiguration {
 public:
  static MappedConfiguration initial(const Sentence& sentence);

  const std::vector<StackEntry>& stack() const { return stack_; }
  std::vector<int> buffer() const;
  bool buffer_empty() const { return next_ > sentence_->size(); }

  // Live partial trees: the non-sentinel stack items, plus the finished
  // tree once the root has been attached.
  const std::set<NodeId>& tree_set() const { return tree_set_; }

  // True after the root attachment.
  bool terminal() const { return result_ != kNoNode; }

  const Sentence& sentence() const { return *sentence_; }
  const OrderedTree& forest() const { return forest_; }

  // The partial tree at a stack position (0 = bottom). A bare leaf is
  // shown under a pending node, which is how it enters any attachment.
  OrderedTree partial_tree(std::size_t position) const;

  // The finished tree. Throws PreconditionError before terminal().
  OrderedTree result() const;

  // Empty when `t` may be applied, otherwise the reason it may not.
  std::optional<std::string> illegal_reason(const Transition& t) const;

  // In-place transition. `step` is only used in error messages.
  void apply(const Transition& t, std::size_t step);

  // Full structural audit (contiguity, anchoring, stack tiling, tree set).
  // Returns human-readable problems; empty when everything holds.
  std::vector<std::string> audit() const;

 private:
  NodeId wrap(const StackEntry& e, const std::string& label);

  std::shared_ptr<const Sentence> sentence_;
  OrderedTree forest_;
  std::vector<StackEntry> stack_;
  std::set<NodeId> tree_set_;
  int next_ = 1;
  NodeId result_ = kNoNode;
};

// Pure single step: returns the successor configuration.
MappedConfiguration step(const MappedConfiguration& config, const Transition& t,
                         std::size_t step_number = 0);

// Runs the whole derivation and returns the finished ordered tree. Throws
// TransitionError for illegal actions or an incomplete derivation.
OrderedTree execute_mapped(const Sentence& sentence, const Derivation& derivation);

}  // namespace arctree
