#include "arctree/mapped.hpp"

namespace arctree {

MappedConfiguration MappedConfiguration::initial(const Sentence& sentence) {
  MappedConfiguration c;
  c.sentence_ = std::make_shared<const Sentence>(sentence);
  c.stack_.push_back(StackEntry{});
  return c;
}

std::vector<int> MappedConfiguration::buffer() const {
  std::vector<int> b;
  for (int i = next_; i <= sentence_->size(); ++i) b.push_back(i);
  return b;
}

OrderedTree MappedConfiguration::partial_tree(std::size_t position) const {
  const StackEntry& e = stack_.at(position);
  if (e.sentinel()) throw PreconditionError("partial_tree: the root sentinel has no tree");
  if (!e.bare) return forest_.extract(e.tree);
  OrderedTree t;
  const auto& leaf = forest_.node(e.tree);
  NodeId l = t.add_leaf(leaf.anchor, leaf.form, leaf.upos);
  t.set_root(t.add_internal(std::nullopt, e.anchor, {l}));
  return t;
}

OrderedTree MappedConfiguration::result() const {
  if (!terminal()) throw PreconditionError("result: derivation has not attached the root");
  return forest_.extract(result_);
}

std::optional<std::string> MappedConfiguration::illegal_reason(const Transition& t) const {
  if (terminal()) return "configuration is already terminal";
  if (t.kind == TransitionKind::kShift) {
    if (buffer_empty()) return "SHIFT on empty buffer";
    return std::nullopt;
  }
  if (t.label.empty()) return "arc action without a label";
  if (stack_.size() < 2) return "arc action with fewer than 2 stack items";
  const StackEntry& below = stack_[stack_.size() - 2];
  if (t.kind == TransitionKind::kLeftArc && below.sentinel()) {
    return "LEFTARC whose dependent would be the root 0";
  }
  if (t.kind == TransitionKind::kRightArc && below.sentinel() && !buffer_empty()) {
    return "RIGHTARC to the root with a nonempty buffer";
  }
  return std::nullopt;
}

NodeId MappedConfiguration::wrap(const StackEntry& e, const std::string& label) {
  if (e.bare) return forest_.add_internal(label, e.anchor, {e.tree});
  forest_.set_label(e.tree, label);
  return e.tree;
}

void MappedConfiguration::apply(const Transition& t, std::size_t step) {
  if (auto why = illegal_reason(t)) throw TransitionError(step, *why);

  if (t.kind == TransitionKind::kShift) {
    const int i = next_++;
    StackEntry e;
    e.anchor = i;
    e.tree = forest_.add_leaf(sentence_->at(i));
    e.bare = true;
    e.yield = {i, i};
    stack_.push_back(e);
    tree_set_.insert(e.tree);
    return;
  }

  const StackEntry top = stack_.back();
  const StackEntry below = stack_[stack_.size() - 2];
  stack_.resize(stack_.size() - 2);
  tree_set_.erase(top.tree);
  tree_set_.erase(below.tree);

  if (!below.sentinel() && below.yield.hi + 1 != top.yield.lo) {
    throw InternalError("step " + std::to_string(step) + ": stack yields are not adjacent");
  }

  if (below.sentinel()) {
    // Root attachment: the surviving tree must span the whole sentence.
    if (top.yield != Interval{1, sentence_->size()}) {
      throw InternalError("step " + std::to_string(step) + ": root tree does not span 1..n");
    }
    result_ = wrap(top, t.label);
    stack_.push_back(below);
    tree_set_.insert(result_);
    return;
  }

  StackEntry merged;
  merged.bare = false;
  merged.yield = {below.yield.lo, top.yield.hi};
  if (t.kind == TransitionKind::kLeftArc) {
    const NodeId dep = wrap(below, t.label);
    merged.anchor = top.anchor;
    merged.revision = top.revision + 1;
    if (top.bare) {
      merged.tree = forest_.add_internal(std::nullopt, top.anchor, {dep, top.tree});
    } else {
      merged.tree = top.tree;
      forest_.prepend_child(top.tree, dep);
    }
  } else {
    const NodeId dep = wrap(top, t.label);
    merged.anchor = below.anchor;
    merged.revision = below.revision + 1;
    if (below.bare) {
      merged.tree = forest_.add_internal(std::nullopt, below.anchor, {below.tree, dep});
    } else {
      merged.tree = below.tree;
      forest_.append_child(below.tree, dep);
    }
  }
  stack_.push_back(merged);
  tree_set_.insert(merged.tree);
}

std::vector<std::string> MappedConfiguration::audit() const {
  std::vector<std::string> problems;
  std::set<NodeId> live;
  int expected_lo = 1;
  for (std::size_t k = 0; k < stack_.size(); ++k) {
    const StackEntry& e = stack_[k];
    if (e.sentinel()) {
      if (k != 0) problems.push_back("sentinel above the bottom of the stack");
      continue;
    }
    live.insert(e.tree);
    const OrderedTree t = partial_tree(k);
    for (const auto& v : check_ordered_tree(t)) {
      problems.push_back("stack[" + std::to_string(k) + "]: " + std::string(tree_rule_name(v.rule)));
    }
    const auto y = yields(t);
    if (y.of(t.root()) != e.yield) {
      problems.push_back("stack[" + std::to_string(k) + "]: recorded yield differs");
    }
    if (t.node(t.root()).anchor != e.anchor) {
      problems.push_back("stack[" + std::to_string(k) + "]: anchor differs");
    }
    if (e.yield.lo != expected_lo) {
      problems.push_back("stack[" + std::to_string(k) + "]: yields do not tile the read prefix");
    }
    expected_lo = e.yield.hi + 1;
  }
  if (terminal()) {
    live.insert(result_);
    expected_lo = sentence_->size() + 1;
  }
  if (expected_lo != next_) problems.push_back("stack yields do not end at the buffer front");
  if (live != tree_set_) problems.push_back("tree set differs from stack contents");
  return problems;
}

MappedConfiguration step(const MappedConfiguration& config, const Transition& t,
                         std::size_t step_number) {
  MappedConfiguration next = config;
  next.apply(t, step_number);
  return next;
}

OrderedTree execute_mapped(const Sentence& sentence, const Derivation& derivation) {
  MappedConfiguration c = MappedConfiguration::initial(sentence);
  for (std::size_t k = 0; k < derivation.size(); ++k) c.apply(derivation[k], k + 1);
  if (!c.terminal()) throw TransitionError(derivation.size(), "incomplete derivation");
  OrderedTree out = c.result();
  assert_ordered_tree(out, "execute_mapped");
  return out;
}

}  // namespace arctree
