#pragma once

// Arc-standard transitions, the canonical (bottom-up) static oracle and a
// plain executor that turns a derivation back into dependency arcs.
//
// The stack starts as [0] with the root preloaded and the buffer holds
// 1..n. LEFTARC on [... i j] adds (j, i) and pops i; RIGHTARC adds (i, j)
// and pops j; SHIFT pushes the front of the buffer. A derivation ends once
// RIGHTARC has attached the last token to 0.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arctree/core.hpp"

namespace arctree {

enum class TransitionKind { kShift, kLeftArc, kRightArc };

struct Transition {
  TransitionKind kind = TransitionKind::kShift;
  std::string label;  // empty for SHIFT

  static Transition shift() { return {TransitionKind::kShift, {}}; }
  static Transition left_arc(std::string label) { return {TransitionKind::kLeftArc, std::move(label)}; }
  static Transition right_arc(std::string label) { return {TransitionKind::kRightArc, std::move(label)}; }

  bool is_arc() const { return kind != TransitionKind::kShift; }
  bool operator==(const Transition&) const = default;
};

// "SHIFT", "LEFTARC(det)", "RIGHTARC(root)".
std::string to_string(const Transition& t);
// Inverse of to_string; throws ParseError.
Transition parse_transition(std::string_view text);

using Derivation = std::vector<Transition>;

// Plain stack/buffer/arc-set configuration.
struct Configuration {
  std::vector<int> stack{kRootIndex};
  int next = 1;  // first unread token; the buffer is next..n
  int n = 0;
  std::vector<Arc> arcs;

  static Configuration initial(int n);

  std::vector<int> buffer() const;
  bool buffer_empty() const { return next > n; }
  bool terminal() const { return buffer_empty() && stack.size() == 1; }
};

// Empty when `t` may be applied, otherwise the reason it may not.
std::optional<std::string> illegal_reason(const Configuration& c, const Transition& t);

// Applies `t` in place; throws TransitionError(step, reason) when illegal.
void apply(Configuration& c, const Transition& t, std::size_t step);

// The derivation that attaches each token as soon as it is complete:
// LEFTARC if the second item's head is the top and it has all its
// dependents, else RIGHTARC likewise for the top, else SHIFT.
// Throws NonProjectiveError when no action applies.
Derivation derive(const DependencyTree& tree);

// Runs `derivation` from the initial configuration and returns the tree of
// arcs it created. Throws TransitionError on an illegal or incomplete
// derivation.
DependencyTree execute_plain(const Sentence& sentence, const Derivation& derivation);

}  // namespace arctree
