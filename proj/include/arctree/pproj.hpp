#pragma once

// Pseudo-projective transformation with the Head encoding scheme.
//
// lift() repeatedly takes the non-projective arc (h, d) with the smallest
// span (leftmost d on ties), reattaches d to the head of h and records h's
// relation in d's label as "base<sep>mark". delift() reverses it by
// searching below the current head for a token whose relation equals the
// mark.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arctree/core.hpp"

namespace arctree {

inline constexpr std::string_view kLiftSeparator = "\xE2\x86\x91";  // ↑
inline constexpr std::string_view kAsciiLiftSeparator = "^";

struct LiftOptions {
  std::string separator{kLiftSeparator};
};

struct LiftedLabel {
  std::string base;
  std::optional<std::string> head_mark;

  // Splits at the first separator; a label without one has no mark.
  static LiftedLabel parse(std::string_view text, std::string_view separator = kLiftSeparator);
  std::string encode(std::string_view separator = kLiftSeparator) const;

  bool operator==(const LiftedLabel&) const = default;
};

// Arcs (h, d) for which some position strictly between h and d is not a
// descendant of h, sorted by dependent. Requires a valid tree.
std::vector<Arc> nonprojective_arcs(const DependencyTree& tree);

struct LiftResult {
  DependencyTree tree;
  // Number of lifts applied to each token (index 0 unused).
  std::vector<int> lifts;
};

// Always returns a projective tree; projective input comes back unchanged.
// A token lifted more than once keeps the mark of its first (syntactic) head.
LiftResult lift_with_report(const DependencyTree& tree, const LiftOptions& options = {});
DependencyTree lift(const DependencyTree& tree, const LiftOptions& options = {});

struct UnresolvedLift {
  int dependent = 0;
  std::string mark;

  bool operator==(const UnresolvedLift&) const = default;
};

struct DeliftResult {
  DependencyTree tree;
  std::vector<UnresolvedLift> unresolved;
  // For every mark processed, how many candidate heads the search saw.
  std::vector<int> candidate_counts;
};

// Marks are resolved top-down by the depth of the current head. For each
// marked arc (g, d) the new head is the first token in breadth-first,
// left-to-right order among the proper descendants of g (outside d's
// subtree) whose base relation equals the mark. Without a match the mark
// is dropped and the arc kept. Throws Error if the result does not validate.
DeliftResult delift_with_report(const DependencyTree& tree, const LiftOptions& options = {});
DependencyTree delift(const DependencyTree& tree, const LiftOptions& options = {});

}  // namespace arctree
