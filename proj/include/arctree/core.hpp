#pragma once

// Dependency trees over a sentence with an implicit artificial root at
// position 0, their well-formedness check and projectivity tests.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arctree/error.hpp"

namespace arctree {

inline constexpr int kRootIndex = 0;
inline constexpr std::string_view kUnlabeled = "UA";

struct Token {
  int index = 0;  // 1-based surface position
  std::string form;
  std::optional<std::string> upos;

  bool operator==(const Token&) const = default;
};

// Tokens w_1..w_n in surface order. The root w_0 is never stored.
struct Sentence {
  std::vector<Token> tokens;

  int size() const { return static_cast<int>(tokens.size()); }
  bool empty() const { return tokens.empty(); }
  // 1-based access.
  const Token& at(int index) const { return tokens.at(static_cast<std::size_t>(index - 1)); }

  static Sentence from_forms(const std::vector<std::string>& forms);

  bool operator==(const Sentence&) const = default;
};

struct Arc {
  int head = 0;
  int dependent = 0;
  std::string label;

  bool operator==(const Arc&) const = default;
};

// D = (V, E). For a valid tree `arcs` holds exactly one arc per dependent.
// Everything the library produces keeps arcs sorted by dependent.
struct DependencyTree {
  Sentence sentence;
  std::vector<Arc> arcs;

  int size() const { return sentence.size(); }

  // heads[i-1] is the head of token i; labels likewise.
  static DependencyTree from_heads(Sentence sentence, const std::vector<int>& heads,
                                   const std::vector<std::string>& labels);

  // Requires a valid tree. Index 0 of both vectors is unused.
  std::vector<int> head_vector() const;
  std::vector<std::string> label_vector() const;

  // The dependent of the root arc. Requires a valid tree.
  int root() const;

  // Sentence equality plus arc-set equality (order-insensitive).
  friend bool operator==(const DependencyTree& a, const DependencyTree& b);
};

void sort_arcs(std::vector<Arc>& arcs);

enum class Rule {
  kEmptySentence,
  kTokenIndex,
  kDependentRange,
  kHeadRange,
  kSelfLoop,
  kMissingHead,
  kMultipleHeads,
  kNoRootArc,
  kMultipleRootArcs,
  kCycle,
};

std::string_view rule_name(Rule rule);

struct Violation {
  Rule rule;
  std::vector<int> indices;

  std::string describe() const;
  bool operator==(const Violation&) const = default;
};

// Empty iff the tree is a single-rooted, single-headed, acyclic tree over
// tokens 1..n with n >= 1.
std::vector<Violation> validate(const DependencyTree& tree);

// Throws PreconditionError listing the violations if validate() fails.
void require_valid(const DependencyTree& tree);

// For every arc (h, d), every position strictly between h and d is a
// descendant of h.
bool is_projective(const DependencyTree& tree);

// An arc's endpoints with lo < hi; the root sits at position 0.
struct Span {
  int lo = 0;
  int hi = 0;

  int length() const { return hi - lo; }
  auto operator<=>(const Span&) const = default;
};

using CrossingPair = std::pair<Span, Span>;

// Every unordered pair of arcs {(a,b), (c,d)} with a < c < b < d, sorted.
std::vector<CrossingPair> crossing_pairs(const DependencyTree& tree);

// The crossing pair with the smallest combined span, ties broken by sorted
// order; nullopt for projective trees.
std::optional<CrossingPair> tightest_crossing_pair(const DependencyTree& tree);

std::string to_string(const CrossingPair& pair);

// Replaces every non-root label with UA; the root arc keeps its label.
DependencyTree with_unlabeled_arcs(DependencyTree tree);

}  // namespace arctree
