#include "arctree/core.hpp"

#include <algorithm>
#include <sstream>

namespace arctree {

Sentence Sentence::from_forms(const std::vector<std::string>& forms) {
  Sentence s;
  s.tokens.reserve(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    s.tokens.push_back(Token{static_cast<int>(i + 1), forms[i], std::nullopt});
  }
  return s;
}

DependencyTree DependencyTree::from_heads(Sentence sentence, const std::vector<int>& heads,
                                          const std::vector<std::string>& labels) {
  if (heads.size() != labels.size()) {
    throw PreconditionError("from_heads: heads and labels differ in length");
  }
  DependencyTree tree;
  tree.sentence = std::move(sentence);
  tree.arcs.reserve(heads.size());
  for (std::size_t i = 0; i < heads.size(); ++i) {
    tree.arcs.push_back(Arc{heads[i], static_cast<int>(i + 1), labels[i]});
  }
  return tree;
}

std::vector<int> DependencyTree::head_vector() const {
  std::vector<int> heads(static_cast<std::size_t>(size()) + 1, -1);
  for (const Arc& a : arcs) heads.at(static_cast<std::size_t>(a.dependent)) = a.head;
  return heads;
}

std::vector<std::string> DependencyTree::label_vector() const {
  std::vector<std::string> labels(static_cast<std::size_t>(size()) + 1);
  for (const Arc& a : arcs) labels.at(static_cast<std::size_t>(a.dependent)) = a.label;
  return labels;
}

int DependencyTree::root() const {
  for (const Arc& a : arcs) {
    if (a.head == kRootIndex) return a.dependent;
  }
  throw PreconditionError("tree has no root arc");
}

void sort_arcs(std::vector<Arc>& arcs) {
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    if (a.dependent != b.dependent) return a.dependent < b.dependent;
    if (a.head != b.head) return a.head < b.head;
    return a.label < b.label;
  });
}

bool operator==(const DependencyTree& a, const DependencyTree& b) {
  if (!(a.sentence == b.sentence) || a.arcs.size() != b.arcs.size()) return false;
  std::vector<Arc> x = a.arcs;
  std::vector<Arc> y = b.arcs;
  sort_arcs(x);
  sort_arcs(y);
  return x == y;
}

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::kEmptySentence: return "empty-sentence";
    case Rule::kTokenIndex: return "token-index";
    case Rule::kDependentRange: return "dependent-out-of-range";
    case Rule::kHeadRange: return "head-out-of-range";
    case Rule::kSelfLoop: return "self-loop";
    case Rule::kMissingHead: return "missing-head";
    case Rule::kMultipleHeads: return "multiple-heads";
    case Rule::kNoRootArc: return "no-root-arc";
    case Rule::kMultipleRootArcs: return "multiple-root-arcs";
    case Rule::kCycle: return "cycle";
  }
  return "unknown";
}

std::string Violation::describe() const {
  std::ostringstream out;
  out << rule_name(rule);
  if (!indices.empty()) {
    out << " {";
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (i) out << ',';
      out << indices[i];
    }
    out << '}';
  }
  return out.str();
}

std::vector<Violation> validate(const DependencyTree& tree) {
  std::vector<Violation> out;
  const int n = tree.size();
  if (n == 0) {
    out.push_back({Rule::kEmptySentence, {}});
    return out;
  }
  for (int i = 0; i < n; ++i) {
    const int idx = tree.sentence.tokens[static_cast<std::size_t>(i)].index;
    if (idx != i + 1) out.push_back({Rule::kTokenIndex, {idx}});
  }

  // First in-range head per dependent; -1 when absent.
  std::vector<int> head(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> head_count(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> root_deps;
  for (const Arc& a : tree.arcs) {
    if (a.dependent < 1 || a.dependent > n) {
      out.push_back({Rule::kDependentRange, {a.dependent}});
      continue;
    }
    if (a.head < 0 || a.head > n) {
      out.push_back({Rule::kHeadRange, {a.head}});
      continue;
    }
    if (a.head == a.dependent) {
      out.push_back({Rule::kSelfLoop, {a.dependent}});
      continue;
    }
    auto d = static_cast<std::size_t>(a.dependent);
    if (head_count[d]++ == 0) head[d] = a.head;
    if (a.head == kRootIndex) root_deps.push_back(a.dependent);
  }
  std::vector<int> missing;
  std::vector<int> multiple;
  for (int d = 1; d <= n; ++d) {
    const int c = head_count[static_cast<std::size_t>(d)];
    if (c == 0) missing.push_back(d);
    if (c > 1) multiple.push_back(d);
  }
  if (!missing.empty()) out.push_back({Rule::kMissingHead, missing});
  if (!multiple.empty()) out.push_back({Rule::kMultipleHeads, multiple});
  if (root_deps.empty()) out.push_back({Rule::kNoRootArc, {}});
  if (root_deps.size() > 1) {
    std::sort(root_deps.begin(), root_deps.end());
    out.push_back({Rule::kMultipleRootArcs, root_deps});
  }

  // Walk head links; 0 = unvisited, 1 = on current path, 2 = settled.
  std::vector<char> state(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> path;
  for (int start = 1; start <= n; ++start) {
    if (state[static_cast<std::size_t>(start)]) continue;
    path.clear();
    int v = start;
    while (v > 0 && state[static_cast<std::size_t>(v)] == 0) {
      state[static_cast<std::size_t>(v)] = 1;
      path.push_back(v);
      v = head[static_cast<std::size_t>(v)];
    }
    if (v > 0 && state[static_cast<std::size_t>(v)] == 1) {
      auto it = std::find(path.begin(), path.end(), v);
      std::vector<int> cycle(it, path.end());
      std::sort(cycle.begin(), cycle.end());
      out.push_back({Rule::kCycle, cycle});
    }
    for (int p : path) state[static_cast<std::size_t>(p)] = 2;
  }
  return out;
}

void require_valid(const DependencyTree& tree) {
  auto violations = validate(tree);
  if (violations.empty()) return;
  std::string msg = "invalid dependency tree:";
  for (const auto& v : violations) msg += " " + v.describe();
  throw PreconditionError(msg);
}

bool is_projective(const DependencyTree& tree) {
  require_valid(tree);
  const auto n = static_cast<std::size_t>(tree.size());
  std::vector<std::vector<int>> children(n + 1);
  for (const Arc& a : tree.arcs) children[static_cast<std::size_t>(a.head)].push_back(a.dependent);

  // Preorder from the root, then fold subtree extents bottom-up. A subtree
  // with an interval of extents equal to its size contains every position
  // it spans, which is exactly the descendant condition for its arcs.
  std::vector<int> order;
  order.reserve(n + 1);
  std::vector<int> stack{kRootIndex};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int c : children[static_cast<std::size_t>(v)]) stack.push_back(c);
  }
  std::vector<int> lo(n + 1), hi(n + 1), count(n + 1, 1);
  for (std::size_t i = 0; i <= n; ++i) lo[i] = hi[i] = static_cast<int>(i);
  const auto heads = tree.head_vector();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto v = static_cast<std::size_t>(*it);
    if (count[v] != hi[v] - lo[v] + 1) return false;
    if (*it == kRootIndex) break;
    auto h = static_cast<std::size_t>(heads[v]);
    lo[h] = std::min(lo[h], lo[v]);
    hi[h] = std::max(hi[h], hi[v]);
    count[h] += count[v];
  }
  return true;
}

namespace {

std::vector<Span> arc_spans(const DependencyTree& tree) {
  std::vector<Span> spans;
  spans.reserve(tree.arcs.size());
  for (const Arc& a : tree.arcs) {
    spans.push_back({std::min(a.head, a.dependent), std::max(a.head, a.dependent)});
  }
  std::sort(spans.begin(), spans.end());
  return spans;
}

bool crosses(const Span& a, const Span& b) {
  return a.lo < b.lo && b.lo < a.hi && a.hi < b.hi;
}

}  // namespace

std::vector<CrossingPair> crossing_pairs(const DependencyTree& tree) {
  require_valid(tree);
  const auto spans = arc_spans(tree);
  std::vector<CrossingPair> out;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    for (std::size_t j = i + 1; j < spans.size(); ++j) {
      if (crosses(spans[i], spans[j])) out.emplace_back(spans[i], spans[j]);
    }
  }
  return out;
}

std::optional<CrossingPair> tightest_crossing_pair(const DependencyTree& tree) {
  require_valid(tree);
  const auto spans = arc_spans(tree);
  std::optional<CrossingPair> best;
  int best_len = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    for (std::size_t j = i + 1; j < spans.size(); ++j) {
      if (!crosses(spans[i], spans[j])) continue;
      const int len = spans[i].length() + spans[j].length();
      if (!best || len < best_len) {
        best = CrossingPair{spans[i], spans[j]};
        best_len = len;
      }
    }
  }
  return best;
}

std::string to_string(const CrossingPair& pair) {
  std::ostringstream out;
  out << "((" << pair.first.lo << ',' << pair.first.hi << "),(" << pair.second.lo << ','
      << pair.second.hi << "))";
  return out.str();
}

DependencyTree with_unlabeled_arcs(DependencyTree tree) {
  for (Arc& a : tree.arcs) {
    if (a.head != kRootIndex) a.label = std::string(kUnlabeled);
  }
  return tree;
}

}  // namespace arctree
