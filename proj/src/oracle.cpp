#include "arctree/oracle.hpp"

#include <algorithm>

namespace arctree {

std::string to_string(const Transition& t) {
  switch (t.kind) {
    case TransitionKind::kShift: return "SHIFT";
    case TransitionKind::kLeftArc: return "LEFTARC(" + t.label + ")";
    case TransitionKind::kRightArc: return "RIGHTARC(" + t.label + ")";
  }
  return "?";
}

Transition parse_transition(std::string_view text) {
  if (text == "SHIFT") return Transition::shift();
  auto labelled = [&](std::string_view name) -> std::optional<std::string> {
    if (text.size() < name.size() + 2 || text.substr(0, name.size()) != name) return std::nullopt;
    if (text[name.size()] != '(' || text.back() != ')') return std::nullopt;
    std::string label(text.substr(name.size() + 1, text.size() - name.size() - 2));
    if (label.empty()) return std::nullopt;
    return label;
  };
  if (auto l = labelled("LEFTARC")) return Transition::left_arc(*l);
  if (auto l = labelled("RIGHTARC")) return Transition::right_arc(*l);
  throw ParseError(0, "not a transition: '" + std::string(text) + "'");
}

Configuration Configuration::initial(int n) {
  Configuration c;
  c.n = n;
  return c;
}

std::vector<int> Configuration::buffer() const {
  std::vector<int> b;
  for (int i = next; i <= n; ++i) b.push_back(i);
  return b;
}

std::optional<std::string> illegal_reason(const Configuration& c, const Transition& t) {
  if (t.kind == TransitionKind::kShift) {
    if (c.buffer_empty()) return "SHIFT on empty buffer";
    return std::nullopt;
  }
  if (t.label.empty()) return "arc action without a label";
  if (c.stack.size() < 2) return "arc action with fewer than 2 stack items";
  const int below = c.stack[c.stack.size() - 2];
  if (t.kind == TransitionKind::kLeftArc && below == kRootIndex) {
    return "LEFTARC whose dependent would be the root 0";
  }
  if (t.kind == TransitionKind::kRightArc && below == kRootIndex && !c.buffer_empty()) {
    return "RIGHTARC to the root with a nonempty buffer";
  }
  return std::nullopt;
}

void apply(Configuration& c, const Transition& t, std::size_t step) {
  if (auto why = illegal_reason(c, t)) throw TransitionError(step, *why);
  if (t.kind == TransitionKind::kShift) {
    c.stack.push_back(c.next++);
    return;
  }
  const int top = c.stack.back();
  const int below = c.stack[c.stack.size() - 2];
  if (t.kind == TransitionKind::kLeftArc) {
    c.arcs.push_back(Arc{top, below, t.label});
    c.stack.erase(c.stack.end() - 2);
  } else {
    c.arcs.push_back(Arc{below, top, t.label});
    c.stack.pop_back();
  }
}

Derivation derive(const DependencyTree& tree) {
  require_valid(tree);
  const int n = tree.size();
  const auto heads = tree.head_vector();
  const auto labels = tree.label_vector();
  std::vector<int> missing(static_cast<std::size_t>(n) + 1, 0);  // unattached dependents
  for (int d = 1; d <= n; ++d) ++missing[static_cast<std::size_t>(heads[d])];

  Derivation out;
  out.reserve(2 * static_cast<std::size_t>(n));
  Configuration c = Configuration::initial(n);
  auto complete = [&](int v) { return missing[static_cast<std::size_t>(v)] == 0; };
  while (!c.terminal()) {
    Transition t = Transition::shift();
    if (c.stack.size() >= 2) {
      const int j = c.stack.back();
      const int i = c.stack[c.stack.size() - 2];
      if (i != kRootIndex && heads[i] == j && complete(i)) {
        t = Transition::left_arc(labels[i]);
        --missing[j];
      } else if (heads[j] == i && complete(j)) {
        t = Transition::right_arc(labels[j]);
        --missing[i];
      }
    }
    if (!t.is_arc() && c.buffer_empty()) {
      const auto pair = tightest_crossing_pair(tree);
      throw NonProjectiveError("derive: no legal action with nonempty stack" +
                               (pair ? ", crossing arcs " + to_string(*pair) : std::string()));
    }
    apply(c, t, out.size() + 1);
    out.push_back(std::move(t));
  }
  return out;
}

DependencyTree execute_plain(const Sentence& sentence, const Derivation& derivation) {
  Configuration c = Configuration::initial(sentence.size());
  for (std::size_t k = 0; k < derivation.size(); ++k) apply(c, derivation[k], k + 1);
  if (!c.terminal()) {
    throw TransitionError(derivation.size(), "incomplete derivation");
  }
  DependencyTree out;
  out.sentence = sentence;
  out.arcs = std::move(c.arcs);
  sort_arcs(out.arcs);
  return out;
}

}  // namespace arctree
