#include "arctree/pproj.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace arctree {

LiftedLabel LiftedLabel::parse(std::string_view text, std::string_view separator) {
  const auto at = separator.empty() ? std::string_view::npos : text.find(separator);
  if (at == std::string_view::npos) return {std::string(text), std::nullopt};
  return {std::string(text.substr(0, at)), std::string(text.substr(at + separator.size()))};
}

std::string LiftedLabel::encode(std::string_view separator) const {
  if (!head_mark) return base;
  return base + std::string(separator) + *head_mark;
}

namespace {

std::vector<std::vector<int>> children_of(const std::vector<int>& heads) {
  std::vector<std::vector<int>> kids(heads.size());
  for (std::size_t d = 1; d < heads.size(); ++d) {
    kids[static_cast<std::size_t>(heads[d])].push_back(static_cast<int>(d));
  }
  return kids;  // each list is increasing because d is
}

std::vector<int> depths(const std::vector<int>& heads) {
  const auto kids = children_of(heads);
  std::vector<int> depth(heads.size(), 0);
  std::vector<int> stack{kRootIndex};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int c : kids[static_cast<std::size_t>(v)]) {
      depth[static_cast<std::size_t>(c)] = depth[static_cast<std::size_t>(v)] + 1;
      stack.push_back(c);
    }
  }
  return depth;
}

std::vector<Arc> nonprojective_from_heads(const std::vector<int>& heads) {
  const auto kids = children_of(heads);
  const std::size_t size = heads.size();
  std::vector<int> enter(size, 0), leave(size, 0);
  int clock = 0;
  std::vector<std::pair<int, std::size_t>> stack{{kRootIndex, 0}};
  enter[0] = clock++;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& ks = kids[static_cast<std::size_t>(v)];
    if (next < ks.size()) {
      int c = ks[next++];
      enter[static_cast<std::size_t>(c)] = clock++;
      stack.emplace_back(c, 0);
    } else {
      leave[static_cast<std::size_t>(v)] = clock++;
      stack.pop_back();
    }
  }
  auto descends = [&](int anc, int v) {
    return enter[static_cast<std::size_t>(anc)] <= enter[static_cast<std::size_t>(v)] &&
           leave[static_cast<std::size_t>(v)] <= leave[static_cast<std::size_t>(anc)];
  };
  std::vector<Arc> out;
  for (std::size_t d = 1; d < size; ++d) {
    const int h = heads[d];
    const int lo = std::min<int>(h, static_cast<int>(d));
    const int hi = std::max<int>(h, static_cast<int>(d));
    for (int k = lo + 1; k < hi; ++k) {
      if (!descends(h, k)) {
        out.push_back(Arc{h, static_cast<int>(d), {}});
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Arc> nonprojective_arcs(const DependencyTree& tree) {
  require_valid(tree);
  auto out = nonprojective_from_heads(tree.head_vector());
  const auto labels = tree.label_vector();
  for (Arc& a : out) a.label = labels[static_cast<std::size_t>(a.dependent)];
  return out;
}

LiftResult lift_with_report(const DependencyTree& tree, const LiftOptions& options) {
  require_valid(tree);
  LiftResult result;
  result.lifts.assign(static_cast<std::size_t>(tree.size()) + 1, 0);
  auto heads = tree.head_vector();
  auto labels = tree.label_vector();

  for (;;) {
    const auto candidates = nonprojective_from_heads(heads);
    if (candidates.empty()) break;
    const Arc* pick = &candidates.front();
    for (const Arc& a : candidates) {
      if (std::abs(a.head - a.dependent) < std::abs(pick->head - pick->dependent)) pick = &a;
    }
    const auto d = static_cast<std::size_t>(pick->dependent);
    const auto h = static_cast<std::size_t>(pick->head);
    LiftedLabel current = LiftedLabel::parse(labels[d], options.separator);
    if (!current.head_mark) {
      current.head_mark = LiftedLabel::parse(labels[h], options.separator).base;
    }
    labels[d] = current.encode(options.separator);
    heads[d] = heads[h];
    ++result.lifts[d];
  }

  if (std::all_of(result.lifts.begin(), result.lifts.end(), [](int c) { return c == 0; })) {
    result.tree = tree;
    return result;
  }
  result.tree.sentence = tree.sentence;
  for (std::size_t d = 1; d < heads.size(); ++d) {
    result.tree.arcs.push_back(Arc{heads[d], static_cast<int>(d), labels[d]});
  }
  if (!is_projective(result.tree)) throw InternalError("lift: result is not projective");
  return result;
}

DependencyTree lift(const DependencyTree& tree, const LiftOptions& options) {
  return lift_with_report(tree, options).tree;
}

DeliftResult delift_with_report(const DependencyTree& tree, const LiftOptions& options) {
  require_valid(tree);
  auto heads = tree.head_vector();
  auto labels = tree.label_vector();
  const std::size_t size = heads.size();

  std::vector<int> pending;
  std::vector<LiftedLabel> parsed(size);
  for (std::size_t d = 1; d < size; ++d) {
    parsed[d] = LiftedLabel::parse(labels[d], options.separator);
    if (parsed[d].head_mark) pending.push_back(static_cast<int>(d));
  }

  DeliftResult result;
  while (!pending.empty()) {
    const auto depth = depths(heads);
    auto it = std::min_element(pending.begin(), pending.end(), [&](int a, int b) {
      const int da = depth[static_cast<std::size_t>(heads[static_cast<std::size_t>(a)])];
      const int db = depth[static_cast<std::size_t>(heads[static_cast<std::size_t>(b)])];
      return da != db ? da < db : a < b;
    });
    const int d = *it;
    pending.erase(it);
    const auto du = static_cast<std::size_t>(d);
    const std::string mark = *parsed[du].head_mark;
    const int g = heads[du];

    const auto kids = children_of(heads);
    int found = -1;
    int candidates = 0;
    std::deque<int> queue;
    for (int c : kids[static_cast<std::size_t>(g)]) {
      if (c != d) queue.push_back(c);
    }
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      if (parsed[static_cast<std::size_t>(v)].base == mark) {
        ++candidates;
        if (found < 0) found = v;
      }
      for (int c : kids[static_cast<std::size_t>(v)]) queue.push_back(c);
    }
    result.candidate_counts.push_back(candidates);

    labels[du] = parsed[du].base;
    parsed[du].head_mark.reset();
    if (found >= 0) {
      heads[du] = found;
    } else {
      result.unresolved.push_back({d, mark});
    }
  }

  result.tree.sentence = tree.sentence;
  for (std::size_t d = 1; d < size; ++d) {
    result.tree.arcs.push_back(Arc{heads[d], static_cast<int>(d), labels[d]});
  }
  const auto violations = validate(result.tree);
  if (!violations.empty()) {
    throw Error("delift: decoded tree is invalid: " + violations.front().describe());
  }
  return result;
}

DependencyTree delift(const DependencyTree& tree, const LiftOptions& options) {
  return delift_with_report(tree, options).tree;
}

}  // namespace arctree
