#include "arctree/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "arctree/builder.hpp"
#include "arctree/mapped.hpp"
#include "arctree/oracle.hpp"
#include "arctree/recover.hpp"

namespace arctree {

namespace {

constexpr std::array<const char*, 8> kLabels = {"nsubj", "obj", "iobj", "det",
                                                "amod",  "advmod", "case", "nmod"};
constexpr std::array<const char*, 6> kTags = {"NOUN", "VERB", "DET", "ADJ", "ADP", "PRON"};

std::mt19937_64 make_rng(int n, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n)};
  return std::mt19937_64(seq);
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Heads of a uniformly random rooted labelled tree on 1..n, root -> 0.
std::vector<int> pruefer_heads(int n, std::mt19937_64& rng) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  if (n >= 2) {
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (int& c : code) c = uniform(rng, 1, n);
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
    for (int c : code) ++degree[static_cast<std::size_t>(c)];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 1; v <= n; ++v) {
      if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
    }
    auto link = [&](int a, int b) {
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    };
    for (int c : code) {
      const int leaf = leaves.top();
      leaves.pop();
      link(leaf, c);
      if (--degree[static_cast<std::size_t>(c)] == 1) leaves.push(c);
    }
    const int a = leaves.top();
    leaves.pop();
    link(a, leaves.top());
  }
  const int root = uniform(rng, 1, n);
  std::vector<int> heads(static_cast<std::size_t>(n) + 1, -1);
  heads[static_cast<std::size_t>(root)] = kRootIndex;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (heads[static_cast<std::size_t>(w)] == -1) {
        heads[static_cast<std::size_t>(w)] = v;
        stack.push_back(w);
      }
    }
  }
  return heads;
}

// Heads of a projective tree grown over contiguous spans.
std::vector<int> projective_heads(int n, std::mt19937_64& rng) {
  std::vector<int> heads(static_cast<std::size_t>(n) + 1, -1);
  struct Span3 {
    int lo, hi, parent;
  };
  std::vector<Span3> work{{1, n, kRootIndex}};
  auto split = [&](int lo, int hi, int parent) {
    int start = lo;
    for (int p = lo; p < hi; ++p) {
      if (uniform(rng, 0, 1) == 1) {
        work.push_back({start, p, parent});
        start = p + 1;
      }
    }
    if (start <= hi) work.push_back({start, hi, parent});
  };
  while (!work.empty()) {
    const Span3 s = work.back();
    work.pop_back();
    const int h = uniform(rng, s.lo, s.hi);
    heads[static_cast<std::size_t>(h)] = s.parent;
    if (s.lo < h) split(s.lo, h - 1, h);
    if (h < s.hi) split(h + 1, s.hi, h);
  }
  return heads;
}

}  // namespace

DependencyTree gen_random_tree(int n, std::uint64_t seed, bool projective_only) {
  if (n < 1) throw PreconditionError("gen_random_tree: n must be >= 1");
  auto rng = make_rng(n, seed);
  const auto heads = projective_only ? projective_heads(n, rng) : pruefer_heads(n, rng);
  DependencyTree tree;
  for (int i = 1; i <= n; ++i) {
    const auto tag = kTags[static_cast<std::size_t>(uniform(rng, 0, kTags.size() - 1))];
    tree.sentence.tokens.push_back(Token{i, "w" + std::to_string(i), std::string(tag)});
    const int h = heads[static_cast<std::size_t>(i)];
    const std::string label =
        h == kRootIndex ? "root" : kLabels[static_cast<std::size_t>(uniform(rng, 0, kLabels.size() - 1))];
    tree.arcs.push_back(Arc{h, i, label});
  }
  return tree;
}

std::vector<DependencyTree> random_trees(std::size_t count, int max_n, bool projective_only,
                                         std::uint64_t seed0) {
  std::vector<DependencyTree> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint64_t seed = seed0 + k;
    auto rng = make_rng(0, seed);
    const int n = uniform(rng, 1, max_n);
    out.push_back(gen_random_tree(n, seed, projective_only));
  }
  return out;
}

std::vector<DependencyTree> enumerate_trees(int n) {
  if (n < 1 || n > kMaxEnumerationSize) {
    throw PreconditionError("enumerate_trees: n must be in 1.." + std::to_string(kMaxEnumerationSize));
  }
  std::vector<std::string> forms;
  for (int i = 1; i <= n; ++i) forms.push_back("w" + std::to_string(i));
  const Sentence sentence = Sentence::from_forms(forms);

  std::vector<DependencyTree> out;
  std::vector<int> heads(static_cast<std::size_t>(n), 0);  // heads[i-1] for token i
  for (;;) {
    bool ok = true;
    int roots = 0;
    for (int i = 1; i <= n && ok; ++i) {
      const int h = heads[static_cast<std::size_t>(i - 1)];
      if (h == i) ok = false;
      if (h == 0) ++roots;
    }
    if (ok && roots == 1) {
      // Every token must reach 0 within n hops.
      for (int i = 1; i <= n && ok; ++i) {
        int v = i;
        for (int hop = 0; hop < n && v != 0; ++hop) v = heads[static_cast<std::size_t>(v - 1)];
        ok = v == 0;
      }
      if (ok) {
        std::vector<std::string> labels;
        for (int i = 1; i <= n; ++i) {
          labels.push_back(heads[static_cast<std::size_t>(i - 1)] == 0 ? "root"
                                                                      : "dep" + std::to_string(i));
        }
        out.push_back(DependencyTree::from_heads(sentence, heads, labels));
      }
    }
    // Odometer over {0..n}^n.
    std::size_t k = 0;
    while (k < heads.size() && heads[k] == n) heads[k++] = 0;
    if (k == heads.size()) break;
    ++heads[k];
  }
  return out;
}

std::vector<DependencyTree> enumerate_trees_up_to(int max_n) {
  std::vector<DependencyTree> out;
  for (int n = 1; n <= max_n; ++n) {
    auto part = enumerate_trees(n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

namespace {

// A tree shape over a span: the anchor plus its left and right dependents'
// shapes, in surface order.
struct Shape {
  int anchor = 0;
  std::vector<Shape> left;
  std::vector<Shape> right;
};

std::vector<Shape> shapes_over(int lo, int hi);

// Every way to cut [lo, hi] into consecutive spans, each filled with a shape.
std::vector<std::vector<Shape>> sequences_over(int lo, int hi) {
  if (lo > hi) return {{}};
  std::vector<std::vector<Shape>> out;
  for (int end = lo; end <= hi; ++end) {
    const auto heads = shapes_over(lo, end);
    const auto tails = sequences_over(end + 1, hi);
    for (const auto& h : heads) {
      for (const auto& t : tails) {
        std::vector<Shape> seq{h};
        seq.insert(seq.end(), t.begin(), t.end());
        out.push_back(std::move(seq));
      }
    }
  }
  return out;
}

std::vector<Shape> shapes_over(int lo, int hi) {
  std::vector<Shape> out;
  for (int a = lo; a <= hi; ++a) {
    const auto lefts = sequences_over(lo, a - 1);
    const auto rights = sequences_over(a + 1, hi);
    for (const auto& l : lefts) {
      for (const auto& r : rights) out.push_back(Shape{a, l, r});
    }
  }
  return out;
}

NodeId materialize(const Shape& s, OrderedTree& tree) {
  std::vector<NodeId> kids;
  for (const auto& l : s.left) kids.push_back(materialize(l, tree));
  kids.push_back(tree.add_leaf(s.anchor, "w" + std::to_string(s.anchor)));
  for (const auto& r : s.right) kids.push_back(materialize(r, tree));
  return tree.add_internal(std::string(kUnlabeled), s.anchor, std::move(kids));
}

}  // namespace

std::vector<OrderedTree> enumerate_contiguous_trees(int n) {
  if (n < 1 || n > kMaxSearchSize) {
    throw PreconditionError("enumerate_contiguous_trees: n must be in 1.." +
                            std::to_string(kMaxSearchSize));
  }
  std::vector<OrderedTree> out;
  for (const Shape& s : shapes_over(1, n)) {
    OrderedTree t;
    t.set_root(materialize(s, t));
    out.push_back(std::move(t));
  }
  return out;
}

bool exists_contiguous_representation(const DependencyTree& tree) {
  require_valid(tree);
  const int n = tree.size();
  if (n > kMaxSearchSize) {
    throw PreconditionError("exists_contiguous_representation: n must be <= " +
                            std::to_string(kMaxSearchSize));
  }
  std::vector<std::string> forms;
  for (int i = 1; i <= n; ++i) forms.push_back("w" + std::to_string(i));
  const Sentence sentence = Sentence::from_forms(forms);
  const auto target = tree.head_vector();
  for (const auto& candidate : enumerate_contiguous_trees(n)) {
    if (recover(candidate, sentence).head_vector() == target) return true;
  }
  return false;
}

bool unique_inverse_target(const LiftResult& lifted, const DeliftResult& delifted) {
  const bool single = std::all_of(lifted.lifts.begin(), lifted.lifts.end(), [](int c) { return c <= 1; });
  const bool unique = std::all_of(delifted.candidate_counts.begin(), delifted.candidate_counts.end(),
                                  [](int c) { return c == 1; });
  return single && unique && delifted.unresolved.empty();
}

std::string SuiteResult::summary() const {
  std::ostringstream out;
  out << (passed() ? "PASS" : "FAIL") << "  " << name << "  (" << cases << " cases, " << failures
      << " failures)";
  if (!passed()) out << "  first: " << first_failure;
  return out.str();
}

std::string to_compact_string(const DependencyTree& tree) {
  std::vector<Arc> arcs = tree.arcs;
  sort_arcs(arcs);
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) out << ' ';
    out << arcs[i].dependent << "<-" << arcs[i].head << ':' << arcs[i].label;
  }
  out << ']';
  return out.str();
}

namespace {

SuiteResult run(std::string name, const std::vector<DependencyTree>& trees,
                const std::function<std::optional<std::string>(const DependencyTree&)>& check) {
  SuiteResult r;
  r.name = std::move(name);
  for (const auto& t : trees) {
    std::optional<std::string> problem;
    try {
      problem = check(t);
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (!problem) {
      ++r.cases;
      continue;
    }
    if (problem->empty()) continue;  // skipped
    ++r.cases;
    if (r.failures++ == 0) r.first_failure = to_compact_string(t) + ": " + *problem;
  }
  return r;
}

const std::string kSkip;

}  // namespace

SuiteResult check_characterization(const std::vector<DependencyTree>& trees) {
  return run("projectivity-characterization", trees, [](const DependencyTree& t) -> std::optional<std::string> {
    const bool proj = is_projective(t);
    if (exists_contiguous_representation(t) != proj) {
      return proj ? "projective tree without a contiguous representation"
                  : "non-projective tree with a contiguous representation";
    }
    bool built = true;
    try {
      build(t);
    } catch (const NonProjectiveError&) {
      built = false;
    }
    if (built != proj) return "build outcome disagrees with is_projective";
    return std::nullopt;
  });
}

SuiteResult check_projectivity_definitions(const std::vector<DependencyTree>& trees) {
  return run("projectivity-definitions", trees, [](const DependencyTree& t) -> std::optional<std::string> {
    if (is_projective(t) != crossing_pairs(t).empty()) return "is_projective disagrees with crossing_pairs";
    return std::nullopt;
  });
}

SuiteResult check_transition_correspondence(const std::vector<DependencyTree>& trees) {
  return run("transition-correspondence", trees, [](const DependencyTree& t) -> std::optional<std::string> {
    if (!is_projective(t)) return kSkip;
    const auto d = derive(t);
    if (!(execute_plain(t.sentence, d) == t)) return "plain execution does not reproduce the arcs";
    if (!(execute_mapped(t.sentence, d) == build(t))) return "mapped execution differs from build";
    return std::nullopt;
  });
}

SuiteResult check_recoverability(const std::vector<DependencyTree>& trees) {
  return run("recoverability", trees, [](const DependencyTree& t) -> std::optional<std::string> {
    if (!is_projective(t)) return kSkip;
    if (!(recover(build(t), t.sentence) == t)) return "recover(build(D)) != D";
    if (!(recover(execute_mapped(t.sentence, derive(t)), t.sentence) == t)) {
      return "recover(execute_mapped(derive(D))) != D";
    }
    return std::nullopt;
  });
}

std::vector<SuiteResult> run_exhaustive_suites(int max_n) {
  const auto trees = enumerate_trees_up_to(max_n);
  return {check_characterization(trees), check_projectivity_definitions(trees),
          check_transition_correspondence(trees), check_recoverability(trees)};
}

}  // namespace arctree
