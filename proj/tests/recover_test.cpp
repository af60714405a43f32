#include <gtest/gtest.h>

#include <set>

#include "arctree/builder.hpp"
#include "arctree/io.hpp"
#include "arctree/recover.hpp"
#include "arctree/verify.hpp"
#include "fixtures.hpp"

using namespace arctree;
using namespace arctree::testing;

TEST(Recover, FlightSentence) {
  const auto d = flight_tree();
  const auto t = read_brackets("(ROOT book (IOBJ me) (DOBJ (DET the) (COMPOUND morning) flight))");
  const auto back = recover(t, d.sentence);
  ASSERT_EQ(back.arcs.size(), 5u);
  EXPECT_EQ(back.arcs[0], (Arc{0, 1, "ROOT"}));
  EXPECT_EQ(back.arcs[2], (Arc{5, 3, "DET"}));
  EXPECT_EQ(back.head_vector(), d.head_vector());
  EXPECT_EQ(recover(build(d), d.sentence), d);
}

TEST(Recover, SingleToken) {
  const auto back = recover(read_brackets("(ROOT w1)"), forms_sentence(1));
  EXPECT_EQ(back.arcs, (std::vector<Arc>{{0, 1, "ROOT"}}));
}

TEST(Recover, PendingLabelsBecomeUnlabeled) {
  const auto d = with_unlabeled_arcs(flight_tree());
  const auto back = recover(build(d), d.sentence);
  EXPECT_EQ(back, d);
  EXPECT_EQ(back.label_vector()[2], kUnlabeled);
}

TEST(Recover, Anchors) {
  const auto t = read_brackets("(ROOT book (IOBJ me) (DOBJ (DET the) (COMPOUND morning) flight))");
  const auto& root = t.node(t.root());
  EXPECT_EQ(anchor_of(t, t.root()), 1);
  EXPECT_EQ(anchor_of(t, root.children[1]), 2);
  EXPECT_EQ(anchor_of(t, root.children[2]), 5);
  EXPECT_EQ(anchor_of(t, root.children[0]), 1);  // a leaf is its own anchor
  const auto bad = read_brackets("(ROOT w1 w2)");
  EXPECT_THROW(anchor_of(bad, bad.root()), MalformedTreeError);
}

TEST(Recover, MalformedInput) {
  const auto s = forms_sentence(3);
  EXPECT_THROW(recover(read_brackets("(ROOT w1 w2 w3)"), s), MalformedTreeError);
  EXPECT_THROW(recover(read_brackets("(ROOT w1 (A w2))"), s), MalformedTreeError);
  EXPECT_THROW(recover(read_brackets("(ROOT w1 (A w2) (B w4))"), s), MalformedTreeError);
  EXPECT_THROW(recover(read_brackets("(ROOT w1 (A w3) (B w2))"), s), MalformedTreeError);
  EXPECT_THROW(recover(read_brackets("(ROOT w1 (A x2) (B w3))"), s), MalformedTreeError);
  EXPECT_THROW(recover(OrderedTree{}, s), MalformedTreeError);
  OrderedTree leaf_only;
  leaf_only.set_root(leaf_only.add_leaf(1, "w1"));
  EXPECT_THROW(recover(leaf_only, forms_sentence(1)), MalformedTreeError);
}

TEST(RecoverProperty, InjectiveOnContiguousTrees) {
  for (int n = 1; n <= 4; ++n) {
    const auto s = forms_sentence(n);
    std::set<std::vector<int>> seen;
    const auto trees = enumerate_contiguous_trees(n);
    for (const auto& t : trees) seen.insert(recover(t, s).head_vector());
    EXPECT_EQ(seen.size(), trees.size()) << "n=" << n;
  }
}

TEST(RecoverProperty, InvertsBuild) {
  auto trees = enumerate_trees_up_to(5);
  const auto more = random_trees(2000, 12, true, 5);
  trees.insert(trees.end(), more.begin(), more.end());
  for (const auto& d : trees) {
    if (!is_projective(d)) continue;
    ASSERT_EQ(recover(build(d), d.sentence), d) << to_compact_string(d);
  }
}
