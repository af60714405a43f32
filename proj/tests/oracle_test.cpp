#include <gtest/gtest.h>

#include <algorithm>

#include "arctree/oracle.hpp"
#include "arctree/verify.hpp"
#include "fixtures.hpp"

using namespace arctree;
using namespace arctree::testing;

namespace {

const Transition S = Transition::shift();
Transition L(std::string l) { return Transition::left_arc(std::move(l)); }
Transition R(std::string l) { return Transition::right_arc(std::move(l)); }

Derivation flight_derivation() {
  return {S, S, R("iobj"), S, S, S, L("compound"), L("det"), R("dobj"), R("root")};
}

std::size_t error_step(const Sentence& s, const Derivation& d) {
  try {
    execute_plain(s, d);
  } catch (const TransitionError& e) {
    return e.step();
  }
  return 0;
}

}  // namespace

TEST(Derive, FlightSentence) { EXPECT_EQ(derive(flight_tree()), flight_derivation()); }

TEST(Derive, SingleToken) {
  EXPECT_EQ(derive(tree_from_heads({0})), (Derivation{S, R("root")}));
}

TEST(Derive, ChainPrefersEagerLeftArc) {
  const auto chain = tree_from_heads({2, 0, 2});
  // Exhaustive search (tests/oracles/derived_values.py) finds exactly these
  // two legal derivations; the oracle attaches 1 before shifting 3.
  const Derivation eager = {S, S, L("dep"), S, R("dep"), R("root")};
  const Derivation late = {S, S, S, R("dep"), L("dep"), R("root")};
  EXPECT_EQ(execute_plain(chain.sentence, late), chain);
  EXPECT_EQ(execute_plain(chain.sentence, eager), chain);
  EXPECT_EQ(derive(chain), eager);
}

TEST(Derive, NonProjectiveDeadlocks) {
  EXPECT_THROW(derive(crossing_n4()), NonProjectiveError);
  EXPECT_THROW(derive(tree_from_heads({2, 1})), PreconditionError);
}

TEST(ExecutePlain, FlightDerivationGivesArcs) {
  const auto d = flight_tree();
  EXPECT_EQ(execute_plain(d.sentence, flight_derivation()), d);
}

TEST(ExecutePlain, SingleToken) {
  const auto t = execute_plain(forms_sentence(1), {S, R("root")});
  ASSERT_EQ(t.arcs.size(), 1u);
  EXPECT_EQ(t.arcs[0], (Arc{0, 1, "root"}));
}

TEST(ExecutePlain, IllegalActionsNameTheirStep) {
  const auto two = forms_sentence(2);
  EXPECT_EQ(error_step(two, {S, L("x")}), 2u);                   // dependent would be 0
  EXPECT_EQ(error_step(two, {R("x")}), 1u);                      // only the root on the stack
  EXPECT_EQ(error_step(two, {S, S, S}), 3u);                     // empty buffer
  EXPECT_EQ(error_step(two, {S, R("root"), S, R("x")}), 2u);     // root attached too early
  EXPECT_EQ(error_step(two, {S, S, L("x")}), 3u);                // incomplete: stack [0, 2]
  EXPECT_EQ(error_step(two, {S, S, L("x"), R("root"), S}), 5u);  // past the end
}

TEST(Transition, TextForm) {
  for (const auto& t : flight_derivation()) EXPECT_EQ(parse_transition(to_string(t)), t);
  EXPECT_EQ(to_string(L("det")), "LEFTARC(det)");
  EXPECT_THROW(parse_transition("LEFTARC()"), ParseError);
  EXPECT_THROW(parse_transition("REDUCE"), ParseError);
}

TEST(DeriveProperty, RoundTripCountsAndBottomUp) {
  auto trees = enumerate_trees_up_to(5);
  const auto more = random_trees(2000, 12, true, 11);
  trees.insert(trees.end(), more.begin(), more.end());
  for (const auto& d : trees) {
    if (!is_projective(d)) continue;
    const auto der = derive(d);
    ASSERT_EQ(execute_plain(d.sentence, der), d) << to_compact_string(d);

    const auto shifts = std::count_if(der.begin(), der.end(), [](const Transition& t) { return !t.is_arc(); });
    EXPECT_EQ(shifts, d.size());
    EXPECT_EQ(der.size(), 2u * static_cast<std::size_t>(d.size()));

    // Every popped token already has all of its dependents.
    const auto heads = d.head_vector();
    std::vector<int> gold_out(heads.size(), 0), built_out(heads.size(), 0);
    for (std::size_t i = 1; i < heads.size(); ++i) ++gold_out[static_cast<std::size_t>(heads[i])];
    auto c = Configuration::initial(d.size());
    for (std::size_t k = 0; k < der.size(); ++k) {
      if (der[k].is_arc()) {
        const int top = c.stack.back();
        const int below = c.stack[c.stack.size() - 2];
        const int popped = der[k].kind == TransitionKind::kLeftArc ? below : top;
        const int head = der[k].kind == TransitionKind::kLeftArc ? top : below;
        EXPECT_EQ(built_out[static_cast<std::size_t>(popped)], gold_out[static_cast<std::size_t>(popped)]);
        ++built_out[static_cast<std::size_t>(head)];
      }
      apply(c, der[k], k + 1);
    }
    EXPECT_TRUE(c.terminal());
  }
}
