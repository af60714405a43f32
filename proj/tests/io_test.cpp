#include <gtest/gtest.h>

#include <sstream>

#include "arctree/builder.hpp"
#include "arctree/io.hpp"
#include "arctree/recover.hpp"
#include "arctree/verify.hpp"
#include "fixtures.hpp"

using namespace arctree;
using namespace arctree::testing;

namespace {

const char* kFlight =
    "# text = book me the morning flight\n"
    "1\tbook\tbook\tVB\t_\t_\t0\troot\t_\t_\n"
    "2\tme\tI\tPRP\t_\t_\t1\tiobj\t_\t_\n"
    "3\tthe\tthe\tDT\t_\t_\t5\tdet\t_\t_\n"
    "4\tmorning\tmorning\tNN\t_\t_\t5\tcompound\t_\t_\n"
    "5\tflight\tflight\tNN\t_\t_\t1\tdobj\t_\t_\n"
    "\n";

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Conllu, ReadsFlightSentence) {
  const auto corpus = read_conllu_string(kFlight);
  ASSERT_EQ(corpus.trees.size(), 1u);
  EXPECT_TRUE(corpus.diagnostics.empty());
  EXPECT_EQ(corpus.trees[0], flight_tree());
  EXPECT_EQ(corpus.trees[0].sentence.at(2).upos, "PRP");
}

TEST(Conllu, WriteThenRead) {
  const auto text = write_conllu(std::vector<DependencyTree>{flight_tree(), crossing_n4()});
  EXPECT_EQ(lines(text)[0], "1\tbook\t_\tVB\t_\t_\t0\troot\t_\t_");
  const auto corpus = read_conllu_string(text);
  ASSERT_EQ(corpus.trees.size(), 2u);
  EXPECT_EQ(corpus.trees[0], flight_tree());
  EXPECT_EQ(corpus.trees[1], crossing_n4());
}

TEST(Conllu, EmptyInput) {
  EXPECT_TRUE(read_conllu_string("").trees.empty());
  EXPECT_TRUE(read_conllu_string("\n\n# comment\n\n").trees.empty());
}

TEST(Conllu, BadHeadSkipsSentenceOnly) {
  const std::string bad = "1\ta\t_\t_\t_\t_\tx\troot\t_\t_\n\n";
  const auto corpus = read_conllu_string(bad + kFlight);
  ASSERT_EQ(corpus.trees.size(), 1u);
  ASSERT_EQ(corpus.diagnostics.size(), 1u);
  EXPECT_EQ(corpus.diagnostics[0].severity, Severity::kError);
  EXPECT_EQ(corpus.diagnostics[0].sentence, 1u);
  EXPECT_EQ(corpus.diagnostics[0].line, 1u);
}

TEST(Conllu, BadColumnCount) {
  const auto corpus = read_conllu_string("1\ta\t_\t0\troot\n\n");
  EXPECT_TRUE(corpus.trees.empty());
  ASSERT_EQ(corpus.diagnostics.size(), 1u);
  EXPECT_EQ(corpus.diagnostics[0].severity, Severity::kError);
}

TEST(Conllu, MultiwordAndEmptyNodesAreNoted) {
  const auto corpus = read_conllu_string(
      "1-2\tdel\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tde\t_\t_\t_\t_\t0\troot\t_\t_\n"
      "1.1\tx\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "2\tel\t_\t_\t_\t_\t1\tdet\t_\t_\n\n");
  ASSERT_EQ(corpus.trees.size(), 1u);
  EXPECT_EQ(corpus.trees[0].size(), 2);
  EXPECT_EQ(corpus.diagnostics.size(), 2u);
  for (const auto& d : corpus.diagnostics) EXPECT_EQ(d.severity, Severity::kNote);
}

TEST(Conllu, StreamingReader) {
  std::istringstream in(std::string(kFlight) + kFlight);
  ConlluReader reader(in);
  std::size_t count = 0;
  while (auto s = reader.next()) {
    ++count;
    EXPECT_EQ(s->number, count);
    ASSERT_TRUE(s->tree.has_value());
  }
  EXPECT_EQ(count, 2u);
}

TEST(Conllu, UnwritableValues) {
  auto d = flight_tree();
  d.arcs[1].label = "a\tb";
  std::ostringstream out;
  EXPECT_THROW(write_conllu(out, d), FormatError);
  EXPECT_THROW(write_conllu(out, tree_from_heads({2, 1})), PreconditionError);
}

TEST(Brackets, FlightWithPos) {
  const auto t = build(flight_tree());
  EXPECT_EQ(write_brackets(t, {true}),
            "(ROOT book/VB (IOBJ me/PRP) (DOBJ (DET the/DT) (COMPOUND morning/NN) flight/NN))");
  EXPECT_EQ(write_brackets(t), "(ROOT book (IOBJ me) (DOBJ (DET the) (COMPOUND morning) flight))");
  const auto back = read_brackets(write_brackets(t, {true}), {true});
  EXPECT_EQ(back.node(back.preorder()[1]).upos, "VB");
  EXPECT_EQ(recover(back, flight_tree().sentence).head_vector(), flight_tree().head_vector());
}

TEST(Brackets, Errors) {
  EXPECT_THROW(read_brackets("(ROOT)"), ParseError);
  EXPECT_THROW(read_brackets("(ROOT w1"), ParseError);
  EXPECT_THROW(read_brackets("ROOT w1)"), ParseError);
  EXPECT_THROW(read_brackets("(ROOT w1) extra"), ParseError);
  try {
    read_brackets("(ROOT w1))");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 9u);
  }
}

TEST(Brackets, EscapesParentheses) {
  const auto d = DependencyTree::from_heads(Sentence::from_forms({"(", "x", ")"}), {2, 0, 2},
                                            {"punct", "root", "punct"});
  const auto text = write_brackets(build(d));
  EXPECT_EQ(text, "(ROOT (PUNCT -LRB-) x (PUNCT -RRB-))");
  const auto back = read_brackets(text);
  EXPECT_EQ(back.node(back.preorder()[2]).form, "(");
}

TEST(Brackets, WhitespaceInFormIsRejected) {
  const auto d = DependencyTree::from_heads(Sentence::from_forms({"a b"}), {0}, {"root"});
  EXPECT_THROW(write_brackets(build(d)), FormatError);
}

TEST(Trace, FlightSentence) {
  const auto d = flight_tree();
  const auto rows = lines(write_trace(d.sentence, derive(d), TraceMode::kPlain));
  const std::vector<std::string> expected = {
      "0\t[root]\t[book, me, the, morning, flight]\tshift\t",
      "1\t[root, book]\t[me, the, morning, flight]\tshift\t",
      "2\t[root, book, me]\t[the, morning, flight]\trightarc\t(book \xE2\x86\x92 me)",
      "3\t[root, book]\t[the, morning, flight]\tshift\t",
      "4\t[root, book, the]\t[morning, flight]\tshift\t",
      "5\t[root, book, the, morning]\t[flight]\tshift\t",
      "6\t[root, book, the, morning, flight]\t[]\tleftarc\t(morning \xE2\x86\x90 flight)",
      "7\t[root, book, the, flight]\t[]\tleftarc\t(the \xE2\x86\x90 flight)",
      "8\t[root, book, flight]\t[]\trightarc\t(book \xE2\x86\x92 flight)",
      "9\t[root, book]\t[]\trightarc\t(ROOT \xE2\x86\x92 book)",
      "10\t[root]\t[]\tdone\t",
  };
  EXPECT_EQ(rows, expected);
}

TEST(Trace, SingleTokenAndMappedNames) {
  EXPECT_EQ(lines(write_trace(forms_sentence(1), derive(tree_from_heads({0})), TraceMode::kPlain)).size(), 3u);
  const auto d = flight_tree();
  const auto rows = lines(write_trace(d.sentence, derive(d), TraceMode::kMapped));
  EXPECT_EQ(rows[3].substr(0, rows[3].find('\t', 2)), "3\t[root, t\xE2\x80\xB2_book]");
  EXPECT_EQ(partial_tree_name("book", 2), "t\xE2\x80\xB3_book");
  EXPECT_EQ(partial_tree_name("x", 4), "t\xE2\x80\xB2\xE2\x80\xB2\xE2\x80\xB2\xE2\x80\xB2_x");
  EXPECT_THROW(write_trace(forms_sentence(2), {Transition::shift()}, TraceMode::kPlain), TransitionError);
}

TEST(IoProperty, RoundTripsOnGeneratedSentences) {
  const auto trees = random_trees(1000, 12, false, 777);
  const auto corpus = read_conllu_string(write_conllu(trees));
  ASSERT_EQ(corpus.trees.size(), trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) {
    ASSERT_EQ(corpus.trees[i], trees[i]);
    if (!is_projective(trees[i])) continue;
    const auto t = build(trees[i]);
    const auto text = write_brackets(t, {true});
    ASSERT_EQ(write_brackets(read_brackets(text, {true}), {true}), text);
  }
}
