#pragma once

// Text formats: CoNLL-U treebanks, bracketed ordered trees and derivation
// traces.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arctree/core.hpp"
#include "arctree/oracle.hpp"
#include "arctree/ordered_tree.hpp"

namespace arctree {

// ---------------------------------------------------------------------------
// CoNLL-U

enum class Severity { kNote, kError };

struct Diagnostic {
  std::size_t sentence = 0;  // 1-based ordinal in the stream
  std::size_t line = 0;      // 1-based line number
  Severity severity = Severity::kNote;
  std::string message;

  std::string describe() const;
};

struct ConlluSentence {
  std::size_t number = 0;
  // Absent when the sentence could not be parsed. Parsed sentences are
  // returned even if they fail validate().
  std::optional<DependencyTree> tree;
  std::vector<Diagnostic> diagnostics;
};

// Reads one sentence at a time. Multiword-token ranges and empty nodes are
// skipped with a note; bad column counts and non-integer IDs or heads drop
// the sentence with an error diagnostic.
class ConlluReader {
 public:
  explicit ConlluReader(std::istream& in) : in_(in) {}

  std::optional<ConlluSentence> next();

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
  std::size_t sentence_no_ = 0;
};

struct ConlluCorpus {
  std::vector<DependencyTree> trees;
  std::vector<Diagnostic> diagnostics;
};

ConlluCorpus read_conllu(std::istream& in);
ConlluCorpus read_conllu_string(std::string_view text);

// ID, FORM, UPOS, HEAD and DEPREL are written; every other column is "_".
// Throws PreconditionError for invalid trees and FormatError for values
// the format cannot hold (tabs, newlines, empty fields).
void write_conllu(std::ostream& out, const DependencyTree& tree);
std::string write_conllu(const std::vector<DependencyTree>& trees);

// ---------------------------------------------------------------------------
// Bracketed trees: "(LABEL child ...)", leaves as FORM or FORM/UPOS.
// Labels are upper-cased; pending labels print as UA. Parentheses inside
// forms are written -LRB- / -RRB-.

struct BracketOptions {
  bool with_pos = false;
};

std::string write_brackets(const OrderedTree& tree, BracketOptions options = {});

// Leaves are numbered 1, 2, ... from the left; each internal node's anchor
// is its single direct leaf (0 when it has none or several). Throws
// ParseError with the byte offset of the problem.
OrderedTree read_brackets(std::string_view text, BracketOptions options = {});

// ---------------------------------------------------------------------------
// Derivation traces: tab-separated rows of step, stack, buffer, action and
// relation added, ending with a "done" row.

enum class TraceMode { kPlain, kMapped };

std::string write_trace(const Sentence& sentence, const Derivation& derivation, TraceMode mode);

// "t_book", "t′_book", "t″_book", ...
std::string partial_tree_name(std::string_view form, int revision);

// Derivation listing: one action per line.
std::string write_derivation(const Derivation& derivation);

}  // namespace arctree
