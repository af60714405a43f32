#include "arctree/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "arctree/mapped.hpp"

namespace arctree {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return v;
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

std::string Diagnostic::describe() const {
  std::ostringstream out;
  out << "sentence " << sentence << ", line " << line << ": "
      << (severity == Severity::kError ? "error" : "note") << ": " << message;
  return out.str();
}

std::optional<ConlluSentence> ConlluReader::next() {
  ConlluSentence s;
  bool started = false;
  bool failed = false;
  std::string line;
  DependencyTree tree;

  while (std::getline(in_, line)) {
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) {
      if (started) break;
      continue;
    }
    if (!started) {
      started = true;
      s.number = ++sentence_no_;
    }
    if (line.front() == '#') continue;
    if (failed) continue;

    auto error = [&](std::string msg) {
      s.diagnostics.push_back({s.number, line_no_, Severity::kError, std::move(msg)});
      failed = true;
    };
    const auto cols = split_tabs(line);
    if (cols.size() != 10) {
      error("expected 10 columns, found " + std::to_string(cols.size()));
      continue;
    }
    if (cols[0].find('-') != std::string_view::npos) {
      s.diagnostics.push_back({s.number, line_no_, Severity::kNote,
                               "skipped multiword token " + std::string(cols[0])});
      continue;
    }
    if (cols[0].find('.') != std::string_view::npos) {
      s.diagnostics.push_back({s.number, line_no_, Severity::kNote,
                               "skipped empty node " + std::string(cols[0])});
      continue;
    }
    const auto id = parse_int(cols[0]);
    if (!id) {
      error("non-integer ID '" + std::string(cols[0]) + "'");
      continue;
    }
    const auto head = parse_int(cols[6]);
    if (!head) {
      error("non-integer HEAD '" + std::string(cols[6]) + "'");
      continue;
    }
    Token tok;
    tok.index = *id;
    tok.form = std::string(cols[1]);
    if (cols[3] != "_") tok.upos = std::string(cols[3]);
    tree.sentence.tokens.push_back(std::move(tok));
    tree.arcs.push_back(Arc{*head, *id, std::string(cols[7])});
  }

  if (!started) return std::nullopt;
  if (!failed) {
    if (tree.sentence.empty()) {
      s.diagnostics.push_back({s.number, line_no_, Severity::kError, "sentence has no tokens"});
    } else {
      s.tree = std::move(tree);
    }
  }
  return s;
}

ConlluCorpus read_conllu(std::istream& in) {
  ConlluCorpus corpus;
  ConlluReader reader(in);
  while (auto s = reader.next()) {
    if (s->tree) corpus.trees.push_back(std::move(*s->tree));
    for (auto& d : s->diagnostics) corpus.diagnostics.push_back(std::move(d));
  }
  return corpus;
}

ConlluCorpus read_conllu_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_conllu(in);
}

namespace {

void check_field(std::string_view value, std::string_view what) {
  if (value.empty()) throw FormatError("empty " + std::string(what));
  if (value.find_first_of("\t\n\r") != std::string_view::npos) {
    throw FormatError(std::string(what) + " contains a tab or newline: '" + std::string(value) + "'");
  }
}

}  // namespace

void write_conllu(std::ostream& out, const DependencyTree& tree) {
  require_valid(tree);
  const auto heads = tree.head_vector();
  const auto labels = tree.label_vector();
  std::ostringstream buf;
  for (const Token& t : tree.sentence.tokens) {
    const auto i = static_cast<std::size_t>(t.index);
    check_field(t.form, "FORM");
    if (t.upos) check_field(*t.upos, "UPOS");
    check_field(labels[i], "DEPREL");
    buf << t.index << '\t' << t.form << "\t_\t" << (t.upos ? *t.upos : "_") << "\t_\t_\t"
        << heads[i] << '\t' << labels[i] << "\t_\t_\n";
  }
  buf << '\n';
  out << buf.str();
}

std::string write_conllu(const std::vector<DependencyTree>& trees) {
  std::ostringstream out;
  for (const auto& t : trees) write_conllu(out, t);
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

bool has_space(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::string escape_leaf_part(std::string_view text, std::string_view what) {
  if (text.empty()) throw FormatError("empty " + std::string(what) + " in bracket output");
  if (has_space(text)) {
    throw FormatError(std::string(what) + " contains whitespace: '" + std::string(text) + "'");
  }
  std::string s(text);
  replace_all(s, "(", "-LRB-");
  replace_all(s, ")", "-RRB-");
  return s;
}

std::string unescape_leaf_part(std::string_view text) {
  std::string s(text);
  replace_all(s, "-LRB-", "(");
  replace_all(s, "-RRB-", ")");
  return s;
}

std::string render_label(const std::optional<std::string>& label) {
  std::string s = label ? *label : std::string(kUnlabeled);
  if (s.empty() || has_space(s) || s.find_first_of("()") != std::string::npos) {
    throw FormatError("label cannot be bracketed: '" + s + "'");
  }
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::string write_brackets(const OrderedTree& tree, BracketOptions options) {
  if (tree.empty()) throw FormatError("cannot bracket an empty tree");
  std::string out;
  // Second member marks a pending close parenthesis.
  std::vector<std::pair<NodeId, bool>> stack{{tree.root(), false}};
  bool first = true;
  while (!stack.empty()) {
    auto [id, close] = stack.back();
    stack.pop_back();
    if (close) {
      out += ')';
      continue;
    }
    if (!first) out += ' ';
    first = false;
    const auto& n = tree.node(id);
    if (n.is_leaf()) {
      out += escape_leaf_part(n.form, "form");
      if (options.with_pos) {
        out += '/';
        if (n.upos) {
          if (n.upos->find('/') != std::string::npos) {
            throw FormatError("UPOS contains '/': '" + *n.upos + "'");
          }
          out += escape_leaf_part(*n.upos, "UPOS");
        } else {
          out += '_';
        }
      }
      continue;
    }
    out += '(';
    out += render_label(n.label);
    stack.emplace_back(id, true);
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.emplace_back(*it, false);
  }
  return out;
}

OrderedTree read_brackets(std::string_view text, BracketOptions options) {
  struct Frame {
    std::string label;
    std::size_t open_at;
    std::vector<NodeId> children;
  };
  OrderedTree tree;
  std::vector<Frame> stack;
  int next_leaf = 1;
  bool done = false;
  std::size_t pos = 0;

  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_atom = [&]() -> std::string_view {
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')') {
      ++pos;
    }
    return text.substr(start, pos - start);
  };

  for (skip_space(); pos < text.size(); skip_space()) {
    if (done) throw ParseError(pos, "text after the end of the tree");
    const char c = text[pos];
    if (c == '(') {
      const std::size_t open_at = pos++;
      skip_space();
      const auto label = read_atom();
      if (label.empty()) throw ParseError(pos, "node without a label");
      stack.push_back(Frame{std::string(label), open_at, {}});
    } else if (c == ')') {
      if (stack.empty()) throw ParseError(pos, "unbalanced ')'");
      Frame f = std::move(stack.back());
      stack.pop_back();
      if (f.children.empty()) throw ParseError(f.open_at, "node '" + f.label + "' has no children");
      int anchor = 0;
      int leaves = 0;
      for (NodeId k : f.children) {
        if (tree.node(k).is_leaf()) {
          ++leaves;
          anchor = tree.node(k).anchor;
        }
      }
      const NodeId id = tree.add_internal(std::move(f.label), leaves == 1 ? anchor : 0,
                                          std::move(f.children));
      ++pos;
      if (stack.empty()) {
        tree.set_root(id);
        done = true;
      } else {
        stack.back().children.push_back(id);
      }
    } else {
      const std::size_t at = pos;
      const auto atom = read_atom();
      if (stack.empty()) throw ParseError(at, "leaf outside of any node");
      std::string form;
      std::optional<std::string> upos;
      if (options.with_pos) {
        const auto slash = atom.rfind('/');
        if (slash == std::string_view::npos || slash == 0 || slash + 1 == atom.size()) {
          throw ParseError(at, "expected FORM/UPOS, got '" + std::string(atom) + "'");
        }
        form = unescape_leaf_part(atom.substr(0, slash));
        const auto tag = atom.substr(slash + 1);
        if (tag != "_") upos = unescape_leaf_part(tag);
      } else {
        form = unescape_leaf_part(atom);
      }
      stack.back().children.push_back(tree.add_leaf(next_leaf++, std::move(form), std::move(upos)));
    }
  }
  if (!stack.empty()) throw ParseError(stack.back().open_at, "unbalanced '('");
  if (!done) throw ParseError(pos, "no tree");
  return tree;
}

// ---------------------------------------------------------------------------

std::string partial_tree_name(std::string_view form, int revision) {
  std::string primes;
  switch (revision) {
    case 0: break;
    case 1: primes = "\xE2\x80\xB2"; break;      // ′
    case 2: primes = "\xE2\x80\xB3"; break;      // ″
    case 3: primes = "\xE2\x80\xB4"; break;      // ‴
    default:
      for (int i = 0; i < revision; ++i) primes += "\xE2\x80\xB2";
  }
  return "t" + primes + "_" + std::string(form);
}

namespace {

std::string stack_name(const Sentence& s, int index) {
  return index == kRootIndex ? std::string("root") : s.at(index).form;
}

std::string arc_name(const Sentence& s, int index) {
  return index == kRootIndex ? std::string("ROOT") : s.at(index).form;
}

std::string join_list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out + "]";
}

std::string action_name(const Transition& t) {
  switch (t.kind) {
    case TransitionKind::kShift: return "shift";
    case TransitionKind::kLeftArc: return "leftarc";
    case TransitionKind::kRightArc: return "rightarc";
  }
  return "?";
}

std::string relation_added(const Sentence& s, const Transition& t, int below, int top) {
  switch (t.kind) {
    case TransitionKind::kShift: return "";
    case TransitionKind::kLeftArc: return "(" + arc_name(s, below) + " \xE2\x86\x90 " + arc_name(s, top) + ")";
    case TransitionKind::kRightArc: return "(" + arc_name(s, below) + " \xE2\x86\x92 " + arc_name(s, top) + ")";
  }
  return "";
}

}  // namespace

std::string write_trace(const Sentence& sentence, const Derivation& derivation, TraceMode mode) {
  std::ostringstream out;
  Configuration plain = Configuration::initial(sentence.size());
  MappedConfiguration mapped = MappedConfiguration::initial(sentence);

  auto render_buffer = [&] {
    std::vector<std::string> items;
    for (int i : plain.buffer()) items.push_back(sentence.at(i).form);
    return join_list(items);
  };
  auto render_stack = [&] {
    std::vector<std::string> items;
    if (mode == TraceMode::kPlain) {
      for (int i : plain.stack) items.push_back(stack_name(sentence, i));
    } else {
      for (const StackEntry& e : mapped.stack()) {
        items.push_back(e.sentinel() ? std::string("root")
                                     : partial_tree_name(sentence.at(e.anchor).form, e.revision));
      }
    }
    return join_list(items);
  };

  for (std::size_t k = 0; k < derivation.size(); ++k) {
    const Transition& t = derivation[k];
    if (auto why = illegal_reason(plain, t)) throw TransitionError(k + 1, *why);
    const int top = plain.stack.back();
    const int below = plain.stack.size() >= 2 ? plain.stack[plain.stack.size() - 2] : -1;
    out << k << '\t' << render_stack() << '\t' << render_buffer() << '\t' << action_name(t) << '\t'
        << relation_added(sentence, t, below, top) << '\n';
    apply(plain, t, k + 1);
    mapped.apply(t, k + 1);
  }
  if (!plain.terminal()) throw TransitionError(derivation.size(), "incomplete derivation");
  out << derivation.size() << '\t' << render_stack() << '\t' << render_buffer() << "\tdone\t\n";
  return out.str();
}

std::string write_derivation(const Derivation& derivation) {
  std::string out;
  for (const auto& t : derivation) {
    out += to_string(t);
    out += '\n';
  }
  return out;
}

}  // namespace arctree
