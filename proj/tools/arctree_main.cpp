// arctree: batch front end over CoNLL-U streams.
//
// Every command reads one sentence at a time and writes results in input
// order. Exit status: 0 success, 1 a sentence failed its contract, 2 usage
// or I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "arctree/builder.hpp"
#include "arctree/io.hpp"
#include "arctree/mapped.hpp"
#include "arctree/oracle.hpp"
#include "arctree/pproj.hpp"
#include "arctree/recover.hpp"
#include "arctree/verify.hpp"

namespace {

using namespace arctree;

constexpr int kOk = 0;
constexpr int kContractFailure = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A named input stream; "-" is stdin.
class Input {
 public:
  explicit Input(const std::string& path) : path_(path) {
    if (path == "-") return;
    file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file_) throw UsageError("cannot open " + path);
  }
  std::istream& stream() { return file_ ? *file_ : std::cin; }

 private:
  std::string path_;
  std::unique_ptr<std::ifstream> file_;
};

// CoNLL-U sentences with their diagnostics echoed to stderr.
class SentenceStream {
 public:
  explicit SentenceStream(const std::string& path) : input_(path), reader_(input_.stream()) {}

  std::optional<ConlluSentence> next() {
    auto s = reader_.next();
    if (s) {
      for (const auto& d : s->diagnostics) std::cerr << d.describe() << '\n';
    }
    return s;
  }

 private:
  Input input_;
  ConlluReader reader_;
};

std::string first_violation(const DependencyTree& tree) {
  const auto v = validate(tree);
  return v.empty() ? std::string() : v.front().describe();
}

void report(std::size_t number, const std::string& message) {
  std::cerr << "sentence " << number << ": " << message << '\n';
}

struct LiftFlags {
  bool enabled = false;
  bool ascii = false;
  LiftOptions options() const {
    return LiftOptions{std::string(ascii ? kAsciiLiftSeparator : kLiftSeparator)};
  }
};

// The tree a command works on: validated, lifted when asked, projective.
// Returns nullopt after reporting why the sentence cannot be used.
std::optional<DependencyTree> prepare(const ConlluSentence& s, const LiftFlags& lift) {
  if (!s.tree) return std::nullopt;  // the reader already said why
  if (auto why = first_violation(*s.tree); !why.empty()) {
    report(s.number, "invalid: " + why);
    return std::nullopt;
  }
  DependencyTree tree = lift.enabled ? arctree::lift(*s.tree, lift.options()) : *s.tree;
  if (!is_projective(tree)) {
    report(s.number, "non-projective " + to_string(*tightest_crossing_pair(tree)) +
                         " (use --lift)");
    return std::nullopt;
  }
  return tree;
}

int cmd_validate(const std::string& path) {
  SentenceStream in(path);
  std::size_t invalid = 0;
  while (auto s = in.next()) {
    std::cout << "sentence " << s->number << ": ";
    if (!s->tree) {
      std::cout << "unreadable\n";
      ++invalid;
      continue;
    }
    const auto violations = validate(*s->tree);
    if (violations.empty()) {
      std::cout << "valid\n";
      continue;
    }
    ++invalid;
    std::cout << "invalid";
    for (const auto& v : violations) std::cout << "; " << v.describe();
    std::cout << '\n';
  }
  return invalid ? kContractFailure : kOk;
}

int cmd_projectivity(const std::string& path) {
  SentenceStream in(path);
  std::size_t projective = 0, nonprojective = 0, invalid = 0;
  while (auto s = in.next()) {
    std::cout << "sentence " << s->number << ": ";
    if (!s->tree || !validate(*s->tree).empty()) {
      std::cout << "invalid\n";
      ++invalid;
    } else if (is_projective(*s->tree)) {
      std::cout << "projective\n";
      ++projective;
    } else {
      std::cout << "non-projective " << to_string(*tightest_crossing_pair(*s->tree)) << '\n';
      ++nonprojective;
    }
  }
  std::cout << "projective " << projective << "\nnon-projective " << nonprojective << "\ninvalid "
            << invalid << '\n';
  return kOk;
}

int cmd_derive(const std::string& path, const std::string& trace, const LiftFlags& lift) {
  SentenceStream in(path);
  std::size_t failed = 0;
  bool first = true;
  while (auto s = in.next()) {
    const auto tree = prepare(*s, lift);
    if (!tree) {
      ++failed;
      continue;
    }
    const auto derivation = derive(*tree);
    if (!first) std::cout << '\n';
    first = false;
    if (trace.empty()) {
      std::cout << write_derivation(derivation);
    } else {
      const auto mode = trace == "mapped" ? TraceMode::kMapped : TraceMode::kPlain;
      std::cout << write_trace(tree->sentence, derivation, mode);
    }
  }
  return failed ? kContractFailure : kOk;
}

int cmd_build(const std::string& path, const LiftFlags& lift, bool ua, bool pos) {
  SentenceStream in(path);
  std::size_t failed = 0;
  while (auto s = in.next()) {
    auto tree = prepare(*s, lift);
    if (!tree) {
      ++failed;
      continue;
    }
    if (ua) tree = with_unlabeled_arcs(*tree);
    try {
      std::cout << write_brackets(build(*tree), BracketOptions{pos}) << '\n';
    } catch (const FormatError& e) {
      report(s->number, e.what());
      ++failed;
    }
  }
  return failed ? kContractFailure : kOk;
}

// Reads `a` to its end, then `b`.
class JoinedBuf : public std::streambuf {
 public:
  JoinedBuf(std::istream& a, std::istream& b) : a_(a), b_(b) {}

 protected:
  int_type underflow() override {
    for (std::istream* s : {&a_, &b_}) {
      s->read(chunk_, sizeof chunk_);
      if (const auto got = s->gcount(); got > 0) {
        setg(chunk_, chunk_, chunk_ + got);
        return traits_type::to_int_type(*gptr());
      }
    }
    return traits_type::eof();
  }

 private:
  std::istream& a_;
  std::istream& b_;
  char chunk_[1 << 14];
};

// The --sentences file is CoNLL-U when its first content line has a tab,
// otherwise one whitespace-separated sentence per line.
class SentenceSource {
 public:
  explicit SentenceSource(const std::string& path) : input_(path) {
    auto& in = input_.stream();
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') {
        pending_.push_back(line);
        continue;
      }
      conllu_ = line.find('\t') != std::string::npos;
      pending_.push_back(line);
      break;
    }
    std::string head;
    for (const auto& l : pending_) head += l + '\n';
    prefix_ = std::make_unique<std::istringstream>(head);
    if (conllu_) {
      joined_buf_ = std::make_unique<JoinedBuf>(*prefix_, in);
      joined_ = std::make_unique<std::istream>(joined_buf_.get());
      reader_ = std::make_unique<ConlluReader>(*joined_);
    }
  }

  // nullopt at end of input; an empty Sentence for an unreadable one.
  std::optional<Sentence> next() {
    if (conllu_) {
      auto s = reader_->next();
      if (!s) return std::nullopt;
      for (const auto& d : s->diagnostics) std::cerr << d.describe() << '\n';
      return s->tree ? s->tree->sentence : Sentence{};
    }
    std::string line;
    while (read_line(line)) {
      if (!line.empty() && line[0] == '#') continue;
      std::istringstream words(line);
      std::vector<std::string> forms;
      for (std::string w; words >> w;) forms.push_back(w);
      if (!forms.empty()) return Sentence::from_forms(forms);
    }
    return std::nullopt;
  }

 private:
  bool read_line(std::string& line) {
    if (std::getline(*prefix_, line)) return true;
    return static_cast<bool>(std::getline(input_.stream(), line));
  }

  Input input_;
  std::vector<std::string> pending_;
  bool conllu_ = false;
  std::unique_ptr<std::istringstream> prefix_;
  std::unique_ptr<JoinedBuf> joined_buf_;
  std::unique_ptr<std::istream> joined_;
  std::unique_ptr<ConlluReader> reader_;
};

int cmd_recover(const std::string& brackets_path, const std::string& sentences_path, bool delift_marks,
                bool ascii, bool pos) {
  Input brackets(brackets_path);
  SentenceSource sentences(sentences_path);
  const LiftOptions options{std::string(ascii ? kAsciiLiftSeparator : kLiftSeparator)};
  std::size_t number = 0, failed = 0;
  std::string line;
  for (;;) {
    bool have_line = false;
    while (std::getline(brackets.stream(), line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        have_line = true;
        break;
      }
    }
    auto sentence = sentences.next();
    if (!have_line && !sentence) break;
    if (have_line != sentence.has_value()) {
      throw UsageError("mixed-length inputs: " + std::string(have_line ? brackets_path : sentences_path) +
                       " has more sentences than " + (have_line ? sentences_path : brackets_path));
    }
    ++number;
    if (sentence->tokens.empty()) {
      report(number, "no sentence to recover against");
      ++failed;
      continue;
    }
    try {
      auto tree = recover(read_brackets(line, BracketOptions{pos}), *sentence);
      if (delift_marks) {
        auto result = delift_with_report(tree, options);
        for (const auto& u : result.unresolved) {
          report(number, "unresolved lift of token " + std::to_string(u.dependent) + " (" + u.mark + ")");
        }
        tree = std::move(result.tree);
      }
      write_conllu(std::cout, tree);
    } catch (const Error& e) {
      report(number, e.what());
      ++failed;
    }
  }
  return failed ? kContractFailure : kOk;
}

int cmd_roundtrip(const std::string& path, const LiftFlags& lift) {
  SentenceStream in(path);
  std::size_t total = 0, exact = 0, skipped = 0, projective_failures = 0;
  std::size_t arcs = 0, arc_mismatches = 0, unresolved = 0;
  while (auto s = in.next()) {
    ++total;
    if (!s->tree || !validate(*s->tree).empty()) {
      if (s->tree) report(s->number, "invalid: " + first_violation(*s->tree));
      ++skipped;
      continue;
    }
    const DependencyTree& gold = *s->tree;
    const bool projective = is_projective(gold);
    if (!projective && !lift.enabled) {
      report(s->number, "non-projective, skipped (use --lift)");
      ++skipped;
      continue;
    }
    const DependencyTree input = lift.enabled ? arctree::lift(gold, lift.options()) : gold;
    DependencyTree output = recover(execute_mapped(input.sentence, derive(input)), input.sentence);
    if (lift.enabled) {
      auto result = delift_with_report(output, lift.options());
      unresolved += result.unresolved.size();
      output = std::move(result.tree);
    }

    const auto gh = gold.head_vector(), oh = output.head_vector();
    const auto gl = gold.label_vector(), ol = output.label_vector();
    std::size_t mismatches = 0;
    for (std::size_t i = 1; i < gh.size(); ++i) {
      if (gh[i] != oh[i] || gl[i] != ol[i]) ++mismatches;
    }
    arcs += gh.size() - 1;
    arc_mismatches += mismatches;
    if (mismatches == 0) {
      ++exact;
    } else {
      report(s->number, std::to_string(mismatches) + " arc mismatches");
      if (projective) ++projective_failures;
    }
  }
  const std::size_t compared = total - skipped;
  std::cout << "sentences " << total << "\ncompared " << compared << "\nskipped " << skipped
            << "\nexact " << exact << '/' << compared << "\narc mismatches " << arc_mismatches << '/'
            << arcs << "\nunresolved lifts " << unresolved << '\n';
  return projective_failures ? kContractFailure : kOk;
}

int cmd_selftest(int max_n) {
  bool ok = true;
  for (const auto& r : run_exhaustive_suites(max_n)) {
    std::cout << r.summary() << '\n';
    ok = ok && r.passed();
  }
  return ok ? kOk : kContractFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered tree representations of arc-standard dependency derivations"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string trace;
  LiftFlags lift;
  bool ua = false, pos = false, delift_marks = false;
  std::string sentences;
  int max_n = kMaxSearchSize;

  auto add_lift = [&](CLI::App* cmd) {
    cmd->add_flag("--lift", lift.enabled, "Apply pseudo-projective lifting first");
    cmd->add_flag("--ascii", lift.ascii, "Use ^ instead of \xE2\x86\x91 in lifted labels");
  };

  auto* validate_cmd = app.add_subcommand("validate", "Report per-sentence tree validity");
  validate_cmd->add_option("input", input, "CoNLL-U file or -")->required();

  auto* proj_cmd = app.add_subcommand("projectivity", "Per-sentence projectivity and corpus counts");
  proj_cmd->add_option("input", input, "CoNLL-U file or -")->required();

  auto* derive_cmd = app.add_subcommand("derive", "Emit the oracle derivation of each sentence");
  derive_cmd->add_option("input", input, "CoNLL-U file or -")->required();
  derive_cmd->add_option("--trace", trace, "Emit a stack/buffer trace")
      ->check(CLI::IsMember({"plain", "mapped"}));
  add_lift(derive_cmd);

  auto* build_cmd = app.add_subcommand("build", "Emit the bracketed ordered tree of each sentence");
  build_cmd->add_option("input", input, "CoNLL-U file or -")->required();
  add_lift(build_cmd);
  build_cmd->add_flag("--ua", ua, "Replace dependency labels with UA");
  build_cmd->add_flag("--pos", pos, "Write leaves as FORM/UPOS");

  auto* recover_cmd = app.add_subcommand("recover", "Read bracketed trees back into CoNLL-U");
  recover_cmd->add_option("input", input, "Bracketed trees, one per line, or -")->required();
  recover_cmd->add_option("--sentences", sentences, "CoNLL-U or one sentence per line")->required();
  recover_cmd->add_flag("--delift", delift_marks, "Undo pseudo-projective lifting");
  recover_cmd->add_flag("--ascii", lift.ascii, "Lifted labels use ^");
  recover_cmd->add_flag("--pos", pos, "Leaves are FORM/UPOS");

  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Derive, execute, recover and diff each sentence");
  roundtrip_cmd->add_option("input", input, "CoNLL-U file or -")->required();
  add_lift(roundtrip_cmd);

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the exhaustive small-tree suites");
  selftest_cmd->add_option("--max-n", max_n, "Largest sentence length")->check(CLI::Range(1, kMaxSearchSize));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsageError;
  }

  try {
    if (*validate_cmd) return cmd_validate(input);
    if (*proj_cmd) return cmd_projectivity(input);
    if (*derive_cmd) return cmd_derive(input, trace, lift);
    if (*build_cmd) return cmd_build(input, lift, ua, pos);
    if (*recover_cmd) return cmd_recover(input, sentences, delift_marks, lift.ascii, pos);
    if (*roundtrip_cmd) return cmd_roundtrip(input, lift);
    if (*selftest_cmd) return cmd_selftest(max_n);
  } catch (const UsageError& e) {
    std::cerr << "arctree: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "arctree: internal error: " << e.what() << '\n';
    return kContractFailure;
  }
  return kUsageError;
}
