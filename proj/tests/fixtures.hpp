#pragma once

#include <string>
#include <vector>

#include "arctree/core.hpp"

namespace arctree::testing {

// "book me the morning flight" with PTB tags.
inline DependencyTree flight_tree() {
  Sentence s;
  const std::vector<std::pair<std::string, std::string>> words = {
      {"book", "VB"}, {"me", "PRP"}, {"the", "DT"}, {"morning", "NN"}, {"flight", "NN"}};
  for (std::size_t i = 0; i < words.size(); ++i) {
    s.tokens.push_back(Token{static_cast<int>(i + 1), words[i].first, words[i].second});
  }
  return DependencyTree::from_heads(s, {0, 1, 5, 5, 1}, {"root", "iobj", "det", "compound", "dobj"});
}

inline Sentence forms_sentence(int n) {
  std::vector<std::string> forms;
  for (int i = 1; i <= n; ++i) forms.push_back("w" + std::to_string(i));
  return Sentence::from_forms(forms);
}

// heads[i-1] is the head of token i; labels default to "root"/"dep".
inline DependencyTree tree_from_heads(const std::vector<int>& heads,
                                      std::vector<std::string> labels = {}) {
  if (labels.empty()) {
    for (int h : heads) labels.push_back(h == 0 ? "root" : "dep");
  }
  return DependencyTree::from_heads(forms_sentence(static_cast<int>(heads.size())), heads, labels);
}

// Non-projective: (4,2) passes over 3, which is not below 4.
inline DependencyTree crossing_n4() {
  return tree_from_heads({3, 4, 0, 3}, {"a", "b", "root", "c"});
}

inline DependencyTree single_token() { return tree_from_heads({0}, {"ROOT"}); }

}  // namespace arctree::testing
