#pragma once

// Generators and brute-force oracles for property checks.

#include <cstdint>
#include <string>
#include <vector>

#include "arctree/core.hpp"
#include "arctree/ordered_tree.hpp"
#include "arctree/pproj.hpp"

namespace arctree {

// A random valid tree over n tokens, deterministic in (n, seed). Heads come
// from a uniform rooted labelled tree (Pruefer code); with projective_only
// the tree is grown top-down over contiguous spans instead, so it is
// projective by construction.
DependencyTree gen_random_tree(int n, std::uint64_t seed, bool projective_only);

// `count` trees, sizes uniform in 1..max_n, seeds seed0, seed0+1, ...
std::vector<DependencyTree> random_trees(std::size_t count, int max_n, bool projective_only,
                                         std::uint64_t seed0 = 0);

inline constexpr int kMaxEnumerationSize = 6;
inline constexpr int kMaxSearchSize = 5;

// Every valid tree over n tokens (n^(n-1) of them), labelled "root" on the
// root arc and "dep<d>" elsewhere. Throws PreconditionError for n > 6.
std::vector<DependencyTree> enumerate_trees(int n);

// All trees for n = 1..max_n.
std::vector<DependencyTree> enumerate_trees_up_to(int max_n);

// Every ordered tree over leaves 1..n with leaves in surface order,
// contiguous yields and one direct leaf per internal node, children sorted.
// Internal labels are UA. Throws PreconditionError for n > 5.
std::vector<OrderedTree> enumerate_contiguous_trees(int n);

// Whether some tree from enumerate_contiguous_trees reproduces the heads
// of `tree` through recover().
bool exists_contiguous_representation(const DependencyTree& tree);

// Lifting moved every token at most once and every inverse search saw
// exactly one candidate.
bool unique_inverse_target(const LiftResult& lifted, const DeliftResult& delifted);

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
  std::string summary() const;
};

// Representation exists iff projective. Trees must have n <= 5.
SuiteResult check_characterization(const std::vector<DependencyTree>& trees);
// is_projective agrees with an empty crossing_pairs list.
SuiteResult check_projectivity_definitions(const std::vector<DependencyTree>& trees);
// Mapped execution of the oracle derivation equals build (projective trees;
// others are skipped) and the plain executor reproduces the arcs.
SuiteResult check_transition_correspondence(const std::vector<DependencyTree>& trees);
// recover(build(D)) = D and recover(execute_mapped(derive(D))) = D.
SuiteResult check_recoverability(const std::vector<DependencyTree>& trees);

// The exhaustive suites over n <= 5 used by the selftest command.
std::vector<SuiteResult> run_exhaustive_suites(int max_n = kMaxSearchSize);

std::string to_compact_string(const DependencyTree& tree);

}  // namespace arctree
