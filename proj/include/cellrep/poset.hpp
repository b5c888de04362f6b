#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

namespace cellrep::detail {

// adj[a][b] means a >= b in one step. Returns the reflexive-transitive closure.
std::vector<std::vector<bool>> transitive_closure(std::vector<std::vector<bool>> adj);

bool is_transitive(const std::vector<std::vector<bool>>& adj);

// Mutual-comparability analysis of a preorder given by its one-step relation
// (which the callers assert to be already transitive, up to reflexivity).
struct PreorderAnalysis {
  std::vector<std::vector<bool>> geq;        // reflexive-transitive relation on nodes
  std::vector<int> class_of;                 // node -> class index
  std::vector<std::vector<int>> classes;     // canonical order; members sorted
  std::vector<std::vector<bool>> class_geq;  // induced partial order (reflexive)
};

// Canonical class order: lexicographic by the minimal member name.
PreorderAnalysis analyze_preorder(const std::vector<std::vector<bool>>& one_step,
                                  const std::vector<std::string>& names);

// All upward-closed subsets of the class poset, sorted by size then members.
std::vector<std::set<int>> upward_closed_sets(const std::vector<std::vector<bool>>& class_geq,
                                              std::size_t budget);

bool is_upward_closed(const std::vector<std::vector<bool>>& class_geq, const std::set<int>& q);

// All orders c_1, c_2, ... in which every prefix is upward closed (each c_i is
// maximal among the remaining classes). Stops after `cap` chains and sets
// `truncated`.
std::vector<std::vector<int>> complete_chains_topdown(
    const std::vector<std::vector<bool>>& class_geq, std::size_t cap, bool& truncated);

std::vector<int> random_chain_topdown(const std::vector<std::vector<bool>>& class_geq,
                                      std::mt19937& rng);

}  // namespace cellrep::detail
