#pragma once

#include <functional>
#include <vector>

#include "symtree/graph.hpp"

namespace symtree {

inline constexpr int kDefaultEnumerationMax = 16;

// Exactly one representative per isomorphism class of free trees on n
// vertices, deterministic order. Rooted trees are generated by level-sequence
// successor steps and lifted to free trees by keeping only the canonical
// center rooting.
std::vector<Tree> enumerate_free_trees(int n, int max_n = kDefaultEnumerationMax);

// Visitor form; stops early when fn returns false.
void for_each_free_tree(int n, const std::function<bool(const Tree&)>& fn,
                        int max_n = kDefaultEnumerationMax);

// All rooted trees on n vertices as level sequences (root level 1), in the
// generation order of the successor algorithm.
std::vector<std::vector<int>> rooted_level_sequences(int n);

Tree tree_from_level_sequence(const std::vector<int>& levels);

// Labeled tree on n >= 2 vertices from a length n-2 sequence over {0..n-1}.
// Bijective, so iterating all sequences hits every labeled tree exactly once.
Tree tree_from_pruefer(const std::vector<int>& seq, int n);

}  // namespace symtree
