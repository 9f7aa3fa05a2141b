#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symtree/graph.hpp"

namespace symtree {

// Canonical rooted-tree codes over "(" and ")": a leaf is "()", children
// codes are concatenated in ascending lexicographic order inside the
// parent's parentheses. Equal codes <=> rooted-isomorphic.

std::string rooted_canonical_code(const Tree& t, int root);
std::string rooted_canonical_code(const RootedTree& r);

// Total order over free trees: "1"+code(center) for unicentral trees,
// "2"+min(a,b)+max(a,b) over the two central-edge halves for bicentral ones.
std::string free_canonical_code(const Tree& t);

bool tree_isomorphic(const Tree& a, const Tree& b);

// code -> multiplicity over the branches of r hanging at the root's
// neighbors, each branch rooted at that neighbor.
using BranchMultiset = std::map<std::string, int>;
BranchMultiset branch_multiset(const RootedTree& r);

// --- code-string utilities ---

bool code_valid(std::string_view code);
std::vector<std::string_view> code_children(std::string_view code);
int code_order(std::string_view code);   // number of vertices
int code_height(std::string_view code);  // root-to-deepest-leaf edge count
// Wraps the given child codes (sorted ascending) in a new root.
std::string compose_code(std::vector<std::string> child_codes);

// Materializes a code as an explicit tree, vertices in DFS preorder, root 0.
RootedTree tree_of_code(std::string_view code);

// --- hash-consed subtree classification ---

// Shape ids are dense; two vertices share an id iff their rooted subtrees
// are isomorphic. Children are created before parents, so child shape ids
// are always smaller than the parent's.
struct ShapeTable {
  std::vector<std::vector<int>> children;  // shape -> child shape ids, ascending
  std::vector<int> height;                 // shape -> height
  std::vector<long long> order;            // shape -> vertex count

  std::map<std::vector<int>, int> intern;

  int add(std::vector<int> child_ids);
  // Shape of every vertex for the tree rooted at root (index = vertex id).
  std::vector<int> classify(const Tree& t, int root);
  int from_code(std::string_view code);
  std::string code_of(int shape) const;
};

// The component of t containing root after deleting edge (root, removed),
// re-indexed with a map back to original ids.
struct SubtreeExtract {
  Tree tree;
  int root = 0;
  std::vector<int> to_orig;
};
SubtreeExtract extract_component(const Tree& t, int root, int removed_neighbor);

}  // namespace symtree
