#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "symtree/graph.hpp"

// Small, implementation-independent oracles used to freeze expected values.
namespace oracle {

using symtree::Graph;
using symtree::Tree;

// plain backtracking root-preserving isomorphism search, degree-filtered
inline bool rooted_iso_step(const Tree& a, const Tree& b, std::vector<int>& map,
                            std::vector<char>& used, int v) {
  if (v == a.n()) return true;
  for (int w = 0; w < b.n(); ++w) {
    if (used[w] || a.degree(v) != b.degree(w)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (a.g.has_edge(u, v) != b.g.has_edge(map[u], w)) ok = false;
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    if (rooted_iso_step(a, b, map, used, v + 1)) return true;
    used[w] = 0;
    map[v] = -1;
  }
  return false;
}

inline bool rooted_isomorphic_bruteforce(const Tree& a, int ra, const Tree& b, int rb) {
  if (a.n() != b.n() || a.degree(ra) != b.degree(rb)) return false;
  // relabel a so that ra becomes vertex 0, then force 0 -> rb
  std::vector<int> relabel(a.n());
  relabel[ra] = 0;
  int next = 1;
  for (int v = 0; v < a.n(); ++v)
    if (v != ra) relabel[v] = next++;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : a.g.edges) edges.emplace_back(relabel[u], relabel[v]);
  Tree a2 = Tree::from_edges(a.n(), edges);
  std::vector<int> map(a.n(), -1);
  std::vector<char> used(b.n(), 0);
  map[0] = rb;
  used[rb] = 1;
  return rooted_iso_step(a2, b, map, used, 1);
}

// all vertex permutations fixing `root` (-1: unconstrained) that preserve
// adjacency
inline std::vector<std::vector<int>> rooted_automorphisms_bruteforce(const Tree& t, int root) {
  std::vector<int> perm(t.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (root >= 0 && perm[root] != root) continue;
    bool ok = true;
    for (auto [u, v] : t.g.edges)
      if (!t.g.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// number of rigid d-colorings of the rooted tree, counted up to rooted
// isomorphism: rigid colorings are counted by enumeration and divided by the
// rooted automorphism group order (the action is free on rigid colorings)
inline long long rigid_coloring_classes_bruteforce(const Tree& t, int root, int d) {
  auto autos = rooted_automorphisms_bruteforce(t, root);
  long long rigid = 0;
  std::vector<int> colors(t.n(), 1);
  while (true) {
    bool preserved_by_nontrivial = false;
    for (const auto& p : autos) {
      bool identity = true, preserves = true;
      for (int v = 0; v < t.n(); ++v) {
        if (p[v] != v) identity = false;
        if (colors[p[v]] != colors[v]) preserves = false;
      }
      if (!identity && preserves) {
        preserved_by_nontrivial = true;
        break;
      }
    }
    if (!preserved_by_nontrivial) ++rigid;
    int i = t.n() - 1;
    while (i >= 0 && colors[i] == d) colors[i--] = 1;
    if (i < 0) break;
    ++colors[i];
  }
  return rigid / static_cast<long long>(autos.size());
}

}  // namespace oracle
