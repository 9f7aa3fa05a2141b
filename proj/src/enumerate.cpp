#include "symtree/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "symtree/canon.hpp"

namespace symtree {

namespace {

// Successor of a canonical level sequence (levels from 1, lexicographically
// decreasing generation): find the rightmost entry above 2, then repeat the
// block starting at its parent.
bool next_level_sequence(std::vector<int>& level) {
  int n = static_cast<int>(level.size());
  int p = -1;
  for (int i = n - 1; i >= 0; --i)
    if (level[i] > 2) {
      p = i;
      break;
    }
  if (p < 0) return false;
  int q = -1;
  for (int i = p - 1; i >= 0; --i)
    if (level[i] == level[p] - 1) {
      q = i;
      break;
    }
  for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  return true;
}

}  // namespace

std::vector<std::vector<int>> rooted_level_sequences(int n) {
  if (n < 1) throw std::invalid_argument("rooted enumeration: n must be >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> level(n);
  for (int i = 0; i < n; ++i) level[i] = i + 1;
  out.push_back(level);
  while (next_level_sequence(level)) out.push_back(level);
  return out;
}

Tree tree_from_level_sequence(const std::vector<int>& levels) {
  int n = static_cast<int>(levels.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    int parent = -1;
    for (int j = i - 1; j >= 0; --j)
      if (levels[j] == levels[i] - 1) {
        parent = j;
        break;
      }
    if (parent < 0) throw std::invalid_argument("malformed level sequence");
    edges.emplace_back(parent, i);
  }
  return Tree::from_edges(n, edges);
}

void for_each_free_tree(int n, const std::function<bool(const Tree&)>& fn, int max_n) {
  if (n < 1 || n > max_n)
    throw std::invalid_argument("tree enumeration: n out of range 1.." +
                                std::to_string(max_n));
  std::vector<int> level(n);
  for (int i = 0; i < n; ++i) level[i] = i + 1;
  bool more = true;
  while (more) {
    Tree t = tree_from_level_sequence(level);
    auto cs = center(t);
    bool canonical = std::find(cs.begin(), cs.end(), 0) != cs.end();
    if (canonical && cs.size() == 2) {
      int other = cs[0] == 0 ? cs[1] : cs[0];
      canonical = rooted_canonical_code(t, 0) <= rooted_canonical_code(t, other);
    }
    if (canonical && !fn(t)) return;
    more = next_level_sequence(level);
  }
}

std::vector<Tree> enumerate_free_trees(int n, int max_n) {
  std::vector<Tree> out;
  for_each_free_tree(
      n,
      [&](const Tree& t) {
        out.push_back(t);
        return true;
      },
      max_n);
  return out;
}

Tree tree_from_pruefer(const std::vector<int>& seq, int n) {
  if (n < 2) throw std::invalid_argument("pruefer: n must be >= 2");
  if (static_cast<int>(seq.size()) != n - 2)
    throw std::invalid_argument("pruefer: sequence length must be n-2");
  std::vector<int> deg(n, 1);
  for (int v : seq) {
    if (v < 0 || v >= n) throw std::invalid_argument("pruefer: entry out of range");
    ++deg[v];
  }
  std::vector<std::pair<int, int>> edges;
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : seq) {
    edges.emplace_back(leaf, v);
    if (--deg[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      while (deg[++ptr] != 1) {}
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Tree::from_edges(n, edges);
}

}  // namespace symtree
