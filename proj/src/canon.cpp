#include "symtree/canon.hpp"

#include <algorithm>
#include <stdexcept>

namespace symtree {

int ShapeTable::add(std::vector<int> child_ids) {
  std::sort(child_ids.begin(), child_ids.end());
  auto it = intern.find(child_ids);
  if (it != intern.end()) return it->second;
  int id = static_cast<int>(children.size());
  int h = 0;
  long long ord = 1;
  for (int c : child_ids) {
    h = std::max(h, height[c] + 1);
    ord += order[c];
  }
  intern.emplace(child_ids, id);
  children.push_back(std::move(child_ids));
  height.push_back(h);
  order.push_back(ord);
  return id;
}

std::vector<int> ShapeTable::classify(const Tree& t, int root) {
  auto ch = rooted_children(t, root);
  std::vector<int> shape(t.n(), -1);
  // iterative post-order
  std::vector<std::pair<int, size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < ch[v].size()) {
      int child = ch[v][next++];
      stack.emplace_back(child, 0);
      continue;
    }
    std::vector<int> ids;
    ids.reserve(ch[v].size());
    for (int c : ch[v]) ids.push_back(shape[c]);
    shape[v] = add(std::move(ids));
    stack.pop_back();
  }
  return shape;
}

int ShapeTable::from_code(std::string_view code) {
  if (!code_valid(code)) throw std::invalid_argument("malformed code");
  std::vector<int> ids;
  for (std::string_view child : code_children(code)) ids.push_back(from_code(child));
  return add(std::move(ids));
}

std::string ShapeTable::code_of(int shape) const {
  // children ids are smaller than the parent's, so a single ascending pass
  // resolves every code bottom-up
  std::vector<std::string> codes(shape + 1);
  for (int s = 0; s <= shape; ++s) {
    std::vector<std::string> parts;
    parts.reserve(children[s].size());
    for (int c : children[s]) parts.push_back(codes[c]);
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ")";
    codes[s] = std::move(out);
  }
  return codes[shape];
}

bool code_valid(std::string_view code) {
  if (code.empty() || code.front() != '(' || code.back() != ')') return false;
  int depth = 0;
  for (size_t i = 0; i < code.size(); ++i) {
    char c = code[i];
    if (c == '(')
      ++depth;
    else if (c == ')') {
      if (--depth < 0) return false;
      if (depth == 0 && i + 1 != code.size()) return false;
    } else {
      return false;
    }
  }
  return depth == 0;
}

std::vector<std::string_view> code_children(std::string_view code) {
  std::vector<std::string_view> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 1; i + 1 < code.size(); ++i) {
    if (code[i] == '(') {
      if (depth == 0) start = i;
      ++depth;
    } else {
      if (--depth == 0) out.push_back(code.substr(start, i - start + 1));
    }
  }
  return out;
}

int code_order(std::string_view code) {
  return static_cast<int>(std::count(code.begin(), code.end(), '('));
}

int code_height(std::string_view code) {
  int depth = 0, h = 0;
  for (char c : code) {
    if (c == '(')
      h = std::max(h, ++depth);
    else
      --depth;
  }
  return h - 1;
}

std::string compose_code(std::vector<std::string> child_codes) {
  std::sort(child_codes.begin(), child_codes.end());
  std::string out = "(";
  for (const auto& c : child_codes) out += c;
  out += ")";
  return out;
}

std::string rooted_canonical_code(const Tree& t, int root) {
  ShapeTable table;
  auto shape = table.classify(t, root);
  return table.code_of(shape[root]);
}

std::string rooted_canonical_code(const RootedTree& r) {
  return rooted_canonical_code(r.tree, r.root);
}

SubtreeExtract extract_component(const Tree& t, int root, int removed_neighbor) {
  SubtreeExtract out;
  std::vector<int> index(t.n(), -1);
  out.to_orig.push_back(root);
  index[root] = 0;
  std::vector<int> stack{root};
  std::vector<std::pair<int, int>> edges;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : t.neighbors(u)) {
      if (u == root && w == removed_neighbor) continue;
      if (index[w] >= 0) continue;
      index[w] = static_cast<int>(out.to_orig.size());
      out.to_orig.push_back(w);
      edges.emplace_back(index[u], index[w]);
      stack.push_back(w);
    }
  }
  out.tree = Tree::from_edges(static_cast<int>(out.to_orig.size()), edges);
  out.root = 0;
  return out;
}

std::string free_canonical_code(const Tree& t) {
  auto c = center(t);
  if (c.size() == 1) return "1" + rooted_canonical_code(t, c[0]);
  auto h1 = extract_component(t, c[0], c[1]);
  auto h2 = extract_component(t, c[1], c[0]);
  std::string a = rooted_canonical_code(h1.tree, 0);
  std::string b = rooted_canonical_code(h2.tree, 0);
  if (b < a) std::swap(a, b);
  return "2" + a + b;
}

bool tree_isomorphic(const Tree& a, const Tree& b) {
  if (a.n() != b.n() || a.g.edge_count() != b.g.edge_count()) return false;
  return free_canonical_code(a) == free_canonical_code(b);
}

BranchMultiset branch_multiset(const RootedTree& r) {
  if (r.tree.degree(r.root) == 0)
    throw std::invalid_argument("branch multiset: root has degree 0");
  BranchMultiset out;
  for (int w : r.tree.neighbors(r.root)) {
    auto branch = extract_component(r.tree, w, r.root);
    ++out[rooted_canonical_code(branch.tree, 0)];
  }
  return out;
}

RootedTree tree_of_code(std::string_view code) {
  if (!code_valid(code)) throw std::invalid_argument("malformed code");
  int n = code_order(code);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> ancestry;  // stack of open vertices
  int next_id = 0;
  for (char c : code) {
    if (c == '(') {
      int v = next_id++;
      if (!ancestry.empty()) edges.emplace_back(ancestry.back(), v);
      ancestry.push_back(v);
    } else {
      ancestry.pop_back();
    }
  }
  RootedTree out;
  out.tree = Tree::from_edges(n, edges);
  out.root = 0;
  return out;
}

}  // namespace symtree
