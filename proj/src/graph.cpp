#include "symtree/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace symtree {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edge_list) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto& [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("graph: endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
    throw std::invalid_argument("graph: duplicate edge");

  Graph g;
  g.n = n;
  g.edges = std::move(edge_list);
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adj[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.n, -1);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : g.adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

Tree Tree::from_graph(Graph graph) {
  if (graph.n == 0) throw std::invalid_argument("tree: empty vertex set");
  if (graph.edge_count() != graph.n - 1)
    throw std::invalid_argument("tree: edge count is not n-1");
  auto dist = bfs_distances(graph, 0);
  if (std::find(dist.begin(), dist.end(), -1) != dist.end())
    throw std::invalid_argument("tree: disconnected");
  Tree t;
  t.g = std::move(graph);
  return t;
}

Tree Tree::from_edges(int n, std::vector<std::pair<int, int>> edge_list) {
  return from_graph(Graph::from_edges(n, std::move(edge_list)));
}

std::vector<int> Tree::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < n(); ++v)
    if (degree(v) == 1 || n() == 1) out.push_back(v);
  return out;
}

Coloring Coloring::make(std::vector<int> colors, int t) {
  if (t < 1) throw std::invalid_argument("coloring: palette must be >= 1");
  for (int c : colors)
    if (c < 1 || c > t) throw std::invalid_argument("coloring: color out of 1..t");
  Coloring c;
  c.colors = std::move(colors);
  c.t = t;
  return c;
}

namespace {

struct RawEdges {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_line;  // 1-based line per edge
  int max_id = -1;
};

RawEdges parse_raw(const std::string& text) {
  RawEdges r;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u >> v)) throw ParseError(lineno, "expected \"u v\"");
    std::string rest;
    if (ls >> rest) throw ParseError(lineno, "trailing tokens after \"u v\"");
    if (u < 0 || v < 0) throw ParseError(lineno, "negative vertex id");
    if (u == v) throw ParseError(lineno, "self-loop");
    r.edges.emplace_back(static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v)));
    r.edge_line.push_back(lineno);
    r.max_id = std::max(r.max_id, static_cast<int>(std::max(u, v)));
  }
  // duplicate detection with the offending line
  std::set<std::pair<int, int>> seen;
  for (size_t i = 0; i < r.edges.size(); ++i)
    if (!seen.insert(r.edges[i]).second)
      throw ParseError(r.edge_line[i], "duplicate edge");
  return r;
}

void check_contiguous(const RawEdges& r) {
  std::vector<char> used(r.max_id + 1, 0);
  for (auto [u, v] : r.edges) used[u] = used[v] = 1;
  for (int v = 0; v <= r.max_id; ++v)
    if (!used[v])
      throw ParseError(0, "non-contiguous ids: vertex " + std::to_string(v) +
                              " never appears");
}

}  // namespace

Graph parse_edge_list_graph(const std::string& text) {
  RawEdges r = parse_raw(text);
  if (r.edges.empty()) return Graph::from_edges(0, {});
  check_contiguous(r);
  return Graph::from_edges(r.max_id + 1, r.edges);
}

Tree parse_edge_list_tree(const std::string& text) {
  RawEdges r = parse_raw(text);
  if (r.edges.empty()) throw ParseError(0, "empty edge list is not a tree");
  check_contiguous(r);
  int n = r.max_id + 1;
  // union-find to pin a cycle on the line that closes it
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < r.edges.size(); ++i) {
    int a = find(r.edges[i].first), b = find(r.edges[i].second);
    if (a == b) throw ParseError(r.edge_line[i], "cycle detected");
    parent[a] = b;
  }
  if (static_cast<int>(r.edges.size()) != n - 1)
    throw ParseError(0, "disconnected: " + std::to_string(n) + " vertices, " +
                            std::to_string(r.edges.size()) + " edges");
  return Tree::from_edges(n, r.edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges)
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string to_dot(const Graph& g, const Coloring* coloring) {
  std::string out = "graph G {\n";
  for (int v = 0; v < g.n; ++v) {
    out += "  " + std::to_string(v) + " [label=\"" + std::to_string(v) + "\"";
    if (coloring) out += ", color=\"" + std::to_string(coloring->colors[v]) + "\"";
    out += "];\n";
  }
  for (auto [u, v] : g.edges)
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

std::vector<std::pair<int, int>> eccentricities(const Tree& t) {
  // in a tree, every vertex's eccentricity is its distance to the farther
  // end of any longest path, so three sweeps suffice
  auto d0 = bfs_distances(t.g, 0);
  int a = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  auto da = bfs_distances(t.g, a);
  int b = static_cast<int>(std::max_element(da.begin(), da.end()) - da.begin());
  auto db = bfs_distances(t.g, b);
  std::vector<std::pair<int, int>> out;
  out.reserve(t.n());
  for (int v = 0; v < t.n(); ++v) out.emplace_back(v, std::max(da[v], db[v]));
  return out;
}

int radius(const Tree& t) {
  auto ecc = eccentricities(t);
  int r = ecc[0].second;
  for (auto [v, e] : ecc) r = std::min(r, e);
  return r;
}

int diameter(const Tree& t) {
  auto ecc = eccentricities(t);
  int d = 0;
  for (auto [v, e] : ecc) d = std::max(d, e);
  return d;
}

std::vector<int> center(const Tree& t) {
  auto ecc = eccentricities(t);
  int r = ecc[0].second;
  for (auto [v, e] : ecc) r = std::min(r, e);
  std::vector<int> c;
  for (auto [v, e] : ecc)
    if (e == r) c.push_back(v);
  return c;
}

std::string eccentricity_record_json(const Tree& t) {
  auto ecc = eccentricities(t);
  int r = ecc[0].second, d = 0;
  for (auto [v, e] : ecc) {
    r = std::min(r, e);
    d = std::max(d, e);
  }
  std::vector<int> mult(d + 1, 0);
  for (auto [v, e] : ecc) ++mult[e];
  std::string seq;
  for (int i = r; i <= d; ++i) {
    if (!seq.empty()) seq += ",";
    seq += "[" + std::to_string(i) + "," + std::to_string(mult[i]) + "]";
  }
  return "{\"n\":" + std::to_string(t.n()) + ",\"radius\":" + std::to_string(r) +
         ",\"diameter\":" + std::to_string(d) + ",\"eccentric_sequence\":[" + seq + "]}";
}

std::vector<std::vector<int>> rooted_children(const Tree& t, int root) {
  std::vector<std::vector<int>> ch(t.n());
  std::vector<int> stack{root}, parent(t.n(), -1);
  parent[root] = root;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : t.neighbors(u))
      if (parent[w] < 0) {
        parent[w] = u;
        ch[u].push_back(w);
        stack.push_back(w);
      }
  }
  return ch;
}

std::vector<int> rooted_parents(const Tree& t, int root) {
  std::vector<int> parent(t.n(), -1);
  std::vector<int> stack{root};
  std::vector<char> seen(t.n(), 0);
  seen[root] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : t.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = u;
        stack.push_back(w);
      }
  }
  return parent;
}

namespace {

// Builds a standalone piece from the root plus its attached paths
// (each path listed leaf-to-root exclusive of the root).
SpiderPiece make_piece(int root, const std::vector<std::vector<int>>& paths) {
  SpiderPiece piece;
  piece.verts.push_back(root);
  std::vector<std::pair<int, int>> edges;
  for (const auto& path : paths) {
    int prev = 0;  // piece index of the root
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      piece.verts.push_back(*it);
      int cur = static_cast<int>(piece.verts.size()) - 1;
      edges.emplace_back(prev, cur);
      prev = cur;
    }
  }
  piece.shape.tree = Tree::from_edges(static_cast<int>(piece.verts.size()), edges);
  piece.shape.root = 0;
  return piece;
}

}  // namespace

std::vector<SpiderPiece> pendent_spider_decomposition(const Tree& t) {
  if (t.n() < 2) throw std::invalid_argument("pendent decomposition: need >= 2 vertices");
  if (t.g.max_degree() <= 2) {
    // A path: the whole tree is one degenerate piece rooted at an endpoint.
    int endpoint = 0;
    while (t.degree(endpoint) != 1) ++endpoint;
    std::vector<int> path;
    int prev = -1, cur = endpoint;
    while (true) {
      int next = -1;
      for (int w : t.neighbors(cur))
        if (w != prev) next = w;
      if (next < 0) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    std::reverse(path.begin(), path.end());  // leaf-to-root order
    return {make_piece(endpoint, {path})};
  }

  // root -> list of pendent paths (each path is leaf..next-to-root)
  std::vector<std::vector<std::vector<int>>> paths_at(t.n());
  for (int leaf = 0; leaf < t.n(); ++leaf) {
    if (t.degree(leaf) != 1) continue;
    std::vector<int> path{leaf};
    int prev = -1, cur = leaf;
    while (t.degree(cur) < 3) {
      int next = -1;
      for (int w : t.neighbors(cur))
        if (w != prev) next = w;
      prev = cur;
      cur = next;
      if (t.degree(cur) < 3) path.push_back(cur);
    }
    paths_at[cur].push_back(std::move(path));
  }
  std::vector<SpiderPiece> out;
  for (int u = 0; u < t.n(); ++u)
    if (!paths_at[u].empty()) out.push_back(make_piece(u, paths_at[u]));
  return out;
}

}  // namespace symtree
