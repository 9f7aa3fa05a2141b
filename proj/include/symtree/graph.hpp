#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symtree {

// Undirected simple graph over dense 0-based vertex ids.
// Immutable after construction; all higher layers address vertices by id.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted, unique
  std::vector<std::vector<int>> adj;       // sorted neighbor lists

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edge_list);

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;
  int edge_count() const { return static_cast<int>(edges.size()); }
  int max_degree() const;
};

// A graph that is connected with edge count n-1.
struct Tree {
  Graph g;

  static Tree from_graph(Graph graph);
  static Tree from_edges(int n, std::vector<std::pair<int, int>> edge_list);

  int n() const { return g.n; }
  int degree(int v) const { return g.degree(v); }
  const std::vector<int>& neighbors(int v) const { return g.adj[v]; }
  std::vector<int> leaves() const;
};

struct RootedTree {
  Tree tree;
  int root = 0;
};

// Total color map, 1-based color ids in 1..t.
struct Coloring {
  std::vector<int> colors;
  int t = 1;

  static Coloring make(std::vector<int> colors, int t);
};

// Parse failures carry a 1-based input line (0 for whole-input conditions).
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what : what),
        line(line_) {}
};

// Edge-list text: one "u v" pair per line, '#' starts a comment line,
// vertex set inferred as 0..max id.
Graph parse_edge_list_graph(const std::string& text);
Tree parse_edge_list_tree(const std::string& text);
std::string serialize_edge_list(const Graph& g);

std::string to_dot(const Graph& g, const Coloring* coloring = nullptr);

// BFS distances from src; trees and connected graphs only (unreached = -1).
std::vector<int> bfs_distances(const Graph& g, int src);

// (vertex, eccentricity) for every vertex, ordered by vertex id.
std::vector<std::pair<int, int>> eccentricities(const Tree& t);
int radius(const Tree& t);
int diameter(const Tree& t);
// The 1 or 2 vertices of minimum eccentricity, ascending.
std::vector<int> center(const Tree& t);

// {"n":…,"radius":…,"diameter":…,"eccentric_sequence":[[i,m_i],…]}
std::string eccentricity_record_json(const Tree& t);

// One pendent-spider piece: a root u of T together with all pendent paths
// extending from u, re-indexed as a standalone rooted tree (root = index 0).
struct SpiderPiece {
  RootedTree shape;
  std::vector<int> verts;  // piece index -> original vertex id
};

// Decomposes T into the pieces S_u over all high-degree endpoints u of
// pendent paths. A path yields itself as one degenerate piece rooted at its
// smallest-id endpoint. Every leaf of T lies in exactly one piece.
std::vector<SpiderPiece> pendent_spider_decomposition(const Tree& t);

// Children lists of the tree rooted at root (parent excluded), index = vertex.
std::vector<std::vector<int>> rooted_children(const Tree& t, int root);
// Parent array; parent[root] = -1.
std::vector<int> rooted_parents(const Tree& t, int root);

}  // namespace symtree
