#include "symtree/extremal.hpp"

#include <algorithm>
#include <stdexcept>

#include "symtree/brute.hpp"

namespace symtree {

namespace {

// incremental edge builder with sequential fresh ids
struct Builder {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  int fresh() { return n++; }
  void edge(int u, int v) { edges.emplace_back(u, v); }
  // appends a path of `len` edges hanging at `at`; returns the far endpoint
  int pendant_path(int at, int len) {
    int cur = at;
    for (int i = 0; i < len; ++i) {
      int nxt = fresh();
      edge(cur, nxt);
      cur = nxt;
    }
    return cur;
  }
  Tree tree() const { return Tree::from_edges(n, edges); }
  Graph graph() const { return Graph::from_edges(n, edges); }
};

}  // namespace

Tree make_path(int n) {
  if (n < 1) throw std::invalid_argument("path: need n >= 1");
  Builder b;
  int prev = b.fresh();
  for (int i = 1; i < n; ++i) {
    int v = b.fresh();
    b.edge(prev, v);
    prev = v;
  }
  return b.tree();
}

Tree make_spider(const std::vector<int>& legs) {
  Builder b;
  int hub = b.fresh();
  for (int len : legs) {
    if (len < 1) throw std::invalid_argument("spider: leg length must be >= 1");
    b.pendant_path(hub, len);
  }
  return b.tree();
}

Tree make_star(int leaves) {
  if (leaves < 0) throw std::invalid_argument("star: negative leaf count");
  return make_spider(std::vector<int>(leaves, 1));
}

Tree make_broom(int k, int ones) {
  if (k < 1 || ones < 0) throw std::invalid_argument("broom: need k >= 1, ones >= 0");
  std::vector<int> legs{k};
  legs.insert(legs.end(), ones, 1);
  return make_spider(legs);
}

Tree max_density_spider() { return make_spider({1, 1, 2, 2, 2, 2}); }

Tree leafy_path(int k, int D) {
  if (k < 1 || D < 1) throw std::invalid_argument("leafy path: need k >= 1, D >= 1");
  Builder b;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    int v = b.fresh();
    if (prev >= 0) b.edge(prev, v);
    for (int j = 0; j < D; ++j) b.pendant_path(v, 1);
    prev = v;
  }
  return b.tree();
}

Tree spider_chain(int k) {
  if (k < 1) throw std::invalid_argument("spider chain: need k >= 1");
  Builder b;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    int hub = b.fresh();
    if (prev >= 0) b.edge(prev, hub);
    for (int len : {1, 1, 2, 2, 2, 2}) b.pendant_path(hub, len);
    prev = hub;
  }
  return b.tree();
}

Tree sequence_extremal_tree(const EccentricSequence& x) {
  if (!lesniak_realizable(x))
    throw std::invalid_argument("sequence tree: sequence is not realizable");
  int r = x.r(), d = x.d();
  Builder b;
  std::vector<int> path(d + 1);
  for (int i = 0; i <= d; ++i) {
    path[i] = b.fresh();
    if (i > 0) b.edge(path[i - 1], path[i]);
  }
  for (int i = r + 1; i <= d; ++i)
    for (int j = 0; j < x.m(i) - 2; ++j) b.pendant_path(path[i - 1], 1);
  return b.tree();
}

Tree unit_fixing_tree(int r, int k) {
  if (!(2 <= k && k <= r + 1))
    throw std::invalid_argument("unit fixing tree: need 2 <= k <= r+1");
  Builder b;
  std::vector<int> path(2 * r + 1);
  for (int i = 0; i <= 2 * r; ++i) {
    path[i] = b.fresh();
    if (i > 0) b.edge(path[i - 1], path[i]);
  }
  if (k == 2) return b.tree();
  for (int j = 1; j <= k - 2; ++j) b.pendant_path(path[j], j);
  for (int len = r - 1; len >= r - k + 2; --len) b.pendant_path(path[r], len);
  return b.tree();
}

Tree default_asymmetric_base(int k) {
  if (k < 5) throw std::invalid_argument("asymmetric base: need k >= 5");
  Builder b;
  int prev = b.fresh();
  for (int i = 1; i < k - 1; ++i) {
    int v = b.fresh();
    b.edge(prev, v);
    prev = v;
  }
  int pendant = b.fresh();
  b.edge(2, pendant);
  return b.tree();
}

Graph subset_split_graph(int k, int D) {
  if (D < 2) throw std::invalid_argument("subset split graph: need D >= 2");
  if (k < 5 || k > 16)
    throw std::invalid_argument("subset split graph: need 5 <= k <= 16");
  Tree base = default_asymmetric_base(k);
  Builder b;
  b.n = k;
  b.edges = base.g.edges;
  for (long long u_mask = 1; u_mask < (1LL << k); ++u_mask) {
    for (int j = 0; j < D; ++j) {
      int v = b.fresh();
      for (int u = 0; u < k; ++u)
        if ((u_mask >> u) & 1) b.edge(u, v);
    }
  }
  return b.graph();
}

GkCertificates gk_certificates(int k, int D) {
  GkCertificates cert;
  cert.k = k;
  cert.D = D;
  Tree base = default_asymmetric_base(k);
  BruteLimits lim;
  lim.group_n = std::max(lim.group_n, 12);
  if (k > lim.group_n)
    throw std::invalid_argument("gk certificates: base asymmetry check limited to k <= " +
                                std::to_string(lim.group_n));
  cert.base_asymmetric = brute_fixing_number(base.g, lim).size == 0;
  if (!cert.base_asymmetric)
    throw std::invalid_argument("gk certificates: base not asymmetric for k=" +
                                std::to_string(k));

  Graph g = subset_split_graph(k, D);
  cert.order = g.n;
  cert.groups = (1LL << k) - 1;
  cert.neighborhoods_equal = true;
  cert.coloring_breaks_generators = true;

  std::vector<int> colors(g.n, 1);
  for (long long grp = 0; grp < cert.groups; ++grp)
    for (int j = 0; j < D; ++j) colors[k + grp * D + j] = j + 1;

  for (long long grp = 0; grp < cert.groups; ++grp) {
    int v0 = static_cast<int>(k + grp * D);
    for (int j = 1; j < D; ++j)
      if (g.adj[v0] != g.adj[v0 + j]) cert.neighborhoods_equal = false;
    // the copy-0/copy-1 transposition, everything else fixed
    Permutation swap(g.n);
    for (int v = 0; v < g.n; ++v) swap[v] = v;
    std::swap(swap[v0], swap[v0 + 1]);
    if (is_automorphism(g, swap)) ++cert.swaps_verified;
    if (colors[v0] == colors[v0 + 1]) cert.coloring_breaks_generators = false;
  }
  if (cert.swaps_verified != cert.groups || !cert.neighborhoods_equal)
    throw std::logic_error("gk certificates: construction self-check failed");
  // each group needs D-1 of its D interchangeable copies in any fixing set;
  // group supports are pairwise disjoint
  cert.fixing_lower_bound = static_cast<long long>(D - 1) * cert.groups;
  return cert;
}

std::vector<std::string> construction_ids() {
  return {"fig2-spider", "tk-family", "sharpness-chain", "t-x", "prop55",
          "gk",          "spider",    "broom",           "path", "star"};
}

Graph construct(const std::string& id, const ConstructionParams& p) {
  auto need = [&](int value, const char* what) {
    if (value < 0)
      throw std::invalid_argument(std::string("construct ") + id + ": missing parameter " + what);
    return value;
  };
  if (id == "fig2-spider") return max_density_spider().g;
  if (id == "tk-family") return leafy_path(need(p.k, "k"), need(p.d, "D")).g;
  if (id == "sharpness-chain") return spider_chain(need(p.k, "k")).g;
  if (id == "t-x") {
    if (p.sequence.empty())
      throw std::invalid_argument("construct t-x: missing parameter X");
    return sequence_extremal_tree(EccentricSequence::parse(p.sequence)).g;
  }
  if (id == "prop55") return unit_fixing_tree(need(p.r, "r"), need(p.k, "k")).g;
  if (id == "gk") return subset_split_graph(need(p.k, "k"), need(p.d, "D"));
  if (id == "spider") {
    if (p.legs.empty()) throw std::invalid_argument("construct spider: missing legs");
    return make_spider(p.legs).g;
  }
  if (id == "broom") return make_broom(need(p.k, "k"), need(p.d, "ones")).g;
  if (id == "path") return make_path(need(p.k, "k")).g;
  if (id == "star") return make_star(need(p.k, "k")).g;
  throw std::invalid_argument("construct: unknown id \"" + id + "\"");
}

}  // namespace symtree
