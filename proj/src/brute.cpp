#include "symtree/brute.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace symtree {

namespace {

constexpr int kMaskMax = 64;

void check_search_size(const Graph& g, int cap, const char* what) {
  if (g.n > cap || g.n > kMaskMax)
    throw std::invalid_argument(std::string(what) + ": size limit exceeded (n=" +
                                std::to_string(g.n) + ", limit " +
                                std::to_string(std::min(cap, kMaskMax)) + ")");
}

std::vector<uint64_t> adjacency_masks(const Graph& g) {
  std::vector<uint64_t> adj(g.n, 0);
  for (auto [u, v] : g.edges) {
    adj[u] |= uint64_t{1} << v;
    adj[v] |= uint64_t{1} << u;
  }
  return adj;
}

// Backtracking vertex-map search reused across many colorings of one graph.
// Distances are computed once; per-call candidate classes come from the
// automorphism-invariant profile (color, degree, multiset of
// (distance, color, degree) over all vertices).
struct SymmetryTester {
  const Graph& g;
  std::vector<uint64_t> adj;
  std::vector<std::vector<int>> dist;

  explicit SymmetryTester(const Graph& g_) : g(g_), adj(adjacency_masks(g_)) {
    dist.reserve(g.n);
    for (int v = 0; v < g.n; ++v) dist.push_back(bfs_distances(g, v));
  }

  // sink gets every (color-preserving) automorphism; return false to stop.
  void search(const std::vector<int>* colors, bool prefer_moved,
              const std::function<bool(const Permutation&)>& sink) const {
    int n = g.n;
    std::vector<std::vector<long long>> inv(n);
    for (int v = 0; v < n; ++v) {
      std::vector<long long> profile;
      profile.reserve(n + 2);
      profile.push_back(colors ? (*colors)[v] : 0);
      profile.push_back(g.degree(v));
      std::vector<long long> rows;
      rows.reserve(n);
      for (int w = 0; w < n; ++w)
        rows.push_back(((long long)dist[v][w] << 42) ^ ((long long)g.degree(w) << 21) ^
                       (colors ? ((*colors)[w] & 0x1fffff) : 0));
      std::sort(rows.begin(), rows.end());
      profile.insert(profile.end(), rows.begin(), rows.end());
      inv[v] = std::move(profile);
    }
    std::vector<std::vector<int>> cand(n);
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (inv[v] == inv[w]) cand[v].push_back(w);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return cand[a].size() < cand[b].size(); });

    Permutation img(n, -1);
    uint64_t used = 0;
    bool stop = false;
    std::function<void(int)> rec = [&](int depth) {
      if (depth == n) {
        stop = !sink(img);
        return;
      }
      int v = order[depth];
      auto try_one = [&](int w) {
        if (stop || ((used >> w) & 1)) return;
        for (int d = 0; d < depth; ++d) {
          int u = order[d];
          if (((adj[v] >> u) & 1) != ((adj[w] >> img[u]) & 1)) return;
        }
        img[v] = w;
        used |= uint64_t{1} << w;
        rec(depth + 1);
        used &= ~(uint64_t{1} << w);
        img[v] = -1;
      };
      if (prefer_moved) {
        for (int w : cand[v])
          if (w != v && !stop) try_one(w);
        try_one(v);
      } else {
        for (int w : cand[v]) {
          if (stop) return;
          try_one(w);
        }
      }
    };
    if (n > 0) rec(0);
    else stop = !sink(img);
  }

  bool has_nontrivial(const std::vector<int>& colors) const {
    bool found = false;
    search(&colors, true, [&](const Permutation& p) {
      for (int i = 0; i < g.n; ++i)
        if (p[i] != i) {
          found = true;
          return false;
        }
      return true;
    });
    return found;
  }
};

}  // namespace

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (static_cast<int>(p.size()) != g.n) return false;
  std::vector<char> seen(g.n, 0);
  for (int v : p) {
    if (v < 0 || v >= g.n || seen[v]) return false;
    seen[v] = 1;
  }
  for (auto [u, v] : g.edges)
    if (!g.has_edge(p[u], p[v])) return false;
  return true;
}

std::vector<Permutation> automorphisms(const Graph& g, const BruteLimits& lim) {
  check_search_size(g, lim.group_n, "automorphisms");
  SymmetryTester tester(g);
  std::vector<Permutation> out;
  tester.search(nullptr, false, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> twin_classes(const Graph& g) {
  auto adj = adjacency_masks(g);
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      uint64_t mu = adj[u] & ~(uint64_t{1} << v);
      uint64_t mv = adj[v] & ~(uint64_t{1} << u);
      if (mu == mv) parent[find(u)] = find(v);
    }
  std::vector<int> cls(g.n), remap(g.n, -1);
  int next = 0;
  for (int v = 0; v < g.n; ++v) {
    int r = find(v);
    if (remap[r] < 0) remap[r] = next++;
    cls[v] = remap[r];
  }
  return cls;
}

bool has_color_preserving_symmetry(const Graph& g, const std::vector<int>& colors) {
  if (g.n > kMaskMax)
    throw std::invalid_argument("symmetry search: size limit exceeded");
  return SymmetryTester(g).has_nontrivial(colors);
}

bool is_distinguishing(const Graph& g, const Coloring& c, const BruteLimits& lim) {
  check_search_size(g, lim.group_n, "is_distinguishing");
  if (static_cast<int>(c.colors.size()) != g.n)
    throw std::invalid_argument("is_distinguishing: coloring length mismatch");
  return !has_color_preserving_symmetry(g, c.colors);
}

namespace {

// Enumerates colorings with at most t colors, labeled by first use, strictly
// increasing within each twin class. Each orbit under color relabeling and
// twin exchange contributes exactly one representative, and distinguishing
// colorings never repeat a color inside a twin class, so restricting to these
// representatives is lossless for every search below.
// leaf returns false to stop; enumerate returns false if stopped.
bool enumerate_colorings(const Graph& g, int t, const std::vector<int>& twin,
                         std::vector<int>& colors,
                         const std::function<bool(const std::vector<int>&)>& leaf) {
  std::vector<int> class_max(g.n, 0);
  std::function<bool(int, int)> go = [&](int v, int maxused) {
    if (v == g.n) return leaf(colors);
    int lo = class_max[twin[v]] + 1;
    int hi = std::min(t, maxused + 1);
    for (int c = lo; c <= hi; ++c) {
      colors[v] = c;
      int saved = class_max[twin[v]];
      class_max[twin[v]] = c;
      bool cont = go(v + 1, std::max(maxused, c));
      class_max[twin[v]] = saved;
      if (!cont) return false;
    }
    colors[v] = 0;
    return true;
  };
  colors.assign(g.n, 0);
  return go(0, 0);
}

}  // namespace

int brute_distinguishing_number(const Graph& g, const BruteLimits& lim) {
  check_search_size(g, lim.group_n, "distinguishing number");
  if (g.n == 0) throw std::invalid_argument("distinguishing number: empty graph");
  SymmetryTester tester(g);
  auto twins = twin_classes(g);
  std::vector<int> colors;
  for (int t = 1; t < g.n; ++t) {
    bool found = !enumerate_colorings(g, t, twins, colors, [&](const std::vector<int>& c) {
      return tester.has_nontrivial(c);  // keep searching while symmetric
    });
    if (found) return t;
  }
  return g.n == 1 ? 1 : g.n;  // rainbow always distinguishes
}

FixingSetResult brute_fixing_number(const Graph& g, const BruteLimits& lim) {
  check_search_size(g, lim.group_n, "fixing number");
  SymmetryTester tester(g);
  auto twins = twin_classes(g);
  int nclasses = g.n == 0 ? 0 : *std::max_element(twins.begin(), twins.end()) + 1;
  std::vector<int> class_size(nclasses, 0);
  for (int v = 0; v < g.n; ++v) ++class_size[twins[v]];

  std::vector<int> colors(g.n);
  std::vector<int> outside(nclasses);
  auto fixes = [&](const std::vector<int>& subset) {
    outside = class_size;
    for (int v : subset) --outside[twins[v]];
    for (int c = 0; c < nclasses; ++c)
      if (outside[c] >= 2) return false;
    std::fill(colors.begin(), colors.end(), 0);
    int tag = 1;
    for (int v : subset) colors[v] = tag++;
    return !tester.has_nontrivial(colors);
  };

  for (int k = 0; k <= g.n; ++k) {
    if (k == 0) {
      if (fixes({})) return {0, {}};
      continue;
    }
    std::vector<int> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      if (fixes(subset)) return {k, subset};
      int i = k - 1;
      while (i >= 0 && subset[i] == g.n - k + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return {g.n, {}};  // unreachable: the full vertex set fixes everything
}

int brute_paint_cost(const Graph& g, int t, const BruteLimits& lim) {
  check_search_size(g, lim.spectrum_n, "paint cost");
  if (t > lim.spectrum_t)
    throw std::invalid_argument("paint cost: t=" + std::to_string(t) +
                                " exceeds limit " + std::to_string(lim.spectrum_t));
  BruteLimits dlim = lim;
  dlim.group_n = std::max(lim.group_n, lim.spectrum_n);
  int D = brute_distinguishing_number(g, dlim);
  if (t < D)
    throw std::invalid_argument("paint cost: t=" + std::to_string(t) +
                                " below distinguishing number " + std::to_string(D));
  int floor_cost = brute_fixing_number(g, dlim).size;  // rho^t >= F for all t

  SymmetryTester tester(g);
  auto twins = twin_classes(g);
  int best = g.n;
  std::vector<int> colors(g.n, 0), cmax(g.n, 0), count(t + 1, 0);
  std::function<bool(int, int, int)> go = [&](int v, int maxused, int maxclass) {
    if (g.n - (maxclass + (g.n - v)) >= best) return true;  // cannot improve
    if (v == g.n) {
      if (!tester.has_nontrivial(colors)) {
        best = g.n - maxclass;
        if (best == floor_cost) return false;  // theoretical minimum reached
      }
      return true;
    }
    int lo = cmax[twins[v]] + 1;
    int hi = std::min(t, maxused + 1);
    for (int c = lo; c <= hi; ++c) {
      colors[v] = c;
      int saved = cmax[twins[v]];
      cmax[twins[v]] = c;
      ++count[c];
      bool cont = go(v + 1, std::max(maxused, c), std::max(maxclass, count[c]));
      --count[c];
      cmax[twins[v]] = saved;
      colors[v] = 0;
      if (!cont) return false;
    }
    return true;
  };
  go(0, 0, 0);
  return best;
}

PaintCostSpectrum paint_cost_spectrum(const Graph& g, const BruteLimits& lim) {
  check_search_size(g, lim.spectrum_n, "paint cost spectrum");
  BruteLimits inner = lim;
  inner.group_n = std::max(lim.group_n, lim.spectrum_n);
  PaintCostSpectrum s;
  s.D = brute_distinguishing_number(g, inner);
  int F = brute_fixing_number(g, inner).size;
  inner.spectrum_t = std::max(lim.spectrum_t, F + 1);
  for (int t = s.D; t <= F + 1; ++t) s.costs.push_back(brute_paint_cost(g, t, inner));
  return s;
}

}  // namespace symtree
