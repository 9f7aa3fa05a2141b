#include "symtree/universal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "symtree/brute.hpp"
#include "symtree/canon.hpp"

namespace symtree {

namespace {

void validate(const UniversalSpec& spec) {
  if (spec.kind != 'T' && spec.kind != 'U')
    throw std::invalid_argument("universal: kind must be T or U");
  if (spec.r < 1 || spec.D < 2)
    throw std::invalid_argument("universal: need r >= 1 and D >= 2");
}

BigInt binom_int(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

// star code with i leaves; i = 0 is the bare root
std::string star_code(int i) {
  std::string out = "(";
  for (int j = 0; j < i; ++j) out += "()";
  return out + ")";
}

// Multisets over the catalog entries within capacities, empty one included,
// deterministic order; fn gets the child-code list and returns false to stop.
void walk_multisets(const BranchCatalog& catalog,
                    const std::function<bool(const std::vector<std::string>&)>& fn) {
  std::vector<std::string> chosen;
  std::function<bool(size_t)> rec = [&](size_t idx) {
    if (idx == catalog.entries.size()) return fn(chosen);
    const auto& e = catalog.entries[idx];
    long long cap = static_cast<long long>(e.capacity);
    for (long long c = 0; c <= cap; ++c) {
      if (c > 0) chosen.push_back(e.code);
      if (!rec(idx + 1)) {
        for (long long i = 0; i < c; ++i) chosen.pop_back();
        return false;
      }
    }
    for (long long i = 0; i < cap; ++i) chosen.pop_back();
    return true;
  };
  rec(0);
}

void check_combination_budget(const BranchCatalog& catalog, long long budget,
                              const char* what) {
  BigInt combos = 1;
  for (const auto& e : catalog.entries) {
    combos *= e.capacity + 1;
    if (combos > budget)
      throw std::invalid_argument(std::string(what) + ": catalog budget exceeded (more than " +
                                  std::to_string(budget) + " branched-subgraph types)");
  }
}

BranchCatalog level_one_catalog(int D) {
  BranchCatalog c;
  c.entries.push_back({"()", D});
  return c;
}

BranchCatalog closed_form_U2(int D) {
  BranchCatalog c;
  c.entries.push_back({"()", D});
  c.entries.push_back({star_code(1), 2 * D - 1});
  for (int i = 2; i <= D; ++i) c.entries.push_back({star_code(i), binom_int(D - 1, i - 1)});
  std::sort(c.entries.begin(), c.entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.code < b.code; });
  return c;
}

// The next-radius catalog: one entry per branched subgraph of the previous
// tree, with capacity equal to its rigid-coloring count at palette D.
BranchCatalog next_catalog_T(const BranchCatalog& prev, int D, long long type_budget) {
  check_combination_budget(prev, type_budget, "universal");
  std::vector<CatalogEntry> entries;
  walk_multisets(prev, [&](const std::vector<std::string>& children) {
    std::string code = compose_code(children);
    entries.push_back({code, count_rigid_colorings(code, D)});
    return true;
  });
  std::sort(entries.begin(), entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.code < b.code; });
  BranchCatalog c;
  c.entries = std::move(entries);
  return c;
}

}  // namespace

BigInt BranchCatalog::root_degree() const {
  BigInt d = 0;
  for (const auto& e : entries) d += e.capacity;
  return d;
}

BigInt BranchCatalog::explicit_order() const {
  BigInt n = 1;
  for (const auto& e : entries) n += e.capacity * code_order(e.code);
  return n;
}

BranchCatalog universal_catalog(const UniversalSpec& spec, const UniversalBudget& budget) {
  validate(spec);
  if (spec.kind == 'U') {
    if (spec.r == 1) return level_one_catalog(spec.D);
    if (spec.r == 2) return closed_form_U2(spec.D);
    throw std::invalid_argument(
        "universal: exact construction of kind U is unsupported for r >= 3 "
        "(use the experimental search mode)");
  }
  BranchCatalog c = level_one_catalog(spec.D);
  for (int level = 2; level <= spec.r; ++level)
    c = next_catalog_T(c, spec.D, budget.max_catalog_types);
  return c;
}

UniversalTree build_universal(const UniversalSpec& spec, const UniversalBudget& budget) {
  UniversalTree out;
  out.catalog = universal_catalog(spec, budget);
  if (out.catalog.explicit_order() > budget.max_explicit_order) return out;

  std::vector<std::pair<int, int>> edges;
  int n = 1;  // root = 0
  for (const auto& e : out.catalog.entries) {
    long long cap = static_cast<long long>(e.capacity);
    RootedTree branch = tree_of_code(e.code);
    for (long long copy = 0; copy < cap; ++copy) {
      int base = n;
      edges.emplace_back(0, base);
      for (auto [u, v] : branch.tree.g.edges) edges.emplace_back(base + u, base + v);
      n += branch.tree.n();
    }
  }
  RootedTree t;
  t.tree = Tree::from_edges(n, edges);
  t.root = 0;
  out.tree = std::move(t);
  return out;
}

bool is_branched_subgraph_of_universal(const Tree& t, const UniversalSpec& spec,
                                       const UniversalBudget& budget) {
  validate(spec);
  if (radius(t) > spec.r)
    throw std::invalid_argument("universal membership: radius exceeds " +
                                std::to_string(spec.r));

  // per-level capacity maps for kind U (level = remaining radius budget)
  std::vector<std::map<std::string, BigInt>> u_levels;
  if (spec.kind == 'U') {
    u_levels.resize(spec.r + 1);
    for (int level = 1; level <= spec.r; ++level) {
      UniversalSpec s{spec.kind, level, spec.D};
      for (const auto& e : universal_catalog(s, budget).entries)
        u_levels[level][e.code] = e.capacity;
    }
  }

  ShapeTable table;
  unsigned long long cap = static_cast<unsigned long long>(t.n()) + 2;

  // every child class (c, m) needs m within the capacity of its type at this
  // level and must itself fit one level lower
  std::function<bool(int, int)> fits = [&](int shape, int level) -> bool {
    const auto& kids = table.children[shape];
    if (kids.empty()) return true;
    if (level == 0) return false;
    std::vector<std::pair<int, int>> runs;
    for (int c : kids) {
      if (!runs.empty() && runs.back().first == c)
        ++runs.back().second;
      else
        runs.emplace_back(c, 1);
    }
    for (auto [c, m] : runs) {
      if (spec.kind == 'T') {
        if (count_rigid_capped(table, c, spec.D, cap) < static_cast<unsigned long long>(m))
          return false;
      } else {
        auto it = u_levels[level].find(table.code_of(c));
        if (it == u_levels[level].end() || it->second < m) return false;
      }
      if (!fits(c, level - 1)) return false;
    }
    return true;
  };

  for (int c : center(t)) {
    int shape = table.classify(t, c)[c];
    if (fits(shape, spec.r)) return true;
  }
  return false;
}

std::string catalog_csv(const BranchCatalog& catalog) {
  std::string out = "canonical_code,height,order,capacity\n";
  for (const auto& e : catalog.entries)
    out += e.code + "," + std::to_string(code_height(e.code)) + "," +
           std::to_string(code_order(e.code)) + "," + e.capacity.str() + "\n";
  return out;
}

long long for_each_branched_subgraph(const BranchCatalog& catalog, long long max_instances,
                                     const std::function<bool(const std::string&)>& fn) {
  long long visited = 0;
  walk_multisets(catalog, [&](const std::vector<std::string>& children) {
    if (visited >= max_instances) return false;
    ++visited;
    return fn(compose_code(children));
  });
  return visited;
}

BranchCatalog universal_catalog_search(int r, int D, int probe_cap,
                                       const UniversalBudget& budget) {
  if (r < 3) throw std::invalid_argument("universal search: exact mode covers r <= 2");
  UniversalSpec below{'U', r - 1, D};
  BranchCatalog prev = (r - 1 <= 2) ? universal_catalog(below, budget)
                                    : universal_catalog_search(r - 1, D, probe_cap, budget);
  check_combination_budget(prev, budget.max_catalog_types, "universal search");
  BruteLimits lim;
  lim.group_n = 14;
  lim.spectrum_n = 14;
  lim.spectrum_t = std::max(D, 3);

  BranchCatalog out;
  walk_multisets(prev, [&](const std::vector<std::string>& children) {
    std::string code = compose_code(children);
    int branch_order = code_order(code);
    int best = 0;
    for (int m = 1; m <= probe_cap; ++m) {
      long long n = 1 + static_cast<long long>(m) * branch_order;
      if (n > lim.spectrum_n) break;
      std::vector<std::string> copies(static_cast<size_t>(m), code);
      RootedTree probe = tree_of_code(compose_code(copies));
      const Graph& g = probe.tree.g;
      if (brute_distinguishing_number(g, lim) > D) break;
      if (brute_paint_cost(g, D, lim) != brute_fixing_number(g, lim).size) break;
      best = m;
    }
    if (best >= 1) out.entries.push_back({code, best});
    return true;
  });
  std::sort(out.entries.begin(), out.entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.code < b.code; });
  return out;
}

}  // namespace symtree
