#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symtree/graph.hpp"
#include "symtree/tree_params.hpp"

namespace symtree {

struct UniversalSpec {
  char kind = 'T';  // 'T': all D-distinguishable trees of radius <= r
                    // 'U': additionally constant paint cost (rho^D = F)
  int r = 1;
  int D = 2;
};

struct CatalogEntry {
  std::string code;  // branch type hanging at the root
  BigInt capacity;   // maximal multiplicity
};

// Branch types admissible at the root with their maximal multiplicities,
// sorted by code. The catalog is the primary artifact; the explicit tree is
// materialized only under a size budget.
struct BranchCatalog {
  std::vector<CatalogEntry> entries;

  BigInt root_degree() const;
  BigInt explicit_order() const;  // 1 + sum capacity * |type|
};

struct UniversalBudget {
  long long max_catalog_types = 1'000'000;
  long long max_explicit_order = 1'000'000;
};

// Catalog of the requested universal tree. kind 'U' with r >= 3 is refused
// (no exact rule); see universal_catalog_search for the experimental probe.
BranchCatalog universal_catalog(const UniversalSpec& spec, const UniversalBudget& budget = {});

struct UniversalTree {
  BranchCatalog catalog;
  std::optional<RootedTree> tree;  // absent when over the explicit budget
};
UniversalTree build_universal(const UniversalSpec& spec, const UniversalBudget& budget = {});

// Membership test against the catalog capacities, never the explicit tree;
// the tree is rooted at its center(s). Requires radius(t) <= spec.r.
bool is_branched_subgraph_of_universal(const Tree& t, const UniversalSpec& spec,
                                       const UniversalBudget& budget = {});

// canonical_code,height,order,capacity
std::string catalog_csv(const BranchCatalog& catalog);

// All branched subgraphs of the cataloged tree (multisets within capacity,
// including the bare root "()"), deterministic order, at most max_instances;
// fn returns false to stop. Returns the number visited.
long long for_each_branched_subgraph(const BranchCatalog& catalog, long long max_instances,
                                     const std::function<bool(const std::string&)>& fn);

// Experimental probe for kind 'U', r >= 3: per candidate branch type, the
// largest multiplicity m (up to probe_cap) such that the root plus m copies
// keeps D-distinguishability and rho^D = F under brute limits. Types whose
// probe trees exceed the brute caps are omitted. Output is not asserted
// correct anywhere.
BranchCatalog universal_catalog_search(int r, int D, int probe_cap = 8,
                                       const UniversalBudget& budget = {});

}  // namespace symtree
