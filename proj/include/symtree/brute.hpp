#pragma once

#include <vector>

#include "symtree/graph.hpp"

namespace symtree {

// Exhaustive-search ceilings. Values are configuration, not policy: callers
// (campaigns, CLI) may raise them where a specific check is known cheap.
struct BruteLimits {
  int group_n = 12;     // automorphism search / D / F
  int spectrum_n = 10;  // paint cost enumeration
  int spectrum_t = 5;
};

using Permutation = std::vector<int>;

// The full automorphism group, identity first, lexicographic image order.
std::vector<Permutation> automorphisms(const Graph& g, const BruteLimits& lim = {});

bool is_automorphism(const Graph& g, const Permutation& p);

// Vertex partition into classes whose members are pairwise exchangeable by
// transpositions (equal neighborhoods up to each other). Returns class ids.
std::vector<int> twin_classes(const Graph& g);

// True iff some nontrivial automorphism preserves every color class.
// `colors` may carry arbitrary ints; vertices forced to stay fixed can be
// given unique values.
bool has_color_preserving_symmetry(const Graph& g, const std::vector<int>& colors);

bool is_distinguishing(const Graph& g, const Coloring& c, const BruteLimits& lim = {});

// Minimum t admitting a distinguishing t-coloring; colorings are enumerated
// up to color relabeling and the exchange of twin vertices, both of which
// preserve distinguishing status.
int brute_distinguishing_number(const Graph& g, const BruteLimits& lim = {});

struct FixingSetResult {
  int size = 0;
  std::vector<int> witness;  // lexicographically smallest minimum fixing set
};
FixingSetResult brute_fixing_number(const Graph& g, const BruteLimits& lim = {});

// Minimum over distinguishing t-colorings of n minus the largest class size.
int brute_paint_cost(const Graph& g, int t, const BruteLimits& lim = {});

struct PaintCostSpectrum {
  int D = 1;
  std::vector<int> costs;  // rho^D .. rho^(F+1); the last entry equals F
};
PaintCostSpectrum paint_cost_spectrum(const Graph& g, const BruteLimits& lim = {});

}  // namespace symtree
