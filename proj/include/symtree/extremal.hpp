#pragma once

#include <string>
#include <vector>

#include "symtree/eccentric.hpp"
#include "symtree/graph.hpp"

namespace symtree {

Tree make_path(int n);                              // n vertices
Tree make_star(int leaves);                         // one hub, `leaves` pendants
Tree make_spider(const std::vector<int>& legs);     // hub 0, legs by edge length
Tree make_broom(int k, int ones);                   // legs {k, 1^ones}

// The unique 2-distinguishable spider of maximum fixing density 4/11:
// profile {1:2, 2:4}, order 11.
Tree max_density_spider();

// Path on k vertices with D pendant leaves on each: order k(D+1), fixing
// number k(D-1), distinguishing number D.
Tree leafy_path(int k, int D);

// Path of k hubs, each carrying the legs of max_density_spider(): order 11k
// with fixing density exactly 4/11.
Tree spider_chain(int k);

// Path v_0..v_d with m_i - 2 pendants at v_{i-1} for i = r+1..d; realizes
// the given sequence and maximizes the distinguishing number over it.
Tree sequence_extremal_tree(const EccentricSequence& x);

// Tree with eccentric sequence (r, (r+1)^k, ..., (2r)^k) and fixing number 1,
// for 2 <= k <= r+1.
Tree unit_fixing_tree(int r, int k);

// Path on k-1 vertices with a pendant at the third vertex; asymmetric for
// k >= 7.
Tree default_asymmetric_base(int k);

// Asymmetric base H on vertices 0..k-1; for each nonempty U of V(H), D new
// vertices each adjacent to all of U. Order k + D(2^k - 1).
Graph subset_split_graph(int k, int D);

struct GkCertificates {
  int k = 0;
  int D = 2;
  long long order = 0;
  bool base_asymmetric = false;
  long long groups = 0;            // nonempty subsets of the base
  long long swaps_verified = 0;    // per-group copy transpositions confirmed
  bool neighborhoods_equal = false;
  long long fixing_lower_bound = 0;  // (D-1) * groups, certified
  bool coloring_breaks_generators = false;
};

// Verifies: the base is asymmetric (brute force), every group's copies are
// exchangeable (so any fixing set takes D-1 vertices per group, supports
// disjoint), and the canonical coloring breaks each listed transposition.
GkCertificates gk_certificates(int k, int D);

// Construction registry keyed by the published ids.
struct ConstructionParams {
  std::vector<int> legs;     // spider
  int k = -1, d = -1, r = -1;
  std::string sequence;      // t-x
};
std::vector<std::string> construction_ids();
// Returns a Graph; every id except "gk" yields a tree.
Graph construct(const std::string& id, const ConstructionParams& p);

}  // namespace symtree
