#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "symtree/canon.hpp"
#include "symtree/graph.hpp"
#include "symtree/rational.hpp"

namespace symtree {

using BigInt = boost::multiprecision::cpp_int;

// Number of isomorphism classes of distinguishing d-colored rooted trees on
// the given rooted tree: d for a leaf, d * prod_j C(N(c_j,d), m_j) over child
// classes otherwise. Grows doubly exponentially, hence arbitrary precision.
BigInt count_rigid_colorings(const RootedTree& b, int d);
BigInt count_rigid_colorings(std::string_view code, int d);

// min(N, cap) without big arithmetic; sound for any cap > max multiplicity
// in the tree plus one. Used for threshold tests on large inputs.
unsigned long long count_rigid_capped(const ShapeTable& table, int shape, int d,
                                      unsigned long long cap);

int distinguishing_number(const Tree& t);

struct FixingNumberResult {
  long long size = 0;
  std::vector<int> witness;  // sorted; always a subset of the leaves
};
FixingNumberResult fixing_number(const Tree& t);

// map branch edge-length k -> branch count n_k at the unique high-degree
// vertex; paths are the degenerate spider at their smallest-id endpoint.
struct SpiderProfile {
  std::map<int, int> legs;
  long long order() const;
};

// nullopt when the tree has more than one high-degree vertex.
std::optional<SpiderProfile> spider_profile(const Tree& t);

// sum max(0, n_k - 1) / (1 + sum k n_k), exact.
Rational spider_fixing_density(const SpiderProfile& p);

// The fixing set assembled piecewise over the pendent-spider decomposition:
// nothing for order-2 pieces, otherwise a leaf-only fixing set of the piece
// of size max(1, F(piece)).
std::vector<int> construct_bound_fixing_set(const Tree& t);

// Density maximizer over profiles with n_k in {0, D^k}, k <= k_max; when the
// full box of profiles with n_k <= D^k is small enough it is swept as well to
// confirm the restricted maximum is global.
SpiderProfile extremal_spider_profile(int D, int k_max);

Rational fixing_density(const Tree& t);

}  // namespace symtree
