#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symtree/graph.hpp"

namespace symtree {

// Run-length encoded nondecreasing eccentricity multiset: (i, m_i) pairs for
// consecutive i = r..d, every m_i >= 1. m_i reads as 0 outside the range.
struct EccentricSequence {
  std::vector<std::pair<int, int>> runs;

  static EccentricSequence make(std::vector<std::pair<int, int>> runs);
  static EccentricSequence parse(const std::string& text);  // "2^(1) 3^(4) 4^(2)"

  int r() const { return runs.front().first; }
  int d() const { return runs.back().first; }
  int m(int i) const;
  long long total() const;  // sum of m_i = vertex count
  std::string text() const;
  std::string json() const;  // [[i,m_i],...]

  friend bool operator==(const EccentricSequence& a, const EccentricSequence& b) {
    return a.runs == b.runs;
  }
  friend bool operator<(const EccentricSequence& a, const EccentricSequence& b) {
    return a.runs < b.runs;
  }
};

EccentricSequence eccentric_sequence_of(const Tree& t);

// true iff m_i >= 2 for r < i <= d and (d = 2r with m_r = 1, or d = 2r-1
// with m_r = 2): exactly the sequences realized by trees.
bool lesniak_realizable(const EccentricSequence& x);

// max{m_d - 1, max_{r <= i < d}(m_i - 2)}; may be <= 0.
int distinguishing_bound_M(const EccentricSequence& x);

// m_d - 2 + sum_{i=r}^{d-1} max(m_i - 3, 0)
long long fixing_bound(const EccentricSequence& x);

// paths, stars, and spiders with legs {r, r, k}, 1 <= k < r
bool in_family_D(const Tree& t);
// family D plus spiders with legs {r, r, 1^j} and the trees glued from a
// length-2r path and a broom of diameter <= r identified at the path's
// central vertex by the broom's end
bool in_family_F(const Tree& t);

// max over 2 <= i <= d of m_i - m_{i-1} - m_{i+1} (m outside r..d reads 0),
// floored at 0: a lower bound on the fixing number
long long prop53_lower_bound(const EccentricSequence& x);

// true iff m_s < m_{s+1} = ... = m_d for some s in [r, d): such a tree
// always has a nontrivial symmetry
bool prop54_not_asymmetric(const EccentricSequence& x);

// every realizable sequence with the given vertex total, ascending
std::vector<EccentricSequence> realizable_sequences(int total);

}  // namespace symtree
