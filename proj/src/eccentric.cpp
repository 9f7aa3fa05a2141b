#include "symtree/eccentric.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "symtree/tree_params.hpp"

namespace symtree {

EccentricSequence EccentricSequence::make(std::vector<std::pair<int, int>> runs) {
  if (runs.empty()) throw std::invalid_argument("eccentric sequence: empty");
  for (size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].second < 1)
      throw std::invalid_argument("eccentric sequence: multiplicity must be >= 1");
    if (i > 0 && runs[i].first != runs[i - 1].first + 1)
      throw std::invalid_argument("eccentric sequence: indices must be consecutive");
  }
  if (runs.front().first < 0)
    throw std::invalid_argument("eccentric sequence: negative eccentricity");
  EccentricSequence x;
  x.runs = std::move(runs);
  return x;
}

EccentricSequence EccentricSequence::parse(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<std::pair<int, int>> runs;
  while (in >> tok) {
    size_t caret = tok.find('^');
    int i, m = 1;
    try {
      if (caret == std::string::npos) {
        i = std::stoi(tok);
      } else {
        i = std::stoi(tok.substr(0, caret));
        std::string mult = tok.substr(caret + 1);
        if (mult.size() >= 2 && mult.front() == '(' && mult.back() == ')')
          mult = mult.substr(1, mult.size() - 2);
        m = std::stoi(mult);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("eccentric sequence: bad token \"" + tok + "\"");
    }
    runs.emplace_back(i, m);
  }
  return make(std::move(runs));
}

int EccentricSequence::m(int i) const {
  if (i < r() || i > d()) return 0;
  return runs[i - r()].second;
}

long long EccentricSequence::total() const {
  long long s = 0;
  for (auto [i, mi] : runs) s += mi;
  return s;
}

std::string EccentricSequence::text() const {
  std::string out;
  for (auto [i, mi] : runs) {
    if (!out.empty()) out += " ";
    out += std::to_string(i) + "^(" + std::to_string(mi) + ")";
  }
  return out;
}

std::string EccentricSequence::json() const {
  std::string out = "[";
  for (size_t i = 0; i < runs.size(); ++i) {
    if (i) out += ",";
    out += "[" + std::to_string(runs[i].first) + "," + std::to_string(runs[i].second) + "]";
  }
  return out + "]";
}

EccentricSequence eccentric_sequence_of(const Tree& t) {
  auto ecc = eccentricities(t);
  int lo = ecc[0].second, hi = ecc[0].second;
  for (auto [v, e] : ecc) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  std::vector<std::pair<int, int>> runs;
  for (int i = lo; i <= hi; ++i) runs.emplace_back(i, 0);
  for (auto [v, e] : ecc) ++runs[e - lo].second;
  return EccentricSequence::make(std::move(runs));
}

bool lesniak_realizable(const EccentricSequence& x) {
  int r = x.r(), d = x.d();
  for (int i = r + 1; i <= d; ++i)
    if (x.m(i) < 2) return false;
  return (d == 2 * r && x.m(r) == 1) || (d == 2 * r - 1 && x.m(r) == 2);
}

int distinguishing_bound_M(const EccentricSequence& x) {
  int best = x.m(x.d()) - 1;
  for (int i = x.r(); i < x.d(); ++i) best = std::max(best, x.m(i) - 2);
  return best;
}

long long fixing_bound(const EccentricSequence& x) {
  long long s = x.m(x.d()) - 2;
  for (int i = x.r(); i < x.d(); ++i) s += std::max(x.m(i) - 3, 0);
  return s;
}

namespace {

bool is_path(const Tree& t) { return t.g.max_degree() <= 2; }

bool is_star(const Tree& t) {
  if (t.n() <= 2) return true;  // K_1, K_2
  for (int v = 0; v < t.n(); ++v)
    if (t.degree(v) == t.n() - 1) return true;
  return false;
}

// legs exactly {r, r, k} with 1 <= k < r
bool is_srr_k(const Tree& t) {
  auto p = spider_profile(t);
  if (!p) return false;
  int total_legs = 0;
  for (auto [k, c] : p->legs) total_legs += c;
  if (total_legs != 3) return false;
  int r = -1, k = -1;
  for (auto [len, c] : p->legs) {
    if (c == 2)
      r = len;
    else if (c == 1)
      k = len;
    else
      return false;
  }
  return r >= 1 && k >= 1 && k < r;
}

// legs exactly {r, r} plus j >= 1 legs of length 1, r >= 2
bool is_srr_ones(const Tree& t) {
  auto p = spider_profile(t);
  if (!p) return false;
  if (p->legs.size() != 2) return false;
  auto it = p->legs.begin();
  if (it->first != 1) return false;
  int r_len = std::next(it)->first;
  return std::next(it)->second == 2 && r_len >= 2;
}

// walking from `from` through branch-neighbor `to`: the branch must be a
// bare path (returns its edge length, leaves=0) or a path to a single
// high-degree vertex whose other neighbors are all leaves (broom attached by
// its end). Returns false when the branch is anything else.
bool broom_branch(const Tree& t, int from, int to, int* path_len, int* extra_leaves) {
  int prev = from, cur = to, len = 1;
  while (t.degree(cur) == 2) {
    for (int w : t.neighbors(cur))
      if (w != prev) {
        prev = cur;
        cur = w;
        break;
      }
    ++len;
  }
  if (t.degree(cur) == 1) {
    *path_len = len;
    *extra_leaves = 0;
    return true;
  }
  // one high-degree vertex; everything beyond must be leaves
  int leaves = 0;
  for (int w : t.neighbors(cur)) {
    if (w == prev) continue;
    if (t.degree(w) != 1) return false;
    ++leaves;
  }
  *path_len = len;
  *extra_leaves = leaves;
  return true;
}

// a length-2r path with a broom of diameter <= r identified at the path's
// central vertex by the broom's end
bool is_path_with_broom(const Tree& t) {
  for (int w = 0; w < t.n(); ++w) {
    if (t.degree(w) != 3) continue;
    // two bare legs of equal length r and one broom branch
    std::vector<std::pair<int, int>> branches;  // (path_len, extra_leaves)
    bool ok = true;
    for (int nb : t.neighbors(w)) {
      int len, extra;
      if (!broom_branch(t, w, nb, &len, &extra)) {
        ok = false;
        break;
      }
      branches.emplace_back(len, extra);
    }
    if (!ok) continue;
    for (int pick = 0; pick < 3; ++pick) {
      auto [k, extra] = branches[pick];
      auto [l1, e1] = branches[(pick + 1) % 3];
      auto [l2, e2] = branches[(pick + 2) % 3];
      if (e1 != 0 || e2 != 0 || l1 != l2) continue;
      int r = l1;
      bool broom_fits = extra == 0 ? k <= r : k + 1 <= r;
      if (broom_fits) return true;
    }
  }
  return false;
}

}  // namespace

bool in_family_D(const Tree& t) { return is_path(t) || is_star(t) || is_srr_k(t); }

bool in_family_F(const Tree& t) {
  return in_family_D(t) || is_srr_ones(t) || is_path_with_broom(t);
}

long long prop53_lower_bound(const EccentricSequence& x) {
  long long best = 0;
  for (int i = 2; i <= x.d(); ++i)
    best = std::max(best, static_cast<long long>(x.m(i)) - x.m(i - 1) - x.m(i + 1));
  return best;
}

bool prop54_not_asymmetric(const EccentricSequence& x) {
  for (int s = x.r(); s < x.d(); ++s) {
    bool constant_tail = true;
    for (int i = s + 2; i <= x.d(); ++i)
      if (x.m(i) != x.m(s + 1)) {
        constant_tail = false;
        break;
      }
    if (constant_tail && x.m(s) < x.m(s + 1)) return true;
  }
  return false;
}

std::vector<EccentricSequence> realizable_sequences(int total) {
  std::vector<EccentricSequence> out;
  for (int r = 0; r <= total; ++r) {
    for (int d : {2 * r - 1, 2 * r}) {
      if (d < r || d > total - 1) continue;
      int m_r = (d == 2 * r) ? 1 : 2;
      std::vector<std::pair<int, int>> runs{{r, m_r}};
      long long used = m_r;
      std::function<void(int)> rec = [&](int i) {
        if (i > d) {
          if (used == total) out.push_back(EccentricSequence::make(runs));
          return;
        }
        int remaining_slots = d - i;
        for (int m = 2; used + m + 2LL * remaining_slots <= total; ++m) {
          runs.emplace_back(i, m);
          used += m;
          rec(i + 1);
          used -= m;
          runs.pop_back();
        }
      };
      if (r == d) {
        if (used == total) out.push_back(EccentricSequence::make(runs));
      } else {
        rec(r + 1);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace symtree
