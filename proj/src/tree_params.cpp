#include "symtree/tree_params.hpp"

#include <algorithm>
#include <stdexcept>

namespace symtree {

namespace {

BigInt binom_big(const BigInt& n, long long k) {
  if (k < 0 || n < k) return 0;
  BigInt r = 1;
  for (long long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: r is C(n, i+1) after this step
  }
  return r;
}

// child multiset of a shape as (shape id, multiplicity) runs
std::vector<std::pair<int, int>> shape_classes(const ShapeTable& table, int shape) {
  std::vector<std::pair<int, int>> runs;
  for (int c : table.children[shape]) {
    if (!runs.empty() && runs.back().first == c)
      ++runs.back().second;
    else
      runs.emplace_back(c, 1);
  }
  return runs;
}

std::vector<BigInt> rigid_counts_all(const ShapeTable& table, int d) {
  std::vector<BigInt> counts(table.children.size());
  for (size_t s = 0; s < table.children.size(); ++s) {
    BigInt r = d;
    for (auto [c, m] : shape_classes(table, static_cast<int>(s))) {
      r *= binom_big(counts[c], m);
      if (r == 0) break;
    }
    counts[s] = r;
  }
  return counts;
}

// C(a, k) clamped to cap; requires the exact-a case to stay below cap*(a+1)
// which fits 64 bits for any desk- or file-scale tree.
unsigned long long binom_capped(unsigned long long a, long long k, bool saturated,
                                unsigned long long cap) {
  if (k == 0) return 1;
  if (saturated) return cap;  // C(N,k) >= N >= cap whenever 1 <= k <= N-1
  if (static_cast<unsigned long long>(k) > a) return 0;
  unsigned long long kk = std::min<unsigned long long>(k, a - k);
  unsigned long long r = 1;
  for (unsigned long long i = 0; i < kk; ++i) {
    r = r * (a - i) / (i + 1);  // exact: r is C(a, i+1)
    if (r >= cap) return cap;   // C(a, j) is nondecreasing for j <= a/2
  }
  return r;
}

}  // namespace

unsigned long long count_rigid_capped(const ShapeTable& table, int shape, int d,
                                      unsigned long long cap) {
  std::vector<unsigned long long> counts(shape + 1);
  for (int s = 0; s <= shape; ++s) {
    unsigned long long r = std::min<unsigned long long>(d, cap);
    for (auto [c, m] : shape_classes(table, s)) {
      unsigned long long f = binom_capped(counts[c], m, counts[c] == cap, cap);
      if (f == 0) {
        r = 0;
        break;
      }
      r = std::min(r * f, cap);
    }
    counts[s] = r;
  }
  return counts[shape];
}

BigInt count_rigid_colorings(const RootedTree& b, int d) {
  if (d < 1) throw std::invalid_argument("rigid colorings: d must be >= 1");
  ShapeTable table;
  auto shape = table.classify(b.tree, b.root);
  return rigid_counts_all(table, d)[shape[b.root]];
}

BigInt count_rigid_colorings(std::string_view code, int d) {
  if (d < 1) throw std::invalid_argument("rigid colorings: d must be >= 1");
  ShapeTable table;
  int shape = table.from_code(code);
  return rigid_counts_all(table, d)[shape];
}

int distinguishing_number(const Tree& t) {
  int n = t.n();
  if (n == 1) return 1;
  if (n == 2) return 2;
  auto cs = center(t);
  unsigned long long cap = static_cast<unsigned long long>(n) + 2;
  ShapeTable table;

  std::function<bool(int)> admits;  // monotone in the palette size
  if (cs.size() == 1) {
    int shape = table.classify(t, cs[0])[cs[0]];
    admits = [&table, shape, cap](int d) {
      return count_rigid_capped(table, shape, d, cap) >= 1;
    };
  } else {
    auto h1 = extract_component(t, cs[0], cs[1]);
    auto h2 = extract_component(t, cs[1], cs[0]);
    int s1 = table.classify(h1.tree, 0)[0];
    int s2 = table.classify(h2.tree, 0)[0];
    if (s1 == s2) {
      // isomorphic halves: the two colored halves must differ to break the
      // central-edge swap
      admits = [&table, s1, cap](int d) {
        return count_rigid_capped(table, s1, d, cap) >= 2;
      };
    } else {
      admits = [&table, s1, s2, cap](int d) {
        return count_rigid_capped(table, s1, d, cap) >= 1 &&
               count_rigid_capped(table, s2, d, cap) >= 1;
      };
    }
  }

  int lo = 1, hi = std::max(2, t.g.max_degree());
  while (!admits(hi) && hi < n) hi = std::min(2 * hi, n);  // max degree suffices
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (admits(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

namespace {

// leftmost-by-id descent to a leaf of the subtree below v
int descend_to_leaf(const std::vector<std::vector<int>>& children, int v) {
  while (!children[v].empty()) v = children[v][0];
  return v;
}

struct RootedFix {
  long long cost = 0;
  std::vector<int> witness;  // local vertex ids
};

// fixing number of the rooted tree plus a leaf witness: child classes with
// symmetric members each keep a full witness per copy, rigid classes pin all
// copies but one by a single leaf each
RootedFix fix_rooted(const Tree& tree, int root) {
  ShapeTable table;
  auto shape = table.classify(tree, root);
  auto children = rooted_children(tree, root);

  std::vector<long long> fshape(table.children.size(), -1);
  // shapes are created children-first, so ascending ids are process order
  for (size_t s = 0; s < table.children.size(); ++s) {
    long long total = 0;
    for (auto [c, m] : shape_classes(table, static_cast<int>(s)))
      total += fshape[c] >= 1 ? m * fshape[c] : m - 1;
    fshape[s] = total;
  }

  RootedFix out;
  out.cost = fshape[shape[root]];
  // collect the witness top-down
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    std::map<int, std::vector<int>> classes;
    for (int c : children[v]) classes[shape[c]].push_back(c);
    for (auto& [s, members] : classes) {
      if (fshape[s] >= 1) {
        for (int c : members) stack.push_back(c);
      } else {
        for (size_t i = 0; i + 1 < members.size(); ++i)
          out.witness.push_back(descend_to_leaf(children, members[i]));
      }
    }
  }
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

std::vector<int> map_to_orig(const std::vector<int>& local, const std::vector<int>& to_orig) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(to_orig[v]);
  return out;
}

}  // namespace

FixingNumberResult fixing_number(const Tree& t) {
  if (t.n() == 1) return {0, {}};
  auto cs = center(t);
  FixingNumberResult out;
  if (cs.size() == 1) {
    auto fix = fix_rooted(t, cs[0]);
    out.size = fix.cost;
    out.witness = std::move(fix.witness);
  } else {
    auto h1 = extract_component(t, cs[0], cs[1]);
    auto h2 = extract_component(t, cs[1], cs[0]);
    ShapeTable table;
    int s1 = table.classify(h1.tree, 0)[0];
    int s2 = table.classify(h2.tree, 0)[0];
    auto f1 = fix_rooted(h1.tree, 0);
    auto f2 = fix_rooted(h2.tree, 0);
    if (s1 == s2 && f1.cost == 0) {
      // rigid isomorphic halves: one pinned vertex kills the swap
      auto children = rooted_children(h1.tree, 0);
      out.size = 1;
      out.witness = {h1.to_orig[descend_to_leaf(children, 0)]};
    } else {
      out.size = f1.cost + f2.cost;
      out.witness = map_to_orig(f1.witness, h1.to_orig);
      auto w2 = map_to_orig(f2.witness, h2.to_orig);
      out.witness.insert(out.witness.end(), w2.begin(), w2.end());
    }
  }
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

long long SpiderProfile::order() const {
  long long n = 1;
  for (auto [k, cnt] : legs) n += static_cast<long long>(k) * cnt;
  return n;
}

std::optional<SpiderProfile> spider_profile(const Tree& t) {
  std::vector<int> high;
  for (int v = 0; v < t.n(); ++v)
    if (t.degree(v) >= 3) high.push_back(v);
  if (high.size() > 1) return std::nullopt;

  SpiderProfile p;
  if (high.empty()) {
    // a path: degenerate spider at the smallest-id endpoint
    if (t.n() >= 2) p.legs[t.n() - 1] = 1;
    return p;
  }
  int hub = high[0];
  for (int nb : t.neighbors(hub)) {
    int len = 1, prev = hub, cur = nb;
    while (t.degree(cur) == 2) {
      for (int w : t.neighbors(cur))
        if (w != prev) {
          prev = cur;
          cur = w;
          break;
        }
      ++len;
    }
    ++p.legs[len];
  }
  return p;
}

Rational spider_fixing_density(const SpiderProfile& p) {
  if (p.legs.empty()) throw std::invalid_argument("spider density: empty profile");
  long long fixed = 0;
  for (auto [k, cnt] : p.legs) fixed += std::max(0, cnt - 1);
  return Rational(fixed, p.order());
}

std::vector<int> construct_bound_fixing_set(const Tree& t) {
  if (t.n() < 3) throw std::invalid_argument("bound fixing set: need n >= 3");
  std::vector<int> out;
  for (const auto& piece : pendent_spider_decomposition(t)) {
    int sz = piece.shape.tree.n();
    if (sz == 2) continue;
    const Tree& pt = piece.shape.tree;
    int root_deg = pt.degree(0);
    if (root_deg <= 2) {
      // path piece: one leaf of T pins it; the far tips are the piece leaves
      // other than a root that is itself a leaf of T only in the
      // whole-tree-path case
      int best = -1;
      for (int v = 0; v < sz; ++v) {
        if (pt.degree(v) != 1) continue;
        if (v == 0 && t.degree(piece.verts[0]) != 1) continue;  // hub, not a T-leaf
        int orig = piece.verts[v];
        if (best < 0 || orig < best) best = orig;
      }
      out.push_back(best);
      continue;
    }
    // spider piece: per leg length with multiplicity m >= 2, pin m-1 tips
    std::map<int, std::vector<int>> tips_by_len;  // length -> tip original ids
    for (int nb : pt.neighbors(0)) {
      int len = 1, prev = 0, cur = nb;
      while (pt.degree(cur) == 2) {
        for (int w : pt.neighbors(cur))
          if (w != prev) {
            prev = cur;
            cur = w;
            break;
          }
        ++len;
      }
      tips_by_len[len].push_back(piece.verts[cur]);
    }
    size_t added = out.size();
    for (auto& [len, tips] : tips_by_len) {
      std::sort(tips.begin(), tips.end());
      for (size_t i = 0; i + 1 < tips.size(); ++i) out.push_back(tips[i]);
    }
    if (out.size() == added) {
      // rigid piece: still pin one leaf
      int best = tips_by_len.begin()->second[0];
      for (auto& [len, tips] : tips_by_len) best = std::min(best, tips[0]);
      out.push_back(best);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SpiderProfile extremal_spider_profile(int D, int k_max) {
  if (D < 2 || k_max < 1) throw std::invalid_argument("extremal profile: need D >= 2, k_max >= 1");
  std::vector<long long> pow(k_max + 1, 1);
  for (int k = 1; k <= k_max; ++k) {
    if (pow[k - 1] > (1LL << 40) / D)
      throw std::invalid_argument("extremal profile: D^k overflows the search");
    pow[k] = pow[k - 1] * D;
  }

  auto density_of = [](const SpiderProfile& p) {
    long long fixed = 0;
    for (auto [k, cnt] : p.legs) fixed += std::max(0, cnt - 1);
    return Rational(fixed, p.order());
  };

  SpiderProfile best;
  Rational best_density(0, 1);
  for (int mask = 1; mask < (1 << k_max); ++mask) {
    SpiderProfile p;
    for (int k = 1; k <= k_max; ++k)
      if ((mask >> (k - 1)) & 1) p.legs[k] = static_cast<int>(pow[k]);
    Rational d = density_of(p);
    if (best.legs.empty() || best_density < d) {
      best = p;
      best_density = d;
    }
  }

  // full-box sweep when feasible: no profile with n_k <= D^k may beat the
  // restricted maximizer
  long long box = 1;
  for (int k = 1; k <= k_max; ++k) {
    box *= pow[k] + 1;
    if (box > 200000) break;
  }
  if (box <= 200000) {
    std::vector<int> counts(k_max + 1, 0);
    std::function<void(int)> sweep = [&](int k) {
      if (k > k_max) {
        SpiderProfile p;
        for (int i = 1; i <= k_max; ++i)
          if (counts[i] > 0) p.legs[i] = counts[i];
        if (p.legs.empty()) return;
        if (best_density < density_of(p))
          throw std::logic_error("extremal profile: full sweep beat the restricted maximizer");
        return;
      }
      for (counts[k] = 0; counts[k] <= pow[k]; ++counts[k]) sweep(k + 1);
      counts[k] = 0;
    };
    sweep(1);
  }
  return best;
}

Rational fixing_density(const Tree& t) {
  return Rational(fixing_number(t).size, t.n());
}

}  // namespace symtree
