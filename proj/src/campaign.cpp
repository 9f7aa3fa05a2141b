#include "symtree/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "symtree/canon.hpp"
#include "symtree/eccentric.hpp"
#include "symtree/enumerate.hpp"
#include "symtree/extremal.hpp"
#include "symtree/tree_params.hpp"
#include "symtree/universal.hpp"

namespace symtree {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs fn over every tree of order n, partitioned by index across workers.
// fn appends violation labels for offending trees. Deterministic regardless
// of the worker count: violations are merged and sorted.
CampaignRow sweep_trees(int n, int jobs,
                        const std::function<void(const Tree&, std::vector<std::string>&)>& fn) {
  auto start = Clock::now();
  auto trees = enumerate_free_trees(n, std::max(n, kDefaultEnumerationMax));
  int workers = std::max(1, std::min<int>(jobs, static_cast<int>(trees.size())));
  std::vector<std::vector<std::string>> found(workers);
  auto work = [&](int w) {
    for (size_t i = w; i < trees.size(); i += workers) fn(trees[i], found[w]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  CampaignRow row;
  row.n = n;
  row.instances = static_cast<long long>(trees.size());
  for (auto& part : found)
    row.violations.insert(row.violations.end(), part.begin(), part.end());
  std::sort(row.violations.begin(), row.violations.end());
  row.seconds = seconds_since(start);
  return row;
}

void check_fd2(CampaignReport& rep, int max_n, int jobs) {
  std::set<std::string> equality_codes;
  equality_codes.insert(free_canonical_code(max_density_spider()));
  for (int k = 2; k * 11 <= max_n; ++k)
    equality_codes.insert(free_canonical_code(spider_chain(k)));
  const Rational bound(4, 11);
  for (int n = 3; n <= max_n; ++n)
    rep.rows.push_back(sweep_trees(n, jobs, [&](const Tree& t, std::vector<std::string>& bad) {
      if (distinguishing_number(t) != 2) return;
      Rational density = fixing_density(t);
      if (bound < density) {
        bad.push_back(free_canonical_code(t));
        return;
      }
      if (density == bound && !equality_codes.count(free_canonical_code(t)))
        bad.push_back(free_canonical_code(t));
    }));
}

void check_fdD(CampaignReport& rep, int max_n, int jobs) {
  for (int n = 1; n <= max_n; ++n)
    rep.rows.push_back(sweep_trees(n, jobs, [&](const Tree& t, std::vector<std::string>& bad) {
      int D = distinguishing_number(t);
      if (D < 3) return;
      if (Rational(D - 1, D + 1) < fixing_density(t)) bad.push_back(free_canonical_code(t));
    }));
}

void check_spider_cap(CampaignReport& rep, int max_n, int jobs) {
  for (int n = 1; n <= max_n; ++n)
    rep.rows.push_back(sweep_trees(n, jobs, [&](const Tree& t, std::vector<std::string>& bad) {
      auto profile = spider_profile(t);
      if (!profile || t.n() < 2) return;
      int D = distinguishing_number(t);
      for (auto [k, cnt] : profile->legs) {
        long long power = 1;
        for (int i = 0; i < k && power <= cnt; ++i) power *= D;
        if (cnt > power) {
          bad.push_back(free_canonical_code(t));
          return;
        }
      }
    }));
}

void check_oracle_eq(CampaignReport& rep, int max_n, int jobs) {
  BruteLimits lim;
  lim.group_n = std::max(lim.group_n, max_n);
  for (int n = 1; n <= max_n; ++n)
    rep.rows.push_back(sweep_trees(n, jobs, [&](const Tree& t, std::vector<std::string>& bad) {
      if (distinguishing_number(t) != brute_distinguishing_number(t.g, lim) ||
          fixing_number(t).size != brute_fixing_number(t.g, lim).size)
        bad.push_back(free_canonical_code(t));
    }));
}

void check_rho_props(CampaignReport& rep, int max_n, int jobs) {
  int cap = std::min(max_n, 9);  // brute inner loops
  BruteLimits lim;
  lim.spectrum_n = std::max(lim.spectrum_n, cap);
  for (int n = 1; n <= cap; ++n)
    rep.rows.push_back(sweep_trees(n, jobs, [&](const Tree& t, std::vector<std::string>& bad) {
      auto spectrum = paint_cost_spectrum(t.g, lim);
      int F = brute_fixing_number(t.g, lim).size;
      int D = spectrum.D;
      bool good = !spectrum.costs.empty() && spectrum.costs.back() == F && D <= F + 1 &&
                  static_cast<long long>(F) * D <= static_cast<long long>(D - 1) * t.n();
      for (size_t i = 1; i < spectrum.costs.size(); ++i)
        if (spectrum.costs[i] > spectrum.costs[i - 1]) good = false;
      if (!good) bad.push_back(free_canonical_code(t));
    }));
}

void check_univ_T(CampaignReport& rep, int max_n, int jobs) {
  // membership <=> D(T) <= D over all trees of radius <= 2
  for (int D : {2, 3}) {
    UniversalSpec spec{'T', 2, D};
    for (int n = 1; n <= max_n; ++n)
      rep.rows.push_back(sweep_trees(n, jobs, [&](const Tree& t, std::vector<std::string>& bad) {
        if (radius(t) > 2) return;
        bool member = is_branched_subgraph_of_universal(t, spec);
        bool distinguishable = distinguishing_number(t) <= D;
        if (member != distinguishable) bad.push_back(free_canonical_code(t));
      }));
  }
  // every radius-2 branched subgraph is 2-distinguishable per the oracle
  auto start = Clock::now();
  CampaignRow row;
  BruteLimits lim;
  lim.group_n = 20;  // subgraphs of the D=2 catalog have order <= 17
  auto catalog = universal_catalog(UniversalSpec{'T', 2, 2});
  row.instances = for_each_branched_subgraph(catalog, 100000, [&](const std::string& code) {
    RootedTree sub = tree_of_code(code);
    if (radius(sub.tree) == 2 && brute_distinguishing_number(sub.tree.g, lim) > 2)
      row.violations.push_back(code);
    return true;
  });
  row.n = 0;  // aggregate row over subgraph instances
  std::sort(row.violations.begin(), row.violations.end());
  row.seconds = seconds_since(start);
  rep.rows.push_back(std::move(row));
}

void check_univ_U(CampaignReport& rep, int max_n, int jobs) {
  UniversalSpec spec{'U', 2, 2};
  BruteLimits lim;
  lim.group_n = 14;
  lim.spectrum_n = 14;
  lim.spectrum_t = 3;
  // property => membership over all trees of radius <= 2 within brute caps
  int cap = std::min(max_n, 12);
  for (int n = 1; n <= cap; ++n)
    rep.rows.push_back(sweep_trees(n, jobs, [&](const Tree& t, std::vector<std::string>& bad) {
      if (radius(t) > 2) return;
      bool property = brute_distinguishing_number(t.g, lim) <= 2 &&
                      brute_paint_cost(t.g, 2, lim) == brute_fixing_number(t.g, lim).size;
      if (property && !is_branched_subgraph_of_universal(t, spec))
        bad.push_back(free_canonical_code(t));
    }));
  // membership (radius exactly 2) => property
  auto start = Clock::now();
  CampaignRow row;
  auto catalog = universal_catalog(spec);
  row.instances = for_each_branched_subgraph(catalog, 100000, [&](const std::string& code) {
    RootedTree sub = tree_of_code(code);
    if (radius(sub.tree) != 2) return true;
    bool property = brute_distinguishing_number(sub.tree.g, lim) <= 2 &&
                    brute_paint_cost(sub.tree.g, 2, lim) ==
                        brute_fixing_number(sub.tree.g, lim).size;
    if (!property) row.violations.push_back(code);
    return true;
  });
  row.n = 0;
  std::sort(row.violations.begin(), row.violations.end());
  row.seconds = seconds_since(start);
  rep.rows.push_back(std::move(row));
}

void check_ecc_bounds(CampaignReport& rep, int max_n, int jobs) {
  for (int n = 1; n <= max_n; ++n)
    rep.rows.push_back(sweep_trees(n, jobs, [&](const Tree& t, std::vector<std::string>& bad) {
      auto x = eccentric_sequence_of(t);
      if (!in_family_D(t) && distinguishing_number(t) > distinguishing_bound_M(x)) {
        bad.push_back(free_canonical_code(t));
        return;
      }
      if (!in_family_F(t) && fixing_number(t).size > fixing_bound(x))
        bad.push_back(free_canonical_code(t));
    }));
}

void check_ecc_props(CampaignReport& rep, int max_n, int jobs) {
  for (int n = 1; n <= max_n; ++n)
    rep.rows.push_back(sweep_trees(n, jobs, [&](const Tree& t, std::vector<std::string>& bad) {
      auto x = eccentric_sequence_of(t);
      long long F = fixing_number(t).size;
      if (F < prop53_lower_bound(x)) {
        bad.push_back(free_canonical_code(t));
        return;
      }
      if (prop54_not_asymmetric(x) && F < 1) bad.push_back(free_canonical_code(t));
    }));
  // unit-fixing fixtures across the parameter box
  auto start = Clock::now();
  CampaignRow row;
  row.n = 0;
  for (int r = 1; r <= 6; ++r)
    for (int k = 2; k <= r + 1; ++k) {
      Tree t = unit_fixing_tree(r, k);
      ++row.instances;
      std::vector<std::pair<int, int>> runs{{r, 1}};
      for (int i = r + 1; i <= 2 * r; ++i) runs.emplace_back(i, k);
      bool good = fixing_number(t).size == 1 &&
                  eccentric_sequence_of(t) == EccentricSequence::make(runs);
      if (!good) row.violations.push_back("unit-fixing r=" + std::to_string(r) +
                                          " k=" + std::to_string(k));
    }
  row.seconds = seconds_since(start);
  rep.rows.push_back(std::move(row));
}

void check_lesniak(CampaignReport& rep, int max_n, int jobs) {
  (void)jobs;  // the shared sequence bucket keeps this check single-worker
  for (int n = 1; n <= max_n; ++n) {
    std::set<EccentricSequence> bucket;
    auto start = Clock::now();
    // soundness: every tree's sequence passes the realizability conditions
    CampaignRow row = sweep_trees(n, 1, [&](const Tree& t, std::vector<std::string>& bad) {
      auto x = eccentric_sequence_of(t);
      bucket.insert(x);
      if (!lesniak_realizable(x)) bad.push_back(free_canonical_code(t));
    });
    // completeness: every realizable sequence of this total is realized
    for (const auto& x : realizable_sequences(n))
      if (!bucket.count(x)) row.violations.push_back("unrealized " + x.text());
    std::sort(row.violations.begin(), row.violations.end());
    row.seconds = seconds_since(start);
    rep.rows.push_back(std::move(row));
  }
}

void check_leaf_fix(CampaignReport& rep, int max_n, int jobs) {
  BruteLimits lim;
  for (int n = 1; n <= max_n; ++n)
    rep.rows.push_back(sweep_trees(n, jobs, [&](const Tree& t, std::vector<std::string>& bad) {
      auto fix = fixing_number(t);
      auto lv = t.leaves();
      for (int v : fix.witness)
        if (!std::binary_search(lv.begin(), lv.end(), v)) {
          bad.push_back(free_canonical_code(t));
          return;
        }
      if (t.n() <= lim.group_n) {
        std::vector<int> colors(t.n(), 1);
        int tag = 2;
        for (int v : fix.witness) colors[v] = tag++;
        if (has_color_preserving_symmetry(t.g, colors))
          bad.push_back(free_canonical_code(t));
      }
    }));
}

}  // namespace

bool CampaignReport::ok() const { return total_violations() == 0; }

long long CampaignReport::total_instances() const {
  long long s = 0;
  for (const auto& r : rows) s += r.instances;
  return s;
}

long long CampaignReport::total_violations() const {
  long long s = 0;
  for (const auto& r : rows) s += static_cast<long long>(r.violations.size());
  return s;
}

std::string CampaignReport::csv() const {
  std::string out = "check,n,instances,violations,seconds\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
    out += check + "," + std::to_string(r.n) + "," + std::to_string(r.instances) + "," +
           std::to_string(r.violations.size()) + "," + buf + "\n";
  }
  return out;
}

std::vector<std::string> campaign_ids() {
  return {"fd-2",   "fd-D",   "spider-cap", "oracle-eq", "rho-props", "univ-T",
          "univ-U", "ecc-bounds", "ecc-props", "lesniak", "leaf-fix"};
}

CampaignReport run_campaign(const std::string& check, int max_n, int jobs) {
  if (max_n < 1) throw std::invalid_argument("campaign: max-n must be >= 1");
  if (jobs < 1) jobs = 1;
  CampaignReport rep;
  rep.check = check;
  rep.max_n = max_n;
  if (check == "fd-2")
    check_fd2(rep, max_n, jobs);
  else if (check == "fd-D")
    check_fdD(rep, max_n, jobs);
  else if (check == "spider-cap")
    check_spider_cap(rep, max_n, jobs);
  else if (check == "oracle-eq")
    check_oracle_eq(rep, max_n, jobs);
  else if (check == "rho-props")
    check_rho_props(rep, max_n, jobs);
  else if (check == "univ-T")
    check_univ_T(rep, max_n, jobs);
  else if (check == "univ-U")
    check_univ_U(rep, max_n, jobs);
  else if (check == "ecc-bounds")
    check_ecc_bounds(rep, max_n, jobs);
  else if (check == "ecc-props")
    check_ecc_props(rep, max_n, jobs);
  else if (check == "lesniak")
    check_lesniak(rep, max_n, jobs);
  else if (check == "leaf-fix")
    check_leaf_fix(rep, max_n, jobs);
  else
    throw std::invalid_argument("campaign: unknown check id \"" + check + "\"");
  return rep;
}

}  // namespace symtree
