#pragma once

#include <string>
#include <vector>

#include "symtree/brute.hpp"

namespace symtree {

struct CampaignRow {
  int n = 0;  // instance order
  long long instances = 0;
  std::vector<std::string> violations;  // canonical codes / labels, sorted
  double seconds = 0.0;
};

struct CampaignReport {
  std::string check;
  int max_n = 0;
  std::vector<CampaignRow> rows;

  bool ok() const;
  long long total_instances() const;
  long long total_violations() const;
  std::string csv() const;  // check,n,instances,violations,seconds
};

// Registered checks:
//   fd-2      fixing density <= 4/11 for 2-distinguishable trees (n >= 3),
//             equality exactly at the extremal spider and spider chains
//   fd-D      fixing density <= (D-1)/(D+1) for D >= 3
//   spider-cap  n_k <= D^k for spiders
//   oracle-eq fast D and F match the brute oracle
//   rho-props spectrum monotone, rho^(F+1)=F, D<=F+1, F<=(D-1)n/D (n<=9)
//   univ-T    radius-2 universality both directions, D in {2,3}
//   univ-U    radius-2 constant-paint-cost universality both directions, D=2
//   ecc-bounds  eccentric-sequence bounds outside the exception families
//   ecc-props   fixing lower bound, symmetry criterion, unit-fixing fixtures
//   lesniak   realizability soundness and completeness at desk scale
//   leaf-fix  fast witnesses are leaf-only and rainbow-individualization
//             distinguishes
std::vector<std::string> campaign_ids();

CampaignReport run_campaign(const std::string& check, int max_n, int jobs = 1);

}  // namespace symtree
