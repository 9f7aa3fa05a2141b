#include <doctest.h>

#include <numeric>

#include "symtree/brute.hpp"
#include "symtree/enumerate.hpp"
#include "symtree/extremal.hpp"
#include "test_helpers.hpp"

using namespace symtree;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

// path on 6 vertices with a pendant at its third vertex: asymmetric
Tree asymmetric7() { return default_asymmetric_base(7); }

}  // namespace

TEST_CASE("automorphism groups") {
  auto c6 = automorphisms(cycle(6));
  CHECK(c6.size() == 12);
  std::vector<int> id(6);
  std::iota(id.begin(), id.end(), 0);
  CHECK(c6.front() == id);  // identity first

  CHECK(automorphisms(make_star(3).g).size() == 6);
  CHECK(automorphisms(asymmetric7().g).size() == 1);

  // cross-check the asymmetric case against a scan of all 7! permutations
  CHECK(oracle::rooted_automorphisms_bruteforce(asymmetric7(), -1).size() == 1);

  for (const auto& p : c6) CHECK(is_automorphism(cycle(6), p));

  CHECK_THROWS_AS(automorphisms(subset_split_graph(7, 2)), std::invalid_argument);
}

TEST_CASE("is_distinguishing") {
  Graph c6 = cycle(6);
  // blacks at 0, 1, 3
  CHECK(is_distinguishing(c6, Coloring::make({2, 2, 1, 2, 1, 1}, 2)));
  CHECK(!is_distinguishing(make_star(3).g, Coloring::make({1, 1, 1, 1}, 1)));
  CHECK(is_distinguishing(make_star(3).g, Coloring::make({1, 2, 3, 4}, 4)));
  CHECK_THROWS_AS(is_distinguishing(c6, Coloring::make({1, 1}, 1)), std::invalid_argument);
}

TEST_CASE("brute distinguishing numbers") {
  CHECK(brute_distinguishing_number(cycle(6)) == 2);
  CHECK(brute_distinguishing_number(make_star(3).g) == 3);
  CHECK(brute_distinguishing_number(make_path(1).g) == 1);
  CHECK(brute_distinguishing_number(asymmetric7().g) == 1);
}

TEST_CASE("brute fixing numbers") {
  auto c6 = brute_fixing_number(cycle(6));
  CHECK(c6.size == 2);
  CHECK(c6.witness == std::vector<int>{0, 1});  // lexicographically smallest

  CHECK(brute_fixing_number(max_density_spider().g).size == 4);
  CHECK(brute_fixing_number(asymmetric7().g).size == 0);
  CHECK(brute_fixing_number(asymmetric7().g).witness.empty());
}

TEST_CASE("paint costs and spectra") {
  Graph c6 = cycle(6);
  CHECK(brute_paint_cost(c6, 2) == 3);
  CHECK(brute_paint_cost(c6, 3) == 2);
  CHECK(brute_paint_cost(make_star(3).g, 3) == 2);
  CHECK_THROWS_AS(brute_paint_cost(c6, 1), std::invalid_argument);

  auto sc6 = paint_cost_spectrum(c6);
  CHECK(sc6.D == 2);
  CHECK(sc6.costs == std::vector<int>{3, 2});

  auto sp3 = paint_cost_spectrum(make_path(3).g);
  CHECK(sp3.D == 2);
  CHECK(sp3.costs == std::vector<int>{1});

  auto sk13 = paint_cost_spectrum(make_star(3).g);
  CHECK(sk13.D == 3);
  CHECK(sk13.costs == std::vector<int>{2});
}

TEST_CASE("witness individualization distinguishes") {
  for (int n = 1; n <= 8; ++n)
    for (const Tree& t : enumerate_free_trees(n)) {
      auto fix = brute_fixing_number(t.g);
      std::vector<int> colors(t.n(), 1);
      int tag = 2;
      for (int v : fix.witness) colors[v] = tag++;
      Coloring c = Coloring::make(colors, tag - 1 < 1 ? 1 : tag - 1);
      CHECK(is_distinguishing(t.g, c));
    }
}

TEST_CASE("spectrum properties over all small trees") {
  BruteLimits lim;
  for (int n = 1; n <= 7; ++n)
    for (const Tree& t : enumerate_free_trees(n)) {
      auto s = paint_cost_spectrum(t.g, lim);
      int F = brute_fixing_number(t.g, lim).size;
      REQUIRE(!s.costs.empty());
      CHECK(s.costs.back() == F);
      CHECK(s.D <= F + 1);
      CHECK(static_cast<long long>(F) * s.D <= static_cast<long long>(s.D - 1) * t.n());
      for (size_t i = 1; i < s.costs.size(); ++i) CHECK(s.costs[i] <= s.costs[i - 1]);
    }
}
