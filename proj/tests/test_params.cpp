#include <doctest.h>

#include "symtree/brute.hpp"
#include "symtree/enumerate.hpp"
#include "symtree/extremal.hpp"
#include "symtree/tree_params.hpp"
#include "test_helpers.hpp"

using namespace symtree;

namespace {

BigInt binom_ll(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace

TEST_CASE("rigid coloring counts: stars and small paths") {
  for (int D = 2; D <= 4; ++D)
    for (int i = 1; i <= D; ++i)
      CHECK(count_rigid_colorings({make_star(i), 0}, D) == D * binom_ll(D, i));

  CHECK(count_rigid_colorings({make_path(1), 0}, 7) == 7);
  // rooted 2-edge path at d=2: all 8 colorings are rigid and inequivalent
  CHECK(count_rigid_colorings({make_path(3), 0}, 2) == 8);
  CHECK(count_rigid_colorings("((()))", 2) == 8);
  CHECK_THROWS_AS(count_rigid_colorings({make_path(1), 0}, 0), std::invalid_argument);
}

TEST_CASE("rigid coloring counts match the enumeration oracle") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& levels : rooted_level_sequences(n)) {
      Tree t = tree_from_level_sequence(levels);
      for (int d = 1; d <= 3; ++d)
        CHECK(count_rigid_colorings({t, 0}, d) ==
              oracle::rigid_coloring_classes_bruteforce(t, 0, d));
    }
}

TEST_CASE("positive rigid count iff marker-rooted tree is distinguishable") {
  // pinning the root with a pendant path longer than the height turns rooted
  // rigidity into plain distinguishability; the one degenerate family is a
  // bare path at d = 1, where the marked tree is again a path and its flip
  // cannot be broken with a single color
  for (int n = 2; n <= 6; ++n)
    for (const auto& levels : rooted_level_sequences(n)) {
      Tree t = tree_from_level_sequence(levels);
      int height = *std::max_element(levels.begin(), levels.end()) - 1;
      std::vector<std::pair<int, int>> edges = t.g.edges;
      int cur = 0;
      for (int i = 0; i < height + 1; ++i) {
        edges.emplace_back(cur, t.n() + i);
        cur = t.n() + i;
      }
      Tree marked = Tree::from_edges(t.n() + height + 1, edges);
      bool bare_path = t.g.max_degree() <= 2 && t.degree(0) <= 1;
      for (int d = 1; d <= 3; ++d) {
        if (d == 1 && bare_path) continue;
        bool positive = count_rigid_colorings({t, 0}, d) >= 1;
        bool markable = brute_distinguishing_number(marked.g) <= d;
        CHECK(positive == markable);
      }
    }
}

TEST_CASE("distinguishing number: named cases") {
  CHECK(distinguishing_number(max_density_spider()) == 2);
  for (int D = 2; D <= 5; ++D) CHECK(distinguishing_number(make_star(D)) == D);
  CHECK(distinguishing_number(make_path(2)) == 2);
  CHECK(distinguishing_number(make_path(1)) == 1);
  CHECK(distinguishing_number(default_asymmetric_base(7)) == 1);
}

TEST_CASE("fixing number: named cases") {
  auto dense = fixing_number(max_density_spider());
  CHECK(dense.size == 4);

  CHECK(fixing_number(leafy_path(1, 3)).size == 2);
  CHECK(fixing_number(leafy_path(2, 3)).size == 4);
  CHECK(fixing_number(leafy_path(1, 4)).size == 3);
  CHECK(distinguishing_number(leafy_path(2, 3)) == 3);

  for (int n = 2; n <= 8; ++n) CHECK(fixing_number(make_path(n)).size == 1);
  CHECK(fixing_number(make_path(1)).size == 0);
}

TEST_CASE("fast parameters agree with the oracle on all small trees") {
  for (int n = 1; n <= 9; ++n)
    for (const Tree& t : enumerate_free_trees(n)) {
      CHECK(distinguishing_number(t) == brute_distinguishing_number(t.g));
      auto fast = fixing_number(t);
      CHECK(fast.size == brute_fixing_number(t.g).size);
      CHECK(static_cast<long long>(fast.witness.size()) == fast.size);
      // leaf-only witness whose individualization is distinguishing
      auto lv = t.leaves();
      for (int v : fast.witness)
        CHECK(std::binary_search(lv.begin(), lv.end(), v));
      std::vector<int> colors(t.n(), 1);
      int tag = 2;
      for (int v : fast.witness) colors[v] = tag++;
      CHECK(!has_color_preserving_symmetry(t.g, colors));
    }
}

TEST_CASE("spider profiles") {
  auto dense = spider_profile(max_density_spider());
  REQUIRE(dense.has_value());
  CHECK(dense->legs == std::map<int, int>{{1, 2}, {2, 4}});
  CHECK(dense->order() == 11);

  auto star = spider_profile(make_star(4));
  CHECK(star->legs == std::map<int, int>{{1, 4}});

  // two adjacent high-degree vertices
  CHECK(!spider_profile(leafy_path(2, 2)).has_value());

  auto path = spider_profile(make_path(4));
  CHECK(path->legs == std::map<int, int>{{3, 1}});
}

TEST_CASE("spider fixing densities") {
  SpiderProfile dense{{{1, 2}, {2, 4}}};
  CHECK(spider_fixing_density(dense) == Rational(4, 11));
  for (int D = 2; D <= 6; ++D) {
    SpiderProfile star{{{1, D}}};
    CHECK(spider_fixing_density(star) == Rational(D - 1, D + 1));
  }
  SpiderProfile path{{{3, 1}}};
  CHECK(spider_fixing_density(path) == Rational(0, 1));
  CHECK_THROWS_AS(spider_fixing_density(SpiderProfile{}), std::invalid_argument);
}

TEST_CASE("extremal spider profiles") {
  CHECK(extremal_spider_profile(2, 2).legs == std::map<int, int>{{1, 2}, {2, 4}});
  CHECK(extremal_spider_profile(3, 1).legs == std::map<int, int>{{1, 3}});
  CHECK(extremal_spider_profile(2, 1).legs == std::map<int, int>{{1, 2}});
  CHECK_THROWS_AS(extremal_spider_profile(1, 1), std::invalid_argument);
}

TEST_CASE("constructed bound fixing sets") {
  CHECK(construct_bound_fixing_set(max_density_spider()).size() == 4);
  CHECK(construct_bound_fixing_set(spider_chain(2)).size() == 8);
  CHECK(spider_chain(2).n() == 22);

  auto p6 = construct_bound_fixing_set(make_path(6));
  CHECK(p6.size() == 1);
  CHECK(make_path(6).degree(p6[0]) == 1);

  CHECK_THROWS_AS(construct_bound_fixing_set(make_path(2)), std::invalid_argument);
}

TEST_CASE("constructed sets fix the tree and respect the density bounds") {
  for (int n = 3; n <= 10; ++n)
    for (const Tree& t : enumerate_free_trees(n)) {
      auto set = construct_bound_fixing_set(t);
      std::vector<int> colors(t.n(), 1);
      int tag = 2;
      for (int v : set) colors[v] = tag++;
      CHECK(!has_color_preserving_symmetry(t.g, colors));

      int D = distinguishing_number(t);
      Rational size(static_cast<long long>(set.size()), t.n());
      if (D == 2) CHECK(size <= Rational(4, 11));
      if (D >= 3) CHECK(size <= Rational(D - 1, D + 1));
    }
}

TEST_CASE("spider branch caps over all enumerated spiders") {
  for (int n = 2; n <= 12; ++n)
    for (const Tree& t : enumerate_free_trees(n)) {
      auto profile = spider_profile(t);
      if (!profile) continue;
      long long D = distinguishing_number(t);
      for (auto [k, cnt] : profile->legs) {
        long long power = 1;
        for (int i = 0; i < k && power <= cnt; ++i) power *= D;
        CHECK(cnt <= power);
      }
    }
}
