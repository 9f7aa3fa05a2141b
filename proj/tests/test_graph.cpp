#include <doctest.h>

#include <algorithm>
#include <set>

#include "symtree/canon.hpp"
#include "symtree/enumerate.hpp"
#include "symtree/extremal.hpp"
#include "symtree/graph.hpp"

using namespace symtree;

TEST_CASE("edge list parsing") {
  Tree p3 = parse_edge_list_tree("0 1\n1 2");
  CHECK(p3.n() == 3);
  CHECK(p3.g.max_degree() == 2);

  Tree star = parse_edge_list_tree("0 1\n0 2\n0 3");
  CHECK(star.degree(0) == 3);

  CHECK(parse_edge_list_graph("# comment\n0 1\n\n1 2").n == 3);

  CHECK_THROWS_WITH_AS(parse_edge_list_tree("0 1\n1 2\n2 0"),
                       "line 3: cycle detected", ParseError);
  CHECK_THROWS_AS(parse_edge_list_tree("0 1\n0 1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list_graph("0 0"), ParseError);
  CHECK_THROWS_AS(parse_edge_list_graph("0 1\n3 4"), ParseError);  // id 2 unused
  CHECK_THROWS_AS(parse_edge_list_tree("0 1\n2 3"), ParseError);   // disconnected
  CHECK_THROWS_AS(parse_edge_list_graph("0 x"), ParseError);
}

TEST_CASE("eccentricities, radius, diameter, center") {
  Tree p5 = make_path(5);
  auto ecc = eccentricities(p5);
  std::vector<int> vals;
  for (auto [v, e] : ecc) vals.push_back(e);
  CHECK(vals == std::vector<int>{4, 3, 2, 3, 4});
  CHECK(radius(p5) == 2);
  CHECK(diameter(p5) == 4);
  CHECK(center(p5) == std::vector<int>{2});

  CHECK(center(make_path(4)) == std::vector<int>{1, 2});

  Tree star = make_star(3);
  CHECK(center(star) == std::vector<int>{0});
  CHECK(eccentricities(star)[0].second == 1);
  CHECK(eccentricities(star)[1].second == 2);

  // legs {2,2,1,1}: eccentricity multiset {2, 3x4, 4x2}
  Tree s2211 = make_spider({2, 2, 1, 1});
  std::multiset<int> got;
  for (auto [v, e] : eccentricities(s2211)) got.insert(e);
  CHECK(got == std::multiset<int>{2, 3, 3, 3, 3, 4, 4});
}

TEST_CASE("json record shape") {
  CHECK(eccentricity_record_json(make_path(5)) ==
        "{\"n\":5,\"radius\":2,\"diameter\":4,\"eccentric_sequence\":[[2,1],[3,2],[4,2]]}");
}

TEST_CASE("dot export") {
  Tree p3 = make_path(3);
  std::string dot = to_dot(p3.g);
  CHECK(dot.find("graph G {") == 0);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  Coloring c = Coloring::make({1, 2, 1}, 2);
  CHECK(to_dot(p3.g, &c).find("color=\"2\"") != std::string::npos);
}

TEST_CASE("pendent spider decomposition") {
  // one high-degree hub: a single piece equal to the whole tree
  Tree spider = max_density_spider();
  auto pieces = pendent_spider_decomposition(spider);
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].shape.tree.n() == 11);
  CHECK(pieces[0].verts[0] == 0);

  // two hubs with 3 leaves each: two star-shaped pieces
  Tree tk = leafy_path(2, 3);
  pieces = pendent_spider_decomposition(tk);
  REQUIRE(pieces.size() == 2);
  for (const auto& p : pieces) {
    CHECK(p.shape.tree.n() == 4);
    CHECK(p.shape.tree.degree(0) == 3);
  }

  // a path decomposes into itself
  pieces = pendent_spider_decomposition(make_path(6));
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].shape.tree.n() == 6);

  CHECK_THROWS_AS(pendent_spider_decomposition(make_path(1)), std::invalid_argument);
}

TEST_CASE("eccentricities match per-vertex search on all small trees") {
  for (int n = 1; n <= 10; ++n)
    for (const Tree& t : enumerate_free_trees(n)) {
      auto fast = eccentricities(t);
      for (int v = 0; v < n; ++v) {
        auto dist = bfs_distances(t.g, v);
        CHECK(fast[v].second == *std::max_element(dist.begin(), dist.end()));
      }
    }
}

TEST_CASE("center and decomposition invariants over all small trees") {
  for (int n = 1; n <= 10; ++n) {
    for (const Tree& t : enumerate_free_trees(n)) {
      int r = radius(t), d = diameter(t);
      auto c = center(t);
      CHECK((c.size() == 1 || c.size() == 2));
      CHECK((d == 2 * r || d == 2 * r - 1));
      CHECK((c.size() == 1) == (d == 2 * r));

      if (n >= 2) {
        auto pieces = pendent_spider_decomposition(t);
        int covered = 0;
        std::set<int> seen;
        for (const auto& p : pieces) {
          covered += p.shape.tree.n();
          for (int v : p.verts) CHECK(seen.insert(v).second);  // disjoint
        }
        CHECK(covered <= n);
        for (int leaf : t.leaves()) CHECK(seen.count(leaf) == 1);
      }
    }
  }
}

TEST_CASE("serialize round trip up to isomorphism") {
  for (int n = 2; n <= 10; ++n)
    for (const Tree& t : enumerate_free_trees(n)) {
      Tree back = parse_edge_list_tree(serialize_edge_list(t.g));
      CHECK(tree_isomorphic(t, back));
    }
}
