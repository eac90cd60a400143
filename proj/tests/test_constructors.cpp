#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "polyclass/constructors.hpp"

using namespace polyclass;
using testing_util::poly;

TEST(Simplex, Vertices) {
  EXPECT_EQ(simplex(2), poly(2, {{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(dim(simplex(4)), 4u);
  EXPECT_EQ(facets(simplex(4)).size(), 5u);
}

TEST(Cube, Vertices) {
  EXPECT_EQ(cube(3).num_vertices(), 8u);
  EXPECT_EQ(facets(cube(3)).size(), 6u);
  EXPECT_TRUE(cube(3).is_01());
}

TEST(Product, FacetCountsAdd) {
  const auto p = product(simplex(1), simplex(2));
  EXPECT_EQ(p.num_vertices(), 6u);
  EXPECT_EQ(dim(p), 3u);
  EXPECT_EQ(facets(p).size(), 2u + 3u);
  EXPECT_EQ(product(cube(2), simplex(1)), cube(3));
  EXPECT_EQ(facets(product(fixture("P1"), simplex(2))).size(), 6u + 3u);
}

TEST(Pyramid, AddsOneFacet) {
  EXPECT_EQ(pyramid(cube(2)), testing_util::square_pyramid());
  EXPECT_EQ(facets(pyramid(cube(2))).size(), 5u);
  EXPECT_EQ(facets(pyramid(fixture("P1"))).size(), 7u);
  EXPECT_EQ(pyramid(simplex(2)), simplex(3));
  EXPECT_EQ(dim(pyramid(fixture("EX38"), 2)), 4u);
  EXPECT_THROW(pyramid(simplex(1), 0), ArgumentError);
}

TEST(Poset, ClosureAndCycles) {
  const Poset p(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(p.less_eq(0, 2));
  EXPECT_FALSE(p.less_eq(2, 0));
  EXPECT_TRUE(p.less_eq(1, 1));
  EXPECT_FALSE(Poset::is_closed(3, {{0, 1}, {1, 2}}));
  EXPECT_TRUE(Poset::is_closed(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_THROW(Poset(2, {{0, 1}, {1, 0}}), ArgumentError);
  EXPECT_THROW(Poset(2, {{0, 5}}), ArgumentError);
}

TEST(OrderPolytope, Examples) {
  EXPECT_EQ(order_polytope(Poset(3, {})), cube(3));
  EXPECT_EQ(order_polytope(Poset(2, {{0, 1}})),
            poly(2, {{0, 0}, {0, 1}, {1, 1}}));
  // A 3-chain gives a unimodular 3-simplex.
  const auto chain = order_polytope(Poset(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(chain.num_vertices(), 4u);
  EXPECT_EQ(dim(chain), 3u);
}

TEST(StableSetPolytope, Examples) {
  EXPECT_EQ(stable_set_polytope(Graph(2, {{0, 1}})), simplex(2));
  EXPECT_EQ(stable_set_polytope(Graph(3, {})), cube(3));
  // Triangle: only singletons and the empty set.
  EXPECT_EQ(stable_set_polytope(Graph(3, {{0, 1}, {1, 2}, {0, 2}})),
            simplex(3));
  // Path on 3 vertices: {}, {0}, {1}, {2}, {0,2}.
  EXPECT_EQ(stable_set_polytope(Graph(3, {{0, 1}, {1, 2}})).num_vertices(),
            5u);
}

TEST(EdgePolytope, Examples) {
  const auto k3 = edge_polytope(Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(k3.num_vertices(), 3u);
  EXPECT_EQ(dim(k3), 2u);
  const auto c4 = edge_polytope(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  EXPECT_EQ(c4.num_vertices(), 4u);
  EXPECT_EQ(dim(c4), 2u);
  const auto tt = edge_polytope(oracle::two_triangles_bridge2());
  EXPECT_EQ(tt.num_vertices(), 8u);
  EXPECT_EQ(dim(tt), 6u);
  EXPECT_THROW(edge_polytope(Graph(3, {})), ArgumentError);
}

TEST(Graph, Validation) {
  EXPECT_THROW(Graph(2, {{0, 0}}), ArgumentError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), ArgumentError);
  EXPECT_THROW(Graph(2, {{0, 2}}), ArgumentError);
  const Graph g(3, {{2, 0}});
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_FALSE(g.adjacent(0, 1));
}

TEST(Fixtures, Shapes) {
  EXPECT_EQ(fixture_names().size(), 4u);
  EXPECT_EQ(fixture("P1").num_vertices(), 6u);
  EXPECT_EQ(dim(fixture("P2")), 2u);
  EXPECT_EQ(lattice_points(fixture("P2")).size(), 5u);
  EXPECT_EQ(dim(fixture("EX38")), 3u);
  EXPECT_THROW(fixture("P9"), ArgumentError);
}
