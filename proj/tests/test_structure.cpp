#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "polyclass/constructors.hpp"
#include "polyclass/structure.hpp"

using namespace polyclass;
using testing_util::poly;
using testing_util::square_pyramid;

TEST(Compressed, Examples) {
  EXPECT_TRUE(is_compressed(cube(3)));
  EXPECT_TRUE(is_compressed(simplex(3)));
  EXPECT_FALSE(is_compressed(dilate(simplex(1), 2)));
  EXPECT_FALSE(is_compressed(fixture("P2")));
  EXPECT_TRUE(is_compressed(order_polytope(Poset(3, {{0, 1}}))));
}

TEST(Normal, Examples) {
  EXPECT_TRUE(is_normal(fixture("P3")));
  EXPECT_TRUE(is_normal(fixture("EX38")));
  EXPECT_TRUE(is_normal(cube(3)));
  EXPECT_FALSE(is_normal(edge_polytope(oracle::two_triangles_bridge2())));
  // Reeve-type simplex: every lattice point is a vertex but ZA(P) has index 2,
  // so it is normal in the ZA(P) sense.
  EXPECT_TRUE(is_normal(poly(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}})));
}

TEST(Normal, AgreesWithBruteForce) {
  for (const auto &p :
       {fixture("P1"), fixture("P3"), cube(3), square_pyramid(),
        poly(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 3}}),
        poly(3, {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}),
        product(simplex(1), simplex(2))})
    EXPECT_EQ(is_normal(p), oracle::is_normal_bruteforce(p, 4));
}

TEST(KNumber, Examples) {
  const Geometry p1(fixture("P1"));
  const auto c1 = k_number(p1);
  EXPECT_EQ(c1.k, 3u);
  EXPECT_TRUE(certificate_valid(p1, c1));

  EXPECT_EQ(k_number(fixture("P2")).k, 1u);
  EXPECT_EQ(k_number(fixture("P3")).k, 1u);
  EXPECT_EQ(k_number(simplex(2)).k, 3u);
  EXPECT_EQ(k_number(fixture("EX38")).k, 4u);
}

TEST(KNumber, CertificatesAreValid) {
  for (const auto &p : {fixture("P1"), fixture("P2"), fixture("P3"),
                        fixture("EX38"), cube(3), square_pyramid()}) {
    const Geometry g(p);
    const auto c = k_number(g);
    EXPECT_TRUE(certificate_valid(g, c));
    EXPECT_LE(c.k, g.dim() + 1);
  }
}

TEST(KNumber, CorruptedCertificateIsRejected) {
  const Geometry g(fixture("P1"));
  auto c = k_number(g);
  ASSERT_GE(c.k, 2u);
  c.facet_ids[1] = c.facet_ids[0];
  EXPECT_FALSE(certificate_valid(g, c));
}

TEST(PyramidPeel, Examples) {
  const auto sq = pyramid_peel(square_pyramid());
  EXPECT_EQ(sq.apexes, 1u);
  EXPECT_EQ(sq.core, cube(2));

  for (std::size_t n = 1; n <= 4; ++n) {
    const auto r = pyramid_peel(simplex(n));
    EXPECT_EQ(r.apexes, n);
    EXPECT_EQ(dim(r.core), 0u);
  }
  EXPECT_EQ(pyramid_peel(fixture("P1")).apexes, 0u);

  const auto twice = pyramid_peel(pyramid(pyramid(cube(2))));
  EXPECT_EQ(twice.apexes, 2u);
  EXPECT_EQ(twice.core, cube(2));
}

TEST(ProductDecompose, Examples) {
  const auto c = product_decompose_01(cube(3));
  ASSERT_EQ(c.size(), 3u);
  for (const auto &f : c)
    EXPECT_EQ(f, simplex(1));

  const auto pr = product_decompose_01(product(simplex(1), simplex(2)));
  ASSERT_EQ(pr.size(), 2u);
  EXPECT_EQ(pr[0], simplex(1));
  EXPECT_EQ(pr[1], simplex(2));

  EXPECT_EQ(product_decompose_01(simplex(3)).size(), 1u);
  EXPECT_EQ(product_decompose_01(square_pyramid()).size(), 1u);
  EXPECT_THROW(product_decompose_01(fixture("P2")), ArgumentError);
}

TEST(ProductDecompose, ConstantCoordinatesAreDropped) {
  const auto f = product_decompose_01(
      poly(3, {{0, 1, 0}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}}));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], simplex(1));
}

TEST(ClassifyMain2, Examples) {
  const auto sq = classify_main2(cube(2));
  EXPECT_EQ(sq.tag, Main2Tag::Segre);
  EXPECT_EQ(sq.a, 1u);
  EXPECT_EQ(sq.b, 1u);
  EXPECT_EQ(sq.m, 0u);

  const auto sp = classify_main2(square_pyramid());
  EXPECT_EQ(sp.tag, Main2Tag::Segre);
  EXPECT_EQ(sp.m, 1u);

  const auto pr = classify_main2(product(simplex(1), simplex(2)));
  EXPECT_EQ(pr.tag, Main2Tag::Segre);
  EXPECT_EQ(pr.a, 1u);
  EXPECT_EQ(pr.b, 2u);

  EXPECT_EQ(classify_main2(cube(3)).tag, Main2Tag::NotApplicable);
  EXPECT_EQ(classify_main2(simplex(3)).tag, Main2Tag::NotApplicable);
  EXPECT_THROW(classify_main2(fixture("P3")), ArgumentError);
}
