#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "polyclass/constructors.hpp"
#include "polyclass/polytope.hpp"

using namespace polyclass;

namespace {

Polytope poly(std::size_t d, std::vector<std::vector<long>> pts) {
  std::vector<Point> out;
  for (const auto &p : pts)
    out.emplace_back(p.begin(), p.end());
  return Polytope(d, std::move(out));
}

std::vector<Point> points(std::vector<std::vector<long>> pts) {
  std::vector<Point> out;
  for (const auto &p : pts)
    out.emplace_back(p.begin(), p.end());
  return out;
}

IntVector ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

RatVector rats(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs)
    v.emplace_back(x);
  return v;
}

const Polytope segment02 = poly(1, {{0}, {2}});
const Polytope square_pyramid =
    poly(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});

} // namespace

TEST(Polytope, RejectsDuplicatesAndRaggedInput) {
  EXPECT_THROW(poly(2, {{0, 0}, {1, 0}, {0, 0}}), ArgumentError);
  EXPECT_THROW(poly(2, {{0, 0}, {1}}), ArgumentError);
  EXPECT_THROW(Polytope(2, {}), ArgumentError);
}

TEST(Polytope, DropsNonVerticesAndSorts) {
  const auto p = poly(2, {{2, 0}, {1, 0}, {0, 0}, {0, 2}, {1, 1}});
  EXPECT_EQ(p.vertices(), points({{0, 0}, {0, 2}, {2, 0}}));
  const auto q = poly(2, {{1, 1}, {0, 0}, {2, 2}});
  EXPECT_EQ(q.vertices(), points({{0, 0}, {2, 2}}));
}

TEST(Dim, Examples) {
  EXPECT_EQ(dim(poly(3, {{1, 2, 3}})), 0u);
  EXPECT_EQ(dim(fixture("P1")), 2u);
  EXPECT_EQ(dim(cube(3)), 3u);
  EXPECT_EQ(dim(poly(3, {{0, 0, 0}, {1, 1, 1}, {2, 0, 1}})), 2u);
}

TEST(Facets, SegmentValues) {
  const Geometry g(segment02);
  EXPECT_EQ(g.lattice_points(), points({{0}, {1}, {2}}));
  ASSERT_EQ(g.facets().size(), 2u);
  EXPECT_EQ(g.facets()[0].values, ints({0, 1, 2}));
  EXPECT_EQ(g.facets()[1].values, ints({2, 1, 0}));
}

TEST(Facets, DiamondAroundCenterPoint) {
  const Geometry g(fixture("P2"));
  ASSERT_EQ(g.facets().size(), 4u);
  const auto centre = g.index_of(ints({1, 1}));
  ASSERT_TRUE(centre);
  for (const auto &f : g.facets())
    EXPECT_EQ(f.values[*centre], 1);

  // The facet through (1,0) and (0,1) takes values {1, 2} off the facet.
  const auto a = *g.index_of(ints({1, 0})), b = *g.index_of(ints({0, 1}));
  const auto it = std::find_if(g.facets().begin(), g.facets().end(),
                               [&](const FacetData &f) {
                                 return f.values[a] == 0 && f.values[b] == 0;
                               });
  ASSERT_NE(it, g.facets().end());
  std::set<BigInt> nonzero;
  for (const auto &v : it->values)
    if (v != 0)
      nonzero.insert(v);
  EXPECT_EQ(nonzero, (std::set<BigInt>{1, 2}));
}

TEST(Facets, ThreeDimensionalExampleHyperplanes) {
  const Geometry g(fixture("EX38"));
  const std::vector<std::pair<RatVector, BigRat>> expected{
      {rats({1, 0, 0}), 0},   {rats({0, 1, 0}), 0},   {rats({0, 0, 1}), 0},
      {rats({1, -1, -1}), 1}, {rats({-1, 1, -1}), 1}, {rats({-1, -1, 1}), 1}};
  ASSERT_EQ(g.facets().size(), expected.size());
  for (const auto &[a, b] : expected) {
    const auto match = std::count_if(
        g.facets().begin(), g.facets().end(), [&](const FacetData &f) {
          // Positive multiple: (f.a, f.b) = lambda (a, b), lambda > 0.
          std::optional<BigRat> lambda;
          for (std::size_t i = 0; i <= a.size(); ++i) {
            const BigRat x = i < a.size() ? a[i] : b;
            const BigRat y = i < a.size() ? f.hyperplane.a[i] : f.hyperplane.b;
            if (x == 0) {
              if (y != 0)
                return false;
              continue;
            }
            if (!lambda)
              lambda = y / x;
            if (y != *lambda * x)
              return false;
          }
          return lambda && *lambda > 0;
        });
    EXPECT_EQ(match, 1);
  }
}

TEST(Facets, PointHasNoFacets) {
  EXPECT_THROW(facets(poly(2, {{3, 4}})), ArgumentError);
  EXPECT_EQ(lattice_points(poly(2, {{3, 4}})), points({{3, 4}}));
}

TEST(Facets, LowerDimensionalInHigherAmbient) {
  const Geometry g(poly(2, {{0, 0}, {2, 2}}));
  EXPECT_EQ(g.dim(), 1u);
  EXPECT_EQ(g.lattice_points(), points({{0, 0}, {1, 1}, {2, 2}}));
  ASSERT_EQ(g.facets().size(), 2u);
  EXPECT_EQ(g.facets()[0].values, ints({0, 1, 2}));
  EXPECT_EQ(g.facets()[1].values, ints({2, 1, 0}));
}

TEST(LatticePoints, Examples) {
  const auto p1 = lattice_points(fixture("P1"));
  EXPECT_EQ(p1.size(), 7u);
  EXPECT_TRUE(std::binary_search(p1.begin(), p1.end(), ints({1, 1})));
  EXPECT_EQ(lattice_points(fixture("P3")).size(), 11u);
  EXPECT_EQ(lattice_points(simplex(2)), points({{0, 0}, {0, 1}, {1, 0}}));
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(fixture("P1"), rats({1, 1})));
  EXPECT_FALSE(contains(simplex(2), rats({1, 1})));
  EXPECT_TRUE(contains(segment02, rats({2})));
  RatVector half{BigRat(1, 2), BigRat(1, 2)};
  EXPECT_TRUE(contains(simplex(2), half));
  EXPECT_FALSE(contains(poly(2, {{0, 0}, {2, 2}}), rats({1, 0})));
  EXPECT_THROW(contains(simplex(2), rats({0})), ArgumentError);
}

TEST(IsSimple, Examples) {
  EXPECT_TRUE(is_simple(cube(3)));
  EXPECT_FALSE(is_simple(square_pyramid));
  EXPECT_TRUE(is_simple(fixture("P1")));
  EXPECT_FALSE(is_simple(fixture("EX38")));
}

TEST(Dilate, Examples) {
  EXPECT_EQ(dilate(simplex(1), 2), segment02);
  const auto d2 = dilate(simplex(2), 2);
  EXPECT_EQ(d2, poly(2, {{0, 0}, {2, 0}, {0, 2}}));
  EXPECT_EQ(lattice_points(d2).size(), 6u);
  EXPECT_EQ(dilate(fixture("P3"), 1), fixture("P3"));
  EXPECT_THROW(dilate(simplex(1), 0), ArgumentError);
}

TEST(LatticeZA, Examples) {
  EXPECT_EQ(lattice_za(simplex(1)), IntMatrix::identity(2));
  EXPECT_EQ(lattice_za(segment02), IntMatrix::identity(2));
  const auto reeve = poly(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}});
  const auto h = lattice_za(reeve);
  ASSERT_EQ(h.rows(), 4u);
  EXPECT_EQ(determinant(h), 2);
}

TEST(LatticeZA, LowerDimensionalHasLowerRank) {
  const auto h = lattice_za(poly(3, {{0, 0, 0}, {1, 1, 0}, {0, 1, 1}}));
  EXPECT_EQ(h.rows(), 3u);
}

namespace {

std::vector<Polytope> assorted() {
  return {fixture("P1"),
          fixture("P2"),
          fixture("P3"),
          fixture("EX38"),
          segment02,
          square_pyramid,
          dilate(simplex(3), 2),
          product(simplex(1), simplex(2)),
          poly(3, {{0, 0, 0}, {3, 1, 0}, {1, 2, 5}, {-1, 0, 2}, {2, 2, 2}}),
          poly(4, {{0, 0, 0, 0}, {1, 0, 0, 1}, {0, 1, 0, 1}, {1, 1, 0, 0}}),
          poly(2, {{0, 0}, {4, 0}, {0, 6}})};
}

} // namespace

TEST(FacetInvariants, NormalizationConditions) {
  for (const auto &p : assorted()) {
    const Geometry g(p);
    for (const auto &f : g.facets()) {
      BigInt gcd_all = 0;
      for (std::size_t i = 0; i < f.values.size(); ++i) {
        EXPECT_GE(f.values[i], 0);
        gcd_all = gcd(gcd_all, f.values[i]);
        // The stored representative reproduces the values exactly.
        EXPECT_EQ(f.hyperplane.evaluate(
                      std::span<const BigInt>(g.lattice_points()[i])),
                  BigRat(f.values[i]));
      }
      EXPECT_EQ(gcd_all, 1);
      // Zero exactly on the facet's vertices (among the vertices).
      for (std::size_t v = 0; v < p.num_vertices(); ++v) {
        const auto idx = *g.index_of(p.vertices()[v]);
        const bool on = std::binary_search(f.vertex_set.begin(),
                                           f.vertex_set.end(), v);
        EXPECT_EQ(f.values[idx] == 0, on);
      }
      // Values on the facet's lattice points vanish and those points lie in
      // the affine span of the facet: check via the rescaled representative.
      RatVector a2 = f.hyperplane.a;
      for (auto &x : a2)
        x *= 7;
      const Hyperplane scaled{a2, f.hyperplane.b * 7};
      for (std::size_t i = 0; i < f.values.size(); ++i)
        EXPECT_EQ(scaled.evaluate(std::span<const BigInt>(
                      g.lattice_points()[i])),
                  BigRat(7 * f.values[i]));
    }
  }
}

TEST(FacetInvariants, RepresentativeIndependence) {
  // Values only depend on the facet, not on the positive multiple of the
  // affine form: normalizing k*(a, b) by the lattice-point gcd gives the same
  // row for every k.
  for (const auto &p : assorted()) {
    const Geometry g(p);
    for (const auto &f : g.facets())
      for (long k : {2, 5, 12}) {
        std::vector<BigRat> raw;
        for (const auto &pt : g.lattice_points()) {
          BigRat s = f.hyperplane.b * k;
          for (std::size_t i = 0; i < pt.size(); ++i)
            s += f.hyperplane.a[i] * k * pt[i];
          raw.push_back(s);
        }
        BigInt den = 1;
        for (const auto &r : raw)
          den = den * denominator(r) / gcd(den, denominator(r));
        BigInt gg = 0;
        for (const auto &r : raw)
          gg = gcd(gg, numerator(r * den));
        IntVector renorm;
        for (const auto &r : raw)
          renorm.push_back(numerator(r * den) / gg);
        EXPECT_EQ(renorm, f.values);
      }
  }
}

TEST(FacetInvariants, VerticesAndLatticePointsAreInside) {
  for (const auto &p : assorted()) {
    const Geometry g(p);
    for (const auto &v : p.vertices())
      EXPECT_TRUE(g.index_of(v).has_value());
    for (const auto &x : g.lattice_points()) {
      RatVector xr(x.begin(), x.end());
      EXPECT_TRUE(g.contains(xr));
    }
    EXPECT_TRUE(std::is_sorted(g.lattice_points().begin(),
                               g.lattice_points().end()));
  }
}

TEST(FacetInvariants, LatticePointsMatchBoxScan) {
  // Exhaustive scan of the bounding box with contains() as the filter.
  for (const auto &p : assorted()) {
    const Geometry g(p);
    const std::size_t d = p.ambient_dim();
    std::vector<long> lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
      lo[j] = hi[j] = static_cast<long>(p.vertices()[0][j]);
      for (const auto &v : p.vertices()) {
        lo[j] = std::min(lo[j], static_cast<long>(v[j]));
        hi[j] = std::max(hi[j], static_cast<long>(v[j]));
      }
    }
    std::vector<Point> found;
    std::vector<long> x = lo;
    for (;;) {
      RatVector xr(x.begin(), x.end());
      if (g.contains(xr))
        found.emplace_back(x.begin(), x.end());
      std::size_t j = d;
      while (j > 0 && x[j - 1] == hi[j - 1]) {
        x[j - 1] = lo[j - 1];
        --j;
      }
      if (j == 0)
        break;
      ++x[j - 1];
    }
    EXPECT_EQ(found, g.lattice_points());
  }
}

TEST(FacetInvariants, IndependentOfInputOrder) {
  std::mt19937_64 rng(8);
  for (const auto &p : assorted()) {
    const Geometry g(p);
    for (int t = 0; t < 3; ++t) {
      auto shuffled = p.vertices();
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      const Geometry h(Polytope(p.ambient_dim(), shuffled));
      ASSERT_EQ(h.facets().size(), g.facets().size());
      for (std::size_t i = 0; i < g.facets().size(); ++i)
        EXPECT_EQ(h.facets()[i].values, g.facets()[i].values);
    }
  }
}

TEST(FacetInvariants, DilationPointsMatchDilatedPolytope) {
  for (const auto &p : assorted())
    for (std::size_t h : {2u, 3u}) {
      if (p.ambient_dim() > 3 && h > 2)
        continue;
      EXPECT_EQ(Geometry(p).points_in_dilation(h),
                lattice_points(dilate(p, h)));
    }
}
