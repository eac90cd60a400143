#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyclass/errors.hpp"
#include "polyclass/linalg.hpp"
#include "polyclass/matrix.hpp"

namespace polyclass {

using Point = IntVector;

/// Supporting hyperplane {u : <u, a> + b = 0}; the polytope lies in <u,a>+b >= 0.
struct Hyperplane {
  RatVector a;
  BigRat b;

  BigRat evaluate(std::span<const BigRat> x) const {
    BigRat s = b;
    for (std::size_t i = 0; i < a.size(); ++i)
      s += a[i] * x[i];
    return s;
  }
  BigRat evaluate(std::span<const BigInt> x) const {
    BigRat s = b;
    for (std::size_t i = 0; i < a.size(); ++i)
      s += a[i] * x[i];
    return s;
  }
};

namespace detail {

inline std::string format_point(std::span<const BigInt> p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i)
    s += (i ? "," : "") + p[i].str();
  return s + ")";
}

inline BigInt lcm_int(const BigInt &a, const BigInt &b) {
  if (a == 0 || b == 0)
    return 0;
  return abs_int(a / gcd(a, b) * b);
}

/// Integer affine form <coeffs, x> + constant.
struct IntForm {
  IntVector coeffs;
  BigInt constant;

  BigInt evaluate(std::span<const BigInt> x) const {
    BigInt s = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      s += coeffs[i] * x[i];
    return s;
  }
};

/// Smallest positive integer multiple of a rational affine form.
inline IntForm integral_multiple(std::span<const BigRat> a, const BigRat &b) {
  BigInt den = denominator(b);
  for (const auto &x : a)
    den = lcm_int(den, denominator(x));
  IntForm f;
  f.coeffs.reserve(a.size());
  BigInt g = numerator(b * den);
  for (const auto &x : a) {
    f.coeffs.push_back(numerator(x * den));
    g = gcd(g, f.coeffs.back());
  }
  f.constant = numerator(b * den);
  if (g > 1) {
    for (auto &c : f.coeffs)
      c /= g;
    f.constant /= g;
  }
  return f;
}

/// Affine hull {x : <c, x> = e for every equation}, stored as integer forms
/// <c, x> - e whose zero set is the hull.
struct AffineHull {
  std::size_t dim = 0;
  std::vector<IntForm> equations;
};

inline AffineHull affine_hull(std::span<const Point> points, std::size_t d) {
  AffineHull hull;
  if (points.empty())
    return hull;
  RatMatrix diffs(points.size() - 1, d);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t j = 0; j < d; ++j)
      diffs(i - 1, j) = BigRat(points[i][j] - points[0][j]);
  const auto normals = kernel_basis(diffs);
  hull.dim = d - normals.size();
  for (const auto &c : normals) {
    IntForm f = integral_multiple(c, BigRat(0));
    BigInt e = 0;
    for (std::size_t j = 0; j < d; ++j)
      e += f.coeffs[j] * points[0][j];
    f.constant = -e;
    hull.equations.push_back(std::move(f));
  }
  return hull;
}

struct RawFacet {
  Hyperplane hyperplane;
  std::vector<bool> support; // over the input points
};

/// Facets of conv(points): hyperplanes through affinely independent
/// dim-subsets that leave every point on one closed side. Deduplicated by the
/// set of points they contain. Requires dim >= 1.
inline std::vector<RawFacet> enumerate_facets(std::span<const Point> points,
                                              std::size_t d,
                                              std::size_t dim) {
  std::vector<RawFacet> found;
  const std::size_t n = points.size();
  for_each_combination(n, dim, [&](std::span<const std::size_t> subset) {
    for (const auto &f : found)
      if (std::all_of(subset.begin(), subset.end(),
                      [&](std::size_t i) { return f.support[i]; }))
        return true;

    RatMatrix sys(subset.size(), d + 1);
    for (std::size_t r = 0; r < subset.size(); ++r) {
      for (std::size_t j = 0; j < d; ++j)
        sys(r, j) = BigRat(points[subset[r]][j]);
      sys(r, d) = 1;
    }
    const auto ker = kernel_basis(sys);
    if (ker.size() != d + 1 - dim)
      return true; // affinely dependent

    for (const auto &k : ker) {
      Hyperplane h{RatVector(k.begin(), k.begin() + d), k[d]};
      std::vector<BigRat> vals(n);
      bool pos = false, neg = false;
      for (std::size_t i = 0; i < n; ++i) {
        vals[i] = h.evaluate(std::span<const BigInt>(points[i]));
        pos |= vals[i] > 0;
        neg |= vals[i] < 0;
      }
      if (!pos && !neg)
        continue; // vanishes on the whole hull
      if (pos && neg)
        return true;
      if (neg) {
        for (auto &x : h.a)
          x = -x;
        h.b = -h.b;
      }
      RawFacet f{std::move(h), std::vector<bool>(n)};
      for (std::size_t i = 0; i < n; ++i)
        f.support[i] = vals[i] == 0;
      found.push_back(std::move(f));
      return true;
    }
    return true;
  });
  return found;
}

inline bool is_01_point(std::span<const BigInt> p) {
  return std::all_of(p.begin(), p.end(),
                     [](const BigInt &x) { return x == 0 || x == 1; });
}

/// Indices of the extreme points of conv(points).
inline std::vector<std::size_t> extreme_points(std::span<const Point> points,
                                               std::size_t d) {
  std::vector<std::size_t> keep;
  const AffineHull hull = affine_hull(points, d);
  if (hull.dim == 0 ||
      std::all_of(points.begin(), points.end(),
                  [](const Point &p) { return is_01_point(p); })) {
    for (std::size_t i = 0; i < points.size(); ++i)
      keep.push_back(i);
    return keep;
  }
  const auto facets = enumerate_facets(points, d, hull.dim);
  for (std::size_t i = 0; i < points.size(); ++i) {
    RatMatrix normals(0, d);
    for (const auto &eq : hull.equations) {
      RatVector row(eq.coeffs.begin(), eq.coeffs.end());
      normals.append_row(row);
    }
    for (const auto &f : facets)
      if (f.support[i])
        normals.append_row(f.hyperplane.a);
    if (rank(normals) == d)
      keep.push_back(i);
  }
  return keep;
}

} // namespace detail

/// Integral polytope given by its vertices. Construction rejects duplicates,
/// drops points that are not extreme and sorts the vertices
/// lexicographically, so equal polytopes compare equal.
class Polytope {
public:
  Polytope(std::size_t ambient_dim, std::vector<Point> points)
      : ambient_dim_(ambient_dim), vertices_(std::move(points)) {
    validate();
    const auto keep = detail::extreme_points(vertices_, ambient_dim_);
    if (keep.size() != vertices_.size()) {
      std::vector<Point> kept;
      kept.reserve(keep.size());
      for (auto i : keep)
        kept.push_back(std::move(vertices_[i]));
      vertices_ = std::move(kept);
    }
    std::sort(vertices_.begin(), vertices_.end());
  }

  /// For constructors that already know every point is a vertex.
  static Polytope from_vertices(std::size_t ambient_dim,
                                std::vector<Point> vertices) {
    Polytope p;
    p.ambient_dim_ = ambient_dim;
    p.vertices_ = std::move(vertices);
    p.validate();
    std::sort(p.vertices_.begin(), p.vertices_.end());
    return p;
  }

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<Point> &vertices() const noexcept { return vertices_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }

  bool is_01() const {
    return std::all_of(vertices_.begin(), vertices_.end(),
                       [](const Point &p) { return detail::is_01_point(p); });
  }

  friend bool operator==(const Polytope &, const Polytope &) = default;

private:
  Polytope() = default;

  void validate() const {
    if (vertices_.empty())
      throw ArgumentError("polytope needs at least one vertex");
    for (const auto &v : vertices_)
      if (v.size() != ambient_dim_)
        throw ArgumentError("vertex " + detail::format_point(v) +
                            " has wrong dimension");
    std::vector<Point> sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
      throw ArgumentError("duplicate vertex " + detail::format_point(*dup));
  }

  std::size_t ambient_dim_ = 0;
  std::vector<Point> vertices_;
};

/// Lattice points of P in lexicographic order.
using LatticePointSet = std::vector<Point>;

struct FacetData {
  std::size_t id = 0;
  /// Scaled so that <v, a> + b equals d_F(v) exactly on lattice points.
  Hyperplane hyperplane;
  /// d_F(v) for each lattice point, aligned with the lattice point order.
  IntVector values;
  /// Indices into Polytope::vertices() of the vertices on this facet.
  std::vector<std::size_t> vertex_set;
};

/// Everything derived from the vertex list: affine hull, facets with their
/// normalized values, and the lattice points. Facets are ordered
/// lexicographically by their value rows.
class Geometry {
public:
  explicit Geometry(Polytope p) : polytope_(std::move(p)) {
    const auto &verts = polytope_.vertices();
    const std::size_t d = polytope_.ambient_dim();
    hull_ = detail::affine_hull(verts, d);
    if (hull_.dim >= 1) {
      for (auto &raw : detail::enumerate_facets(verts, d, hull_.dim)) {
        FacetData f;
        f.hyperplane = std::move(raw.hyperplane);
        for (std::size_t i = 0; i < verts.size(); ++i)
          if (raw.support[i])
            f.vertex_set.push_back(i);
        facets_.push_back(std::move(f));
      }
      for (const auto &f : facets_)
        forms_.push_back(detail::integral_multiple(f.hyperplane.a,
                                                   f.hyperplane.b));
    }
    lattice_points_ = points_in_dilation(1);
    for (auto &f : facets_)
      normalize(f);
    std::sort(facets_.begin(), facets_.end(),
              [](const FacetData &x, const FacetData &y) {
                return x.values < y.values;
              });
    forms_.clear();
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      facets_[i].id = i;
      forms_.push_back(detail::integral_multiple(facets_[i].hyperplane.a,
                                                 facets_[i].hyperplane.b));
    }
  }

  const Polytope &polytope() const noexcept { return polytope_; }
  std::size_t ambient_dim() const noexcept { return polytope_.ambient_dim(); }
  std::size_t dim() const noexcept { return hull_.dim; }
  const std::vector<FacetData> &facets() const noexcept { return facets_; }
  const LatticePointSet &lattice_points() const noexcept {
    return lattice_points_;
  }
  const detail::AffineHull &affine_hull() const noexcept { return hull_; }

  std::optional<std::size_t> index_of(std::span<const BigInt> x) const {
    auto it = std::lower_bound(
        lattice_points_.begin(), lattice_points_.end(), x,
        [](const Point &a, std::span<const BigInt> b) {
          return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                              b.end());
        });
    if (it == lattice_points_.end() || !std::equal(it->begin(), it->end(),
                                                   x.begin(), x.end()))
      return std::nullopt;
    return static_cast<std::size_t>(it - lattice_points_.begin());
  }

  bool contains(std::span<const BigRat> x) const {
    if (x.size() != ambient_dim())
      throw ArgumentError("contains: point has wrong dimension");
    for (const auto &eq : hull_.equations) {
      BigRat s = BigRat(eq.constant);
      for (std::size_t i = 0; i < x.size(); ++i)
        s += BigRat(eq.coeffs[i]) * x[i];
      if (s != 0)
        return false;
    }
    return std::all_of(facets_.begin(), facets_.end(), [&](const auto &f) {
      return f.hyperplane.evaluate(x) >= 0;
    });
  }

  /// Lattice points of h*P in lexicographic order (h >= 1).
  std::vector<Point> points_in_dilation(std::size_t h) const {
    const std::size_t d = ambient_dim();
    const auto &verts = polytope_.vertices();
    const BigInt scale(h);
    std::vector<Point> out;
    if (hull_.dim == 0) {
      Point p = verts.front();
      for (auto &x : p)
        x *= scale;
      out.push_back(std::move(p));
      return out;
    }
    IntVector lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
      lo[j] = hi[j] = verts.front()[j];
      for (const auto &v : verts) {
        lo[j] = std::min(lo[j], v[j]);
        hi[j] = std::max(hi[j], v[j]);
      }
      lo[j] *= scale;
      hi[j] *= scale;
    }

    // Each constraint is <coeffs, x> + h*constant, either == 0 or >= 0.
    struct Constraint {
      const detail::IntForm *form;
      bool equality;
      BigInt shift;
      IntVector suffix_min, suffix_max; // bounds of sum over coords k..d-1
    };
    std::vector<Constraint> cons;
    auto add = [&](const detail::IntForm &f, bool eq) {
      Constraint c{&f, eq, f.constant * scale, IntVector(d + 1, 0),
                   IntVector(d + 1, 0)};
      for (std::size_t k = d; k-- > 0;) {
        const BigInt a = f.coeffs[k] * lo[k], b = f.coeffs[k] * hi[k];
        c.suffix_min[k] = c.suffix_min[k + 1] + std::min(a, b);
        c.suffix_max[k] = c.suffix_max[k + 1] + std::max(a, b);
      }
      cons.push_back(std::move(c));
    };
    for (const auto &eq : hull_.equations)
      add(eq, true);
    for (const auto &f : forms_)
      add(f, false);

    Point x(d);
    IntVector partial(cons.size(), 0);
    std::function<void(std::size_t)> recurse = [&](std::size_t k) {
      for (std::size_t c = 0; c < cons.size(); ++c) {
        const auto &con = cons[c];
        const BigInt base = partial[c] + con.shift;
        if (base + con.suffix_max[k] < 0)
          return;
        if (con.equality && base + con.suffix_min[k] > 0)
          return;
      }
      if (k == d) {
        out.push_back(x);
        return;
      }
      for (BigInt v = lo[k]; v <= hi[k]; ++v) {
        x[k] = v;
        for (std::size_t c = 0; c < cons.size(); ++c)
          partial[c] += cons[c].form->coeffs[k] * v;
        recurse(k + 1);
        for (std::size_t c = 0; c < cons.size(); ++c)
          partial[c] -= cons[c].form->coeffs[k] * v;
      }
    };
    recurse(0);
    return out;
  }

private:
  // Rescale the facet's form so its values on lattice points are integers
  // with gcd 1 (and nonnegative, already guaranteed by orientation).
  void normalize(FacetData &f) const {
    std::vector<BigRat> raw;
    raw.reserve(lattice_points_.size());
    BigInt den = 1;
    for (const auto &p : lattice_points_) {
      raw.push_back(f.hyperplane.evaluate(std::span<const BigInt>(p)));
      den = detail::lcm_int(den, denominator(raw.back()));
    }
    BigInt g = 0;
    for (const auto &r : raw)
      g = gcd(g, numerator(r * den));
    const BigRat factor = BigRat(den) / g;
    for (auto &a : f.hyperplane.a)
      a *= factor;
    f.hyperplane.b *= factor;
    f.values.clear();
    for (const auto &r : raw)
      f.values.push_back(numerator(r * factor));
  }

  Polytope polytope_;
  detail::AffineHull hull_;
  std::vector<FacetData> facets_;
  std::vector<detail::IntForm> forms_;
  LatticePointSet lattice_points_;
};

inline std::size_t dim(const Polytope &p) {
  return detail::affine_hull(p.vertices(), p.ambient_dim()).dim;
}

inline std::vector<FacetData> facets(const Geometry &g) {
  if (g.dim() == 0)
    throw ArgumentError("no facets: polytope is a single point");
  return g.facets();
}

inline std::vector<FacetData> facets(const Polytope &p) {
  return facets(Geometry(p));
}

inline LatticePointSet lattice_points(const Polytope &p) {
  return Geometry(p).lattice_points();
}

inline bool contains(const Polytope &p, std::span<const BigRat> x) {
  return Geometry(p).contains(x);
}

/// Every vertex lies on exactly dim facets.
inline bool is_simple(const Geometry &g) {
  std::vector<std::size_t> count(g.polytope().num_vertices(), 0);
  for (const auto &f : g.facets())
    for (auto v : f.vertex_set)
      ++count[v];
  return std::all_of(count.begin(), count.end(),
                     [&](std::size_t c) { return c == g.dim(); });
}

inline bool is_simple(const Polytope &p) { return is_simple(Geometry(p)); }

inline Polytope dilate(const Polytope &p, std::size_t k) {
  if (k == 0)
    throw ArgumentError("dilate: factor must be positive");
  std::vector<Point> verts = p.vertices();
  for (auto &v : verts)
    for (auto &x : v)
      x *= k;
  return Polytope::from_vertices(p.ambient_dim(), std::move(verts));
}

/// Hermite basis of the lattice generated by {(v, 1) : v in P cap Z^d}.
inline IntMatrix lattice_za(const Geometry &g) {
  IntMatrix gens(0, g.ambient_dim() + 1);
  for (const auto &p : g.lattice_points()) {
    Point row = p;
    row.push_back(1);
    gens.append_row(row);
  }
  return hnf_row_lattice(gens);
}

inline IntMatrix lattice_za(const Polytope &p) {
  return lattice_za(Geometry(p));
}

} // namespace polyclass
