#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyclass/class_group.hpp"
#include "polyclass/errors.hpp"
#include "polyclass/polytope.hpp"

namespace polyclass {

/// Every facet takes a single nonzero value on the lattice points. With the
/// gcd normalization that value is 1.
inline bool is_compressed(const Geometry &g) {
  for (const auto &f : facets(g))
    for (const auto &v : f.values)
      if (v > 1)
        return false;
  return true;
}

inline bool is_compressed(const Polytope &p) {
  return is_compressed(Geometry(p));
}

/// Decides Z_{>=0}A(P) == R_{>=0}A(P) cap ZA(P).
///
/// The semigroup is built height by height, S_h = S_{h-1} + A(P), and every
/// point of hP whose lift (x, h) lies in ZA(P) must appear in S_h. Degree
/// bounds for Hilbert bases of lattice polytopes put every minimal generator
/// of the normalization at height <= dim P - 1, so heights 2 .. dim P - 1
/// decide the question and polytopes of dimension <= 2 are always normal.
inline bool is_normal(const Geometry &g) {
  if (g.dim() <= 2)
    return true;
  const IntMatrix za = lattice_za(g);
  const auto &gens = g.lattice_points();
  std::set<Point> layer(gens.begin(), gens.end());
  for (std::size_t h = 2; h + 1 <= g.dim(); ++h) {
    std::set<Point> next;
    for (const auto &s : layer)
      for (const auto &v : gens) {
        Point sum = s;
        for (std::size_t i = 0; i < sum.size(); ++i)
          sum[i] += v[i];
        next.insert(std::move(sum));
      }
    for (const auto &x : g.points_in_dilation(h)) {
      if (next.count(x))
        continue;
      Point lifted = x;
      lifted.push_back(h);
      if (lattice_contains(za, lifted))
        return false;
    }
    layer = std::move(next);
  }
  return true;
}

inline bool is_normal(const Polytope &p) { return is_normal(Geometry(p)); }

/// Witness for k_P: point_ids[i] lies on facets facet_ids[0..i-1] and has
/// value 1 on facet_ids[i].
struct KpCertificate {
  std::size_t k = 0;
  std::vector<Point> points;
  std::vector<std::size_t> point_ids; // into Geometry::lattice_points()
  std::vector<std::size_t> facet_ids;
};

/// Re-checks a certificate directly against the facet values.
inline bool certificate_valid(const Geometry &g, const KpCertificate &c) {
  if (c.points.size() != c.k || c.point_ids.size() != c.k ||
      c.facet_ids.size() != c.k || c.k > g.dim() + 1)
    return false;
  const auto &fs = g.facets();
  for (std::size_t i = 0; i < c.k; ++i) {
    if (c.point_ids[i] >= g.lattice_points().size() ||
        c.facet_ids[i] >= fs.size() ||
        g.lattice_points()[c.point_ids[i]] != c.points[i])
      return false;
    for (std::size_t j = 0; j < i; ++j)
      if (c.point_ids[j] == c.point_ids[i] || c.facet_ids[j] == c.facet_ids[i])
        return false;
    for (std::size_t l = 0; l < i; ++l)
      if (fs[c.facet_ids[l]].values[c.point_ids[i]] != 0)
        return false;
    if (fs[c.facet_ids[i]].values[c.point_ids[i]] != 1)
      return false;
  }
  return true;
}

/// Maximal chain (v_1, F_1), ..., (v_k, F_k) with each v_i on all earlier
/// facets and d_{F_i}(v_i) = 1. Exhaustive search memoized on the set of
/// facets chosen so far; the reachable points depend only on that set.
inline KpCertificate k_number(const Geometry &g) {
  const auto fs = facets(g);
  const auto &pts = g.lattice_points();
  const std::size_t cap = g.dim() + 1;

  std::vector<std::vector<std::size_t>> unit_facets(pts.size());
  for (std::size_t v = 0; v < pts.size(); ++v)
    for (const auto &f : fs)
      if (f.values[v] == 1)
        unit_facets[v].push_back(f.id);

  struct Entry {
    std::size_t length;
    std::size_t point, facet;
  };
  std::map<std::vector<std::size_t>, Entry> memo;

  // Best continuation from the state where `chosen` facets are used and
  // `reachable` lists the points lying on all of them.
  auto solve = [&](auto &&self, const std::vector<std::size_t> &chosen,
                   const std::vector<std::size_t> &reachable,
                   std::size_t budget) -> std::size_t {
    if (auto it = memo.find(chosen); it != memo.end())
      return it->second.length;
    Entry best{0, 0, 0};
    for (auto v : reachable) {
      for (auto f : unit_facets[v]) {
        std::vector<std::size_t> next_chosen = chosen;
        next_chosen.insert(
            std::upper_bound(next_chosen.begin(), next_chosen.end(), f), f);
        std::vector<std::size_t> next_reachable;
        for (auto u : reachable)
          if (fs[f].values[u] == 0)
            next_reachable.push_back(u);
        const std::size_t len =
            1 + (budget > 1 ? self(self, next_chosen, next_reachable,
                                   budget - 1)
                            : 0);
        if (len > best.length)
          best = {len, v, f};
        if (best.length == budget)
          break;
      }
      if (best.length == budget)
        break;
    }
    memo[chosen] = best;
    return best.length;
  };

  std::vector<std::size_t> all(pts.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = i;
  solve(solve, {}, all, cap);

  // Walk the memo to rebuild the chain.
  KpCertificate cert;
  std::vector<std::size_t> chosen;
  for (;;) {
    const auto it = memo.find(chosen);
    if (it == memo.end() || it->second.length == 0)
      break;
    const Entry e = it->second;
    cert.point_ids.push_back(e.point);
    cert.points.push_back(pts[e.point]);
    cert.facet_ids.push_back(e.facet);
    chosen.insert(std::upper_bound(chosen.begin(), chosen.end(), e.facet),
                  e.facet);
  }
  cert.k = cert.facet_ids.size();
  return cert;
}

inline KpCertificate k_number(const Polytope &p) {
  return k_number(Geometry(p));
}

namespace detail {

/// Drops coordinates that are constant over all vertices. The projection is
/// a lattice isomorphism from the affine hull onto its image.
inline Polytope drop_constant_coordinates(const std::vector<Point> &verts) {
  const std::size_t d = verts.front().size();
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < d; ++j)
    if (std::any_of(verts.begin(), verts.end(),
                    [&](const Point &v) { return v[j] != verts.front()[j]; }))
      keep.push_back(j);
  std::vector<Point> out;
  for (const auto &v : verts) {
    Point w;
    for (auto j : keep)
      w.push_back(v[j]);
    out.push_back(std::move(w));
  }
  return Polytope::from_vertices(keep.size(), std::move(out));
}

} // namespace detail

/// A facet containing every lattice point but one, and that point.
struct PeelableApex {
  std::size_t facet_id;
  std::size_t apex_id; // into Geometry::lattice_points()
};

inline std::optional<PeelableApex> find_peelable_apex(const Geometry &g) {
  if (g.dim() == 0)
    return std::nullopt;
  for (const auto &f : g.facets()) {
    std::optional<std::size_t> off;
    std::size_t count = 0;
    for (std::size_t v = 0; v < f.values.size(); ++v)
      if (f.values[v] != 0) {
        off = v;
        ++count;
      }
    if (count == 1)
      return PeelableApex{f.id, *off};
  }
  return std::nullopt;
}

struct PeelResult {
  Polytope core;
  std::size_t apexes = 0;
};

/// Strips apexes v_0 over bases Q with every other lattice point in Q, until
/// none is left. Each core keeps only the coordinates that vary on it.
inline PeelResult pyramid_peel(const Polytope &p) {
  PeelResult out{p, 0};
  for (;;) {
    const Geometry g(out.core);
    const auto apex = find_peelable_apex(g);
    if (!apex)
      return out;
    std::vector<Point> base;
    for (auto i : g.facets()[apex->facet_id].vertex_set)
      base.push_back(g.polytope().vertices()[i]);
    out.core = detail::drop_constant_coordinates(base);
    ++out.apexes;
  }
}

/// Finest partition of the non-constant coordinates such that the vertex set
/// is the product of its projections. Constant coordinates give point factors
/// and are left out. Factors come in order of their smallest coordinate.
inline std::vector<Polytope> product_decompose_01(const Polytope &p) {
  if (!p.is_01())
    throw ArgumentError("product_decompose_01: not a (0,1)-polytope");
  const auto &verts = p.vertices();
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < p.ambient_dim(); ++j)
    if (std::any_of(verts.begin(), verts.end(),
                    [&](const Point &v) { return v[j] != verts.front()[j]; }))
      free.push_back(j);
  if (free.empty())
    return {p};

  auto project = [&](const std::vector<std::size_t> &coords) {
    std::set<Point> s;
    for (const auto &v : verts) {
      Point w;
      for (auto j : coords)
        w.push_back(v[j]);
      s.insert(std::move(w));
    }
    return s;
  };

  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> rest = free;
  while (!rest.empty()) {
    const std::size_t whole = project(rest).size();
    std::vector<std::size_t> block = rest;
    // Smallest subset containing rest[0] that splits off as a factor.
    const std::size_t n = rest.size();
    bool found = false;
    for (std::size_t size = 1; size < n && !found; ++size) {
      detail::for_each_combination(
          n - 1, size - 1, [&](std::span<const std::size_t> pick) {
            std::vector<std::size_t> t{rest[0]}, u;
            std::vector<bool> in(n, false);
            in[0] = true;
            for (auto i : pick)
              in[i + 1] = true;
            for (std::size_t i = 1; i < n; ++i)
              (in[i] ? t : u).push_back(rest[i]);
            if (project(t).size() * project(u).size() == whole) {
              block = std::move(t);
              found = true;
              return false;
            }
            return true;
          });
    }
    blocks.push_back(block);
    std::vector<std::size_t> remaining;
    for (auto j : rest)
      if (!std::binary_search(block.begin(), block.end(), j))
        remaining.push_back(j);
    rest = std::move(remaining);
  }

  std::vector<Polytope> factors;
  for (const auto &b : blocks) {
    const auto s = project(b);
    factors.push_back(
        Polytope::from_vertices(b.size(), std::vector<Point>(s.begin(), s.end())));
  }
  return factors;
}

enum class Main2Tag { Segre, NotApplicable };

struct Main2Classification {
  Main2Tag tag = Main2Tag::NotApplicable;
  /// Dimensions of the two simplices, a <= b.
  std::size_t a = 0, b = 0;
  /// Polynomial variables adjoined by peeled apexes.
  std::size_t m = 0;

  friend bool operator==(const Main2Classification &,
                         const Main2Classification &) = default;
};

/// For a (0,1)-polytope with dim + 2 facets, exhibits k[P] as a Segre product
/// of polynomial rings in a+1 and b+1 variables, extended by m variables.
/// Throws InvariantViolation when that structure cannot be found or when the
/// polytope is not normal with Cl = Z.
inline Main2Classification classify_main2(const Polytope &p) {
  if (!p.is_01())
    throw ArgumentError("classify_main2: not a (0,1)-polytope");
  const Geometry g(p);
  if (g.dim() == 0 || g.facets().size() != g.dim() + 2)
    return {};

  const PeelResult peeled = pyramid_peel(p);
  const Geometry core(peeled.core);
  if (!is_simple(core))
    throw InvariantViolation("dim+2 facets but peeled core is not simple");
  const auto factors = product_decompose_01(peeled.core);
  if (factors.size() != 2)
    throw InvariantViolation("dim+2 facets but core splits into " +
                             std::to_string(factors.size()) + " factors");
  std::size_t dims[2];
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t fd = dim(factors[i]);
    if (factors[i].num_vertices() != fd + 1)
      throw InvariantViolation("product factor is not a simplex");
    dims[i] = fd;
  }

  const auto cl = class_group(g);
  if (cl.free_rank != 1 || !cl.torsionfree())
    throw InvariantViolation("dim+2 facets but Cl is " + cl.to_string());
  if (!is_normal(g))
    throw InvariantViolation("dim+2 facets but polytope is not normal");

  Main2Classification out;
  out.tag = Main2Tag::Segre;
  out.a = std::min(dims[0], dims[1]);
  out.b = std::max(dims[0], dims[1]);
  out.m = peeled.apexes;
  return out;
}

} // namespace polyclass
