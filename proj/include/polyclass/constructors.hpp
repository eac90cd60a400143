#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyclass/errors.hpp"
#include "polyclass/polytope.hpp"

namespace polyclass {

/// Finite poset on {0..n-1}; less_eq(i, j) means i <= j.
class Poset {
public:
  /// Builds the reflexive-transitive closure of `relations` (pairs i <= j).
  /// Throws if the closure is not antisymmetric.
  Poset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>
                           &relations)
      : n_(n), le_(n * n, false) {
    for (std::size_t i = 0; i < n; ++i)
      le_[i * n + i] = true;
    for (auto [a, b] : relations) {
      if (a >= n || b >= n)
        throw ArgumentError("poset relation refers to a missing element");
      le_[a * n + b] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (le_[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (le_[k * n + j])
              le_[i * n + j] = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (le_[i * n + j] && le_[j * n + i])
          throw ArgumentError("poset relations contain a cycle");
  }

  std::size_t size() const noexcept { return n_; }
  bool less_eq(std::size_t i, std::size_t j) const { return le_[i * n_ + j]; }

  /// True when `relations` was already transitively closed.
  static bool is_closed(std::size_t n,
                        const std::vector<std::pair<std::size_t, std::size_t>>
                            &relations) {
    const Poset p(n, relations);
    std::size_t strict = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        strict += i != j && p.less_eq(i, j);
    std::vector<std::pair<std::size_t, std::size_t>> uniq;
    for (auto r : relations)
      if (r.first != r.second)
        uniq.push_back(r);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    return uniq.size() == strict;
  }

private:
  std::size_t n_;
  std::vector<bool> le_;
};

/// Simple undirected graph on {0..n-1}.
class Graph {
public:
  Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges)
      : n_(n) {
    for (auto [a, b] : edges) {
      if (a >= n || b >= n)
        throw ArgumentError("edge refers to a missing vertex");
      if (a == b)
        throw ArgumentError("graph has a loop");
      edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw ArgumentError("graph has a repeated edge");
  }

  std::size_t size() const noexcept { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>> &edges() const {
    return edges_;
  }
  bool adjacent(std::size_t a, std::size_t b) const {
    return std::binary_search(edges_.begin(), edges_.end(),
                              std::pair{std::min(a, b), std::max(a, b)});
  }

private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// conv{0, e_1, ..., e_n} in R^n.
inline Polytope simplex(std::size_t n) {
  std::vector<Point> verts;
  verts.emplace_back(n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    Point e(n, BigInt(0));
    e[i] = 1;
    verts.push_back(std::move(e));
  }
  return Polytope::from_vertices(n, std::move(verts));
}

inline Polytope cube(std::size_t n) {
  std::vector<Point> verts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Point p(n);
    for (std::size_t i = 0; i < n; ++i)
      p[i] = (mask >> i) & 1;
    verts.push_back(std::move(p));
  }
  return Polytope::from_vertices(n, std::move(verts));
}

inline Polytope product(const Polytope &p, const Polytope &q) {
  std::vector<Point> verts;
  for (const auto &u : p.vertices())
    for (const auto &v : q.vertices()) {
      Point w = u;
      w.insert(w.end(), v.begin(), v.end());
      verts.push_back(std::move(w));
    }
  return Polytope::from_vertices(p.ambient_dim() + q.ambient_dim(),
                                 std::move(verts));
}

/// q at height 0 in one extra coordinate, apex (0, ..., 0, lift).
inline Polytope pyramid(const Polytope &q, std::size_t lift = 1) {
  if (lift == 0)
    throw ArgumentError("pyramid: lift must be positive");
  const std::size_t d = q.ambient_dim() + 1;
  std::vector<Point> verts;
  for (const auto &v : q.vertices()) {
    Point w = v;
    w.push_back(0);
    verts.push_back(std::move(w));
  }
  Point apex(d, BigInt(0));
  apex.back() = lift;
  verts.push_back(std::move(apex));
  return Polytope::from_vertices(d, std::move(verts));
}

/// Vertices are the indicator vectors of the filters (up-sets) of the poset,
/// so the polytope is {0 <= x <= 1, x_p <= x_q whenever p <= q}.
inline Polytope order_polytope(const Poset &po) {
  const std::size_t n = po.size();
  if (n >= 8 * sizeof(std::size_t))
    throw ArgumentError("order_polytope: poset too large");
  std::vector<Point> verts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    bool filter = true;
    for (std::size_t i = 0; i < n && filter; ++i) {
      if (!((mask >> i) & 1))
        continue;
      for (std::size_t j = 0; j < n; ++j)
        if (po.less_eq(i, j) && !((mask >> j) & 1)) {
          filter = false;
          break;
        }
    }
    if (!filter)
      continue;
    Point p(n);
    for (std::size_t i = 0; i < n; ++i)
      p[i] = (mask >> i) & 1;
    verts.push_back(std::move(p));
  }
  return Polytope::from_vertices(n, std::move(verts));
}

/// Indicator vectors of the stable sets, empty set included.
inline Polytope stable_set_polytope(const Graph &g) {
  const std::size_t n = g.size();
  std::vector<Point> verts;
  std::vector<bool> chosen(n, false);
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) {
      Point p(n);
      for (std::size_t j = 0; j < n; ++j)
        p[j] = chosen[j] ? 1 : 0;
      verts.push_back(std::move(p));
      return;
    }
    extend(i + 1);
    for (std::size_t j = 0; j < i; ++j)
      if (chosen[j] && g.adjacent(i, j))
        return;
    chosen[i] = true;
    extend(i + 1);
    chosen[i] = false;
  };
  extend(0);
  return Polytope::from_vertices(n, std::move(verts));
}

/// conv{e_i + e_j : {i, j} an edge}.
inline Polytope edge_polytope(const Graph &g) {
  if (g.edges().empty())
    throw ArgumentError("edge_polytope: graph has no edges");
  std::vector<Point> verts;
  for (auto [a, b] : g.edges()) {
    Point p(g.size(), BigInt(0));
    p[a] = 1;
    p[b] = 1;
    verts.push_back(std::move(p));
  }
  return Polytope::from_vertices(g.size(), std::move(verts));
}

inline const std::vector<std::string_view> &fixture_names() {
  static const std::vector<std::string_view> names{"P1", "P2", "P3", "EX38"};
  return names;
}

/// Named reference polytopes: P1 (hexagon), P2 (diamond around (1,1)), P3
/// (quadrilateral with 11 lattice points) and EX38 (3-dim, 6 facets).
inline Polytope fixture(std::string_view name) {
  auto pts = [](std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<Point> out;
    for (auto r : rows) {
      Point p;
      for (int x : r)
        p.emplace_back(x);
      out.push_back(std::move(p));
    }
    return out;
  };
  if (name == "P1")
    return Polytope(2, pts({{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}, {2, 2}}));
  if (name == "P2")
    return Polytope(2, pts({{1, 0}, {0, 1}, {2, 1}, {1, 2}}));
  if (name == "P3")
    return Polytope(2, pts({{0, 0}, {1, 4}, {2, 5}, {3, 1}}));
  if (name == "EX38")
    return Polytope(
        3, pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
  throw ArgumentError("unknown fixture '" + std::string(name) + "'");
}

} // namespace polyclass
