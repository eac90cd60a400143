#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polyclass/errors.hpp"
#include "polyclass/linalg.hpp"
#include "polyclass/polytope.hpp"

namespace polyclass {

/// M_P: rows are facets, columns are lattice points, entries d_F(v).
struct ClassMatrix {
  IntMatrix matrix;
  std::vector<std::size_t> row_labels; // facet ids
  LatticePointSet col_labels;
};

/// Z^free_rank + Z/s_1 + ... for the nontrivial s_i.
struct ClassGroupPresentation {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;      // factors > 1, in divisibility order
  std::vector<BigInt> full_factors; // s_1, ..., s_r

  bool torsionfree() const noexcept { return torsion.empty(); }

  /// "0", "Z", "Z^2", "Z/2Z", "Z + Z/2Z + Z/4Z", ...
  std::string to_string() const {
    std::string s;
    if (free_rank == 1)
      s = "Z";
    else if (free_rank > 1)
      s = "Z^" + std::to_string(free_rank);
    for (const auto &f : torsion)
      s += (s.empty() ? "" : " + ") + ("Z/" + f.str() + "Z");
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const ClassGroupPresentation &,
                         const ClassGroupPresentation &) = default;
};

inline ClassMatrix build_matrix(const Geometry &g) {
  const auto fs = facets(g);
  const auto &pts = g.lattice_points();
  ClassMatrix cm{IntMatrix(fs.size(), pts.size()), {}, pts};
  for (std::size_t i = 0; i < fs.size(); ++i) {
    cm.row_labels.push_back(fs[i].id);
    for (std::size_t j = 0; j < pts.size(); ++j)
      cm.matrix(i, j) = fs[i].values[j];
  }
  return cm;
}

inline ClassMatrix build_matrix(const Polytope &p) {
  return build_matrix(Geometry(p));
}

/// Cokernel of M_P read off the Smith form. Normality is not checked here;
/// for a non-normal polytope the result is only the formal cokernel.
inline ClassGroupPresentation class_group(const Geometry &g) {
  const ClassMatrix cm = build_matrix(g);
  const SnfResult s = snf(cm.matrix);
  if (s.rank != g.dim() + 1)
    throw InvariantViolation("rank of M_P is " + std::to_string(s.rank) +
                             ", expected dim + 1 = " +
                             std::to_string(g.dim() + 1));
  ClassGroupPresentation out;
  out.free_rank = cm.matrix.rows() - s.rank;
  out.full_factors = s.invariant_factors;
  for (const auto &f : s.invariant_factors)
    if (f > 1)
      out.torsion.push_back(f);
  return out;
}

inline ClassGroupPresentation class_group(const Polytope &p) {
  return class_group(Geometry(p));
}

inline bool is_torsionfree(const Geometry &g) {
  return class_group(g).torsionfree();
}

inline bool is_torsionfree(const Polytope &p) {
  return is_torsionfree(Geometry(p));
}

} // namespace polyclass
