#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyclass/class_group.hpp"
#include "polyclass/polytope.hpp"
#include "polyclass/structure.hpp"
#include "polyclass/verify.hpp"

namespace polyclass {

struct AnalysisReport {
  std::string name;
  std::size_t ambient_dim = 0;
  std::size_t dim = 0;
  bool trivial = false; // a single point: no facets, nothing else computed
  std::vector<Point> vertices;
  LatticePointSet lattice_points;
  std::vector<FacetData> facets;
  IntMatrix class_matrix;
  ClassGroupPresentation class_group;
  bool compressed = false;
  bool normal = false;
  bool simple = false;
  KpCertificate k_p;
  std::optional<PeelResult> peel;
  std::optional<Main2Classification> main2; // (0,1)-polytopes only
  std::vector<std::string> warnings;
};

/// Runs every analysis on p. InvariantViolation propagates to the caller.
inline AnalysisReport analyze(const std::string &name, const Polytope &p) {
  AnalysisReport r;
  r.name = name;
  r.ambient_dim = p.ambient_dim();
  r.vertices = p.vertices();
  const Geometry g(p);
  r.dim = g.dim();
  r.lattice_points = g.lattice_points();
  if (g.dim() == 0) {
    r.trivial = true;
    r.simple = true;
    r.warnings.push_back("trivial polytope: a single point has no facets");
    return r;
  }
  r.facets = g.facets();
  r.class_matrix = build_matrix(g).matrix;
  r.class_group = class_group(g);
  r.compressed = is_compressed(g);
  r.normal = is_normal(g);
  r.simple = is_simple(g);
  r.k_p = k_number(g);
  r.peel = pyramid_peel(p);
  if (p.is_01())
    r.main2 = classify_main2(p);
  if (!r.normal)
    r.warnings.push_back(
        "presentation formal: polytope not normal, so the cokernel of M_P is "
        "not the class group");
  return r;
}

namespace detail {

inline nlohmann::ordered_json big_to_json(const BigInt &x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline nlohmann::ordered_json point_to_json(const Point &p) {
  auto a = nlohmann::ordered_json::array();
  for (const auto &x : p)
    a.push_back(big_to_json(x));
  return a;
}

inline std::string rat_str(const BigRat &q) {
  return denominator(q) == 1 ? numerator(q).str()
                             : numerator(q).str() + "/" + denominator(q).str();
}

inline std::string point_str(const Point &p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i)
    s += (i ? "," : "") + p[i].str();
  return s + ")";
}

} // namespace detail

inline nlohmann::ordered_json to_json(const AnalysisReport &r) {
  using nlohmann::ordered_json;
  using detail::big_to_json;
  using detail::point_to_json;
  ordered_json j;
  j["name"] = r.name;
  j["ambient_dim"] = r.ambient_dim;
  j["dim"] = r.dim;
  j["trivial"] = r.trivial;
  j["num_vertices"] = r.vertices.size();
  j["num_lattice_points"] = r.lattice_points.size();
  auto verts = ordered_json::array();
  for (const auto &v : r.vertices)
    verts.push_back(point_to_json(v));
  j["vertices"] = verts;
  auto pts = ordered_json::array();
  for (const auto &v : r.lattice_points)
    pts.push_back(point_to_json(v));
  j["lattice_points"] = pts;
  if (r.trivial) {
    j["warnings"] = r.warnings;
    return j;
  }

  auto fs = ordered_json::array();
  for (const auto &f : r.facets) {
    ordered_json fj;
    fj["id"] = f.id;
    auto a = ordered_json::array();
    for (const auto &x : f.hyperplane.a)
      a.push_back(detail::rat_str(x));
    fj["a"] = a;
    fj["b"] = detail::rat_str(f.hyperplane.b);
    fj["vertex_set"] = f.vertex_set;
    fj["values"] = point_to_json(f.values);
    fs.push_back(fj);
  }
  j["num_facets"] = r.facets.size();
  j["facets"] = fs;
  auto rows = ordered_json::array();
  for (std::size_t i = 0; i < r.class_matrix.rows(); ++i)
    rows.push_back(point_to_json(r.class_matrix.row_vector(i)));
  j["class_matrix"] = rows;

  ordered_json cl;
  cl["t"] = r.class_group.free_rank;
  cl["factors"] = point_to_json(r.class_group.full_factors);
  cl["torsion"] = point_to_json(r.class_group.torsion);
  cl["group"] = r.class_group.to_string();
  j["class_group"] = cl;
  j["torsionfree"] = r.class_group.torsionfree();
  j["compressed"] = r.compressed;
  j["normal"] = r.normal;
  j["simple"] = r.simple;

  ordered_json kp;
  kp["k"] = r.k_p.k;
  auto kpp = ordered_json::array();
  for (const auto &v : r.k_p.points)
    kpp.push_back(point_to_json(v));
  kp["points"] = kpp;
  kp["facets"] = r.k_p.facet_ids;
  j["k_p"] = kp;

  if (r.peel) {
    ordered_json pj;
    pj["apexes"] = r.peel->apexes;
    pj["core_ambient_dim"] = r.peel->core.ambient_dim();
    auto cv = ordered_json::array();
    for (const auto &v : r.peel->core.vertices())
      cv.push_back(point_to_json(v));
    pj["core_vertices"] = cv;
    j["pyramid_peel"] = pj;
  }
  if (r.main2) {
    ordered_json mj;
    if (r.main2->tag == Main2Tag::Segre) {
      mj["tag"] = "SEGRE";
      mj["a"] = r.main2->a;
      mj["b"] = r.main2->b;
      mj["m"] = r.main2->m;
    } else {
      mj["tag"] = "NOT_APPLICABLE";
    }
    j["main2"] = mj;
  } else {
    j["main2"] = nullptr;
  }
  j["warnings"] = r.warnings;
  return j;
}

/// Human-readable report; M_P is printed when there are at most 40 lattice
/// points.
inline std::string to_text(const AnalysisReport &r) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "polytope        " << r.name << "\n"
     << "ambient dim     " << r.ambient_dim << "\n"
     << "dim             " << r.dim << "\n"
     << "vertices        " << r.vertices.size() << "\n"
     << "lattice points  " << r.lattice_points.size() << "\n";
  if (r.trivial) {
    for (const auto &w : r.warnings)
      os << "warning: " << w << "\n";
    return os.str();
  }
  os << "facets          " << r.facets.size() << "\n";
  for (const auto &f : r.facets) {
    os << "  F" << f.id << "  a=(";
    for (std::size_t i = 0; i < f.hyperplane.a.size(); ++i)
      os << (i ? "," : "") << detail::rat_str(f.hyperplane.a[i]);
    os << ") b=" << detail::rat_str(f.hyperplane.b) << "  d_F:";
    for (const auto &v : f.values)
      os << ' ' << v;
    os << "\n";
  }
  if (r.lattice_points.size() <= 40) {
    os << "M_P (columns:";
    for (const auto &p : r.lattice_points)
      os << ' ' << detail::point_str(p);
    os << ")\n";
    for (std::size_t i = 0; i < r.class_matrix.rows(); ++i) {
      os << "  [";
      for (std::size_t j = 0; j < r.class_matrix.cols(); ++j)
        os << (j ? " " : "") << r.class_matrix(i, j);
      os << "]\n";
    }
  }
  os << "invariant factors";
  for (const auto &s : r.class_group.full_factors)
    os << ' ' << s;
  os << "\n"
     << "Cl              " << r.class_group.to_string()
     << "  (t = " << r.class_group.free_rank << ")\n"
     << "torsionfree     " << yn(r.class_group.torsionfree()) << "\n"
     << "compressed      " << yn(r.compressed) << "\n"
     << "normal          " << yn(r.normal) << "\n"
     << "simple          " << yn(r.simple) << "\n"
     << "k_P             " << r.k_p.k << "\n";
  for (std::size_t i = 0; i < r.k_p.k; ++i)
    os << "  " << i + 1 << ": " << detail::point_str(r.k_p.points[i])
       << " on F" << r.k_p.facet_ids[i] << "\n";
  if (r.peel) {
    os << "pyramid apexes  " << r.peel->apexes << "  core:";
    for (const auto &v : r.peel->core.vertices())
      os << ' ' << detail::point_str(v);
    os << "\n";
  }
  if (r.main2) {
    if (r.main2->tag == Main2Tag::Segre)
      os << "classification  Segre product of simplices of dims " << r.main2->a
         << " and " << r.main2->b << ", " << r.main2->m
         << " extra variable(s)\n";
    else
      os << "classification  not applicable (#facets != dim+2)\n";
  }
  for (const auto &w : r.warnings)
    os << "warning: " << w << "\n";
  return os.str();
}

inline nlohmann::ordered_json to_json(const VerificationReport &v) {
  nlohmann::ordered_json j;
  j["polytopes"] = v.polytopes;
  auto checks = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < v.tallies.size(); ++c) {
    nlohmann::ordered_json t;
    t["check"] = check_name(static_cast<Check>(c));
    t["passed"] = v.tallies[c].passed;
    t["failed"] = v.tallies[c].failed;
    t["skipped"] = v.tallies[c].skipped;
    checks.push_back(t);
  }
  j["checks"] = checks;
  if (v.first_failure) {
    j["first_failure"] = {{"polytope", v.first_failure->polytope},
                          {"check", v.first_failure->check},
                          {"detail", v.first_failure->detail}};
  } else {
    j["first_failure"] = nullptr;
  }
  j["ok"] = v.ok();
  return j;
}

inline std::string to_text(const VerificationReport &v) {
  std::ostringstream os;
  os << "polytopes checked: " << v.polytopes << "\n";
  os << "  pass   fail   n/a  check\n";
  for (std::size_t c = 0; c < v.tallies.size(); ++c) {
    const auto &t = v.tallies[c];
    char line[64];
    std::snprintf(line, sizeof line, "%6zu %6zu %5zu  ", t.passed, t.failed,
                  t.skipped);
    os << line << check_name(static_cast<Check>(c)) << "\n";
  }
  if (v.first_failure)
    os << "first counterexample: " << v.first_failure->polytope << " ("
       << v.first_failure->check << "): " << v.first_failure->detail << "\n";
  os << (v.ok() ? "ALL CHECKS PASSED\n" : "FAILURES FOUND\n");
  return os.str();
}

} // namespace polyclass
