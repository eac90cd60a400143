#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "polyclass/class_group.hpp"
#include "polyclass/constructors.hpp"
#include "polyclass/polytope.hpp"
#include "polyclass/structure.hpp"

namespace polyclass {

struct NamedPolytope {
  std::string name;
  Polytope polytope;
};

/// Every full-dimensional (0,1)-polytope in R^n, one per vertex subset of the
/// n-cube, in increasing order of the subset bitmask.
inline std::vector<NamedPolytope> exhaustive_01_family(std::size_t n) {
  if (n > 4)
    throw ArgumentError("exhaustive family limited to n <= 4");
  const std::size_t corners = std::size_t{1} << n;
  std::vector<Point> cube_pts;
  for (std::size_t c = 0; c < corners; ++c) {
    Point p(n);
    for (std::size_t i = 0; i < n; ++i)
      p[i] = (c >> i) & 1;
    cube_pts.push_back(std::move(p));
  }
  std::vector<NamedPolytope> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << corners); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) < n + 1)
      continue;
    std::vector<Point> pts;
    for (std::size_t c = 0; c < corners; ++c)
      if ((mask >> c) & 1)
        pts.push_back(cube_pts[c]);
    if (detail::affine_hull(pts, n).dim != n)
      continue;
    out.push_back({"cube" + std::to_string(n) + "-subset-" +
                       std::to_string(mask),
                   Polytope::from_vertices(n, std::move(pts))});
  }
  return out;
}

/// Random (0,1)-polytopes in R^n of dimension >= 1: each cube vertex is kept
/// with probability 1/2. Uses raw mt19937_64 output so a seed gives the same
/// family on every platform.
inline std::vector<NamedPolytope> random_01_family(std::size_t n,
                                                   std::size_t samples,
                                                   std::uint64_t seed) {
  if (n == 0 || n > 12)
    throw ArgumentError("random family needs 1 <= n <= 12");
  std::mt19937_64 rng(seed);
  const std::size_t corners = std::size_t{1} << n;
  std::vector<NamedPolytope> out;
  while (out.size() < samples) {
    std::vector<Point> pts;
    std::uint64_t bits = 0;
    for (std::size_t c = 0; c < corners; ++c) {
      if (c % 64 == 0)
        bits = rng();
      if ((bits >> (c % 64)) & 1) {
        Point p(n);
        for (std::size_t i = 0; i < n; ++i)
          p[i] = (c >> i) & 1;
        pts.push_back(std::move(p));
      }
    }
    if (pts.size() < 2)
      continue;
    out.push_back({"rand" + std::to_string(n) + "-seed" +
                       std::to_string(seed) + "-" +
                       std::to_string(out.size()),
                   Polytope::from_vertices(n, std::move(pts))});
  }
  return out;
}

inline std::vector<NamedPolytope> fixture_family() {
  std::vector<NamedPolytope> out;
  for (auto name : fixture_names())
    out.push_back({std::string(name), fixture(name)});
  return out;
}

/// The implications checked on every polytope.
enum class Check : std::size_t {
  KpBound,            // certificate valid and k_P <= dim + 1
  LeadingFactorsUnit, // s_1 = ... = s_{k_P} = 1
  FullChainTorsionfree, // k_P = dim + 1 => torsionfree
  CompressedImpliesNormalTorsionfree,
  FacetsDimPlus2IffRankOne, // (0,1) only: #facets = dim+2 <=> normal, Cl = Z
  FewFacetsNormalTorsionfree, // (0,1) only: #facets <= dim+2 => normal, tf
  Count
};

inline const char *check_name(Check c) {
  switch (c) {
  case Check::KpBound:
    return "k_P certificate valid, k_P <= dim+1";
  case Check::LeadingFactorsUnit:
    return "s_1 = ... = s_{k_P} = 1";
  case Check::FullChainTorsionfree:
    return "k_P = dim+1 => torsionfree";
  case Check::CompressedImpliesNormalTorsionfree:
    return "compressed => normal and torsionfree";
  case Check::FacetsDimPlus2IffRankOne:
    return "(0,1): #facets = dim+2 <=> normal and Cl = Z";
  case Check::FewFacetsNormalTorsionfree:
    return "(0,1): #facets <= dim+2 => normal and torsionfree";
  case Check::Count:
    break;
  }
  return "?";
}

struct CheckTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0; // hypothesis not applicable (e.g. not (0,1))
};

struct Counterexample {
  std::string polytope;
  std::string check;
  std::string detail;
};

struct VerificationReport {
  std::size_t polytopes = 0;
  std::vector<CheckTally> tallies =
      std::vector<CheckTally>(static_cast<std::size_t>(Check::Count));
  std::optional<Counterexample> first_failure;

  bool ok() const {
    return std::all_of(tallies.begin(), tallies.end(),
                       [](const CheckTally &t) { return t.failed == 0; });
  }
};

namespace detail {

struct CheckOutcome {
  // nullopt: not applicable; otherwise pass/fail.
  std::optional<bool> result[static_cast<std::size_t>(Check::Count)];
  std::string detail;
  Check failed_check = Check::Count;
};

inline CheckOutcome run_checks(const Polytope &p) {
  CheckOutcome out;
  auto set = [&](Check c, bool ok, const std::string &why) {
    out.result[static_cast<std::size_t>(c)] = ok;
    if (!ok && out.failed_check == Check::Count) {
      out.failed_check = c;
      out.detail = why;
    }
  };
  try {
    const Geometry g(p);
    if (g.dim() == 0)
      return out;
    const auto cl = class_group(g);
    const auto cert = k_number(g);
    const bool normal = is_normal(g);
    const bool compressed = is_compressed(g);
    const std::size_t n_facets = g.facets().size();
    const std::size_t dim = g.dim();

    set(Check::KpBound, certificate_valid(g, cert) && cert.k <= dim + 1,
        "k_P = " + std::to_string(cert.k));
    bool lead = true;
    for (std::size_t i = 0; i < cert.k; ++i)
      lead = lead && cl.full_factors.at(i) == 1;
    set(Check::LeadingFactorsUnit, lead, "Cl = " + cl.to_string());
    if (cert.k == dim + 1)
      set(Check::FullChainTorsionfree, cl.torsionfree(),
          "Cl = " + cl.to_string());
    if (compressed)
      set(Check::CompressedImpliesNormalTorsionfree,
          normal && cl.torsionfree(),
          "normal = " + std::to_string(normal) + ", Cl = " + cl.to_string());
    if (p.is_01()) {
      const bool rank_one = normal && cl.free_rank == 1 && cl.torsionfree();
      bool iff = (n_facets == dim + 2) == rank_one;
      std::string why = "#facets = " + std::to_string(n_facets) +
                        ", dim = " + std::to_string(dim) +
                        ", normal = " + std::to_string(normal) +
                        ", Cl = " + cl.to_string();
      if (n_facets == dim + 2) {
        try {
          iff = iff && classify_main2(p).tag == Main2Tag::Segre;
        } catch (const InvariantViolation &e) {
          iff = false;
          why += std::string("; ") + e.what();
        }
      }
      set(Check::FacetsDimPlus2IffRankOne, iff, why);
      if (n_facets <= dim + 2)
        set(Check::FewFacetsNormalTorsionfree, normal && cl.torsionfree(),
            why);
    }
  } catch (const InvariantViolation &e) {
    set(Check::KpBound, false, std::string("invariant violation: ") + e.what());
  }
  return out;
}

} // namespace detail

/// Runs every check on every polytope. Work is spread over `threads` workers;
/// results are merged in family order, so the report does not depend on
/// scheduling.
inline VerificationReport verify_theorems(const std::vector<NamedPolytope> &family,
                                          std::size_t threads = 1) {
  std::vector<detail::CheckOutcome> outcomes(family.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < family.size(); i = next++)
      outcomes[i] = detail::run_checks(family[i].polytope);
  };
  threads = std::max<std::size_t>(1, std::min(threads, family.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();

  VerificationReport report;
  report.polytopes = family.size();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto &o = outcomes[i];
    for (std::size_t c = 0; c < report.tallies.size(); ++c) {
      auto &t = report.tallies[c];
      if (!o.result[c])
        ++t.skipped;
      else if (*o.result[c])
        ++t.passed;
      else
        ++t.failed;
    }
    if (o.failed_check != Check::Count && !report.first_failure)
      report.first_failure =
          Counterexample{family[i].name, check_name(o.failed_check), o.detail};
  }
  return report;
}

} // namespace polyclass
