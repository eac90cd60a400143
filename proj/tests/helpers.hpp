#pragma once

#include <initializer_list>
#include <vector>

#include "polyclass/polytope.hpp"

namespace testing_util {

inline polyclass::Polytope poly(std::size_t d,
                                std::vector<std::vector<long>> pts) {
  std::vector<polyclass::Point> out;
  for (const auto &p : pts)
    out.emplace_back(p.begin(), p.end());
  return polyclass::Polytope(d, std::move(out));
}

inline std::vector<polyclass::BigInt> ints(std::initializer_list<long> xs) {
  return {xs.begin(), xs.end()};
}

inline const polyclass::Polytope &square_pyramid() {
  static const auto p =
      poly(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  return p;
}

} // namespace testing_util
