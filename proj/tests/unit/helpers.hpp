#pragma once

#include <random>
#include <vector>

#include "catalog.hpp"
#include "ring.hpp"

namespace testing_helpers {

using namespace ringprob;

inline ProductTable table_of(std::size_t k,
                             std::initializer_list<std::tuple<std::size_t, std::size_t, Coords>> entries) {
  ProductTable t(k, std::vector<Coords>(k, Coords(k, 0)));
  for (const auto& [i, j, c] : entries) t[i][j] = c;
  return t;
}

// Small rings of several shapes, flavors and families.
inline std::vector<FiniteRing> sample_rings() {
  std::vector<FiniteRing> out;
  for (const char* s : {"Z:4", "Z:6", "Z:12", "zero:8", "T2:2", "T2:3", "M2:2", "M2:3",
                        "sum(T2:2,Z:2)", "sum(Z:2,Z:3)"})
    out.push_back(build_family(s));
  // e1 e1 = e1, e2 e1 = e2 on Z_2 + Z_2.
  out.push_back(FiniteRing::make(GroupShape({2, 2}),
                                 table_of(2, {{0, 0, {1, 0}}, {1, 0, {0, 1}}}),
                                 Flavor::associative, "left-unit"));
  out.push_back(associated_lie_ring(build_family("M2:2")));
  out.push_back(opposite_ring(build_family("T2:3")));
  return out;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline ElementId random_element(const FiniteRing& r) {
  return static_cast<ElementId>(rng()() % r.cardinality());
}

}  // namespace testing_helpers
