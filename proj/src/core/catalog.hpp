#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ring.hpp"

namespace ringprob {

// ---------------------------------------------------------------------------
// Parametric families.
//
//   Z:n        cyclic ring Z_n (1 <= n <= 4096)
//   zero:n     zero ring on the elementary abelian decomposition of n
//   M2:p       full 2x2 matrices over Z_p, basis E11, E12, E21, E22 (p prime <= 31)
//   T2:p       upper triangular 2x2 matrices over Z_p, basis E11, E12, E22
//   sum(A,B)   direct sum of two specs

enum class Family { cyclic, zero, matrix, triangular, direct_sum };

struct FamilySpec {
  Family family = Family::cyclic;
  std::uint32_t parameter = 0;
  std::vector<FamilySpec> parts;  // direct_sum only

  std::string to_string() const;
};

// Throws Error(invalid_argument) on syntax or range errors.
FamilySpec parse_family_spec(const std::string& text);
// Whether a parameter is admissible for a family (p prime for matrix rings).
bool family_parameter_ok(Family family, std::uint32_t parameter);
Family parse_family_name(const std::string& name);

FiniteRing build_family(const FamilySpec& spec);
inline FiniteRing build_family(const std::string& spec) { return build_family(parse_family_spec(spec)); }

// ---------------------------------------------------------------------------
// User-ordered input: sorts the cyclic orders and permutes the table to
// match. permutation[a] is the user axis now at position a.

struct NormalizedRing {
  FiniteRing ring;
  std::vector<std::size_t> permutation;
};

NormalizedRing normalize_ring(const std::vector<std::uint32_t>& orders, const ProductTable& table,
                              Flavor flavor, std::string name);

// ---------------------------------------------------------------------------
// Exhaustive census of associative structure tables on one additive group.
// Counts validated tables, not isomorphism classes.

inline constexpr std::uint64_t kCensusCandidateCap = std::uint64_t{1} << 30;

struct CensusEntry {
  // sum over entries t = i*k + j of id(e_i e_j) * |R|^t
  std::uint64_t candidate_index = 0;
  FiniteRing ring;
};

struct Census {
  GroupShape shape;
  std::uint64_t candidate_count = 0;
  std::vector<CensusEntry> rings;  // ascending candidate index
};

Census enumerate_shape(const std::vector<std::uint32_t>& orders, unsigned jobs = 1,
                       std::uint64_t max_candidates = kCensusCandidateCap);

// Shape [4] or [2, 2]; CapExceeded otherwise.
Census enumerate_order4(const std::vector<std::uint32_t>& orders, unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Ring files (JSON).

struct LoadedRing {
  FiniteRing ring;
  std::vector<std::size_t> permutation;
};

LoadedRing ring_from_json(const std::string& text);
LoadedRing load_ring(const std::string& path);
std::string ring_to_json(const FiniteRing& ring);
void save_ring(const FiniteRing& ring, const std::string& path);

}  // namespace ringprob
