#include "neumann.hpp"

namespace ringprob {

const char* to_string(Objective objective) noexcept {
  switch (objective) {
    case Objective::max: return "max";
    case Objective::sum: return "sum";
    case Objective::lex: return "lex";
  }
  return "unknown";
}

ObjectiveValue objective_value(Objective objective, std::uint64_t index, std::uint64_t span_size) {
  switch (objective) {
    case Objective::max: return {std::max(index, span_size), 0};
    case Objective::sum: return {index + span_size, 0};
    case Objective::lex: return {index, span_size};
  }
  return {};
}

IdealKind feasible_kind(const FiniteRing& ring, Mode mode) {
  if (mode == Mode::cp) return IdealKind::lie;
  if (ring.flavor() != Flavor::associative) throw FlavorMismatch("zp mode");
  return IdealKind::two_sided;
}

bool is_feasible(const FiniteRing& ring, const AdditiveSubgroup& d, Mode mode) {
  return is_ideal(ring, d, feasible_kind(ring, mode)).ok;
}

std::uint64_t square_span_size(const FiniteRing& ring, const AdditiveSubgroup& d, Mode mode) {
  const ElementSet s = d.as_set();
  const ElementSet sq = mode == Mode::cp ? bracket_set(ring, s, s) : product_set(ring, s, s);
  return additive_span(ring, sq).order();
}

OracleResult brute_force_optimal_ideal(const FiniteRing& ring, Mode mode, Objective objective) {
  require_enumerable(ring, "brute_force_optimal_ideal", kSubgroupEnumerationCap);
  const IdealKind kind = feasible_kind(ring, mode);
  const auto subgroups = enumerate_subgroups(ring);
  OracleResult out;
  out.subgroups = subgroups.size();
  bool have = false;
  // Subgroups arrive sorted by member sequence, so strict improvement keeps
  // the least sequence among ties.
  for (const auto& s : subgroups) {
    if (!is_ideal(ring, s, kind).ok) continue;
    ++out.feasible;
    const std::uint64_t idx = index(ring, s);
    const std::uint64_t span = square_span_size(ring, s, mode);
    const ObjectiveValue v = objective_value(objective, idx, span);
    if (!have || v < out.value) {
      have = true;
      out.best = s;
      out.index = idx;
      out.span_size = span;
      out.value = v;
    }
  }
  return out;
}

}  // namespace ringprob
