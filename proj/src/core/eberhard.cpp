#include <algorithm>

#include "neumann.hpp"

namespace ringprob {

EberhardResult eberhard_generation(const GroupShape& group, const ElementSet& x) {
  const std::uint64_t order = group.cardinality();
  if (order > kEnumerationCap) throw CapExceeded("eberhard_generation", order, kEnumerationCap);
  if (!x.contains(0)) throw Error(ErrorCode::symmetry_violated, "set does not contain 0");
  for (ElementId v : x) {
    if (v >= order) throw Error(ErrorCode::invalid_argument, "element id out of range");
    if (!x.contains(group.neg(v)))
      throw Error(ErrorCode::symmetry_violated,
                  "set is not symmetric: contains " + std::to_string(v) + " but not its negative");
  }

  EberhardResult out;
  out.group_order = order;
  out.set_size = x.size();
  out.r = 1;
  while ((out.r + 1) * out.set_size <= order) ++out.r;
  out.fold = 3 * out.r;

  // Span via the zero ring on the same group, independent of the sumsets.
  const std::size_t k = group.rank();
  const FiniteRing carrier = FiniteRing::make(
      group, ProductTable(k, std::vector<Coords>(k, Coords(k, 0))), Flavor::associative);
  const AdditiveSubgroup span = additive_span(carrier, x);
  out.span_order = span.order();

  std::vector<char> current(order, 0);
  std::vector<ElementId> members(x.begin(), x.end());
  for (ElementId v : members) current[v] = 1;
  out.sumset_sizes.push_back(members.size());
  std::uint64_t t = 1;
  if (members.size() == span.order()) out.stable_at = 1;
  while (t < out.fold) {
    std::vector<char> next(order, 0);
    std::vector<ElementId> next_members;
    for (ElementId m : members)
      for (ElementId v : x) {
        const ElementId s = group.add(m, v);
        if (!next[s]) {
          next[s] = 1;
          next_members.push_back(s);
        }
      }
    ++t;
    const bool grew = next_members.size() != members.size();
    current.swap(next);
    members.swap(next_members);
    out.sumset_sizes.push_back(members.size());
    if (out.stable_at == 0 && members.size() == span.order()) out.stable_at = t;
    // 0 is in X, so sumsets only grow; a repeat size means a fixed point.
    if (!grew) break;
  }
  out.verified = members.size() == span.order() &&
                 std::all_of(members.begin(), members.end(),
                             [&](ElementId m) { return span.contains(m); });
  return out;
}

}  // namespace ringprob
