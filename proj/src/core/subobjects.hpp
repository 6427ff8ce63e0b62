#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace ringprob {

// Sorted, duplicate-free set of element ids with no closure requirement.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<ElementId> ids);

  const std::vector<ElementId>& ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(ElementId id) const;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  bool operator==(const ElementSet&) const = default;

 private:
  std::vector<ElementId> ids_;
};

// A subgroup of (R, +): sorted members, a membership mask over the whole
// ring, and the generators it was built from.
class AdditiveSubgroup {
 public:
  const std::vector<ElementId>& members() const noexcept { return members_; }
  const std::vector<ElementId>& generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(ElementId id) const { return id < mask_.size() && mask_[id]; }
  ElementSet as_set() const { return ElementSet(members_); }

  // Same members, regardless of recorded generators.
  bool same_members(const AdditiveSubgroup& other) const { return members_ == other.members_; }
  bool is_subset_of(const AdditiveSubgroup& other) const;

 private:
  friend AdditiveSubgroup additive_span(const FiniteRing&, std::span<const ElementId>);
  friend AdditiveSubgroup subgroup_from_mask(const FiniteRing&, std::vector<char>,
                                             std::vector<ElementId>);
  std::vector<ElementId> members_;
  std::vector<ElementId> generators_;
  std::vector<char> mask_;
};

AdditiveSubgroup additive_span(const FiniteRing& ring, std::span<const ElementId> seed);
inline AdditiveSubgroup additive_span(const FiniteRing& ring, const ElementSet& seed) {
  return additive_span(ring, std::span<const ElementId>(seed.ids()));
}
AdditiveSubgroup whole_ring(const FiniteRing& ring);
AdditiveSubgroup zero_subgroup(const FiniteRing& ring);
// Builds from an already-closed membership mask; closure is not re-checked.
AdditiveSubgroup subgroup_from_mask(const FiniteRing& ring, std::vector<char> mask,
                                    std::vector<ElementId> generators);

// Same, with least-id generators recorded.
AdditiveSubgroup closed_mask_subgroup(const FiniteRing& ring, std::vector<char> mask);

AdditiveSubgroup sum(const FiniteRing& ring, const AdditiveSubgroup& a, const AdditiveSubgroup& b);
AdditiveSubgroup intersect(const FiniteRing& ring, const AdditiveSubgroup& a,
                           const AdditiveSubgroup& b);

// Greedy least-id generating list of a subgroup, at most log2|A| entries.
std::vector<ElementId> reduced_generators(const FiniteRing& ring, const AdditiveSubgroup& a);

std::uint64_t index(const FiniteRing& ring, const AdditiveSubgroup& a);

AdditiveSubgroup centralizer(const FiniteRing& ring, const ElementSet& s);
AdditiveSubgroup right_annihilator(const FiniteRing& ring, const ElementSet& s);
AdditiveSubgroup left_annihilator(const FiniteRing& ring, const ElementSet& s);

// [D, a] = {[y, a] : y in D}; D defaults to the whole ring.
ElementSet commutator_set(const FiniteRing& ring, ElementId a,
                          const AdditiveSubgroup* domain = nullptr);
// aD = {a y : y in D}.
ElementSet right_multiples(const FiniteRing& ring, ElementId a,
                           const AdditiveSubgroup* domain = nullptr);
// Da = {y a : y in D}.
ElementSet left_multiples(const FiniteRing& ring, ElementId a,
                          const AdditiveSubgroup* domain = nullptr);

// Quadratic in the operand sizes; refuses rings above the enumeration cap.
ElementSet product_set(const FiniteRing& ring, const ElementSet& a, const ElementSet& b);
ElementSet bracket_set(const FiniteRing& ring, const ElementSet& a, const ElementSet& b);

enum class IdealKind { left, right, two_sided, lie };
const char* to_string(IdealKind kind) noexcept;

struct IdealClosure {
  AdditiveSubgroup ideal;
  // w_1..w_s with ideal = seed + sum of the one-step images of w_i
  // (R w_i, w_i R, R w_i + w_i R + R w_i R, or [L, w_i]).
  std::vector<ElementId> witnesses;
  // Whether every witness could be taken from span(seed).
  bool witnesses_in_seed = true;
};

IdealClosure closure(const FiniteRing& ring, const ElementSet& seed, IdealKind kind);
inline IdealClosure closure_left_ideal(const FiniteRing& r, const ElementSet& s) {
  return closure(r, s, IdealKind::left);
}
inline IdealClosure closure_right_ideal(const FiniteRing& r, const ElementSet& s) {
  return closure(r, s, IdealKind::right);
}
inline IdealClosure closure_two_sided(const FiniteRing& r, const ElementSet& s) {
  return closure(r, s, IdealKind::two_sided);
}
inline IdealClosure closure_lie_ideal(const FiniteRing& r, const ElementSet& s) {
  return closure(r, s, IdealKind::lie);
}

// The one-step image of w for the given ideal kind, as a subgroup.
AdditiveSubgroup ideal_step_image(const FiniteRing& ring, ElementId w, IdealKind kind);

struct IdealCheck {
  bool ok = true;
  // (r, a): a in A with r a (left), a r (right) or [r, a] (lie) outside A.
  std::optional<std::pair<ElementId, ElementId>> counterexample;
  explicit operator bool() const noexcept { return ok; }
};

IdealCheck is_ideal(const FiniteRing& ring, const AdditiveSubgroup& a, IdealKind kind);

// One least-id representative per coset of A inside D (D defaults to the
// ring), in increasing id order; the first representative is 0.
std::vector<ElementId> transversal(const FiniteRing& ring, const AdditiveSubgroup& a,
                                   const AdditiveSubgroup* domain = nullptr);

// Every additive subgroup, ordered by member-id sequence. Capped at 256.
inline constexpr std::uint64_t kSubgroupEnumerationCap = 256;
std::vector<AdditiveSubgroup> enumerate_subgroups(const FiniteRing& ring);

}  // namespace ringprob
