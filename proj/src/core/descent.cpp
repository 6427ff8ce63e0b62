#include <algorithm>

#include "neumann.hpp"

namespace ringprob {

const char* to_string(Side side) noexcept { return side == Side::left ? "left" : "right"; }

namespace {

constexpr std::size_t kPairSampleBudget = 4096;
constexpr std::size_t kStridedSample = 64;

// Every member when the pair count fits the budget, otherwise an evenly
// strided selection that always includes 0 and the last member.
std::vector<ElementId> sample_members(const AdditiveSubgroup& b) {
  const auto& m = b.members();
  if (m.size() * m.size() <= kPairSampleBudget) return m;
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < kStridedSample; ++i)
    out.push_back(m[i * (m.size() - 1) / (kStridedSample - 1)]);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

DescentResult one_sided_to_two_sided(const FiniteRing& ring, const AdditiveSubgroup& b, Side side) {
  if (ring.flavor() != Flavor::associative) throw FlavorMismatch("one_sided_to_two_sided");
  require_enumerable(ring, "one_sided_to_two_sided");
  const IdealKind kind = side == Side::right ? IdealKind::right : IdealKind::left;
  // The element y multiplies B from the side the ideal is not yet closed on.
  const IdealKind missing = side == Side::right ? IdealKind::left : IdealKind::right;
  if (!is_ideal(ring, b, kind))
    throw Error(ErrorCode::non_ideal_input,
                std::string("input is not a ") + to_string(side) + " ideal");

  DescentResult out;
  out.side = side;
  AdditiveSubgroup current = b;
  std::size_t step_no = 0;

  while (true) {
    const IdealCheck other = is_ideal(ring, current, missing);
    if (other.ok) break;
    ++step_no;
    const std::string tag = "step" + std::to_string(step_no) + ".";

    DescentStep step;
    // Least y in R with yB (right case) or By (left case) outside B.
    step.y = other.counterexample->first;
    step.index_before = index(ring, current);
    const ElementSet cur_set = current.as_set();
    const std::uint64_t sq_before = product_set(ring, cur_set, cur_set).size();
    step.n = std::max(step.index_before, sq_before);

    std::vector<ElementId> gens = reduced_generators(ring, current);
    for (ElementId m : current.members())
      gens.push_back(side == Side::right ? ring.product(step.y, m) : ring.product(m, step.y));
    AdditiveSubgroup next = additive_span(ring, gens);
    step.index_after = index(ring, next);

    out.log.check(tag + "still_one_sided", is_ideal(ring, next, kind).ok,
                  "y=" + std::to_string(step.y));
    out.log.check(tag + "index_strictly_decreases", step.index_after < step.index_before,
                  std::to_string(step.index_before) + " -> " + std::to_string(step.index_after));

    // d = y b1 + b2 (right) or b1 y + b2 (left): the annihilator of {b1, b2}
    // on the matching side kills d, and has index at most n^4.
    const auto samples = sample_members(current);
    std::vector<AdditiveSubgroup> ann;
    ann.reserve(samples.size());
    for (ElementId s : samples)
      ann.push_back(side == Side::right ? right_annihilator(ring, ElementSet({s}))
                                        : left_annihilator(ring, ElementSet({s})));
    const BigInt n4 = boost::multiprecision::pow(BigInt(step.n), 4);
    std::optional<std::pair<ElementId, ElementId>> containment_failure, bound_failure;
    for (std::size_t i = 0; i < samples.size(); ++i)
      for (std::size_t j = 0; j < samples.size(); ++j) {
        const ElementId b1 = samples[i], b2 = samples[j];
        const ElementId d = side == Side::right ? ring.add(ring.product(step.y, b1), b2)
                                                : ring.add(ring.product(b1, step.y), b2);
        ++step.sampled_pairs;
        if (!containment_failure) {
          for (ElementId z : ann[i].members()) {
            if (!ann[j].contains(z)) continue;
            const ElementId p = side == Side::right ? ring.product(d, z) : ring.product(z, d);
            if (p != 0) {
              containment_failure = std::make_pair(b1, b2);
              break;
            }
          }
        }
        const std::uint64_t ann_index =
            side == Side::right ? right_multiples(ring, d).size() : left_multiples(ring, d).size();
        step.max_annihilator_index = std::max(step.max_annihilator_index, ann_index);
        if (!bound_failure && BigInt(ann_index) > n4) bound_failure = std::make_pair(b1, b2);
      }
    auto pair_str = [](const std::optional<std::pair<ElementId, ElementId>>& p) {
      return "b1=" + std::to_string(p->first) + " b2=" + std::to_string(p->second);
    };
    out.log.check(tag + "annihilator_containment", !containment_failure,
                  containment_failure ? pair_str(containment_failure)
                                      : "pairs=" + std::to_string(step.sampled_pairs));
    out.log.check(tag + "annihilator_index_bound", !bound_failure,
                  bound_failure ? pair_str(bound_failure)
                                : "max=" + std::to_string(step.max_annihilator_index) +
                                      " n=" + std::to_string(step.n));

    const ElementSet next_set = next.as_set();
    step.square_size_after = product_set(ring, next_set, next_set).size();
    out.trace.push_back(step);

    if (step.index_after >= step.index_before) break;  // logged as a failure above
    current = std::move(next);
  }

  out.log.check("result_two_sided", is_ideal(ring, current, IdealKind::two_sided).ok,
                "order=" + std::to_string(current.order()));
  out.log.check("contains_input", b.is_subset_of(current));
  std::uint64_t bound = 0;
  for (std::uint64_t v = index(ring, b); v > 1; v /= 2) ++bound;
  out.log.check("step_count_within_log2_index", out.trace.size() <= bound,
                "steps=" + std::to_string(out.trace.size()));
  out.ideal = std::move(current);
  return out;
}

}  // namespace ringprob
