#pragma once

// Executable versions of the commuting-probability and zero-probability
// structure arguments. Every pipeline returns an audited report: each proof
// step is re-checked on the concrete ring and logged with a witness, and a
// report is VALID only if every logged check passed.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"
#include "ring.hpp"
#include "subobjects.hpp"

namespace ringprob {

// cp: commutator orbits [R, x], centralizers, Lie ideals.
// zp: right orbits xR, right annihilators, two-sided ideals.
enum class Mode { cp, zp };
const char* to_string(Mode mode) noexcept;

struct AssertionRecord {
  std::string name;
  bool passed = false;
  std::string witness;
};

class AssertionLog {
 public:
  bool check(std::string name, bool passed, std::string witness = {});
  // Copies other's entries, prefixing their names.
  void append(const AssertionLog& other, const std::string& prefix);

  bool all_passed() const noexcept;
  const std::vector<AssertionRecord>& entries() const noexcept { return entries_; }
  const AssertionRecord* first_failure() const noexcept;

 private:
  std::vector<AssertionRecord> entries_;
};

// |[D, x]| in cp mode, |xD| in zp mode.
std::uint64_t orbit_size(const FiniteRing& ring, ElementId x, Mode mode,
                         const AdditiveSubgroup* domain = nullptr);

// {x : orbit(x) <= 2/epsilon}, by exact rational comparison.
ElementSet x_set(const FiniteRing& ring, const Rational& epsilon, Mode mode);

// ---------------------------------------------------------------------------
// Sumset generation in a finite abelian group.

struct EberhardResult {
  std::uint64_t group_order = 0;
  std::uint64_t set_size = 0;
  // Least r >= 1 with (r + 1)|X| > |G|.
  std::uint64_t r = 0;
  std::uint64_t fold = 0;  // 3r
  std::uint64_t span_order = 0;
  // |X|, |X + X|, ... up to the fold or until the sequence stabilizes.
  std::vector<std::uint64_t> sumset_sizes;
  // Least t with the t-fold sumset equal to span(X).
  std::uint64_t stable_at = 0;
  bool verified = false;
};

// Throws Error(symmetry_violated) unless X contains 0 and is closed under negation.
EberhardResult eberhard_generation(const GroupShape& group, const ElementSet& x);

// ---------------------------------------------------------------------------
// Bounded-orbit constructions: every orbit has at most n elements implies
// the span of all brackets (cp) or products (zp) is small.

struct ConstructionReport {
  Mode mode = Mode::cp;
  std::uint64_t domain_order = 0;
  ElementId a = 0;
  // Largest orbit |[D, x]| or |xD| over the domain; a is the least id attaining it.
  std::uint64_t n = 0;
  // zp only: largest left orbit |Dx|; the coset bound uses max(n, n_left).
  std::uint64_t n_left = 0;
  std::vector<ElementId> b_list;
  AdditiveSubgroup c;
  // a_1..a_s, least-id coset representatives of C in the domain (a_1 = 0).
  std::vector<ElementId> transversal;
  std::uint64_t s = 0;
  std::uint64_t set_size = 0;
  std::uint64_t span_size = 0;
  // prod_{i=0..s} |orbit(a_i)| with a_0 = a.
  BigInt product_bound;
  BigInt index_bound;
  AssertionLog log;

  bool valid() const { return log.all_passed(); }
};

// The domain must be a subring (closed under the bracket / product);
// nullptr means the whole ring.
ConstructionReport bounded_commutator_construction(const FiniteRing& ring,
                                                   const AdditiveSubgroup* domain = nullptr);
ConstructionReport bounded_square_construction(const FiniteRing& ring,
                                               const AdditiveSubgroup* domain = nullptr);

// ---------------------------------------------------------------------------
// One-sided ideal to two-sided ideal descent.

enum class Side { left, right };
const char* to_string(Side side) noexcept;

struct DescentStep {
  ElementId y = 0;
  std::uint64_t index_before = 0;
  std::uint64_t index_after = 0;
  // max(index, |B^2|) of the ideal being enlarged.
  std::uint64_t n = 0;
  std::uint64_t square_size_after = 0;
  std::uint64_t max_annihilator_index = 0;
  std::uint64_t sampled_pairs = 0;
};

struct DescentResult {
  Side side = Side::right;
  AdditiveSubgroup ideal;
  std::vector<DescentStep> trace;
  AssertionLog log;

  bool valid() const { return log.all_passed(); }
};

// Throws Error(non_ideal_input) unless b is an ideal on the given side.
DescentResult one_sided_to_two_sided(const FiniteRing& ring, const AdditiveSubgroup& b, Side side);

// ---------------------------------------------------------------------------
// Full extraction pipelines.

struct ExtractionReport {
  Mode mode = Mode::cp;
  std::string ring_name;
  std::uint64_t ring_hash = 0;
  std::uint64_t cardinality = 0;
  // cp mode on an associative ring runs on its associated Lie ring.
  bool converted_to_lie = false;

  Rational epsilon;
  bool epsilon_overridden = false;
  Rational threshold;  // 2/epsilon
  BigInt length_bound;  // floor(6/epsilon)

  ElementSet x_set;
  AdditiveSubgroup b;
  std::uint64_t index_b = 0;
  EberhardResult eberhard;
  std::uint64_t max_orbit_over_b = 0;

  // zp: the left ideal generated by B, before the two-sided descent.
  std::optional<AdditiveSubgroup> d0;
  AdditiveSubgroup d;
  std::vector<ElementId> witness_generators;
  bool witnesses_in_b = true;
  // Index of C_L(sum [L, b_i]) (cp) or of Ann(b_1..b_s) (zp).
  std::uint64_t centralizer_index = 0;
  std::uint64_t max_orbit_over_d = 0;
  std::uint64_t index_d = 0;
  std::uint64_t square_or_bracket_set_size = 0;
  std::uint64_t square_or_bracket_span_size = 0;
  bool fast_path = false;

  std::optional<ConstructionReport> construction;
  std::optional<DescentResult> descent;

  AssertionLog log;
  std::vector<std::string> notes;

  bool valid() const { return log.all_passed(); }
};

ExtractionReport extract_commuting_ideal(const FiniteRing& ring,
                                         const std::optional<Rational>& epsilon = std::nullopt);
ExtractionReport extract_zero_ideal(const FiniteRing& ring,
                                    const std::optional<Rational>& epsilon = std::nullopt);
inline ExtractionReport extract(const FiniteRing& ring, Mode mode,
                                const std::optional<Rational>& epsilon = std::nullopt) {
  return mode == Mode::cp ? extract_commuting_ideal(ring, epsilon) : extract_zero_ideal(ring, epsilon);
}

// ---------------------------------------------------------------------------
// Converse: an ideal D of index m whose bracket/product span has order k
// forces cp (zp) >= 1 / (k m^2).

struct ConverseResult {
  std::uint64_t m = 0;
  std::uint64_t k = 0;
  Rational bound;
  Rational probability;
  bool holds = false;
};

ConverseResult converse_lower_bound(const FiniteRing& ring, const AdditiveSubgroup& d, Mode mode);

// ---------------------------------------------------------------------------
// Brute-force oracle over all ideals.

enum class Objective { max, sum, lex };
const char* to_string(Objective objective) noexcept;

struct ObjectiveValue {
  std::uint64_t primary = 0;
  std::uint64_t secondary = 0;
  auto operator<=>(const ObjectiveValue&) const = default;
};

ObjectiveValue objective_value(Objective objective, std::uint64_t index, std::uint64_t span_size);

// Lie ideal (cp) or two-sided ideal (zp).
IdealKind feasible_kind(const FiniteRing& ring, Mode mode);
bool is_feasible(const FiniteRing& ring, const AdditiveSubgroup& d, Mode mode);
// |span([D, D])| (cp) or |span(D^2)| (zp).
std::uint64_t square_span_size(const FiniteRing& ring, const AdditiveSubgroup& d, Mode mode);

struct OracleResult {
  AdditiveSubgroup best;
  std::uint64_t index = 0;
  std::uint64_t span_size = 0;
  ObjectiveValue value;
  std::size_t subgroups = 0;
  std::size_t feasible = 0;
};

OracleResult brute_force_optimal_ideal(const FiniteRing& ring, Mode mode,
                                       Objective objective = Objective::max);

}  // namespace ringprob
