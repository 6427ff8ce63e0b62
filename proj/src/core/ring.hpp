#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ringprob {

// Elements are addressed by their mixed-radix id (first coordinate least
// significant); the zero element always has id 0.
using ElementId = std::uint32_t;
using Coords = std::vector<std::uint32_t>;

// Full-enumeration operations (pair scans, subgroup work) refuse larger rings.
inline constexpr std::uint64_t kEnumerationCap = 4096;
// Largest additive group a ring may have at all.
inline constexpr std::uint64_t kMaxCardinality = std::uint64_t{1} << 31;

// Direct sum of cyclic groups Z_{d_1} + ... + Z_{d_k}, orders non-decreasing.
class GroupShape {
 public:
  GroupShape();
  explicit GroupShape(std::vector<std::uint32_t> orders);

  std::size_t rank() const noexcept { return orders_.size(); }
  std::uint32_t order(std::size_t i) const { return orders_[i]; }
  const std::vector<std::uint32_t>& orders() const noexcept { return orders_; }
  std::uint64_t cardinality() const noexcept { return cardinality_; }

  ElementId encode(std::span<const std::uint32_t> coords) const;
  Coords decode(ElementId id) const;
  std::uint32_t coord(ElementId id, std::size_t i) const;

  ElementId basis(std::size_t i) const { return static_cast<ElementId>(strides_[i]); }

  ElementId add(ElementId a, ElementId b) const;
  ElementId neg(ElementId a) const;
  ElementId sub(ElementId a, ElementId b) const { return add(a, neg(b)); }
  ElementId smul(std::int64_t n, ElementId a) const;

  bool operator==(const GroupShape& other) const { return orders_ == other.orders_; }

 private:
  std::vector<std::uint32_t> orders_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t cardinality_ = 1;
  // Decoded coordinates for every element, row-major; only for small groups.
  std::shared_ptr<const std::vector<std::uint32_t>> coords_;
};

// Sorted shape plus the permutation that produced it: new axis a came from
// user axis permutation[a].
struct NormalizedShape {
  GroupShape shape;
  std::vector<std::size_t> permutation;
};

NormalizedShape normalize_orders(const std::vector<std::uint32_t>& orders);

enum class Flavor { associative, lie };

const char* to_string(Flavor flavor) noexcept;

// table[i][j] holds the coordinates of e_i * e_j (or [e_i, e_j]).
using ProductTable = std::vector<std::vector<Coords>>;

class FiniteRing {
 public:
  // Validates every structural invariant; throws IllFormed naming the
  // offending basis indices.
  static FiniteRing make(GroupShape shape, ProductTable table, Flavor flavor,
                         std::string name = {});

  const GroupShape& shape() const noexcept { return shape_; }
  const ProductTable& table() const noexcept { return table_; }
  Flavor flavor() const noexcept { return flavor_; }
  const std::string& name() const noexcept { return name_; }
  std::uint64_t cardinality() const noexcept { return shape_.cardinality(); }
  std::size_t rank() const noexcept { return shape_.rank(); }

  ElementId add(ElementId a, ElementId b) const { return shape_.add(a, b); }
  ElementId neg(ElementId a) const { return shape_.neg(a); }
  ElementId sub(ElementId a, ElementId b) const { return shape_.sub(a, b); }
  ElementId smul(std::int64_t n, ElementId a) const { return shape_.smul(n, a); }

  // Bilinear extension of the table, whatever the flavor.
  ElementId product(ElementId a, ElementId b) const;
  // Associative multiplication; throws FlavorMismatch on a Lie ring.
  ElementId mul(ElementId a, ElementId b) const;
  // xy - yx for associative rings, the table product for Lie rings.
  ElementId bracket(ElementId a, ElementId b) const;

  // FNV-1a over flavor, orders and table; stable across platforms.
  std::uint64_t content_hash() const;

  FiniteRing renamed(std::string name) const;

  bool operator==(const FiniteRing& other) const {
    return flavor_ == other.flavor_ && shape_ == other.shape_ &&
           table_ == other.table_ && name_ == other.name_;
  }

 private:
  FiniteRing() = default;
  ElementId product_uncached(ElementId a, ElementId b) const;

  GroupShape shape_;
  ProductTable table_;
  Flavor flavor_ = Flavor::associative;
  std::string name_;
  std::shared_ptr<const std::vector<ElementId>> product_cache_;
};

// Rings this small get a full Cayley table of products at construction.
inline constexpr std::uint64_t kProductCacheCap = 256;

// (R, [x, y] = xy - yx).
FiniteRing associated_lie_ring(const FiniteRing& ring);

// Same additive group, multiplication reversed.
FiniteRing opposite_ring(const FiniteRing& ring);

// Throws CapExceeded when the ring is too large for full enumeration.
void require_enumerable(const FiniteRing& ring, const char* operation,
                        std::uint64_t cap = kEnumerationCap);

}  // namespace ringprob
