#include "ring.hpp"

#include <algorithm>
#include <numeric>

namespace ringprob {

const char* to_string(IllFormedReason reason) noexcept {
  switch (reason) {
    case IllFormedReason::shape: return "shape";
    case IllFormedReason::arity: return "arity";
    case IllFormedReason::coefficient_range: return "coefficient_range";
    case IllFormedReason::well_definedness: return "well_definedness";
    case IllFormedReason::associativity: return "associativity";
    case IllFormedReason::antisymmetry: return "antisymmetry";
    case IllFormedReason::jacobi: return "jacobi";
    case IllFormedReason::syntax: return "syntax";
  }
  return "unknown";
}

namespace {

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

IllFormed::IllFormed(IllFormedReason reason, std::vector<std::size_t> witness,
                     const std::string& detail)
    : Error(ErrorCode::ill_formed, std::string("ill-formed ring [") + to_string(reason) +
                                       "] at " + join_indices(witness) +
                                       (detail.empty() ? "" : ": " + detail)),
      reason_(reason),
      witness_(std::move(witness)) {}

const char* to_string(Flavor flavor) noexcept {
  return flavor == Flavor::associative ? "associative" : "lie";
}

// ---------------------------------------------------------------------------
// GroupShape

GroupShape::GroupShape() : GroupShape(std::vector<std::uint32_t>{}) {}

GroupShape::GroupShape(std::vector<std::uint32_t> orders) : orders_(std::move(orders)) {
  strides_.reserve(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i] < 2)
      throw IllFormed(IllFormedReason::shape, {i}, "cyclic orders must be at least 2");
    if (i > 0 && orders_[i] < orders_[i - 1])
      throw IllFormed(IllFormedReason::shape, {i}, "orders must be non-decreasing");
    strides_.push_back(cardinality_);
    cardinality_ *= orders_[i];
    if (cardinality_ > kMaxCardinality)
      throw IllFormed(IllFormedReason::shape, {i}, "group order too large");
  }
  if (cardinality_ <= kEnumerationCap) {
    const std::size_t k = orders_.size();
    std::vector<std::uint32_t> table(cardinality_ * k);
    for (std::uint64_t id = 0; id < cardinality_; ++id) {
      std::uint64_t rest = id;
      for (std::size_t i = 0; i < k; ++i) {
        table[id * k + i] = static_cast<std::uint32_t>(rest % orders_[i]);
        rest /= orders_[i];
      }
    }
    coords_ = std::make_shared<const std::vector<std::uint32_t>>(std::move(table));
  }
}

ElementId GroupShape::encode(std::span<const std::uint32_t> coords) const {
  std::uint64_t id = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) id += coords[i] * strides_[i];
  return static_cast<ElementId>(id);
}

std::uint32_t GroupShape::coord(ElementId id, std::size_t i) const {
  if (coords_) return (*coords_)[std::size_t{id} * orders_.size() + i];
  return static_cast<std::uint32_t>((id / strides_[i]) % orders_[i]);
}

Coords GroupShape::decode(ElementId id) const {
  Coords out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) out[i] = coord(id, i);
  return out;
}

ElementId GroupShape::add(ElementId a, ElementId b) const {
  std::uint64_t id = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::uint32_t c = coord(a, i) + coord(b, i);
    if (c >= orders_[i]) c -= orders_[i];
    id += c * strides_[i];
  }
  return static_cast<ElementId>(id);
}

ElementId GroupShape::neg(ElementId a) const {
  std::uint64_t id = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::uint32_t c = coord(a, i);
    id += (c == 0 ? 0 : orders_[i] - c) * strides_[i];
  }
  return static_cast<ElementId>(id);
}

ElementId GroupShape::smul(std::int64_t n, ElementId a) const {
  std::uint64_t id = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::int64_t d = orders_[i];
    std::int64_t m = n % d;
    if (m < 0) m += d;
    id += static_cast<std::uint64_t>((m * coord(a, i)) % d) * strides_[i];
  }
  return static_cast<ElementId>(id);
}

NormalizedShape normalize_orders(const std::vector<std::uint32_t>& orders) {
  std::vector<std::size_t> perm(orders.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return orders[a] < orders[b]; });
  std::vector<std::uint32_t> sorted;
  sorted.reserve(orders.size());
  for (std::size_t p : perm) sorted.push_back(orders[p]);
  return {GroupShape(std::move(sorted)), std::move(perm)};
}

// ---------------------------------------------------------------------------
// FiniteRing

namespace {

bool is_zero(const Coords& c) {
  return std::all_of(c.begin(), c.end(), [](std::uint32_t x) { return x == 0; });
}

// sum_m c_m * table[m][l] (c on the left) or table[l][m] (c on the right).
Coords coords_times_basis(const GroupShape& shape, const ProductTable& table,
                          const Coords& c, std::size_t l, bool c_on_left) {
  const std::size_t k = shape.rank();
  Coords out(k, 0);
  for (std::size_t m = 0; m < k; ++m) {
    if (c[m] == 0) continue;
    const Coords& t = c_on_left ? table[m][l] : table[l][m];
    for (std::size_t q = 0; q < k; ++q) {
      const std::uint64_t d = shape.order(q);
      out[q] = static_cast<std::uint32_t>((out[q] + (std::uint64_t{c[m]} % d) * t[q]) % d);
    }
  }
  return out;
}

Coords coords_add(const GroupShape& shape, Coords a, const Coords& b) {
  for (std::size_t q = 0; q < a.size(); ++q)
    a[q] = static_cast<std::uint32_t>((std::uint64_t{a[q]} + b[q]) % shape.order(q));
  return a;
}

Coords coords_neg(const GroupShape& shape, Coords a) {
  for (std::size_t q = 0; q < a.size(); ++q)
    a[q] = a[q] == 0 ? 0 : shape.order(q) - a[q];
  return a;
}

void validate_table(const GroupShape& shape, const ProductTable& table, Flavor flavor) {
  const std::size_t k = shape.rank();
  if (table.size() != k)
    throw IllFormed(IllFormedReason::arity, {}, "table must have " + std::to_string(k) + " rows");
  for (std::size_t i = 0; i < k; ++i) {
    if (table[i].size() != k)
      throw IllFormed(IllFormedReason::arity, {i}, "row has wrong length");
    for (std::size_t j = 0; j < k; ++j) {
      if (table[i][j].size() != k)
        throw IllFormed(IllFormedReason::arity, {i, j}, "entry has wrong length");
      for (std::size_t l = 0; l < k; ++l)
        if (table[i][j][l] >= shape.order(l))
          throw IllFormed(IllFormedReason::coefficient_range, {i, j, l},
                          "coefficient out of range");
    }
  }
  // d_i * (e_i e_j) and d_j * (e_i e_j) must vanish for the bilinear
  // extension to be well defined.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        const std::uint64_t c = table[i][j][l];
        const std::uint64_t d = shape.order(l);
        if ((c * shape.order(i)) % d != 0 || (c * shape.order(j)) % d != 0)
          throw IllFormed(IllFormedReason::well_definedness, {i, j},
                          "product not annihilated by the basis orders");
      }

  if (flavor == Flavor::associative) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) {
          const Coords left = coords_times_basis(shape, table, table[i][j], l, true);
          const Coords right = coords_times_basis(shape, table, table[j][l], i, false);
          if (left != right)
            throw IllFormed(IllFormedReason::associativity, {i, j, l},
                            "(e_i e_j) e_l != e_i (e_j e_l)");
        }
    return;
  }

  for (std::size_t i = 0; i < k; ++i) {
    if (!is_zero(table[i][i]))
      throw IllFormed(IllFormedReason::antisymmetry, {i, i}, "[e_i, e_i] != 0");
    for (std::size_t j = i + 1; j < k; ++j)
      if (table[i][j] != coords_neg(shape, table[j][i]))
        throw IllFormed(IllFormedReason::antisymmetry, {i, j}, "[e_i, e_j] != -[e_j, e_i]");
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        Coords sum = coords_times_basis(shape, table, table[i][j], l, true);
        sum = coords_add(shape, sum, coords_times_basis(shape, table, table[j][l], i, true));
        sum = coords_add(shape, sum, coords_times_basis(shape, table, table[l][i], j, true));
        if (!is_zero(sum))
          throw IllFormed(IllFormedReason::jacobi, {i, j, l}, "Jacobi identity fails");
      }
}

}  // namespace

FiniteRing FiniteRing::make(GroupShape shape, ProductTable table, Flavor flavor,
                            std::string name) {
  validate_table(shape, table, flavor);
  FiniteRing ring;
  ring.shape_ = std::move(shape);
  ring.table_ = std::move(table);
  ring.flavor_ = flavor;
  ring.name_ = std::move(name);
  const std::uint64_t n = ring.cardinality();
  if (n <= kProductCacheCap) {
    std::vector<ElementId> cache(n * n);
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b)
        cache[a * n + b] = ring.product_uncached(static_cast<ElementId>(a),
                                                 static_cast<ElementId>(b));
    ring.product_cache_ = std::make_shared<const std::vector<ElementId>>(std::move(cache));
  }
  return ring;
}

ElementId FiniteRing::product_uncached(ElementId a, ElementId b) const {
  const std::size_t k = shape_.rank();
  std::uint64_t acc[64] = {};
  std::vector<std::uint64_t> heap;
  std::uint64_t* out = acc;
  if (k > 64) {
    heap.assign(k, 0);
    out = heap.data();
  }
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t ai = shape_.coord(a, i);
    if (ai == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint64_t bj = shape_.coord(b, j);
      if (bj == 0) continue;
      const Coords& t = table_[i][j];
      for (std::size_t l = 0; l < k; ++l) {
        if (t[l] == 0) continue;
        const std::uint64_t d = shape_.order(l);
        out[l] = (out[l] + ((ai * bj) % d) * t[l]) % d;
      }
    }
  }
  std::uint64_t id = 0;
  std::uint64_t stride = 1;
  for (std::size_t l = 0; l < k; ++l) {
    id += out[l] * stride;
    stride *= shape_.order(l);
  }
  return static_cast<ElementId>(id);
}

ElementId FiniteRing::product(ElementId a, ElementId b) const {
  if (product_cache_) return (*product_cache_)[std::size_t{a} * cardinality() + b];
  return product_uncached(a, b);
}

ElementId FiniteRing::mul(ElementId a, ElementId b) const {
  if (flavor_ != Flavor::associative) throw FlavorMismatch("mul");
  return product(a, b);
}

ElementId FiniteRing::bracket(ElementId a, ElementId b) const {
  if (flavor_ == Flavor::lie) return product(a, b);
  return sub(product(a, b), product(b, a));
}

std::uint64_t FiniteRing::content_hash() const {
  std::uint64_t h = 14695981039346656037ull;
  auto feed = [&h](std::uint64_t v) {
    for (int byte = 0; byte < 4; ++byte) {
      h ^= (v >> (8 * byte)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  feed(flavor_ == Flavor::associative ? 1 : 2);
  feed(shape_.rank());
  for (std::uint32_t d : shape_.orders()) feed(d);
  for (const auto& row : table_)
    for (const auto& entry : row)
      for (std::uint32_t c : entry) feed(c);
  return h;
}

FiniteRing FiniteRing::renamed(std::string name) const {
  FiniteRing copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

FiniteRing associated_lie_ring(const FiniteRing& ring) {
  if (ring.flavor() != Flavor::associative) throw FlavorMismatch("associated_lie_ring");
  const GroupShape& shape = ring.shape();
  const std::size_t k = shape.rank();
  ProductTable table(k, std::vector<Coords>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i][j] = coords_add(shape, ring.table()[i][j], coords_neg(shape, ring.table()[j][i]));
  return FiniteRing::make(shape, std::move(table), Flavor::lie,
                          ring.name().empty() ? std::string{} : "lie(" + ring.name() + ")");
}

FiniteRing opposite_ring(const FiniteRing& ring) {
  if (ring.flavor() != Flavor::associative) throw FlavorMismatch("opposite_ring");
  const std::size_t k = ring.rank();
  ProductTable table(k, std::vector<Coords>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i][j] = ring.table()[j][i];
  std::string name = ring.name();
  if (name.size() > 4 && name.starts_with("op(") && name.back() == ')')
    name = name.substr(3, name.size() - 4);
  else if (!name.empty())
    name = "op(" + name + ")";
  return FiniteRing::make(ring.shape(), std::move(table), Flavor::associative, std::move(name));
}

void require_enumerable(const FiniteRing& ring, const char* operation, std::uint64_t cap) {
  if (ring.cardinality() > cap) throw CapExceeded(operation, ring.cardinality(), cap);
}

}  // namespace ringprob
