#include "catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <thread>

namespace ringprob {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::cyclic: return "Z";
    case Family::zero: return "zero";
    case Family::matrix: return "M2";
    case Family::triangular: return "T2";
    case Family::direct_sum: return "sum";
  }
  return "?";
}

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : text_(text) {}

  FamilySpec parse() {
    FamilySpec spec = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorCode::invalid_argument, "bad family spec '" + text_ + "': " + why);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }
  FamilySpec parse_spec() {
    const std::string name = word();
    FamilySpec spec;
    if (name == "sum") {
      spec.family = Family::direct_sum;
      expect('(');
      spec.parts.push_back(parse_spec());
      expect(',');
      spec.parts.push_back(parse_spec());
      expect(')');
      return spec;
    }
    try {
      spec.family = parse_family_name(name);
    } catch (const Error&) {
      fail("unknown family '" + name + "'");
    }
    expect(':');
    const std::string digits = word();
    if (digits.empty() || digits.size() > 9 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }))
      fail("expected a parameter");
    spec.parameter = static_cast<std::uint32_t>(std::stoul(digits));
    if (!family_parameter_ok(spec.family, spec.parameter)) fail("parameter out of range");
    return spec;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

ProductTable zero_table(std::size_t k) {
  return ProductTable(k, std::vector<Coords>(k, Coords(k, 0)));
}

Coords unit(std::size_t k, std::size_t i) {
  Coords c(k, 0);
  c[i] = 1;
  return c;
}

}  // namespace

Family parse_family_name(const std::string& name) {
  if (name == "Z") return Family::cyclic;
  if (name == "zero") return Family::zero;
  if (name == "M2") return Family::matrix;
  if (name == "T2") return Family::triangular;
  throw Error(ErrorCode::invalid_argument, "unknown family '" + name + "'");
}

bool family_parameter_ok(Family family, std::uint32_t parameter) {
  switch (family) {
    case Family::cyclic:
    case Family::zero: return parameter >= 1 && parameter <= kEnumerationCap;
    case Family::matrix:
    case Family::triangular: return parameter <= 31 && is_prime(parameter);
    case Family::direct_sum: return true;
  }
  return false;
}

std::string FamilySpec::to_string() const {
  if (family == Family::direct_sum)
    return "sum(" + parts.at(0).to_string() + "," + parts.at(1).to_string() + ")";
  return std::string(family_name(family)) + ":" + std::to_string(parameter);
}

FamilySpec parse_family_spec(const std::string& text) { return SpecParser(text).parse(); }

NormalizedRing normalize_ring(const std::vector<std::uint32_t>& orders, const ProductTable& table,
                              Flavor flavor, std::string name) {
  NormalizedShape ns = normalize_orders(orders);
  const auto& perm = ns.permutation;
  const std::size_t k = orders.size();
  ProductTable permuted(k, std::vector<Coords>(k, Coords(k, 0)));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        permuted[a][b][c] = table.at(perm[a]).at(perm[b]).at(perm[c]);
  try {
    return {FiniteRing::make(std::move(ns.shape), std::move(permuted), flavor, std::move(name)),
            perm};
  } catch (const IllFormed& e) {
    // Report witnesses in the caller's axis order.
    std::vector<std::size_t> w;
    for (std::size_t idx : e.witness()) w.push_back(idx < perm.size() ? perm[idx] : idx);
    throw IllFormed(e.reason(), std::move(w), "");
  }
}

FiniteRing build_family(const FamilySpec& spec) {
  const std::string name = spec.to_string();
  if (spec.family != Family::direct_sum && !family_parameter_ok(spec.family, spec.parameter))
    throw Error(ErrorCode::invalid_argument, "parameter out of range for " + name);
  switch (spec.family) {
    case Family::cyclic: {
      if (spec.parameter == 1) return FiniteRing::make(GroupShape(), {}, Flavor::associative, name);
      return FiniteRing::make(GroupShape({spec.parameter}), {{Coords{1}}}, Flavor::associative, name);
    }
    case Family::zero: {
      std::vector<std::uint32_t> orders;
      std::uint32_t n = spec.parameter;
      for (std::uint32_t p = 2; n > 1; ++p)
        while (n % p == 0) {
          orders.push_back(p);
          n /= p;
        }
      const std::size_t k = orders.size();
      return FiniteRing::make(GroupShape(orders), zero_table(k), Flavor::associative, name);
    }
    case Family::matrix: {
      // E_ij E_kl = [j == k] E_il, basis index 2i + j.
      const std::uint32_t p = spec.parameter;
      ProductTable t = zero_table(4);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          for (std::size_t l = 0; l < 2; ++l) t[2 * i + j][2 * j + l] = unit(4, 2 * i + l);
      return FiniteRing::make(GroupShape({p, p, p, p}), std::move(t), Flavor::associative, name);
    }
    case Family::triangular: {
      // Basis E11, E12, E22.
      const std::uint32_t p = spec.parameter;
      ProductTable t = zero_table(3);
      t[0][0] = unit(3, 0);
      t[0][1] = unit(3, 1);
      t[1][2] = unit(3, 1);
      t[2][2] = unit(3, 2);
      return FiniteRing::make(GroupShape({p, p, p}), std::move(t), Flavor::associative, name);
    }
    case Family::direct_sum: {
      const FiniteRing a = build_family(spec.parts.at(0));
      const FiniteRing b = build_family(spec.parts.at(1));
      const std::size_t ka = a.rank(), kb = b.rank(), k = ka + kb;
      if (a.cardinality() * b.cardinality() > kMaxCardinality)
        throw Error(ErrorCode::invalid_argument, "direct sum too large: " + name);
      std::vector<std::uint32_t> orders = a.shape().orders();
      orders.insert(orders.end(), b.shape().orders().begin(), b.shape().orders().end());
      ProductTable t = zero_table(k);
      for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < ka; ++j)
          std::copy(a.table()[i][j].begin(), a.table()[i][j].end(), t[i][j].begin());
      for (std::size_t i = 0; i < kb; ++i)
        for (std::size_t j = 0; j < kb; ++j)
          std::copy(b.table()[i][j].begin(), b.table()[i][j].end(), t[ka + i][ka + j].begin() + ka);
      return normalize_ring(orders, t, Flavor::associative, name).ring;
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown family");
}

// ---------------------------------------------------------------------------
// Census

namespace {

class CensusSearch {
 public:
  CensusSearch(const GroupShape& shape) : shape_(shape), k_(shape.rank()) {
    const std::uint64_t n = shape.cardinality();
    coords_.reserve(n);
    for (std::uint64_t id = 0; id < n; ++id) coords_.push_back(shape.decode(static_cast<ElementId>(id)));
    admissible_.resize(k_ * k_);
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j)
        for (std::uint64_t id = 0; id < n; ++id) {
          const Coords& c = coords_[id];
          bool ok = true;
          for (std::size_t l = 0; l < k_ && ok; ++l) {
            const std::uint64_t d = shape.order(l);
            ok = (std::uint64_t{c[l]} * shape.order(i)) % d == 0 &&
                 (std::uint64_t{c[l]} * shape.order(j)) % d == 0;
          }
          if (ok) admissible_[i * k_ + j].push_back(static_cast<ElementId>(id));
        }
  }

  const std::vector<ElementId>& admissible(std::size_t t) const { return admissible_[t]; }

  // All validated tables whose most significant entry equals `top`.
  std::vector<std::vector<ElementId>> run(ElementId top) const {
    State st;
    st.vals.assign(k_ * k_, 0);
    st.assigned.assign(k_ * k_, 0);
    const std::size_t last = k_ * k_ - 1;
    st.vals[last] = top;
    st.assigned[last] = 1;
    std::vector<std::vector<ElementId>> out;
    if (consistent(st)) descend(st, last, out);
    return out;
  }

 private:
  struct State {
    std::vector<ElementId> vals;
    std::vector<char> assigned;
  };

  void descend(State& st, std::size_t t, std::vector<std::vector<ElementId>>& out) const {
    if (t == 0) {
      out.push_back(st.vals);
      return;
    }
    const std::size_t next = t - 1;
    st.assigned[next] = 1;
    for (ElementId v : admissible_[next]) {
      st.vals[next] = v;
      if (consistent(st)) descend(st, next, out);
    }
    st.assigned[next] = 0;
  }

  // Whether (e_i e_j) e_l can be compared with e_i (e_j e_l) yet, and if so
  // whether they agree.
  bool consistent(const State& st) const {
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j)
        for (std::size_t l = 0; l < k_; ++l)
          if (!triple_ok(st, i, j, l)) return false;
    return true;
  }

  bool triple_ok(const State& st, std::size_t i, std::size_t j, std::size_t l) const {
    const std::size_t ij = i * k_ + j, jl = j * k_ + l;
    if (!st.assigned[ij] || !st.assigned[jl]) return true;
    const Coords& cij = coords_[st.vals[ij]];
    const Coords& cjl = coords_[st.vals[jl]];
    for (std::size_t m = 0; m < k_; ++m) {
      if (cij[m] && !st.assigned[m * k_ + l]) return true;
      if (cjl[m] && !st.assigned[i * k_ + m]) return true;
    }
    for (std::size_t q = 0; q < k_; ++q) {
      const std::uint64_t d = shape_.order(q);
      std::uint64_t lhs = 0, rhs = 0;
      for (std::size_t m = 0; m < k_; ++m) {
        if (cij[m]) lhs += std::uint64_t{cij[m]} * coords_[st.vals[m * k_ + l]][q];
        if (cjl[m]) rhs += std::uint64_t{cjl[m]} * coords_[st.vals[i * k_ + m]][q];
      }
      if (lhs % d != rhs % d) return false;
    }
    return true;
  }

  const GroupShape& shape_;
  std::size_t k_;
  std::vector<Coords> coords_;
  std::vector<std::vector<ElementId>> admissible_;
};

}  // namespace

Census enumerate_shape(const std::vector<std::uint32_t>& orders, unsigned jobs,
                       std::uint64_t max_candidates) {
  Census census;
  census.shape = normalize_orders(orders).shape;
  const GroupShape& shape = census.shape;
  const std::size_t k = shape.rank();
  const std::uint64_t n = shape.cardinality();
  if (k == 0) {
    census.candidate_count = 1;
    census.rings.push_back({0, FiniteRing::make(shape, {}, Flavor::associative, "census:0")});
    return census;
  }

  // |R|^(k^2) candidate tables, refused above the cap.
  std::uint64_t count = 1;
  for (std::size_t t = 0; t < k * k; ++t) {
    if (count > max_candidates / n) throw CapExceeded("enumerate", count * n, max_candidates);
    count *= n;
  }
  census.candidate_count = count;

  const CensusSearch search(shape);
  const auto& tops = search.admissible(k * k - 1);
  std::vector<std::vector<std::vector<ElementId>>> parts(tops.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tops.size(); i = next++) parts[i] = search.run(tops[i]);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tops.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& part : parts)
    for (const auto& vals : part) {
      std::uint64_t idx = 0;
      for (std::size_t t = k * k; t-- > 0;) idx = idx * n + vals[t];
      ProductTable table(k, std::vector<Coords>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) table[i][j] = shape.decode(vals[i * k + j]);
      census.rings.push_back(
          {idx, FiniteRing::make(shape, std::move(table), Flavor::associative,
                                 "census:" + std::to_string(idx))});
    }
  return census;
}

Census enumerate_order4(const std::vector<std::uint32_t>& orders, unsigned jobs) {
  const auto sorted = normalize_orders(orders).shape.orders();
  if (sorted != std::vector<std::uint32_t>{4} && sorted != std::vector<std::uint32_t>{2, 2})
    throw CapExceeded("enumerate_order4: unsupported shape", normalize_orders(orders).shape.cardinality(), 4);
  return enumerate_shape(sorted, jobs);
}

}  // namespace ringprob
