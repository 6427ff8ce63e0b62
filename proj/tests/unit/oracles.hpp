#pragma once

// Brute-force reference implementations. They only read a ring's orders,
// table and flavor and recompute everything from coordinates, with none of
// the library's spans, masks or caches.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "ring.hpp"

namespace oracle {

struct Naive {
  std::vector<std::uint32_t> d;
  std::vector<std::vector<std::vector<std::uint32_t>>> t;
  bool lie = false;
  std::uint64_t n = 1;

  explicit Naive(const ringprob::FiniteRing& r)
      : d(r.shape().orders()), t(r.table()), lie(r.flavor() == ringprob::Flavor::lie) {
    for (auto x : d) n *= x;
  }

  std::vector<std::uint32_t> dec(std::uint64_t id) const {
    std::vector<std::uint32_t> c(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      c[i] = id % d[i];
      id /= d[i];
    }
    return c;
  }
  std::uint64_t enc(const std::vector<std::uint32_t>& c) const {
    std::uint64_t id = 0;
    for (std::size_t i = d.size(); i-- > 0;) id = id * d[i] + c[i];
    return id;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    auto x = dec(a), y = dec(b);
    for (std::size_t i = 0; i < d.size(); ++i) x[i] = (x[i] + y[i]) % d[i];
    return enc(x);
  }
  std::uint64_t neg(std::uint64_t a) const {
    auto x = dec(a);
    for (std::size_t i = 0; i < d.size(); ++i) x[i] = (d[i] - x[i]) % d[i];
    return enc(x);
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }
  // Table multiplication extended bilinearly.
  std::uint64_t tmul(std::uint64_t a, std::uint64_t b) const {
    const auto x = dec(a), y = dec(b);
    std::vector<std::uint64_t> r(d.size(), 0);
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j)
        for (std::size_t l = 0; l < d.size(); ++l)
          r[l] = (r[l] + std::uint64_t{x[i]} * y[j] % d[l] * t[i][j][l]) % d[l];
    std::vector<std::uint32_t> c(r.begin(), r.end());
    return enc(c);
  }
  std::uint64_t br(std::uint64_t a, std::uint64_t b) const {
    return lie ? tmul(a, b) : sub(tmul(a, b), tmul(b, a));
  }
};

inline std::uint64_t commuting_pairs(const Naive& r) {
  std::uint64_t c = 0;
  for (std::uint64_t x = 0; x < r.n; ++x)
    for (std::uint64_t y = 0; y < r.n; ++y) c += r.br(x, y) == 0;
  return c;
}

inline std::uint64_t zero_pairs(const Naive& r) {
  std::uint64_t c = 0;
  for (std::uint64_t x = 0; x < r.n; ++x)
    for (std::uint64_t y = 0; y < r.n; ++y) c += r.tmul(x, y) == 0;
  return c;
}

inline bool associative_all(const Naive& r) {
  for (std::uint64_t x = 0; x < r.n; ++x)
    for (std::uint64_t y = 0; y < r.n; ++y)
      for (std::uint64_t z = 0; z < r.n; ++z)
        if (r.tmul(r.tmul(x, y), z) != r.tmul(x, r.tmul(y, z))) return false;
  return true;
}

// Smallest subgroup containing seed, by closing under addition.
inline std::set<std::uint64_t> span(const Naive& r, const std::vector<std::uint64_t>& seed) {
  std::set<std::uint64_t> s{0};
  s.insert(seed.begin(), seed.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> cur(s.begin(), s.end());
    for (auto a : cur)
      for (auto b : cur)
        if (s.insert(r.add(a, b)).second) grew = true;
  }
  return s;
}

// Every additive subgroup as a sorted member list; subsets are tried
// exhaustively, so keep n <= 16.
inline std::vector<std::vector<std::uint64_t>> subgroups(const Naive& r) {
  std::vector<std::vector<std::uint64_t>> out;
  const std::uint64_t n = r.n;
  std::vector<std::vector<std::uint64_t>> sum(n, std::vector<std::uint64_t>(n));
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) sum[a][b] = r.add(a, b);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    bool closed = true;
    for (std::uint64_t a = 0; a < n && closed; ++a)
      if (mask >> a & 1)
        for (std::uint64_t b = 0; b < n && closed; ++b)
          if ((mask >> b & 1) && !(mask >> sum[a][b] & 1)) closed = false;
    if (!closed) continue;
    std::vector<std::uint64_t> m;
    for (std::uint64_t a = 0; a < n; ++a)
      if (mask >> a & 1) m.push_back(a);
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class Kind { left, right, two_sided, lie };

inline bool is_ideal(const Naive& r, const std::vector<std::uint64_t>& members, Kind kind) {
  const std::set<std::uint64_t> s(members.begin(), members.end());
  for (std::uint64_t x = 0; x < r.n; ++x)
    for (auto a : members) {
      if (kind == Kind::lie) {
        if (!s.count(r.br(x, a))) return false;
        continue;
      }
      if ((kind == Kind::left || kind == Kind::two_sided) && !s.count(r.tmul(x, a))) return false;
      if ((kind == Kind::right || kind == Kind::two_sided) && !s.count(r.tmul(a, x))) return false;
    }
  return true;
}

// |span of {op(a, b) : a, b in members}|.
inline std::uint64_t square_span(const Naive& r, const std::vector<std::uint64_t>& members,
                                 bool bracket) {
  std::set<std::uint64_t> prods;
  for (auto a : members)
    for (auto b : members) prods.insert(bracket ? r.br(a, b) : r.tmul(a, b));
  return span(r, std::vector<std::uint64_t>(prods.begin(), prods.end())).size();
}

// Minimum of max(index, square span) over all ideals of the given kind,
// with the least member list among ties.
struct Best {
  std::vector<std::uint64_t> members;
  std::uint64_t index = 0;
  std::uint64_t span = 0;
};

inline Best optimal_ideal(const Naive& r, Kind kind, bool bracket) {
  Best best;
  bool have = false;
  for (const auto& s : subgroups(r)) {
    if (!is_ideal(r, s, kind)) continue;
    const std::uint64_t idx = r.n / s.size();
    const std::uint64_t sp = square_span(r, s, bracket);
    if (!have || std::max(idx, sp) < std::max(best.index, best.span)) {
      have = true;
      best = {s, idx, sp};
    }
  }
  return best;
}

}  // namespace oracle
