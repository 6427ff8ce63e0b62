#pragma once

#include <cstdint>

#include "rational.hpp"
#include "ring.hpp"

namespace ringprob {

// cp(R) = sum_x |C(x)| / |R|^2, with |C(x)| = |R| / |[R, x]|.
Rational commuting_probability(const FiniteRing& ring);

// zp(R) = sum_x |Ann(x)| / |R|^2, with |Ann(x)| = |R| / |xR|. Associative only.
Rational zero_probability(const FiniteRing& ring);

struct CpConsistency {
  Rational via_ring;
  Rational via_lie_ring;
  // |{(x, y) : [x, y] = 0}| / |R|^2 counted directly.
  Rational via_bracket_zeros;
  bool consistent() const {
    return via_ring == via_lie_ring && via_ring == via_bracket_zeros;
  }
};

CpConsistency cp_consistency(const FiniteRing& ring);

}  // namespace ringprob
