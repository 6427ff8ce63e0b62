#include "probability.hpp"

#include <cctype>

#include "subobjects.hpp"

namespace ringprob {

std::string to_decimal(const Rational& q, unsigned places) {
  BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt scale = 1;
  for (unsigned i = 0; i < places; ++i) scale *= 10;
  // Round half up on the magnitude.
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string digits = frac.str();
  if (digits.size() < places) digits.insert(0, places - digits.size(), '0');
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (places > 0) out += "." + digits;
  return out;
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw Error(ErrorCode::invalid_argument, "bad rational: '" + text + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw Error(ErrorCode::invalid_argument, "bad rational: '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw Error(ErrorCode::invalid_argument, "bad rational: '" + text + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::invalid_argument, "zero denominator: '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

Rational saturating_pow(const Rational& base, std::uint64_t exp, const Rational& ceiling) {
  Rational acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    acc *= base;
    // base >= 1 in every use; once past the ceiling, further factors only grow.
    if (base >= 1 && acc > ceiling) return acc;
  }
  return acc;
}

Rational commuting_probability(const FiniteRing& ring) {
  require_enumerable(ring, "commuting_probability");
  const std::uint64_t n = ring.cardinality();
  std::uint64_t total = 0;
  for (std::uint64_t x = 0; x < n; ++x)
    total += n / commutator_set(ring, static_cast<ElementId>(x)).size();
  return make_rational(total, n * n);
}

Rational zero_probability(const FiniteRing& ring) {
  if (ring.flavor() != Flavor::associative) throw FlavorMismatch("zero_probability");
  require_enumerable(ring, "zero_probability");
  const std::uint64_t n = ring.cardinality();
  std::uint64_t total = 0;
  for (std::uint64_t x = 0; x < n; ++x)
    total += n / right_multiples(ring, static_cast<ElementId>(x)).size();
  return make_rational(total, n * n);
}

CpConsistency cp_consistency(const FiniteRing& ring) {
  CpConsistency out;
  out.via_ring = commuting_probability(ring);
  out.via_lie_ring = ring.flavor() == Flavor::associative
                         ? commuting_probability(associated_lie_ring(ring))
                         : out.via_ring;
  const std::uint64_t n = ring.cardinality();
  std::uint64_t zeros = 0;
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y)
      if (ring.bracket(static_cast<ElementId>(x), static_cast<ElementId>(y)) == 0) ++zeros;
  out.via_bracket_zeros = make_rational(zeros, n * n);
  return out;
}

}  // namespace ringprob
