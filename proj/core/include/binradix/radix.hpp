#pragma once

// Radix systems R(alpha, beta, ±): the base, the radix map on decimals, and
// the digit algorithm driven by the itineraries of the map
//   f(y) = B y            on the left of p,
//   f(y) = B y + 1 - B    on the right of p,
// where p itself goes left for the - variant and right for the + variant.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "binradix/admissible.hpp"
#include "binradix/algebraic.hpp"
#include "binradix/word.hpp"

namespace binradix {

struct RadixSystem {
  AdmissiblePair pair;
  Variant variant = Variant::Minus;
  AlgebraicReal b;  // least root of the base equation in [1/2, 1)
  AlgebraicReal B;  // 1/b
  AlgebraicReal p;  // project(b, alpha) == project(b, beta)
};

// Throws DomainError: "null pair ..." or "projection mismatch ...".
RadixSystem build(const AdmissiblePair& pair, Variant v);

// sum_n d_{N-n} B^n for a decimal with the point after position N, with no
// membership check.
AlgebraicReal decimal_value(const AlgebraicReal& b, const Decimal& d);

// Radix map; throws DomainError when d is outside the address space.
AlgebraicReal radix_value(const RadixSystem& sys, const Decimal& d);

// Value of the finite integer-part string s: sum s_i B^{|s|-1-i}.
AlgebraicReal integer_value(const AlgebraicReal& B, const Word& s);

// One step of f for the given variant; `bit` receives the emitted digit.
AlgebraicReal itinerary_step(const AlgebraicReal& B, const AlgebraicReal& p, const AlgebraicReal& y, Variant v,
                             Bit& bit);

// First k digits of the itinerary of y.
Word itinerary(const AlgebraicReal& B, const AlgebraicReal& p, AlgebraicReal y, Variant v, std::size_t k);

struct Orbit {
  // Exact when the orbit revisits a point within the step budget.
  std::optional<EpString> digits;
  // Digits produced (at least as many as requested).
  Word prefix;
};

// Itinerary of y with cycle detection; runs until the orbit closes or both
// `max_steps` and `min_digits` are exhausted.
Orbit itinerary_orbit(const AlgebraicReal& B, const AlgebraicReal& p, const AlgebraicReal& y, Variant v,
                      std::size_t max_steps, std::size_t min_digits = 0);

struct EncodeResult {
  Variant variant = Variant::Minus;
  std::optional<Decimal> exact;
  // When truncated: digits in front of the point followed by `digits`
  // fractional digits.
  Word prefix;
  long point = -1;
  bool truncated() const noexcept { return !exact.has_value(); }
  // Truncated results print with a trailing "…".
  std::string to_string() const;
  // The truncated prefix read as a decimal ending in zeros.
  Decimal truncated_decimal() const;
};

inline constexpr std::size_t kDefaultMaxSteps = 4096;

// Digit algorithm: least N >= 0 with y = b^N (1-b) x < p, then the
// itinerary of y with the point after position N.  `digits` is the number
// of fractional digits kept when the orbit does not close.
EncodeResult encode(const RadixSystem& sys, const AlgebraicReal& x, std::size_t digits = 64,
                    std::size_t max_steps = kDefaultMaxSteps);

struct RecoveredPair {
  Orbit alpha;  // - itinerary of p
  Orbit beta;   // + itinerary of p
  bool exact() const noexcept { return alpha.digits && beta.digits; }
  std::vector<Violation> violations;  // empty unless the exact pair is inadmissible
};

// Requires 1 < B <= 2 and 1 - 1/B <= p <= 1/B; throws DomainError otherwise.
RecoveredPair pair_from_base(const AlgebraicReal& B, const AlgebraicReal& p, std::size_t max_steps = kDefaultMaxSteps,
                             std::size_t prefix_len = 64);

// Number of distinct length-n itinerary prefixes over y in [0, 1], counted
// as the laps of f^n cut out by the preimages of p.
std::size_t lap_count(const AlgebraicReal& B, const AlgebraicReal& p, Variant v, std::size_t n);

}  // namespace binradix
