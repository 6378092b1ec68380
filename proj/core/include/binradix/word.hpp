#pragma once

// Eventually periodic bit-strings and decimals over the digit set {0,1}.
//
// An EpString denotes the infinite string  pre · per · per · per ...
// and is always kept in normal form: the period is primitive and the
// preperiod is as short as possible, so two EpStrings denote the same
// infinite string exactly when their fields are equal.
//
// Textual form: "011(01)" is 011 followed by 01 repeated forever.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace binradix {

using Bit = std::uint8_t;
using Word = std::vector<Bit>;

Word word_from_string(std::string_view bits);  // throws ParseError on non-binary chars
std::string to_string(const Word& w);

// True iff `needle` occurs as a contiguous factor of `hay`.
bool word_contains(const Word& hay, const Word& needle);

class EpString {
 public:
  // The all-zero string (0).
  EpString();

  // Canonicalizes (pre, per). Throws std::invalid_argument if per is empty.
  static EpString normalize(Word pre, Word per);

  // The string with all bits equal to `b`.
  static EpString constant(Bit b);

  const Word& preperiod() const noexcept { return pre_; }
  const Word& period() const noexcept { return per_; }

  Bit at(std::size_t n) const noexcept;
  Word prefix(std::size_t n) const;

  // S^n applied to this string.
  EpString shift(std::size_t n) const;

  // c·this
  EpString prepend(const Word& w) const;

  // Number of distinct shifts; S^n for n >= shift_count() repeats S^(n - |per|).
  std::size_t shift_count() const noexcept { return pre_.size() + per_.size(); }

  // {S^n w : n >= 0}, listed in order n = 0, 1, ..., shift_count()-1.
  std::vector<EpString> distinct_shifts() const;

  bool contains_factor(const Word& f) const;

  bool is_zero() const noexcept { return pre_.empty() && per_.size() == 1 && per_[0] == 0; }

  friend bool operator==(const EpString&, const EpString&) = default;

 private:
  EpString(Word pre, Word per) : pre_(std::move(pre)), per_(std::move(per)) {}

  Word pre_;
  Word per_;
};

// Lexicographic order on the denoted infinite strings.
std::strong_ordering lex_cmp(const EpString& a, const EpString& b);

inline std::strong_ordering operator<=>(const EpString& a, const EpString& b) { return lex_cmp(a, b); }

std::string to_string(const EpString& w);
EpString parse_epstring(std::string_view text);

// A decimal: the bits of `digits` with the point placed after position
// `point` (point == -1 puts it before every digit).  Constructed values are
// zero-canonical: leading zeros in front of the point are removed, so
// "01.1" and "1.1" compare equal.
class Decimal {
 public:
  Decimal() = default;
  Decimal(EpString digits, long point);

  const EpString& digits() const noexcept { return digits_; }
  long point() const noexcept { return point_; }

  // Bits in front of the point (empty when point == -1).
  Word integer_part() const;
  // The string after the point.
  EpString fraction() const;

  bool is_zero() const noexcept { return digits_.is_zero(); }

  friend bool operator==(const Decimal&, const Decimal&) = default;

 private:
  EpString digits_;
  long point_ = -1;
};

// Lexicographic order after aligning the points with leading zeros.
std::strong_ordering lex_cmp(const Decimal& a, const Decimal& b);

inline std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) { return lex_cmp(a, b); }

std::string to_string(const Decimal& d);
Decimal parse_decimal(std::string_view text);

// Dispatches on the presence of '.'.
std::variant<EpString, Decimal> parse(std::string_view text);

}  // namespace binradix
