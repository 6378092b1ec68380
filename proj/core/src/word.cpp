#include "binradix/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "binradix/error.hpp"

namespace binradix {

Word word_from_string(std::string_view bits) {
  Word w;
  w.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw ParseError("expected '0' or '1'", i);
    w.push_back(static_cast<Bit>(bits[i] - '0'));
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Bit b : w) s.push_back(static_cast<char>('0' + b));
  return s;
}

bool word_contains(const Word& hay, const Word& needle) {
  if (needle.empty()) return true;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

EpString::EpString() : per_{0} {}

EpString EpString::constant(Bit b) { return EpString({}, Word{b}); }

EpString EpString::normalize(Word pre, Word per) {
  if (per.empty()) throw std::invalid_argument("period must be nonempty");
  const std::size_t q = per.size();
  for (std::size_t k = 1; k < q; ++k) {
    if (q % k != 0) continue;
    bool periodic = true;
    for (std::size_t i = k; i < q && periodic; ++i) periodic = per[i] == per[i - k];
    if (periodic) {
      per.resize(k);
      break;
    }
  }
  while (!pre.empty() && pre.back() == per.back()) {
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
    pre.pop_back();
  }
  return EpString(std::move(pre), std::move(per));
}

Bit EpString::at(std::size_t n) const noexcept {
  if (n < pre_.size()) return pre_[n];
  return per_[(n - pre_.size()) % per_.size()];
}

Word EpString::prefix(std::size_t n) const {
  Word w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = at(i);
  return w;
}

EpString EpString::shift(std::size_t n) const {
  if (n <= pre_.size()) return EpString(Word(pre_.begin() + static_cast<long>(n), pre_.end()), per_);
  Word per = per_;
  std::rotate(per.begin(), per.begin() + static_cast<long>((n - pre_.size()) % per.size()), per.end());
  return EpString({}, std::move(per));
}

EpString EpString::prepend(const Word& w) const {
  Word pre = w;
  pre.insert(pre.end(), pre_.begin(), pre_.end());
  return normalize(std::move(pre), per_);
}

std::vector<EpString> EpString::distinct_shifts() const {
  std::vector<EpString> out;
  out.reserve(shift_count());
  for (std::size_t n = 0; n < shift_count(); ++n) out.push_back(shift(n));
  return out;
}

bool EpString::contains_factor(const Word& f) const {
  if (f.empty()) return true;
  // Every occurrence can be slid back by whole periods until it starts
  // before pre + per, so this window sees all of them.
  return word_contains(prefix(pre_.size() + 2 * per_.size() + f.size()), f);
}

std::strong_ordering lex_cmp(const EpString& a, const EpString& b) {
  const std::size_t window = std::max(a.preperiod().size(), b.preperiod().size()) +
                             std::lcm(a.period().size(), b.period().size());
  for (std::size_t i = 0; i < window; ++i) {
    const Bit x = a.at(i), y = b.at(i);
    if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const EpString& w) {
  return to_string(w.preperiod()) + "(" + to_string(w.period()) + ")";
}

namespace {

std::size_t scan_bits(std::string_view text, std::size_t pos) {
  while (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) ++pos;
  return pos;
}

// Parses "(" [01]+ ")" at `pos`; returns the bits and advances pos.
Word parse_period(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '(') throw ParseError("expected 0, 1 or '('", pos);
  const std::size_t start = pos + 1;
  const std::size_t end = scan_bits(text, start);
  if (end < text.size() && text[end] != ')') throw ParseError("expected 0, 1 or ')'", end);
  if (end == start) throw ParseError("period must be nonempty", start);
  if (end >= text.size()) throw ParseError("expected ')'", end);
  pos = end + 1;
  return word_from_string(text.substr(start, end - start));
}

}  // namespace

EpString parse_epstring(std::string_view text) {
  std::size_t pos = scan_bits(text, 0);
  Word pre = word_from_string(text.substr(0, pos));
  Word per = parse_period(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return EpString::normalize(std::move(pre), std::move(per));
}

Decimal::Decimal(EpString digits, long point) : digits_(std::move(digits)), point_(point) {
  if (point_ < -1) {
    // Moving the point left past the first digit inserts zeros.
    digits_ = digits_.prepend(Word(static_cast<std::size_t>(-1 - point_), 0));
    point_ = -1;
  }
  while (point_ >= 0 && digits_.at(0) == 0) {
    digits_ = digits_.shift(1);
    --point_;
  }
}

Word Decimal::integer_part() const { return digits_.prefix(static_cast<std::size_t>(point_ + 1)); }

EpString Decimal::fraction() const { return digits_.shift(static_cast<std::size_t>(point_ + 1)); }

std::strong_ordering lex_cmp(const Decimal& a, const Decimal& b) {
  const long n = std::max(a.point(), b.point());
  const EpString x = a.digits().prepend(Word(static_cast<std::size_t>(n - a.point()), 0));
  const EpString y = b.digits().prepend(Word(static_cast<std::size_t>(n - b.point()), 0));
  return lex_cmp(x, y);
}

std::string to_string(const Decimal& d) {
  const std::string whole = to_string(d.integer_part());
  const EpString frac = d.fraction();
  if (frac.is_zero()) return (whole.empty() ? "0" : whole) + ".";
  return whole + "." + to_string(frac);
}

Decimal parse_decimal(std::string_view text) {
  const std::size_t int_end = scan_bits(text, 0);
  if (int_end >= text.size() || text[int_end] != '.') throw ParseError("expected '.'", int_end);
  const std::size_t frac_end = scan_bits(text, int_end + 1);
  Word digits = word_from_string(text.substr(0, int_end));
  Word frac = word_from_string(text.substr(int_end + 1, frac_end - int_end - 1));
  Word per{0};
  std::size_t pos = frac_end;
  if (pos < text.size()) {
    per = parse_period(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters", pos);
  } else if (std::any_of(frac.begin(), frac.end(), [](Bit b) { return b != 0; })) {
    throw ParseError("nonzero fraction requires a periodic tail \"(...)\"", pos);
  }
  const long point = static_cast<long>(digits.size()) - 1;
  digits.insert(digits.end(), frac.begin(), frac.end());
  return Decimal(EpString::normalize(std::move(digits), std::move(per)), point);
}

std::variant<EpString, Decimal> parse(std::string_view text) {
  if (text.find('.') != std::string_view::npos) return parse_decimal(text);
  return parse_epstring(text);
}

}  // namespace binradix
