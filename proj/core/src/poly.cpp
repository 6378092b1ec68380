#include "binradix/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "binradix/error.hpp"

namespace binradix {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly Poly::x() { return monomial(1, 1); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

RationalInterval mul(const RationalInterval& a, const RationalInterval& b) {
  if (a.lo >= 0 && b.lo >= 0) return {a.lo * b.lo, a.hi * b.hi};
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

}  // namespace

RationalInterval Poly::eval(const RationalInterval& iv) const {
  RationalInterval acc{0, 0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = mul(acc, iv);
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

double Poly::eval_double(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly r = *this;
  const Rational lc = leading();
  for (auto& c : r.c_) c /= lc;
  return r;
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  Integer den = 1;
  for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  std::vector<Integer> ints(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Rational scaled = c_[i] * den;
    ints[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (ints.back() < 0) g = -g;
  std::vector<Rational> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = Rational(ints[i] / g);
  return Poly(std::move(out));
}

std::vector<Integer> Poly::integer_coeffs() const {
  std::vector<Integer> out;
  for (const auto& c : primitive().c_) out.push_back(c.get_num());
  return out;
}

Poly Poly::reversed() const {
  std::vector<Rational> r(c_.rbegin(), c_.rend());
  return Poly(std::move(r));
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (neg)
      out += "-";
    else if (!out.empty())
      out += "+";
    std::string coef;
    if (i == 0 || mag != 1) {
      coef = binradix::to_string(mag);
      if (i > 0 && mag.get_den() != 1) coef = "(" + coef + ")";
    }
    out += coef;
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quo(rem.size() - db);
  const Rational lc = b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    const Rational f = rem[i] / lc;
    quo[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = r.primitive();
  }
  return x.monic();
}

std::pair<Poly, Poly> gcd_inverse(const Poly& a, const Poly& m) {
  // Invariant: r0 = s0*a (mod m), r1 = s1*a (mod m).
  Poly r0 = m, r1 = a % m;
  Poly s0{}, s1 = Poly(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {Poly{}, Poly{}};
  const Rational lc = r0.leading();
  Rational inv = 1 / lc;
  return {r0 * inv, (s0 * inv) % m};
}

Poly pow(const Poly& p, std::size_t e) {
  Poly r(1), base = p;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

Poly square_free(const Poly& p) {
  if (p.degree() <= 0) return p;
  const Poly g = gcd(p, p.derivative());
  return (p / g).primitive();
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Poly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    // Positive rescaling keeps the sign pattern.
    Poly next = -r;
    Rational lc = next.leading();
    if (lc < 0) lc = -lc;
    seq.push_back(next * (1 / lc));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

namespace {

std::size_t sign_changes(const std::vector<Poly>& seq, const Rational& x) {
  std::size_t changes = 0;
  int prev = 0;
  for (const auto& p : seq) {
    const int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

std::size_t count_roots(const std::vector<Poly>& sturm, const Rational& lo, const Rational& hi) {
  if (sturm.empty() || hi <= lo) return 0;
  const std::size_t a = sign_changes(sturm, lo), b = sign_changes(sturm, hi);
  return a > b ? a - b : 0;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, char var) : text_(text), var_(var) {}

  Poly parse() {
    Poly result;
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      result += parse_term() * Rational(sign);
      first = false;
      skip_ws();
    }
    return result;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Integer parse_uint() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Poly parse_term() {
    Rational coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = parse_uint();
      Integer den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        den = parse_uint();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      coef = Rational(num, den);
      coef.canonicalize();
      have_coef = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != var_) throw ParseError(std::string("expected '") + var_ + "'", pos_);
      }
    }
    std::size_t degree = 0;
    if (peek() == var_) {
      ++pos_;
      degree = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        const Integer e = parse_uint();
        if (e > 4096) throw ParseError("exponent too large", at);
        degree = e.get_ui();
      }
    } else if (!have_coef) {
      throw ParseError("expected a term", pos_);
    }
    return Poly::monomial(coef, degree);
  }

  std::string_view text_;
  char var_;
  std::size_t pos_ = 0;
};

// Best rational approximation of the exact value `x` with denominator <= max_den.
Rational best_approximation(const Rational& x, const Integer& max_den) {
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational r = x;
  for (;;) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    Integer q2 = a * q1 + q0;
    if (q2 > max_den) break;
    Integer p2 = a * p1 + p0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rational frac = r - Rational(a);
    if (frac == 0) break;
    r = 1 / frac;
  }
  Rational out(p1, q1);
  out.canonicalize();
  return out;
}

}  // namespace

Poly parse_poly(std::string_view text, char var) { return PolyParser(text, var).parse(); }

Rational parse_rational(std::string_view text, bool* was_float) {
  if (was_float) *was_float = false;
  std::string s(text);
  if (s.empty()) throw ParseError("empty number", 0);
  const auto slash = s.find('/');
  const bool plain_int = s.find_first_not_of("+-0123456789/") == std::string::npos;
  if (plain_int) {
    try {
      Rational q(s);
      if (q.get_den() == 0) throw ParseError("zero denominator", slash);
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed rational", 0);
    }
  }
  char* end = nullptr;
  const double d = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(d))
    throw ParseError("malformed number", static_cast<std::size_t>(end - s.c_str()));
  if (was_float) *was_float = true;
  const Rational exact(d);
  const Integer cap = Integer(1) << 53;
  if (exact.get_den() <= cap) return exact;
  return best_approximation(exact, cap);
}

}  // namespace binradix
