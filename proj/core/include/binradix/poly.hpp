#pragma once

// Dense univariate polynomials over Q, coefficients stored low degree first.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace binradix {

using Integer = mpz_class;
using Rational = mpq_class;

struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT

  static Poly x();
  static Poly monomial(const Rational& c, std::size_t degree);

  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  Poly operator-() const;
  friend bool operator==(const Poly&, const Poly&) = default;

  Rational eval(const Rational& x) const;
  // Interval enclosure of p(x) for x in [iv.lo, iv.hi].
  RationalInterval eval(const RationalInterval& iv) const;
  double eval_double(double x) const;

  Poly derivative() const;
  Poly monic() const;
  // Integer-coefficient primitive associate with positive leading coefficient.
  Poly primitive() const;
  std::vector<Integer> integer_coeffs() const;  // of primitive()

  // p(x) -> x^deg p(1/x)
  Poly reversed() const;

  // "x^3+x^2-1"; non-integer coefficients print as "(1/2)x".
  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);  // throws std::domain_error on b == 0
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);

// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
// Returns g = gcd(a, m) and s with s*a = g (mod m).
std::pair<Poly, Poly> gcd_inverse(const Poly& a, const Poly& m);

Poly pow(const Poly& p, std::size_t e);
Poly square_free(const Poly& p);

// Sturm sequence of a square-free polynomial.
std::vector<Poly> sturm_sequence(const Poly& p);
// Number of distinct real roots in the half-open interval (lo, hi].
std::size_t count_roots(const std::vector<Poly>& sturm, const Rational& lo, const Rational& hi);

// Parses integer/rational-coefficient polynomials like "x^3+x^2-1",
// "2x-1", "-3/2*x^2 + x", "1/2". Throws ParseError.
Poly parse_poly(std::string_view text, char var = 'x');

// Parses "p/q", an integer, or a decimal literal ("3.25", "1e-3").
// Decimal literals go through double and are snapped to the nearest
// rational with denominator <= 2^53; `was_float` reports that path.
Rational parse_rational(std::string_view text, bool* was_float = nullptr);

std::string to_string(const Rational& q);

}  // namespace binradix
