#pragma once

// Exact real algebraic numbers.
//
// A NumberField is Q(θ) for a real algebraic θ, given by a square-free
// integer polynomial and a rational interval holding exactly one of its
// roots.  Elements are polynomials in θ reduced modulo the defining
// polynomial.  Signs are decided by interval evaluation at θ; an element
// that refuses to separate from zero is settled exactly with a gcd against
// the defining polynomial, which also splits off any factor that does not
// vanish at θ.  The defining polynomial therefore only ever shrinks toward
// the minimal polynomial of θ, and every decision stays exact.
//
// Refinement state lives behind a mutex in the shared NumberField, so
// elements may be used from several threads.

#include <compare>
#include <complex>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "binradix/poly.hpp"

namespace binradix {

class NumberField {
 public:
  // `poly` must have exactly one real root in the open interval (lo, hi).
  // Throws DomainError otherwise.
  static std::shared_ptr<NumberField> create(const Poly& poly, const Rational& lo, const Rational& hi);

  // Current defining polynomial of θ (integer, primitive).
  Poly modulus() const;
  std::size_t degree() const;
  // Current isolating interval of θ.
  RationalInterval interval() const;
  // Bumped whenever the defining polynomial shrinks.
  std::uint64_t version() const;

  Poly reduce(const Poly& e) const;
  int sign(const Poly& e) const;
  // e^{-1} mod the defining polynomial; DomainError when e(θ) = 0.
  Poly inverse(const Poly& e) const;
  // Enclosure of e(θ) of width at most 2^-bits.
  RationalInterval enclose(const Poly& e, std::size_t bits) const;

  std::string description() const;  // "root of x^2+x-1 in [lo,hi]"

  // Both fields are generated by the same real number, so representations
  // carry over unchanged.  Positive answers are remembered.
  static bool same_generator(const std::shared_ptr<NumberField>& a, const std::shared_ptr<NumberField>& b);

  NumberField(const NumberField&) = delete;
  NumberField& operator=(const NumberField&) = delete;

 private:
  NumberField() = default;

  void refine_locked(std::size_t bits) const;
  void split_locked(const Poly& factor) const;
  void set_rational_root_locked(const Rational& r) const;
  int sign_locked(Poly e) const;

  mutable std::mutex mu_;
  mutable Poly modulus_;
  mutable Rational lo_, hi_;
  mutable int sign_at_lo_ = 0;
  mutable std::size_t bits_ = 0;
  mutable std::uint64_t version_ = 0;
  mutable double approx_ = 0;
  mutable std::vector<std::weak_ptr<NumberField>> aliases_;
};

using Complex = std::complex<long double>;

// Numerical approximations of all complex roots of `p`.
std::vector<Complex> complex_roots(const Poly& p);

// Factor of `p` (square-free, integer) that vanishes at the unique root in
// (lo, hi), of smallest degree found.  Candidates come from a numerical
// factorization and are accepted only after exact division and a Sturm
// check, so the result always divides `p` and always has the root.
Poly root_factor(const Poly& p, const Rational& lo, const Rational& hi);

class AlgebraicReal {
 public:
  AlgebraicReal() = default;
  AlgebraicReal(const Rational& q) : rep_(q) {}  // NOLINT
  AlgebraicReal(long v) : rep_(Rational(v)) {}   // NOLINT

  static AlgebraicReal generator(std::shared_ptr<NumberField> field);
  // The element rep(θ).
  static AlgebraicReal from_poly(std::shared_ptr<NumberField> field, const Poly& rep);

  const std::shared_ptr<NumberField>& field() const noexcept { return field_; }
  // Polynomial in θ representing this value.
  const Poly& representation() const noexcept { return rep_; }

  bool is_rational() const { return rational_value().has_value(); }
  std::optional<Rational> rational_value() const;

  AlgebraicReal& operator+=(const AlgebraicReal& o);
  AlgebraicReal& operator-=(const AlgebraicReal& o);
  AlgebraicReal& operator*=(const AlgebraicReal& o);
  AlgebraicReal& operator/=(const AlgebraicReal& o);
  friend AlgebraicReal operator+(AlgebraicReal a, const AlgebraicReal& b) { return a += b; }
  friend AlgebraicReal operator-(AlgebraicReal a, const AlgebraicReal& b) { return a -= b; }
  friend AlgebraicReal operator*(AlgebraicReal a, const AlgebraicReal& b) { return a *= b; }
  friend AlgebraicReal operator/(AlgebraicReal a, const AlgebraicReal& b) { return a /= b; }
  AlgebraicReal operator-() const;
  AlgebraicReal pow(long e) const;

  int sign() const;
  RationalInterval enclosure(std::size_t bits) const;
  double to_double() const;
  // `digits` correct significant digits, positional notation: "1.3247".
  std::string to_float(int digits) const;
  // Rounded to `places` decimals: "0.6180".
  std::string to_fixed(int places) const;

  // Primitive integer polynomial vanishing at this value (the minimal
  // polynomial whenever the field's defining polynomial is irreducible).
  Poly minimal_polynomial() const;
  RationalInterval isolating_interval() const;
  // "root of x^2+x-1 in [lo,hi] ≈ 0.6180339887"; rationals print as "p/q".
  std::string to_string() const;
  // The representation as a polynomial in `var`: "-b^2+1".
  std::string expression(std::string_view var) const;
  // Equal for equal values of the same field (given an irreducible
  // defining polynomial); used for orbit hashing.
  std::string key() const;

 private:
  AlgebraicReal(std::shared_ptr<NumberField> f, Poly rep);
  const std::shared_ptr<NumberField>& common_field(const AlgebraicReal& o) const;

  std::shared_ptr<NumberField> field_;
  Poly rep_;
};

std::strong_ordering cmp(const AlgebraicReal& a, const AlgebraicReal& b);
inline std::strong_ordering operator<=>(const AlgebraicReal& a, const AlgebraicReal& b) { return cmp(a, b); }
inline bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return cmp(a, b) == 0; }

struct AlgebraicLess {
  bool operator()(const AlgebraicReal& a, const AlgebraicReal& b) const { return cmp(a, b) < 0; }
};

}  // namespace binradix
