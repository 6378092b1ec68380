#pragma once

// Power series of eventually periodic strings, the base equation, and the
// projection map  w -> (1-b) * sum w_k b^k.

#include <optional>

#include "binradix/algebraic.hpp"
#include "binradix/word.hpp"

namespace binradix {

// num/den as a rational function; den(0) = 1.
struct PolyFraction {
  Poly num;
  Poly den;
};

// Closed form of sum_n w_n x^n for |x| < 1, in lowest terms.
PolyFraction series_form(const EpString& w);

// sum_n w_n x^n, evaluated without forming the closed form.
AlgebraicReal series_value(const EpString& w, const AlgebraicReal& x);

// p evaluated at x (Horner in the field of x).
AlgebraicReal evaluate(const Poly& p, const AlgebraicReal& x);
AlgebraicReal evaluate(const PolyFraction& f, const AlgebraicReal& x);

// Primitive integer numerator of series_form(alpha) - series_form(beta).
Poly base_equation(const EpString& alpha, const EpString& beta);

// Least root of the base equation in [1/2, 1), or nullopt if there is none.
std::optional<AlgebraicReal> solve_base(const EpString& alpha, const EpString& beta);

// (1-b) * sum w_k b^k, exact.
AlgebraicReal project(const AlgebraicReal& b, const EpString& w);

}  // namespace binradix
