#include "binradix/numeric.hpp"

#include <map>

namespace binradix {

namespace {

Poly word_poly(const Word& w) {
  std::vector<Rational> c(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) c[i] = w[i];
  return Poly(std::move(c));
}

}  // namespace

PolyFraction series_form(const EpString& w) {
  if (w.is_zero()) return {Poly(), Poly(1)};
  const std::size_t m = w.preperiod().size(), q = w.period().size();
  Poly den = Poly(1) - Poly::monomial(1, q);
  Poly num = word_poly(w.preperiod()) * den + Poly::monomial(1, m) * word_poly(w.period());
  // Common factors can only be cyclotomic factors of 1 - x^q.
  std::map<std::size_t, Poly> cyclotomic;
  for (std::size_t d = 1; d <= q; ++d) {
    if (q % d != 0) continue;
    Poly phi = Poly::monomial(1, d) - Poly(1);
    for (const auto& [e, f] : cyclotomic)
      if (d % e == 0) phi = phi / f;
    cyclotomic.emplace(d, phi);
    for (;;) {
      auto [qn, rn] = divmod(num, phi);
      if (!rn.is_zero()) break;
      auto [qd, rd] = divmod(den, phi);
      if (!rd.is_zero()) break;
      num = std::move(qn);
      den = std::move(qd);
    }
  }
  const Rational c0 = den.coeff(0);
  return {num * Rational(1 / c0), den * Rational(1 / c0)};
}

AlgebraicReal series_value(const EpString& w, const AlgebraicReal& x) {
  if (w.is_zero()) return AlgebraicReal();
  const std::size_t m = w.preperiod().size(), q = w.period().size();
  const AlgebraicReal head = evaluate(word_poly(w.preperiod()), x);
  const AlgebraicReal tail = evaluate(word_poly(w.period()), x) / (AlgebraicReal(1) - x.pow(static_cast<long>(q)));
  return head + x.pow(static_cast<long>(m)) * tail;
}

AlgebraicReal evaluate(const Poly& p, const AlgebraicReal& x) {
  if (x.field() && x.representation() == Poly::x()) return AlgebraicReal::from_poly(x.field(), p);
  AlgebraicReal acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + AlgebraicReal(*it);
  return acc;
}

AlgebraicReal evaluate(const PolyFraction& f, const AlgebraicReal& x) {
  return evaluate(f.num, x) / evaluate(f.den, x);
}

Poly base_equation(const EpString& alpha, const EpString& beta) {
  const PolyFraction a = series_form(alpha), b = series_form(beta);
  return (a.num * b.den - b.num * a.den).primitive();
}

std::optional<AlgebraicReal> solve_base(const EpString& alpha, const EpString& beta) {
  const Poly e = square_free(base_equation(alpha, beta));
  if (e.degree() < 1) return std::nullopt;
  Rational lo(1, 2), hi(1);
  if (e.eval(lo) == 0) return AlgebraicReal(lo);
  const std::vector<Poly> sturm = sturm_sequence(e);
  auto open_count = [&](const Rational& a, const Rational& b) {
    std::size_t n = count_roots(sturm, a, b);
    if (n > 0 && e.eval(b) == 0) --n;
    return n;
  };
  if (open_count(lo, hi) == 0) return std::nullopt;
  // Bisect toward the least root until it is the only one left.
  while (open_count(lo, hi) > 1) {
    const Rational mid = (lo + hi) / 2;
    const std::size_t left = open_count(lo, mid);
    if (left >= 1)
      hi = mid;
    else if (e.eval(mid) == 0)
      return AlgebraicReal(mid);
    else
      lo = mid;
  }
  return AlgebraicReal::generator(NumberField::create(e, lo, hi));
}

AlgebraicReal project(const AlgebraicReal& b, const EpString& w) {
  return (AlgebraicReal(1) - b) * series_value(w, b);
}

}  // namespace binradix
