#include "binradix/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>

#include "binradix/error.hpp"

namespace binradix {

namespace {

Rational pow2_neg(std::size_t bits) {
  Integer d = 1;
  mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), bits);
  return Rational(Integer(1), d);
}

Integer pow10(int k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return r;
}

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Places a decimal point `places` digits from the right of |n|.
std::string decimal_string(Integer n, int places) {
  const bool neg = n < 0;
  if (neg) n = -n;
  std::string digits = n.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places))
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  return (neg ? "-" : "") + digits;
}

// Rounds half away from zero.
std::string fixed_string(const Rational& v, int places) {
  const Rational scaled = v * Rational(pow10(places));
  const bool neg = scaled < 0;
  Integer n = floor_q((neg ? Rational(-scaled) : scaled) + Rational(1, 2));
  if (neg && n != 0) n = -n;
  return decimal_string(n, places);
}

std::size_t open_root_count(const Poly& p, const std::vector<Poly>& sturm, const Rational& lo, const Rational& hi) {
  std::size_t n = count_roots(sturm, lo, hi);
  if (n > 0 && p.eval(hi) == 0) --n;
  return n;
}

std::vector<Integer> positive_divisors(const Integer& m) {
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d * d != m) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

// Aberth-Ehrlich iteration.
std::vector<Complex> complex_roots(const Poly& p) {
  const std::size_t n = static_cast<std::size_t>(p.degree());
  std::vector<long double> a(n + 1);
  const long double lc = static_cast<long double>(p.leading().get_d());
  for (std::size_t i = 0; i <= n; ++i) a[i] = static_cast<long double>(p.coeff(i).get_d()) / lc;
  long double radius = 0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[i]));
  radius = std::min<long double>(1 + radius, 64);

  auto eval = [&](Complex z, Complex& dz) {
    Complex v = 1, d = 0;
    for (std::size_t i = n; i-- > 0;) {
      d = d * z + v;
      v = v * z + a[i];
    }
    dz = d;
    return v;
  };

  std::vector<Complex> z(n);
  const long double pi = std::acos(-1.0L);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius * 0.7L, 2 * pi * static_cast<long double>(k) / static_cast<long double>(n) + 0.4L);
  for (int iter = 0; iter < 800; ++iter) {
    long double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex dv;
      const Complex v = eval(z[k], dv);
      if (v == Complex(0)) continue;
      const Complex ratio = v / dv;
      Complex s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) s += Complex(1) / (z[k] - z[j]);
      const Complex w = ratio / (Complex(1) - ratio * s);
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max<long double>(1, std::abs(z[k])));
    }
    if (worst < 1e-18L) break;
  }
  return z;
}

Poly root_factor(const Poly& p, const Rational& lo, const Rational& hi) {
  const long d = p.degree();
  if (d <= 1 || d > 60) return p;

  // Locate the root well enough to pick it among the numerical roots.
  Rational a = lo, b = hi;
  const int sa = sgn(p.eval(a));
  for (int i = 0; i < 60; ++i) {
    const Rational mid = (a + b) / 2;
    const int s = sgn(p.eval(mid));
    if (s == 0) return Poly({-mid, Rational(1)}).primitive();
    (s == sa ? a : b) = mid;
  }
  const long double theta = static_cast<long double>(Rational((a + b) / 2).get_d());

  const std::vector<Complex> roots = complex_roots(p);
  std::size_t target = 0;
  for (std::size_t i = 1; i < roots.size(); ++i)
    if (std::abs(roots[i] - theta) < std::abs(roots[target] - theta)) target = i;

  // Units: single real roots or conjugate pairs; a rational factor is a
  // union of units.
  std::vector<std::vector<Complex>> units;
  std::vector<bool> used(roots.size(), false);
  used[target] = true;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const Complex r = roots[i];
    if (std::abs(r.imag()) < 1e-9L * std::max<long double>(1, std::abs(r))) {
      units.push_back({Complex(r.real(), 0)});
      continue;
    }
    std::size_t best = roots.size();
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (used[j]) continue;
      if (best == roots.size() || std::abs(roots[j] - std::conj(r)) < std::abs(roots[best] - std::conj(r))) best = j;
    }
    if (best == roots.size()) return p;
    used[best] = true;
    units.push_back({r, std::conj(r)});
  }
  if (units.size() > 16) return p;

  Integer lc = abs(p.leading().get_num());
  if (lc > Integer("1000000000000")) return p;
  const std::vector<Integer> divisors = positive_divisors(lc);

  auto try_candidate = [&](const std::vector<Complex>& chosen) -> std::optional<Poly> {
    std::vector<Complex> c{Complex(1)};
    for (const Complex& r : chosen) {
      std::vector<Complex> next(c.size() + 1, Complex(0));
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= r * c[i];
      }
      c = std::move(next);
    }
    for (const Integer& m : divisors) {
      const long double scale = static_cast<long double>(m.get_d());
      std::vector<Rational> coeffs;
      bool ok = true;
      for (const Complex& v : c) {
        const long double x = v.real() * scale;
        const long double r = std::round(x);
        if (std::abs(x - r) > 1e-6L * std::max<long double>(1, std::abs(x)) || std::abs(r) > 9e18L) {
          ok = false;
          break;
        }
        coeffs.emplace_back(static_cast<long>(r));
      }
      if (!ok) continue;
      Poly f(std::move(coeffs));
      if (f.degree() < 1 || !(p % f).is_zero()) continue;
      if (open_root_count(f, sturm_sequence(f), lo, hi) != 1) continue;
      return f.primitive();
    }
    return std::nullopt;
  };

  // Smallest factor first: enumerate unit subsets by total degree.
  std::vector<Complex> chosen{roots[target]};
  std::optional<Poly> found;
  std::function<void(std::size_t, long)> search = [&](std::size_t from, long remaining) {
    if (found) return;
    if (remaining == 0) {
      found = try_candidate(chosen);
      return;
    }
    for (std::size_t i = from; i < units.size() && !found; ++i) {
      const long deg = static_cast<long>(units[i].size());
      if (deg > remaining) continue;
      chosen.insert(chosen.end(), units[i].begin(), units[i].end());
      search(i + 1, remaining - deg);
      chosen.resize(chosen.size() - units[i].size());
    }
  };
  for (long t = 1; t < d && !found; ++t) search(0, t - 1);
  return found ? *found : p;
}

std::shared_ptr<NumberField> NumberField::create(const Poly& poly, const Rational& lo_in, const Rational& hi_in) {
  Poly p = square_free(poly).primitive();
  if (p.degree() < 1) throw DomainError("defining polynomial must be nonconstant");
  if (lo_in >= hi_in) throw DomainError("empty isolating interval");
  std::shared_ptr<NumberField> f(new NumberField());
  const std::vector<Poly> sturm = sturm_sequence(p);
  Rational lo = lo_in, hi = hi_in;
  if (open_root_count(p, sturm, lo, hi) != 1)
    throw DomainError(p.to_string() + " does not have exactly one root in (" + to_string(lo) + ", " + to_string(hi) + ")");
  while (p.eval(lo) == 0 || p.eval(hi) == 0) {
    const Rational mid = (lo + hi) / 2;
    if (p.eval(mid) == 0) {
      f->set_rational_root_locked(mid);
      return f;
    }
    if (open_root_count(p, sturm, lo, mid) == 1)
      hi = mid;
    else
      lo = mid;
  }
  p = root_factor(p, lo, hi);
  f->lo_ = lo;
  f->hi_ = hi;
  if (p.degree() == 1) {
    f->set_rational_root_locked(-p.coeff(0) / p.coeff(1));
    return f;
  }
  f->modulus_ = p;
  f->sign_at_lo_ = sgn(p.eval(lo));
  f->refine_locked(64);
  return f;
}

void NumberField::set_rational_root_locked(const Rational& r) const {
  modulus_ = Poly({-r, Rational(1)}).primitive();
  lo_ = hi_ = r;
  ++version_;
  approx_ = r.get_d();
  bits_ = std::numeric_limits<std::size_t>::max();
}

void NumberField::refine_locked(std::size_t bits) const {
  if (lo_ == hi_ || bits <= bits_) return;
  const Rational target = pow2_neg(bits);
  while (hi_ - lo_ > target) {
    const Rational mid = (lo_ + hi_) / 2;
    const int s = sgn(modulus_.eval(mid));
    if (s == 0) {
      set_rational_root_locked(mid);
      return;
    }
    if (s == sign_at_lo_)
      lo_ = mid;
    else
      hi_ = mid;
  }
  bits_ = bits;
  approx_ = Rational((lo_ + hi_) / 2).get_d();
}

void NumberField::split_locked(const Poly& factor) const {
  Poly g = factor.primitive();
  if (g.degree() < 1 || g.degree() >= modulus_.degree()) return;
  Poly next = open_root_count(g, sturm_sequence(g), lo_, hi_) == 1 ? g : (modulus_ / g).primitive();
  if (next == modulus_) return;
  ++version_;
  if (next.degree() == 1) {
    set_rational_root_locked(-next.coeff(0) / next.coeff(1));
    return;
  }
  modulus_ = std::move(next);
  sign_at_lo_ = sgn(modulus_.eval(lo_));
}

Poly NumberField::modulus() const {
  std::lock_guard lock(mu_);
  return modulus_;
}

std::size_t NumberField::degree() const {
  std::lock_guard lock(mu_);
  return static_cast<std::size_t>(modulus_.degree());
}

RationalInterval NumberField::interval() const {
  std::lock_guard lock(mu_);
  return {lo_, hi_};
}

std::uint64_t NumberField::version() const {
  std::lock_guard lock(mu_);
  return version_;
}

Poly NumberField::reduce(const Poly& e) const {
  std::lock_guard lock(mu_);
  if (e.degree() < modulus_.degree()) return e;
  return e % modulus_;
}

int NumberField::sign(const Poly& e) const {
  std::lock_guard lock(mu_);
  return sign_locked(e);
}

int NumberField::sign_locked(Poly e) const {
  if (e.degree() >= modulus_.degree()) e = e % modulus_;
  if (e.degree() <= 0) return sgn(e.coeff(0));

  // Floating-point filter; decisive only with a wide safety margin.
  if (bits_ >= 50 && e.degree() < 64 && std::abs(approx_) >= 1.0 / 16 && std::abs(approx_) <= 16) {
    double v = 0, mag = 0;
    const double t = approx_;
    for (auto it = e.coeffs().rbegin(); it != e.coeffs().rend(); ++it) {
      const double c = it->get_d();
      v = v * t + c;
      mag = mag * std::abs(t) + std::abs(c);
    }
    if (std::isfinite(v) && std::isfinite(mag) && mag < 1e300 && std::abs(v) > 1e-9 * mag) return v > 0 ? 1 : -1;
  }

  bool split_tried = false;
  std::size_t bits = std::max<std::size_t>(bits_, 64);
  for (;;) {
    const RationalInterval iv = e.eval(RationalInterval{lo_, hi_});
    if (iv.lo > 0) return 1;
    if (iv.hi < 0) return -1;
    if (!split_tried) {
      split_tried = true;
      const Poly g = gcd(e, modulus_);
      if (g.degree() >= 1) {
        split_locked(g);
        if (e.degree() >= modulus_.degree()) e = e % modulus_;
        if (e.degree() <= 0) return sgn(e.coeff(0));
      }
    }
    bits *= 2;
    refine_locked(bits);
  }
}

Poly NumberField::inverse(const Poly& e) const {
  std::lock_guard lock(mu_);
  for (;;) {
    const Poly r = e.degree() >= modulus_.degree() ? e % modulus_ : e;
    if (r.is_zero()) throw DomainError("division by zero");
    auto [g, s] = gcd_inverse(r, modulus_);
    if (g.degree() == 0) return s;
    split_locked(g);
  }
}

RationalInterval NumberField::enclose(const Poly& e_in, std::size_t bits) const {
  std::lock_guard lock(mu_);
  const Poly e = e_in.degree() >= modulus_.degree() ? e_in % modulus_ : e_in;
  const Rational target = pow2_neg(bits);
  std::size_t b = std::max<std::size_t>(bits_, 64);
  for (;;) {
    const RationalInterval iv = e.eval(RationalInterval{lo_, hi_});
    if (iv.width() <= target) return iv;
    b *= 2;
    refine_locked(b);
  }
}

std::string NumberField::description() const {
  std::lock_guard lock(mu_);
  return "root of " + modulus_.to_string() + " in [" + to_string(lo_) + "," + to_string(hi_) + "]";
}

bool NumberField::same_generator(const std::shared_ptr<NumberField>& a, const std::shared_ptr<NumberField>& b) {
  if (a == b) return true;
  auto known = [](const std::shared_ptr<NumberField>& f, const std::shared_ptr<NumberField>& g) {
    std::lock_guard lock(f->mu_);
    return std::any_of(f->aliases_.begin(), f->aliases_.end(), [&g](const auto& w) { return w.lock() == g; });
  };
  if (known(a, b)) return true;
  if (cmp(AlgebraicReal::generator(a), AlgebraicReal::generator(b)) != 0) return false;
  for (const auto& [f, g] : {std::pair{a, b}, std::pair{b, a}}) {
    std::lock_guard lock(f->mu_);
    std::erase_if(f->aliases_, [](const auto& w) { return w.expired(); });
    f->aliases_.push_back(g);
  }
  return true;
}

AlgebraicReal::AlgebraicReal(std::shared_ptr<NumberField> f, Poly rep) : field_(std::move(f)), rep_(std::move(rep)) {
  if (field_) rep_ = field_->reduce(rep_);
}

AlgebraicReal AlgebraicReal::generator(std::shared_ptr<NumberField> field) {
  return AlgebraicReal(std::move(field), Poly::x());
}

AlgebraicReal AlgebraicReal::from_poly(std::shared_ptr<NumberField> field, const Poly& rep) {
  return AlgebraicReal(std::move(field), rep);
}

std::optional<Rational> AlgebraicReal::rational_value() const {
  if (rep_.degree() <= 0) return rep_.coeff(0);
  const Poly r = field_->reduce(rep_);
  if (r.degree() <= 0) return r.coeff(0);
  return std::nullopt;
}

const std::shared_ptr<NumberField>& AlgebraicReal::common_field(const AlgebraicReal& o) const {
  if (!field_ || rep_.degree() <= 0) return o.field_ ? o.field_ : field_;
  if (!o.field_ || o.field_ == field_ || o.rep_.degree() <= 0) return field_;
  if (NumberField::same_generator(field_, o.field_)) return field_;
  throw std::invalid_argument("arithmetic on elements of different number fields");
}

AlgebraicReal& AlgebraicReal::operator+=(const AlgebraicReal& o) {
  field_ = common_field(o);
  rep_ += o.rep_;
  if (field_) rep_ = field_->reduce(rep_);
  return *this;
}

AlgebraicReal& AlgebraicReal::operator-=(const AlgebraicReal& o) {
  field_ = common_field(o);
  rep_ -= o.rep_;
  if (field_) rep_ = field_->reduce(rep_);
  return *this;
}

AlgebraicReal& AlgebraicReal::operator*=(const AlgebraicReal& o) {
  field_ = common_field(o);
  rep_ *= o.rep_;
  if (field_) rep_ = field_->reduce(rep_);
  return *this;
}

AlgebraicReal& AlgebraicReal::operator/=(const AlgebraicReal& o) {
  field_ = common_field(o);
  if (o.rep_.degree() <= 0) {
    if (o.rep_.is_zero()) throw DomainError("division by zero");
    rep_ *= Rational(1 / o.rep_.coeff(0));
    return *this;
  }
  rep_ = field_->reduce(rep_ * field_->inverse(o.rep_));
  return *this;
}

AlgebraicReal AlgebraicReal::operator-() const {
  AlgebraicReal r = *this;
  r.rep_ = -r.rep_;
  return r;
}

AlgebraicReal AlgebraicReal::pow(long e) const {
  AlgebraicReal base = e < 0 ? AlgebraicReal(1) / *this : *this;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  AlgebraicReal r(1);
  while (n) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return r;
}

int AlgebraicReal::sign() const {
  if (rep_.degree() <= 0) return sgn(rep_.coeff(0));
  return field_->sign(rep_);
}

RationalInterval AlgebraicReal::enclosure(std::size_t bits) const {
  if (rep_.degree() <= 0) return {rep_.coeff(0), rep_.coeff(0)};
  return field_->enclose(rep_, bits);
}

double AlgebraicReal::to_double() const {
  const RationalInterval iv = enclosure(64);
  return Rational((iv.lo + iv.hi) / 2).get_d();
}

std::string AlgebraicReal::to_fixed(int places) const {
  if (auto q = rational_value()) return fixed_string(*q, places);
  const auto bits = static_cast<std::size_t>(std::ceil((places + 3) * 3.3219281)) + 4;
  const RationalInterval iv = enclosure(bits);
  return fixed_string((iv.lo + iv.hi) / 2, places);
}

std::string AlgebraicReal::to_float(int digits) const {
  const int s = sign();
  if (s == 0) return "0";
  // Decimal exponent of the leading digit.
  std::size_t bits = 64;
  RationalInterval iv = enclosure(bits);
  while (iv.lo <= 0 && iv.hi >= 0) iv = enclosure(bits *= 2);
  Rational mag = s > 0 ? iv.lo : Rational(-iv.hi);
  int e10 = static_cast<int>(std::floor(std::log10(mag.get_d())));
  while (Rational(pow10(std::max(e10 + 1, 0))) / Rational(pow10(std::max(-(e10 + 1), 0))) <= mag) ++e10;
  while (Rational(pow10(std::max(e10, 0))) / Rational(pow10(std::max(-e10, 0))) > mag) --e10;
  return to_fixed(std::max(digits - 1 - e10, 0));
}

namespace {

// Characteristic polynomial of multiplication by `rep` in Q[x]/(m),
// by Faddeev-LeVerrier.
Poly charpoly(const Poly& rep, const Poly& m) {
  const std::size_t d = static_cast<std::size_t>(m.degree());
  using Matrix = std::vector<std::vector<Rational>>;
  Matrix a(d, std::vector<Rational>(d));
  Poly col = rep % m;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) a[i][j] = col.coeff(i);
    col = (col * Poly::x()) % m;
  }
  std::vector<Rational> c(d + 1);
  c[d] = 1;
  Matrix prev(d, std::vector<Rational>(d));
  for (std::size_t k = 1; k <= d; ++k) {
    Matrix cur(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t t = 0; t < d; ++t) {
        if (a[i][t] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) cur[i][j] += a[i][t] * prev[t][j];
      }
    for (std::size_t i = 0; i < d; ++i) cur[i][i] += c[d - k + 1];
    Rational tr = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t t = 0; t < d; ++t) tr += a[i][t] * cur[t][i];
    c[d - k] = -tr / static_cast<long>(k);
    prev = std::move(cur);
  }
  return Poly(std::move(c));
}

// Interval around `value` with nonroot endpoints holding exactly one root
// of `p`, found by rounding enclosures outward to k decimal places.
RationalInterval isolate(const AlgebraicReal& value, const Poly& p) {
  const std::vector<Poly> sturm = sturm_sequence(p);
  for (int k = 1;; ++k) {
    const RationalInterval iv = value.enclosure(static_cast<std::size_t>(k * 4 + 8));
    const Rational scale(pow10(k));
    const Rational lo = Rational(floor_q(iv.lo * scale)) / scale;
    Rational hi = Rational(ceil_q(iv.hi * scale)) / scale;
    if (hi == lo) hi += Rational(1) / scale;
    if (p.eval(lo) == 0 || p.eval(hi) == 0) continue;
    if (count_roots(sturm, lo, hi) == 1) return {lo, hi};
  }
}

}  // namespace

Poly AlgebraicReal::minimal_polynomial() const {
  if (auto q = rational_value()) return Poly({-*q, Rational(1)}).primitive();
  const Poly sf = square_free(charpoly(rep_, field_->modulus()));
  const RationalInterval iv = isolate(*this, sf);
  return root_factor(sf, iv.lo, iv.hi);
}

RationalInterval AlgebraicReal::isolating_interval() const {
  if (auto q = rational_value()) return {*q, *q};
  return isolate(*this, minimal_polynomial());
}

std::string AlgebraicReal::to_string() const {
  if (auto q = rational_value()) return binradix::to_string(*q);
  const Poly m = minimal_polynomial();
  const RationalInterval iv = isolating_interval();
  auto show = [](const Rational& q) {
    // Endpoints are decimal by construction.
    Integer den = q.get_den();
    int places = 0;
    while (den > 1) {
      den /= 10;
      ++places;
    }
    return fixed_string(q, places);
  };
  return "root of " + m.to_string() + " in [" + show(iv.lo) + "," + show(iv.hi) + "] ≈ " + to_float(12);
}

std::string AlgebraicReal::expression(std::string_view var) const {
  return (field_ ? field_->reduce(rep_) : rep_).to_string(var);
}

std::string AlgebraicReal::key() const {
  const Poly r = field_ ? field_->reduce(rep_) : rep_;
  std::string k;
  for (const auto& c : r.coeffs()) {
    k += c.get_str();
    k += ',';
  }
  return k;
}

std::strong_ordering cmp(const AlgebraicReal& a, const AlgebraicReal& b) {
  const bool same = !a.field() || !b.field() || a.field() == b.field() || a.representation().degree() <= 0 ||
                    b.representation().degree() <= 0;
  if (same) {
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  // Different fields: separate by refinement, or prove equality through a
  // common factor of the minimal polynomials.
  const Poly g = gcd(a.minimal_polynomial(), b.minimal_polynomial());
  auto is_root = [&g](const AlgebraicReal& v) {
    AlgebraicReal acc;
    for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it) acc = acc * v + AlgebraicReal(*it);
    return acc.sign() == 0;
  };
  const bool common_root = g.degree() >= 1 && is_root(a) && is_root(b);
  const std::vector<Poly> sturm = common_root ? sturm_sequence(g) : std::vector<Poly>{};
  for (std::size_t bits = 64;; bits *= 2) {
    const RationalInterval ia = a.enclosure(bits), ib = b.enclosure(bits);
    if (ia.hi < ib.lo) return std::strong_ordering::less;
    if (ia.lo > ib.hi) return std::strong_ordering::greater;
    if (common_root) {
      const Rational lo = std::min(ia.lo, ib.lo), hi = std::max(ia.hi, ib.hi);
      std::size_t n = count_roots(sturm, lo, hi);
      if (g.eval(lo) == 0) ++n;
      if (n == 1) return std::strong_ordering::equal;
    }
  }
}

}  // namespace binradix
