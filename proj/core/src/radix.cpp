#include "binradix/radix.hpp"

#include <cmath>
#include <set>
#include <unordered_map>

#include "binradix/error.hpp"
#include "binradix/numeric.hpp"

namespace binradix {

RadixSystem build(const AdmissiblePair& pair, Variant v) {
  const auto b = solve_base(pair.alpha, pair.beta);
  if (!b) throw DomainError("null pair: the base equation has no root in [1/2, 1)");
  if (is_null(pair)) throw DomainError("null pair: the address space has zero growth rate");
  RadixSystem sys{pair, v, *b, AlgebraicReal(1) / *b, project(*b, pair.alpha)};
  if (sys.p != project(*b, pair.beta)) throw DomainError("projection mismatch between alpha and beta");
  return sys;
}

AlgebraicReal decimal_value(const AlgebraicReal& b, const Decimal& d) {
  const AlgebraicReal series = series_value(d.digits(), b);
  if (d.point() < 0) return b * series;
  return (AlgebraicReal(1) / b).pow(d.point()) * series;
}

AlgebraicReal radix_value(const RadixSystem& sys, const Decimal& d) {
  if (!member_decimal(d, sys.pair, sys.variant))
    throw DomainError("not a member: " + to_string(d) + " is outside the address space");
  return decimal_value(sys.b, d);
}

AlgebraicReal integer_value(const AlgebraicReal& B, const Word& s) {
  AlgebraicReal acc;
  for (Bit c : s) {
    acc *= B;
    if (c) acc += AlgebraicReal(1);
  }
  return acc;
}

AlgebraicReal itinerary_step(const AlgebraicReal& B, const AlgebraicReal& p, const AlgebraicReal& y, Variant v,
                             Bit& bit) {
  const auto c = cmp(y, p);
  bit = (v == Variant::Minus ? c <= 0 : c < 0) ? 0 : 1;
  AlgebraicReal next = B * y;
  if (bit) next += AlgebraicReal(1) - B;
  return next;
}

Word itinerary(const AlgebraicReal& B, const AlgebraicReal& p, AlgebraicReal y, Variant v, std::size_t k) {
  Word out(k);
  for (std::size_t i = 0; i < k; ++i) y = itinerary_step(B, p, y, v, out[i]);
  return out;
}

namespace {

// Orbit points as integer coordinates over the power basis of the field,
// y = (c_0 + c_1 θ + ... + c_{d-1} θ^{d-1}) / den, reduced by the gcd of all
// entries.  B and 1 - B act through integer matrices over a common
// denominator, and the comparison with p goes through a long double filter
// before falling back to exact arithmetic.
struct Point {
  std::vector<Integer> c;
  Integer den;
  friend bool operator==(const Point&, const Point&) = default;
};

struct PointHash {
  std::size_t operator()(const Point& y) const noexcept {
    std::size_t h = mpz_get_ui(y.den.get_mpz_t());
    for (const Integer& c : y.c) h = h * 1000003u ^ (mpz_get_ui(c.get_mpz_t()) + static_cast<std::size_t>(mpz_sgn(c.get_mpz_t()) + 1));
    return h;
  }
};

class OrbitStepper {
 public:
  OrbitStepper(const AlgebraicReal& B, const AlgebraicReal& p, Variant v, std::shared_ptr<NumberField> field)
      : B_(B), p_(p), v_(v), field_(std::move(field)) {
    rebuild();
  }

  // The field's defining polynomial shrank since the last rebuild.
  bool stale() const { return field_ && field_->version() != version_; }

  void rebuild() {
    version_ = field_ ? field_->version() : 0;
    d_ = field_ ? field_->degree() : 1;
    std::vector<std::vector<Rational>> cols;
    const Poly brep = reduce(B_.representation());
    for (std::size_t j = 0; j < d_; ++j) cols.push_back(coords(reduce(brep * Poly::monomial(1, j))));
    const std::vector<Rational> shift = coords(reduce(Poly(1) - brep));
    e_ = 1;
    for (const auto& col : cols)
      for (const Rational& q : col) e_ = lcm(e_, q.get_den());
    for (const Rational& q : shift) e_ = lcm(e_, q.get_den());
    n_.assign(d_, std::vector<Integer>(d_));
    for (std::size_t j = 0; j < d_; ++j)
      for (std::size_t i = 0; i < d_; ++i) n_[i][j] = Integer(cols[j][i] * e_);
    r_.resize(d_);
    for (std::size_t i = 0; i < d_; ++i) r_[i] = Integer(shift[i] * e_);

    theta_pow_.assign(d_, 1.0L);
    if (field_) {
      const RationalInterval iv = field_->enclose(Poly::x(), 64);
      const long double theta = static_cast<long double>(Rational((iv.lo + iv.hi) / 2).get_d());
      for (std::size_t i = 1; i < d_; ++i) theta_pow_[i] = theta_pow_[i - 1] * theta;
    }
    const RationalInterval pv = p_.enclosure(64);
    p_approx_ = static_cast<long double>(Rational((pv.lo + pv.hi) / 2).get_d());
    escape_.clear();
    if (!field_ || d_ < 2) return;
    std::vector<Complex> roots = complex_roots(field_->modulus());
    const long double theta = d_ > 1 ? theta_pow_[1] : 0;
    // The real embedding is the root nearest theta; the others bound closed orbits.
    roots.erase(std::min_element(roots.begin(), roots.end(), [&](const Complex& a, const Complex& b) {
      return std::abs(a - theta) < std::abs(b - theta);
    }));
    for (const Complex& z : roots) {
      const Complex lambda = eval_poly(brep, z);
      const long double m = std::abs(lambda);
      // Beyond |1 - lambda| / (|lambda| - 1) the conjugate orbit grows forever.
      if (m > 1 + 1e-6L) escape_.push_back({z, 2 * std::abs(Complex(1) - lambda) / (m - 1) + 1});
    }
  }

  Point from(const AlgebraicReal& y) const {
    const std::vector<Rational> q = coords(reduce(y.representation()));
    Point pt{std::vector<Integer>(d_), 1};
    for (const Rational& x : q) pt.den = lcm(pt.den, x.get_den());
    for (std::size_t i = 0; i < d_; ++i) pt.c[i] = Integer(q[i] * pt.den);
    return pt;
  }

  AlgebraicReal value(const Point& y) const {
    std::vector<Rational> q(d_);
    for (std::size_t i = 0; i < d_; ++i) {
      q[i] = Rational(y.c[i], y.den);
      q[i].canonicalize();
    }
    if (!field_) return AlgebraicReal(q[0]);
    return AlgebraicReal::from_poly(field_, Poly(std::move(q)));
  }

  // Emits the digit of y and advances it.
  Bit step(Point& y) {
    const int c = compare_p(y);
    const Bit bit = (v_ == Variant::Minus ? c <= 0 : c < 0) ? 0 : 1;
    next_.c.resize(d_);
    for (std::size_t i = 0; i < d_; ++i) {
      mpz_ptr acc = next_.c[i].get_mpz_t();
      mpz_set_ui(acc, 0);
      for (std::size_t j = 0; j < d_; ++j) mpz_addmul(acc, n_[i][j].get_mpz_t(), y.c[j].get_mpz_t());
      if (bit) mpz_addmul(acc, r_[i].get_mpz_t(), y.den.get_mpz_t());
    }
    mpz_mul(next_.den.get_mpz_t(), y.den.get_mpz_t(), e_.get_mpz_t());
    mpz_ptr g = g_.get_mpz_t();
    mpz_set(g, next_.den.get_mpz_t());
    for (const Integer& x : next_.c) {
      if (mpz_cmp_ui(g, 1) == 0) break;
      mpz_gcd(g, g, x.get_mpz_t());
    }
    if (mpz_cmp_ui(g, 1) != 0) {
      for (Integer& x : next_.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g);
      mpz_divexact(next_.den.get_mpz_t(), next_.den.get_mpz_t(), g);
    }
    std::swap(y, next_);
    return bit;
  }

  bool escaped(const Point& y) const {
    for (const auto& [root, radius] : escape_) {
      Complex v = 0;
      long double mag = 0;
      const long double r = std::abs(root);
      const long double den = static_cast<long double>(y.den.get_d());
      for (std::size_t i = d_; i-- > 0;) {
        const long double c = static_cast<long double>(y.c[i].get_d()) / den;
        v = v * root + c;
        mag = mag * r + std::abs(c);
      }
      const long double err = mag * 1e-12L;
      if (std::isfinite(err) && std::abs(v) - err > radius) return true;
    }
    return false;
  }

 private:
  Poly reduce(const Poly& e) const { return field_ ? field_->reduce(e) : e; }

  std::vector<Rational> coords(const Poly& e) const {
    std::vector<Rational> q(d_);
    for (std::size_t i = 0; i < d_; ++i) q[i] = e.coeff(i);
    return q;
  }

  static Complex eval_poly(const Poly& p, const Complex& z) {
    Complex v = 0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) v = v * z + static_cast<long double>(p.coeffs()[i].get_d());
    return v;
  }

  int compare_p(const Point& y) const {
    long double approx = 0, mag = 0;
    const long double den = static_cast<long double>(y.den.get_d());
    bool finite = std::isfinite(den);
    for (std::size_t i = 0; i < d_; ++i) {
      const long double c = static_cast<long double>(y.c[i].get_d()) / den;
      finite = finite && std::isfinite(c);
      approx += c * theta_pow_[i];
      mag += std::abs(c) * theta_pow_[i];
    }
    const long double diff = approx - p_approx_;
    if (finite && std::abs(diff) > (mag + 1) * 1e-14L) return diff < 0 ? -1 : 1;
    const auto c = cmp(value(y), p_);
    return c < 0 ? -1 : c > 0 ? 1 : 0;
  }

  struct Escape {
    Complex root;
    long double radius;
  };

  AlgebraicReal B_, p_;
  Variant v_;
  std::shared_ptr<NumberField> field_;
  std::uint64_t version_ = 0;
  std::size_t d_ = 1;
  Integer e_;
  std::vector<std::vector<Integer>> n_;
  std::vector<Integer> r_;
  std::vector<long double> theta_pow_;
  long double p_approx_ = 0;
  std::vector<Escape> escape_;
  Point next_;
  Integer g_;
};

}  // namespace

Orbit itinerary_orbit(const AlgebraicReal& B, const AlgebraicReal& p, const AlgebraicReal& y0, Variant v,
                      std::size_t max_steps, std::size_t min_digits) {
  std::shared_ptr<NumberField> field = B.field() ? B.field() : p.field() ? p.field() : y0.field();
  OrbitStepper stepper(B, p, v, field);
  Orbit orbit;
  std::unordered_map<Point, std::size_t, PointHash> seen;
  Point y = stepper.from(y0);
  bool open = false;  // proven never to close
  for (std::size_t step = 0; step < std::max(max_steps, min_digits); ++step) {
    if (open && step >= min_digits) break;
    if (stepper.stale()) {
      // The defining polynomial shrank; coordinates must be recomputed.
      std::vector<std::pair<AlgebraicReal, std::size_t>> values;
      for (const auto& [pt, i] : seen) values.emplace_back(stepper.value(pt), i);
      const AlgebraicReal cur = stepper.value(y);
      stepper.rebuild();
      seen.clear();
      for (const auto& [val, i] : values) seen.emplace(stepper.from(val), i);
      y = stepper.from(cur);
    }
    if (step < max_steps && !open) {
      open = stepper.escaped(y);
      if (!open) {
        const auto [it, inserted] = seen.emplace(y, step);
        if (!inserted) {
          const std::size_t j = it->second;
          orbit.digits = EpString::normalize(Word(orbit.prefix.begin(), orbit.prefix.begin() + static_cast<long>(j)),
                                             Word(orbit.prefix.begin() + static_cast<long>(j), orbit.prefix.end()));
          while (orbit.prefix.size() < min_digits) orbit.prefix.push_back(orbit.digits->at(orbit.prefix.size()));
          return orbit;
        }
      }
    }
    orbit.prefix.push_back(stepper.step(y));
  }
  return orbit;
}

std::string EncodeResult::to_string() const {
  if (exact) return binradix::to_string(*exact);
  const Decimal d = truncated_decimal();
  std::string whole = binradix::to_string(d.integer_part());
  const std::size_t int_len = static_cast<std::size_t>(point + 1);
  std::string frac;
  for (std::size_t i = int_len; i < prefix.size(); ++i) frac.push_back(static_cast<char>('0' + prefix[i]));
  return whole + "." + frac + "…";
}

Decimal EncodeResult::truncated_decimal() const { return Decimal(EpString::normalize(prefix, Word{0}), point); }

EncodeResult encode(const RadixSystem& sys, const AlgebraicReal& x, std::size_t digits, std::size_t max_steps) {
  if (x.sign() < 0) throw DomainError("negative input: only non-negative reals have addresses");
  AlgebraicReal y = (AlgebraicReal(1) - sys.b) * x;
  long n = 0;
  while (cmp(y, sys.p) >= 0) {
    y *= sys.b;
    ++n;
  }
  const std::size_t want = static_cast<std::size_t>(n + 1) + digits;
  Orbit orbit = itinerary_orbit(sys.B, sys.p, y, sys.variant, max_steps, want);
  EncodeResult r;
  r.variant = sys.variant;
  r.point = n;
  if (orbit.digits) {
    r.exact = Decimal(*orbit.digits, n);
  } else {
    orbit.prefix.resize(want);
    r.prefix = std::move(orbit.prefix);
  }
  return r;
}

RecoveredPair pair_from_base(const AlgebraicReal& B, const AlgebraicReal& p, std::size_t max_steps,
                             std::size_t prefix_len) {
  if (B <= AlgebraicReal(1) || B > AlgebraicReal(2)) throw DomainError("base must satisfy 1 < B <= 2");
  const AlgebraicReal b = AlgebraicReal(1) / B;
  if (p < AlgebraicReal(1) - b || p > b) throw DomainError("partition point must satisfy 1 - 1/B <= p <= 1/B");
  RecoveredPair r;
  r.alpha = itinerary_orbit(B, p, p, Variant::Minus, max_steps, prefix_len);
  r.beta = itinerary_orbit(B, p, p, Variant::Plus, max_steps, prefix_len);
  if (r.exact()) r.violations = check_admissible(*r.alpha.digits, *r.beta.digits);
  return r;
}

std::size_t lap_count(const AlgebraicReal& B, const AlgebraicReal& p, Variant v, std::size_t n) {
  const AlgebraicReal b = AlgebraicReal(1) / B;
  const AlgebraicReal zero, one(1);
  std::set<AlgebraicReal, AlgebraicLess> cuts;
  std::vector<AlgebraicReal> frontier{p};
  // frontier holds the points z with f^k(z) = p.
  for (std::size_t k = 0; k < n && !frontier.empty(); ++k) {
    std::vector<AlgebraicReal> next;
    for (const AlgebraicReal& z : frontier) {
      if (z <= zero || z >= one) continue;
      if (!cuts.insert(z).second) continue;
      const AlgebraicReal left = b * z;  // g0
      const AlgebraicReal right = b * z + one - b;  // g1
      const auto cl = cmp(left, p), cr = cmp(right, p);
      if (v == Variant::Minus ? cl <= 0 : cl < 0) next.push_back(left);
      if (v == Variant::Minus ? cr > 0 : cr >= 0) next.push_back(right);
    }
    frontier = std::move(next);
  }
  return cuts.size() + 1;
}

}  // namespace binradix
