#include "qtwist/ratfunc.hpp"

#include <numeric>

namespace qtwist {

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(Rational(1));
    return;
  }
  const int sn = num_.min_exp();
  const int sd = den_.min_exp();
  LaurentPoly a = shifted(num_, -sn);
  LaurentPoly b = shifted(den_, -sd);
  LaurentPoly g = poly_gcd(a, b);
  if (!(g.coeffs.size() == 1 && g.coeff(0) == 1)) {
    a = poly_divexact(a, g);
    b = poly_divexact(b, g);
  }
  const Rational c = b.coeff(0);  // nonzero: b has min_exp 0
  if (c != 1) {
    a = (Rational(1) / c) * a;
    b = (Rational(1) / c) * b;
  }
  num_ = shifted(a, sn - sd);
  den_ = b;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  if (num_.is_zero())
    den_ = LaurentPoly::constant(Rational(1));
  else
    normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  *this += -o;
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

namespace {
std::string side_string(const LaurentPoly& p) {
  std::string s = to_string(p);
  if (p.coeffs.size() >= 2 && !(s.size() > 0 && s[0] == '-'))
    return "(" + s + ")";
  return s;  // factored "-(...)" already carries parentheses
}
}  // namespace

std::string to_string(const RatFunc& f) {
  return side_string(f.num()) + "/" + side_string(f.den());
}

QScale QScale::for_exponents(const std::vector<Rational>& values) {
  Integer l(1);
  for (const Rational& r : values) l = boost::multiprecision::lcm(l, rat_den(r));
  QScale s;
  Integer D = 2 * l;
  if (D > 1000000) throw std::overflow_error("session exponent scale too large");
  s.D = static_cast<int>(D.convert_to<long>());
  return s;
}

RatFunc QScale::q_power(const Rational& e) const {
  Rational k = e * D;
  if (rat_den(k) != 1) throw std::logic_error("q-exponent not resolved by session scale");
  long ki = rat_num(k).convert_to<long>();
  if (ki > 1000000 || ki < -1000000) throw std::overflow_error("q-exponent too large");
  return RatFunc(LaurentPoly::term(Rational(1), static_cast<int>(ki)));
}

RatFunc QScale::q_number(const Rational& x) const {
  Rational k = x * D;
  if (rat_den(k) != 1) throw std::logic_error("q-exponent not resolved by session scale");
  long ki = rat_num(k).convert_to<long>();
  if (ki == 0) return RatFunc(0);
  LaurentPoly num = LaurentPoly::term(Rational(1), static_cast<int>(ki)) -
                    LaurentPoly::term(Rational(1), static_cast<int>(-ki));
  LaurentPoly den =
      LaurentPoly::term(Rational(1), D) - LaurentPoly::term(Rational(1), -D);
  return RatFunc(num, den);
}

RatFunc QScale::q_int(long n, int d) const {
  if (d <= 0) throw std::invalid_argument("base exponent must be positive");
  if (n == 0) return RatFunc(0);
  LaurentPoly num = LaurentPoly::term(Rational(1), static_cast<int>(n) * d * D) -
                    LaurentPoly::term(Rational(1), static_cast<int>(-n) * d * D);
  LaurentPoly den =
      LaurentPoly::term(Rational(1), d * D) - LaurentPoly::term(Rational(1), -d * D);
  return RatFunc(num, den);
}

RatFunc QScale::q_factorial(long n, int d) const {
  if (n < 0) throw std::invalid_argument("factorial of a negative integer");
  RatFunc acc(1);
  for (long i = 1; i <= n; ++i) acc = acc * q_int(i, d);
  return acc;
}

RatFunc QScale::q_binomial(long m, long k, int d) const {
  if (k < 0 || k > m) throw std::invalid_argument("binomial index out of range");
  return q_factorial(m, d) / (q_factorial(k, d) * q_factorial(m - k, d));
}

namespace {
Rational eval_poly(const LaurentPoly& p, const Rational& q0, int D) {
  Rational acc(0);
  for (const auto& [k, c] : p.coeffs) {
    if (k % D != 0)
      throw EvalFractionalPower("v-exponent " + std::to_string(k) +
                                " is not a multiple of the session scale " + std::to_string(D));
    acc += c * rat_pow(q0, k / D);
  }
  return acc;
}
}  // namespace

Rational QScale::eval_at(const RatFunc& f, const Rational& q0) const {
  if (q0 == 0) throw EvalInvalidPoint("q0 = 0 is outside the torus");
  Rational dv = eval_poly(f.den(), q0, D);
  if (dv == 0) throw EvalPole("denominator vanishes at q0 = " + to_string(q0));
  Rational nv = eval_poly(f.num(), q0, D);
  return nv / dv;
}

}  // namespace qtwist
