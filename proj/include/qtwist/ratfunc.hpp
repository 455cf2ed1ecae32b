#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qtwist/laurent.hpp"

namespace qtwist {

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// q0 = 0 (or otherwise outside the domain of the substitution).
struct EvalInvalidPoint : EvalError {
  using EvalError::EvalError;
};
// The denominator vanishes at the requested point.
struct EvalPole : EvalError {
  using EvalError::EvalError;
};
// A v-exponent is not divisible by the session scale, so the value is not a
// rational function of q alone.
struct EvalFractionalPower : EvalError {
  using EvalError::EvalError;
};

// Rational function in v, stored canonically: numerator and denominator
// share no polynomial factor, all v-power content sits in the numerator
// (the denominator has a nonzero constant term), and the denominator's
// lowest-degree coefficient is 1.  Equal values have equal representations.
class RatFunc {
 public:
  RatFunc() : den_(LaurentPoly::constant(Rational(1))) {}
  RatFunc(int c) : RatFunc(Rational(c)) {}
  explicit RatFunc(const Rational& c)
      : num_(LaurentPoly::constant(c)), den_(LaurentPoly::constant(Rational(1))) {}
  explicit RatFunc(const LaurentPoly& p)
      : num_(p), den_(LaurentPoly::constant(Rational(1))) {}
  RatFunc(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

 private:
  void normalize();
  LaurentPoly num_, den_;
};

RatFunc operator+(RatFunc a, const RatFunc& b);
RatFunc operator-(RatFunc a, const RatFunc& b);
RatFunc operator*(RatFunc a, const RatFunc& b);
RatFunc operator/(RatFunc a, const RatFunc& b);

// Canonical display "num/den"; each side is parenthesized when it has more
// than one term, e.g. "-(v^2+v^-2)/1".
std::string to_string(const RatFunc& f);

// Session-wide exponent scale: the formal variable satisfies v^D = q, with D
// chosen so that every q-exponent the session needs (pairings of the session
// weights with roots) becomes an integral v-exponent.
struct QScale {
  int D = 2;

  // D = 2 * lcm of the denominators of the given rationals (at least 2).
  static QScale for_exponents(const std::vector<Rational>& values);

  // q^e as a one-term Laurent polynomial; e*D must be integral.
  RatFunc q_power(const Rational& e) const;

  // [x] = (q^x - q^-x)/(q - q^-1); x*D must be integral.  For integral x
  // this is the familiar symmetric q-integer.
  RatFunc q_number(const Rational& x) const;

  // q-integer/factorial/binomial in the base q^d (d a positive integer).
  RatFunc q_int(long n, int d = 1) const;
  RatFunc q_factorial(long n, int d = 1) const;
  RatFunc q_binomial(long m, long k, int d = 1) const;

  // Substitute q := q0 exactly.  Throws EvalInvalidPoint (q0 = 0),
  // EvalFractionalPower (an exponent not divisible by D), or EvalPole.
  Rational eval_at(const RatFunc& f, const Rational& q0) const;
};

}  // namespace qtwist
