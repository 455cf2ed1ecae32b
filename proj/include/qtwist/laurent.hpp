#pragma once

#include <map>
#include <string>

#include "qtwist/rational.hpp"

namespace qtwist {

// Laurent polynomial in one variable v with exact rational coefficients.
// Invariant: no stored coefficient is zero; the zero polynomial is the
// empty map.
struct LaurentPoly {
  std::map<int, Rational> coeffs;  // exponent -> coefficient

  LaurentPoly() = default;

  static LaurentPoly constant(const Rational& c);
  static LaurentPoly term(const Rational& c, int k);

  bool is_zero() const { return coeffs.empty(); }
  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero
  Rational coeff(int k) const;

  void add_term(int k, const Rational& c);

  bool operator==(const LaurentPoly& o) const { return coeffs == o.coeffs; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Value at v = v0 (exact); v0 must be nonzero if negative exponents occur.
  Rational value_at(const Rational& v0) const;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const Rational& c, const LaurentPoly& a);

// Multiply by v^k.
LaurentPoly shifted(const LaurentPoly& a, int k);

// Quotient and remainder in Q[v]; requires min_exp >= 0 on both and b != 0.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);

// Exact division; throws std::logic_error if the remainder is nonzero.
LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b);

// Monic greatest common divisor in Q[v]; requires min_exp >= 0 on nonzero
// inputs. gcd(0,0) = 0; gcd is normalized with leading coefficient 1.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

// Canonical display: terms "c*v^k" in decreasing k, "v^k" when c = 1,
// bare rational at k = 0; a leading minus is factored out of multi-term
// polynomials, e.g. "-(v^2+v^-2)".
std::string to_string(const LaurentPoly& p);

}  // namespace qtwist
