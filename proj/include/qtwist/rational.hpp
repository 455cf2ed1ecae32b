#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace qtwist {

// Exact arbitrary-precision arithmetic, GMP-backed, expression templates off
// so the types behave as plain value scalars inside Eigen matrices.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline Integer rat_num(const Rational& r) {
  return Integer(boost::multiprecision::numerator(r));
}
inline Integer rat_den(const Rational& r) {
  return Integer(boost::multiprecision::denominator(r));
}

inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "a" or "a/b" with optional sign; b must be nonzero.
inline Rational parse_rational(const std::string& s) {
  auto bad = [&]() { return std::invalid_argument("not a rational: '" + s + "'"); };
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw bad();
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(t));
    Integer n(t.substr(0, slash));
    Integer d(t.substr(slash + 1));
    if (d == 0) throw bad();
    return Rational(n) / Rational(d);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

// r^k for integer k (k may be negative; then r must be nonzero).
inline Rational rat_pow(const Rational& r, long k) {
  if (k == 0) return Rational(1);
  if (r == 0) {
    if (k > 0) return Rational(0);
    throw std::domain_error("zero raised to a negative power");
  }
  Rational base = k > 0 ? r : Rational(1) / r;
  unsigned long e = static_cast<unsigned long>(k > 0 ? k : -k);
  Rational acc(1);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace qtwist
