#include "qtwist/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qtwist {

LaurentPoly LaurentPoly::constant(const Rational& c) { return term(c, 0); }

LaurentPoly LaurentPoly::term(const Rational& c, int k) {
  LaurentPoly p;
  if (c != 0) p.coeffs[k] = c;
  return p;
}

int LaurentPoly::min_exp() const {
  if (coeffs.empty()) throw std::logic_error("min_exp of zero polynomial");
  return coeffs.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (coeffs.empty()) throw std::logic_error("max_exp of zero polynomial");
  return coeffs.rbegin()->first;
}

Rational LaurentPoly::coeff(int k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

Rational LaurentPoly::value_at(const Rational& v0) const {
  Rational acc(0);
  for (const auto& [k, c] : coeffs) acc += c * rat_pow(v0, k);
  return acc;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [k, c] : b.coeffs) r.add_term(k, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [k, c] : b.coeffs) r.add_term(k, -c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [k, c] : a.coeffs) r.coeffs[k] = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ka, ca] : a.coeffs)
    for (const auto& [kb, cb] : b.coeffs) r.add_term(ka + kb, ca * cb);
  return r;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& a) {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [k, ck] : a.coeffs) r.coeffs[k] = c * ck;
  return r;
}

LaurentPoly shifted(const LaurentPoly& a, int k) {
  LaurentPoly r;
  for (const auto& [ka, c] : a.coeffs) r.coeffs[ka + k] = c;
  return r;
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::logic_error("polynomial division by zero");
  if (!b.coeffs.empty() && b.min_exp() < 0)
    throw std::logic_error("poly_divmod requires non-negative exponents");
  if (!a.is_zero() && a.min_exp() < 0)
    throw std::logic_error("poly_divmod requires non-negative exponents");
  LaurentPoly q, r = a;
  const int db = b.max_exp();
  const Rational lb = b.coeff(db);
  while (!r.is_zero() && r.max_exp() >= db) {
    int k = r.max_exp() - db;
    Rational c = r.coeff(r.max_exp()) / lb;
    q.add_term(k, c);
    r = r - shifted(c * b, k);
  }
  return {q, r};
}

LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = poly_divmod(a, b);
    (void)q;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  Rational lead = a.coeff(a.max_exp());
  return (Rational(1) / lead) * a;
}

namespace {

std::string term_string(const Rational& c, int k) {
  if (k == 0) return to_string(c);
  std::string vpow = "v^" + std::to_string(k);
  if (c == 1) return vpow;
  return to_string(c) + "*" + vpow;
}

// Renders with a nonnegative leading coefficient assumed handled by caller.
std::string render_terms(const LaurentPoly& p) {
  std::string s;
  bool first = true;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    const Rational& c = it->second;
    if (first) {
      s += term_string(c, it->first);
      first = false;
    } else if (c > 0) {
      s += "+" + term_string(c, it->first);
    } else {
      s += "-" + term_string(-c, it->first);
    }
  }
  return s;
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  if (p.coeffs.size() >= 2 && p.coeff(p.max_exp()) < 0)
    return "-(" + render_terms(-p) + ")";
  return render_terms(p);
}

}  // namespace qtwist
