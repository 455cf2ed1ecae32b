#pragma once

#include <string>
#include <vector>

#include "qtwist/rational.hpp"

namespace qtwist {

// Tiny symbolic algebra on generator words: products of E_i, F_i and torus
// factors K_i^p (K_i = q^{h_i}).  Just enough structure to state and verify
// the generator-level identities satisfied by the involutions: the only
// normalization is merging adjacent torus factors with equal index.
struct OpFactor {
  enum Kind { E, F, K } kind;
  int index;
  int kpow = 1;  // torus exponent, only for kind K

  bool operator==(const OpFactor&) const = default;
};

struct OpMono {
  Rational coeff{1};
  std::vector<OpFactor> factors;

  bool operator==(const OpMono&) const = default;
};

OpMono normalize(OpMono m);  // merge adjacent equal-index torus factors

OpMono mono_e(int i);
OpMono mono_f(int i);
OpMono mono_k(int i, int pow = 1);
OpMono product(const OpMono& a, const OpMono& b);

std::string to_string(const OpMono& m);

// Generator-image tables; every map sends a generator to a single monomial.
struct GenMap {
  bool anti = false;  // anti-multiplicative when true
  OpMono (*e_image)(int);
  OpMono (*f_image)(int);
  OpMono (*k_image)(int, int pow);
};

// e <-> f, K -> K^{-1}; multiplicative.
const GenMap& map_flip();
// e <-> f, K -> K; anti-multiplicative.
const GenMap& map_flip_transpose();
// f -> -K^{-1} e, e -> -f K, K -> K; anti-multiplicative (the contravariant
// involution the pairing is built on).
const GenMap& map_contravariant();
// antipode: f -> -K f, e -> -e K^{-1}, K -> K^{-1}; anti-multiplicative.
const GenMap& map_antipode();
// inverse antipode: f -> -f K, e -> -K^{-1} e, K -> K^{-1}.
const GenMap& map_antipode_inv();
// compact star: f -> K^{-1} e, e -> f K, K -> K; anti-multiplicative.
const GenMap& map_star();
// conjugation: e -> -e, f -> -f, K -> K; multiplicative.
const GenMap& map_conjugation();

OpMono apply(const GenMap& map, const OpMono& m);

}  // namespace qtwist
