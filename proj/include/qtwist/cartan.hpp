#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtwist/rational.hpp"

namespace qtwist {

// Finite root datum for the supported types.  Simple roots are indexed
// 0..rank-1 internally and printed 1-based.  The inner product is the
// symmetric one with short roots of norm 2: (a_i, a_j) = d_i * cartan(i,j).
struct RootDatum {
  std::string label;
  int rank = 0;
  std::vector<std::vector<int>> cartan;
  std::vector<int> d;        // symmetrizers
  std::vector<int> w0_perm;  // longest element acts by a_i -> -a_{w0_perm[i]}

  static RootDatum make(const std::string& label);  // A1 A2 A3 B2 G2

  int root_inner(int i, int j) const { return d[i] * cartan[i][j]; }
};

// A weight given by its pairings (lambda, a_i) with the simple roots.
struct Weight {
  std::vector<Rational> pair;

  bool operator==(const Weight&) const = default;
};

// An element of the non-negative root lattice: multiplicities over the
// simple roots.  Ordered by height, then by lexicographically larger
// multiplicity vector first (so a1-heavy drops precede a2-heavy ones).
struct RootSum {
  std::vector<int> mult;

  int height() const;
  bool operator==(const RootSum&) const = default;

  static RootSum zero(int rank) { return RootSum{std::vector<int>(rank, 0)}; }
  static RootSum simple(int rank, int i);
};

bool drop_less(const RootSum& a, const RootSum& b);
struct DropLess {
  bool operator()(const RootSum& a, const RootSum& b) const { return drop_less(a, b); }
};

RootSum operator+(const RootSum& a, const RootSum& b);
// Componentwise difference; requires b <= a componentwise.
RootSum operator-(const RootSum& a, const RootSum& b);
bool contains(const RootSum& a, const RootSum& b);  // b <= a componentwise

// (lambda - drop, a_i) from the pairings of lambda.
Weight lower_weight(const RootDatum& datum, const Weight& lambda, const RootSum& drop);
// (mu, a_i) for mu the weight lambda - drop, single coordinate.
Rational pairing(const RootDatum& datum, const Weight& lambda, const RootSum& drop, int i);
// (root given by drop, a_i), an integer.
int root_pairing(const RootDatum& datum, const RootSum& drop, int i);

// All drops of height <= H in the canonical order.
std::vector<RootSum> enumerate_drops(const RootDatum& datum, int H);
// All drops b with b <= d componentwise, in the canonical order.
std::vector<RootSum> sub_drops(const RootDatum& datum, const RootSum& d);

// All letter sequences with multiset equal to drop, lexicographic.
std::vector<std::vector<int>> enumerate_letter_words(const RootDatum& datum, const RootSum& drop);

// Multinomial height! / prod(mult!) as a plain integer.
Integer word_count(const RootSum& drop);

// Height of lambda - w0(lambda) when lambda is dominant integral (all
// pairings non-negative integers): the largest drop a simple module with
// this highest weight reaches.  nullopt otherwise.
std::optional<int> dominant_depth(const RootDatum& datum, const Weight& lambda);

std::string to_string(const RootSum& drop);                      // e.g. "2a1+a2", "0"
RootSum parse_drop(const RootDatum& datum, const std::string&);  // inverse of to_string

}  // namespace qtwist
