#pragma once

#include <map>
#include <vector>

#include "qtwist/cartan.hpp"
#include "qtwist/linalg.hpp"
#include "qtwist/ratfunc.hpp"

namespace qtwist {

// A monomial f_{l1} f_{l2} ... f_{lm} acting on a highest vector; the
// rightmost letter acts first.  Letters are 0-based simple-root indices.
struct Word {
  std::vector<int> letters;

  auto operator<=>(const Word&) const = default;
  int height() const { return static_cast<int>(letters.size()); }
};

RootSum word_drop(const RootDatum& datum, const Word& w);
std::string to_string(const Word& w);  // "f1.f2.f1"; empty word prints "1"

std::vector<Word> enumerate_words(const RootDatum& datum, const RootSum& drop);

// A weight-homogeneous linear combination of words of one drop.
struct WordExpr {
  RootSum drop;
  std::map<Word, RatFunc> terms;  // no zero coefficients stored

  static WordExpr zero(const RootSum& drop) { return WordExpr{drop, {}}; }
  void add(const Word& w, const RatFunc& c);
  bool is_zero() const { return terms.empty(); }
};

WordExpr operator*(const RatFunc& c, const WordExpr& e);

// Coordinates of e in the lexicographic word list of its drop.
VecF word_coordinates(const WordExpr& e, const std::vector<Word>& words);
WordExpr expr_from_coordinates(const RootDatum& datum, const RootSum& drop,
                               const std::vector<Word>& words, const VecF& v);

// e_a applied to w . 1_lambda, expanded by commuting e_a through the word:
// each crossing of a letter equal to a contributes the symmetric q-number
// of the a-pairing of the weight below the crossing.  Result has drop(w)-a;
// the zero expression when a does not occur in w.
WordExpr act_e_word(const RootDatum& datum, const QScale& scale, int a, const Word& w,
                    const Weight& lambda);

// Shared evaluation context for the contravariant pairing
// <w.1, w'.1> normalized by <1,1> = 1, with memoization per highest weight.
class PairTable {
 public:
  PairTable(const RootDatum& datum, const QScale& scale, Weight lambda)
      : datum_(datum), scale_(scale), lambda_(std::move(lambda)) {}

  const Weight& highest_weight() const { return lambda_; }

  RatFunc pair(const Word& a, const Word& b);
  RatFunc pair(const WordExpr& a, const WordExpr& b);

 private:
  const RootDatum& datum_;
  const QScale& scale_;
  Weight lambda_;
  std::map<std::pair<Word, Word>, RatFunc> memo_;
};

// Scalar s and word r with: the inverse antipode of w, applied to a vector
// of weight mu, equals s times r acting on that vector.  r is w reversed,
// s = (-1)^m q^{(sum of letters, mu) - sum_{i<j} (letter_i, letter_j)}.
struct AntipodeImage {
  RatFunc scalar;
  Word reversed;
};
AntipodeImage inverse_antipode_word(const RootDatum& datum, const QScale& scale, const Word& w,
                                    const Weight& mu);

// Sum over i<j of (letter_i, letter_j), an integer.
int cross_inner_sum(const RootDatum& datum, const Word& w);

// The degree-(1-a_ij) quantized commutation element for the pair (i, j):
// sum_k (-1)^k [1-a_ij choose k]_{q^{d_i}} f_i^{1-a_ij-k} f_j f_i^k.
WordExpr serre_element(const RootDatum& datum, const QScale& scale, int i, int j);
std::vector<WordExpr> all_serre_elements(const RootDatum& datum, const QScale& scale);

// Span of the requested ideal component at the given drop, inside the free
// word span: two_sided collects u*g*v over words u, v of complementary
// drop; one_sided (two_sided = false) collects u*g, keeping the generator
// adjacent to the highest vector.  Returned as canonical reduced rows over
// the lexicographic word list.
Mat<RatFunc> ideal_component_rows(const RootDatum& datum, const std::vector<WordExpr>& generators,
                                  const RootSum& drop, bool two_sided);

}  // namespace qtwist
