#include "qtwist/word.hpp"

#include <algorithm>

namespace qtwist {

RootSum word_drop(const RootDatum& datum, const Word& w) {
  RootSum d = RootSum::zero(datum.rank);
  for (int l : w.letters) d.mult[l]++;
  return d;
}

std::string to_string(const Word& w) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ".";
    s += "f" + std::to_string(w.letters[i] + 1);
  }
  return s;
}

std::vector<Word> enumerate_words(const RootDatum& datum, const RootSum& drop) {
  std::vector<Word> out;
  for (auto& letters : enumerate_letter_words(datum, drop)) out.push_back(Word{letters});
  return out;
}

void WordExpr::add(const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

WordExpr operator*(const RatFunc& c, const WordExpr& e) {
  WordExpr r = WordExpr::zero(e.drop);
  if (c.is_zero()) return r;
  for (const auto& [w, cw] : e.terms) r.terms[w] = c * cw;
  return r;
}

VecF word_coordinates(const WordExpr& e, const std::vector<Word>& words) {
  VecF v = VecF::Zero(static_cast<int>(words.size()));
  for (const auto& [w, c] : e.terms) {
    auto it = std::lower_bound(words.begin(), words.end(), w);
    if (it == words.end() || !(*it == w)) throw std::logic_error("word outside its drop list");
    v(static_cast<int>(it - words.begin())) = c;
  }
  return v;
}

WordExpr expr_from_coordinates(const RootDatum& datum, const RootSum& drop,
                               const std::vector<Word>& words, const VecF& v) {
  (void)datum;
  WordExpr e = WordExpr::zero(drop);
  for (int i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) e.terms[words[i]] = v(i);
  return e;
}

WordExpr act_e_word(const RootDatum& datum, const QScale& scale, int a, const Word& w,
                    const Weight& lambda) {
  RootSum d = word_drop(datum, w);
  if (d.mult[a] == 0) {
    RootSum target = d;
    return WordExpr::zero(target);  // no occurrence: e_a slides through and kills 1
  }
  RootSum target = d - RootSum::simple(datum.rank, a);
  WordExpr out = WordExpr::zero(target);
  const int m = w.height();
  // Weight seen by a crossing below position k: lambda minus the letters
  // strictly to the right of k.
  for (int k = m - 1; k >= 0; --k) {
    if (w.letters[k] == a) {
      Rational p = lambda.pair[a];
      for (int j = k + 1; j < m; ++j) p -= Rational(datum.root_inner(w.letters[j], a));
      Word rest;
      rest.letters.reserve(m - 1);
      for (int j = 0; j < m; ++j)
        if (j != k) rest.letters.push_back(w.letters[j]);
      out.add(rest, scale.q_number(p));
    }
  }
  return out;
}

RatFunc PairTable::pair(const Word& a, const Word& b) {
  if (!(word_drop(datum_, a) == word_drop(datum_, b))) return RatFunc(0);
  if (a.letters.empty()) return RatFunc(1);
  std::pair<Word, Word> key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  // Peel the first letter: <f_a u, w> = <u, omega(f_a) w> with
  // omega(f_a) = -q^{-h_a} e_a; the torus factor reduces to the scalar
  // q^{-(a, weight of e_a w)}.
  const int a0 = a.letters.front();
  Word u;
  u.letters.assign(a.letters.begin() + 1, a.letters.end());
  RootSum du = word_drop(datum_, u);
  Rational mu_a = pairing(datum_, lambda_, du, a0);  // (lambda - drop(u), a0)
  WordExpr eb = act_e_word(datum_, scale_, a0, b, lambda_);
  RatFunc acc(0);
  for (const auto& [w2, c] : eb.terms) acc += c * pair(u, w2);
  RatFunc result = -(scale_.q_power(-mu_a) * acc);
  memo_[key] = result;
  return result;
}

RatFunc PairTable::pair(const WordExpr& a, const WordExpr& b) {
  RatFunc acc(0);
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) acc += ca * cb * pair(wa, wb);
  return acc;
}

int cross_inner_sum(const RootDatum& datum, const Word& w) {
  int s = 0;
  for (size_t i = 0; i < w.letters.size(); ++i)
    for (size_t j = i + 1; j < w.letters.size(); ++j)
      s += datum.root_inner(w.letters[i], w.letters[j]);
  return s;
}

AntipodeImage inverse_antipode_word(const RootDatum& datum, const QScale& scale, const Word& w,
                                    const Weight& mu) {
  Rational e(0);
  for (int l : w.letters) e += mu.pair[l];
  e -= Rational(cross_inner_sum(datum, w));
  RatFunc scalar = scale.q_power(e);
  if (w.height() % 2 == 1) scalar = -scalar;
  Word rev;
  rev.letters.assign(w.letters.rbegin(), w.letters.rend());
  return {scalar, rev};
}

WordExpr serre_element(const RootDatum& datum, const QScale& scale, int i, int j) {
  if (i == j) throw std::invalid_argument("commutation element needs distinct indices");
  const int n = 1 - datum.cartan[i][j];
  RootSum drop = RootSum::zero(datum.rank);
  drop.mult[i] = n;
  drop.mult[j] = 1;
  WordExpr e = WordExpr::zero(drop);
  for (int k = 0; k <= n; ++k) {
    Word w;
    for (int t = 0; t < n - k; ++t) w.letters.push_back(i);
    w.letters.push_back(j);
    for (int t = 0; t < k; ++t) w.letters.push_back(i);
    RatFunc c = scale.q_binomial(n, k, datum.d[i]);
    if (k % 2 == 1) c = -c;
    e.add(w, c);
  }
  return e;
}

std::vector<WordExpr> all_serre_elements(const RootDatum& datum, const QScale& scale) {
  std::vector<WordExpr> out;
  for (int i = 0; i < datum.rank; ++i)
    for (int j = 0; j < datum.rank; ++j)
      if (i != j) out.push_back(serre_element(datum, scale, i, j));
  return out;
}

namespace {
Word concat3(const Word& u, const Word& g, const Word& v) {
  Word w;
  w.letters.reserve(u.letters.size() + g.letters.size() + v.letters.size());
  w.letters.insert(w.letters.end(), u.letters.begin(), u.letters.end());
  w.letters.insert(w.letters.end(), g.letters.begin(), g.letters.end());
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}
}  // namespace

Mat<RatFunc> ideal_component_rows(const RootDatum& datum, const std::vector<WordExpr>& generators,
                                  const RootSum& drop, bool two_sided) {
  std::vector<Word> words = enumerate_words(datum, drop);
  const int n = static_cast<int>(words.size());
  std::vector<VecF> rows;
  for (const WordExpr& g : generators) {
    if (!contains(drop, g.drop)) continue;
    RootSum rem = drop - g.drop;
    for (const RootSum& du : sub_drops(datum, rem)) {
      RootSum dv = rem - du;
      // One-sided components keep the generator rightmost (it acts first on
      // the highest vector), so only the prefix u varies.
      if (!two_sided && dv.height() > 0) continue;
      for (const Word& u : enumerate_words(datum, du)) {
        for (const Word& v : enumerate_words(datum, dv)) {
          WordExpr e = WordExpr::zero(drop);
          for (const auto& [gw, gc] : g.terms) e.add(concat3(u, gw, v), gc);
          rows.push_back(word_coordinates(e, words));
        }
      }
    }
  }
  Mat<RatFunc> m(static_cast<int>(rows.size()), n);
  for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<int>(i)) = rows[i].transpose();
  Echelon<RatFunc> e = rref(m);
  return e.reduced.topRows(e.rank);
}

}  // namespace qtwist
