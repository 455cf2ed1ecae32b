#include "qtwist/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qtwist/linalg.hpp"

namespace qtwist {

RootDatum RootDatum::make(const std::string& label) {
  RootDatum r;
  r.label = label;
  if (label == "A1") {
    r.rank = 1;
    r.cartan = {{2}};
    r.d = {1};
    r.w0_perm = {0};
  } else if (label == "A2") {
    r.rank = 2;
    r.cartan = {{2, -1}, {-1, 2}};
    r.d = {1, 1};
    r.w0_perm = {1, 0};
  } else if (label == "A3") {
    r.rank = 3;
    r.cartan = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    r.d = {1, 1, 1};
    r.w0_perm = {2, 1, 0};
  } else if (label == "B2") {
    // a1 short, a2 long
    r.rank = 2;
    r.cartan = {{2, -2}, {-1, 2}};
    r.d = {1, 2};
    r.w0_perm = {0, 1};
  } else if (label == "G2") {
    // a1 short, a2 long
    r.rank = 2;
    r.cartan = {{2, -3}, {-1, 2}};
    r.d = {1, 3};
    r.w0_perm = {0, 1};
  } else {
    throw std::invalid_argument("unknown type '" + label + "' (expected A1, A2, A3, B2 or G2)");
  }
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < r.rank; ++j)
      if (r.d[i] * r.cartan[i][j] != r.d[j] * r.cartan[j][i])
        throw std::logic_error("inner product table is not symmetric");
  return r;
}

int RootSum::height() const { return std::accumulate(mult.begin(), mult.end(), 0); }

RootSum RootSum::simple(int rank, int i) {
  RootSum r = zero(rank);
  r.mult[i] = 1;
  return r;
}

bool drop_less(const RootSum& a, const RootSum& b) {
  int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.mult > b.mult;
}

RootSum operator+(const RootSum& a, const RootSum& b) {
  RootSum r = a;
  for (size_t i = 0; i < r.mult.size(); ++i) r.mult[i] += b.mult[i];
  return r;
}

RootSum operator-(const RootSum& a, const RootSum& b) {
  RootSum r = a;
  for (size_t i = 0; i < r.mult.size(); ++i) {
    r.mult[i] -= b.mult[i];
    if (r.mult[i] < 0) throw std::logic_error("negative root multiplicity");
  }
  return r;
}

bool contains(const RootSum& a, const RootSum& b) {
  for (size_t i = 0; i < a.mult.size(); ++i)
    if (b.mult[i] > a.mult[i]) return false;
  return true;
}

Weight lower_weight(const RootDatum& datum, const Weight& lambda, const RootSum& drop) {
  Weight mu = lambda;
  for (int i = 0; i < datum.rank; ++i)
    for (int j = 0; j < datum.rank; ++j)
      mu.pair[i] -= Rational(drop.mult[j] * datum.root_inner(j, i));
  return mu;
}

Rational pairing(const RootDatum& datum, const Weight& lambda, const RootSum& drop, int i) {
  Rational p = lambda.pair[i];
  for (int j = 0; j < datum.rank; ++j) p -= Rational(drop.mult[j] * datum.root_inner(j, i));
  return p;
}

int root_pairing(const RootDatum& datum, const RootSum& drop, int i) {
  int p = 0;
  for (int j = 0; j < datum.rank; ++j) p += drop.mult[j] * datum.root_inner(j, i);
  return p;
}

namespace {
void gen_drops(int rank, int pos, int left, RootSum& cur, std::vector<RootSum>& out) {
  if (pos == rank) {
    if (left == 0) out.push_back(cur);
    return;
  }
  for (int m = left; m >= 0; --m) {
    cur.mult[pos] = m;
    gen_drops(rank, pos + 1, left - m, cur, out);
  }
  cur.mult[pos] = 0;
}
}  // namespace

std::vector<RootSum> enumerate_drops(const RootDatum& datum, int H) {
  if (H < 0) throw std::invalid_argument("negative height cutoff");
  std::vector<RootSum> out;
  RootSum cur = RootSum::zero(datum.rank);
  for (int h = 0; h <= H; ++h) gen_drops(datum.rank, 0, h, cur, out);
  return out;
}

std::vector<RootSum> sub_drops(const RootDatum& datum, const RootSum& d) {
  std::vector<RootSum> out;
  for (const RootSum& b : enumerate_drops(datum, d.height()))
    if (contains(d, b)) out.push_back(b);
  return out;
}

namespace {
void gen_words(const RootDatum& datum, RootSum& left, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  if (left.height() == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = 0; i < datum.rank; ++i) {
    if (left.mult[i] == 0) continue;
    left.mult[i]--;
    cur.push_back(i);
    gen_words(datum, left, cur, out);
    cur.pop_back();
    left.mult[i]++;
  }
}
}  // namespace

std::vector<std::vector<int>> enumerate_letter_words(const RootDatum& datum, const RootSum& drop) {
  std::vector<std::vector<int>> out;
  RootSum left = drop;
  std::vector<int> cur;
  gen_words(datum, left, cur, out);
  return out;
}

Integer word_count(const RootSum& drop) {
  Integer n = 1;
  int h = drop.height();
  for (int i = 2; i <= h; ++i) n *= i;
  for (int m : drop.mult)
    for (int i = 2; i <= m; ++i) n /= i;
  return n;
}

std::optional<int> dominant_depth(const RootDatum& datum, const Weight& lambda) {
  for (const Rational& p : lambda.pair)
    if (p < 0 || rat_den(p) != 1) return std::nullopt;
  // pairings of lambda - w0(lambda)
  VecQ p(datum.rank);
  for (int i = 0; i < datum.rank; ++i)
    p(i) = lambda.pair[i] + lambda.pair[datum.w0_perm[i]];
  MatQ g(datum.rank, datum.rank);
  for (int i = 0; i < datum.rank; ++i)
    for (int j = 0; j < datum.rank; ++j) g(i, j) = Rational(datum.root_inner(i, j));
  auto x = solve<Rational>(g, p);
  if (!x) return std::nullopt;
  Rational h(0);
  for (int i = 0; i < datum.rank; ++i) h += (*x)(i);
  if (rat_den(h) != 1 || h < 0) return std::nullopt;
  return static_cast<int>(rat_num(h).convert_to<long>());
}

std::string to_string(const RootSum& drop) {
  if (drop.height() == 0) return "0";
  std::string s;
  for (size_t i = 0; i < drop.mult.size(); ++i) {
    if (drop.mult[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (drop.mult[i] != 1) s += std::to_string(drop.mult[i]);
    s += "a" + std::to_string(i + 1);
  }
  return s;
}

RootSum parse_drop(const RootDatum& datum, const std::string& text) {
  RootSum r = RootSum::zero(datum.rank);
  if (text == "0") return r;
  auto bad = [&]() { return std::invalid_argument("bad drop '" + text + "'"); };
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find('+', pos);
    std::string piece = text.substr(pos, next == std::string::npos ? next : next - pos);
    size_t a = piece.find('a');
    if (a == std::string::npos || a + 1 >= piece.size()) throw bad();
    int mult = 1;
    if (a > 0) {
      try {
        mult = std::stoi(piece.substr(0, a));
      } catch (...) {
        throw bad();
      }
    }
    int idx;
    try {
      idx = std::stoi(piece.substr(a + 1));
    } catch (...) {
      throw bad();
    }
    if (idx < 1 || idx > datum.rank || mult <= 0) throw bad();
    r.mult[idx - 1] += mult;
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return r;
}

}  // namespace qtwist
