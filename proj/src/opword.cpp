#include "qtwist/opword.hpp"

#include <algorithm>

namespace qtwist {

OpMono normalize(OpMono m) {
  if (m.coeff == 0) return OpMono{Rational(0), {}};
  std::vector<OpFactor> out;
  for (const OpFactor& f : m.factors) {
    if (f.kind == OpFactor::K && f.kpow == 0) continue;
    if (f.kind == OpFactor::K && !out.empty() && out.back().kind == OpFactor::K &&
        out.back().index == f.index) {
      out.back().kpow += f.kpow;
      if (out.back().kpow == 0) out.pop_back();
      continue;
    }
    out.push_back(f);
  }
  m.factors = std::move(out);
  return m;
}

OpMono mono_e(int i) { return OpMono{Rational(1), {OpFactor{OpFactor::E, i, 1}}}; }
OpMono mono_f(int i) { return OpMono{Rational(1), {OpFactor{OpFactor::F, i, 1}}}; }
OpMono mono_k(int i, int pow) { return OpMono{Rational(1), {OpFactor{OpFactor::K, i, pow}}}; }

OpMono product(const OpMono& a, const OpMono& b) {
  OpMono m;
  m.coeff = a.coeff * b.coeff;
  m.factors = a.factors;
  m.factors.insert(m.factors.end(), b.factors.begin(), b.factors.end());
  return normalize(std::move(m));
}

std::string to_string(const OpMono& m) {
  std::string s = to_string(m.coeff);
  for (const OpFactor& f : m.factors) {
    s += " ";
    switch (f.kind) {
      case OpFactor::E:
        s += "e" + std::to_string(f.index + 1);
        break;
      case OpFactor::F:
        s += "f" + std::to_string(f.index + 1);
        break;
      case OpFactor::K:
        s += "K" + std::to_string(f.index + 1) + "^" + std::to_string(f.kpow);
        break;
    }
  }
  return s;
}

namespace {

OpMono scaled(OpMono m, int sign) {
  m.coeff *= sign;
  return m;
}

// flip: e <-> f, K -> K^{-1}
OpMono flip_e(int i) { return mono_f(i); }
OpMono flip_f(int i) { return mono_e(i); }
OpMono flip_k(int i, int pow) { return mono_k(i, -pow); }

// flip-transpose: e <-> f, K -> K
OpMono ft_e(int i) { return mono_f(i); }
OpMono ft_f(int i) { return mono_e(i); }
OpMono ft_k(int i, int pow) { return mono_k(i, pow); }

// contravariant: f -> -K^{-1} e, e -> -f K, K -> K
OpMono cv_f(int i) { return scaled(product(mono_k(i, -1), mono_e(i)), -1); }
OpMono cv_e(int i) { return scaled(product(mono_f(i), mono_k(i, 1)), -1); }
OpMono cv_k(int i, int pow) { return mono_k(i, pow); }

// antipode: f -> -K f, e -> -e K^{-1}, K -> K^{-1}
OpMono s_f(int i) { return scaled(product(mono_k(i, 1), mono_f(i)), -1); }
OpMono s_e(int i) { return scaled(product(mono_e(i), mono_k(i, -1)), -1); }
OpMono s_k(int i, int pow) { return mono_k(i, -pow); }

// inverse antipode: f -> -f K, e -> -K^{-1} e, K -> K^{-1}
OpMono si_f(int i) { return scaled(product(mono_f(i), mono_k(i, 1)), -1); }
OpMono si_e(int i) { return scaled(product(mono_k(i, -1), mono_e(i)), -1); }
OpMono si_k(int i, int pow) { return mono_k(i, -pow); }

// star: f -> K^{-1} e, e -> f K, K -> K
OpMono st_f(int i) { return product(mono_k(i, -1), mono_e(i)); }
OpMono st_e(int i) { return product(mono_f(i), mono_k(i, 1)); }
OpMono st_k(int i, int pow) { return mono_k(i, pow); }

// conjugation: e -> -e, f -> -f, K -> K
OpMono cj_e(int i) { return scaled(mono_e(i), -1); }
OpMono cj_f(int i) { return scaled(mono_f(i), -1); }
OpMono cj_k(int i, int pow) { return mono_k(i, pow); }

}  // namespace

const GenMap& map_flip() {
  static GenMap m{false, flip_e, flip_f, flip_k};
  return m;
}
const GenMap& map_flip_transpose() {
  static GenMap m{true, ft_e, ft_f, ft_k};
  return m;
}
const GenMap& map_contravariant() {
  static GenMap m{true, cv_e, cv_f, cv_k};
  return m;
}
const GenMap& map_antipode() {
  static GenMap m{true, s_e, s_f, s_k};
  return m;
}
const GenMap& map_antipode_inv() {
  static GenMap m{true, si_e, si_f, si_k};
  return m;
}
const GenMap& map_star() {
  static GenMap m{true, st_e, st_f, st_k};
  return m;
}
const GenMap& map_conjugation() {
  static GenMap m{false, cj_e, cj_f, cj_k};
  return m;
}

OpMono apply(const GenMap& map, const OpMono& m) {
  OpMono out;
  out.coeff = m.coeff;
  auto image = [&](const OpFactor& f) -> OpMono {
    switch (f.kind) {
      case OpFactor::E:
        return map.e_image(f.index);
      case OpFactor::F:
        return map.f_image(f.index);
      default:
        return map.k_image(f.index, f.kpow);
    }
  };
  if (map.anti) {
    for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it) out = product(out, image(*it));
  } else {
    for (const OpFactor& f : m.factors) out = product(out, image(f));
  }
  return out;
}

}  // namespace qtwist
