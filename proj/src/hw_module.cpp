#include "qtwist/hw_module.hpp"

#include <algorithm>

namespace qtwist {

std::string to_string(ModuleKind k) {
  switch (k) {
    case ModuleKind::verma:
      return "verma";
    case ModuleKind::irreducible:
      return "irr";
    case ModuleKind::parabolic:
      return "par";
  }
  return "?";
}

HWModule::HWModule(RootDatum datum, QScale scale, ModuleDesc desc, int cutoff)
    : datum_(std::move(datum)), scale_(scale), desc_(std::move(desc)), cutoff_(cutoff) {
  if (cutoff_ < 0) throw std::invalid_argument("negative height cutoff");
  if (static_cast<int>(desc_.hw.pair.size()) != datum_.rank)
    throw std::invalid_argument("highest weight has wrong rank");
  if (desc_.kind == ModuleKind::parabolic) {
    if (desc_.levi.empty()) throw std::invalid_argument("parabolic kind needs a Levi subset");
    for (int s : desc_.levi) {
      if (s < 0 || s >= datum_.rank) throw std::invalid_argument("Levi index out of range");
      if (desc_.hw.pair[s] != 0)
        throw std::invalid_argument(
            "parabolic character requires (hw, a_" + std::to_string(s + 1) + ") = 0");
    }
  } else if (!desc_.levi.empty()) {
    throw std::invalid_argument("Levi subset only applies to the parabolic kind");
  }
  pairs_ = std::make_unique<PairTable>(datum_, scale_, desc_.hw);
  for (const RootSum& d : enumerate_drops(datum_, cutoff_)) build_space(d);
  build_actions();
}

const HWModule::Space& HWModule::space(const RootSum& drop) const {
  auto it = spaces_.find(drop);
  if (it == spaces_.end())
    throw CutoffError("weight space " + to_string(drop) + " is beyond the cutoff");
  return it->second;
}

int HWModule::dim_at(const RootSum& drop) const {
  auto it = spaces_.find(drop);
  return it == spaces_.end() ? 0 : it->second.dim();
}

void HWModule::build_space(const RootSum& drop) {
  Space sp;
  sp.drop = drop;
  sp.words = enumerate_words(datum_, drop);
  const int n = sp.word_dim();

  std::vector<MatF> relation_blocks;
  if (desc_.kind == ModuleKind::irreducible) {
    MatF g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        g(i, j) = pairs_->pair(sp.words[i], sp.words[j]);
        g(j, i) = g(i, j);
      }
    MatF k = kernel_basis(g);
    relation_blocks.push_back(k.transpose());
  } else {
    std::vector<WordExpr> serre = all_serre_elements(datum_, scale_);
    relation_blocks.push_back(ideal_component_rows(datum_, serre, drop, /*two_sided=*/true));
    if (desc_.kind == ModuleKind::parabolic) {
      std::vector<WordExpr> chars;
      for (int s : desc_.levi) {
        WordExpr e = WordExpr::zero(RootSum::simple(datum_.rank, s));
        e.add(Word{{s}}, RatFunc(1));
        chars.push_back(e);
      }
      relation_blocks.push_back(ideal_component_rows(datum_, chars, drop, /*two_sided=*/false));
    }
  }
  int total_rows = 0;
  for (const MatF& b : relation_blocks) total_rows += static_cast<int>(b.rows());
  MatF stacked(total_rows, n);
  int at = 0;
  for (const MatF& b : relation_blocks) {
    stacked.middleRows(at, b.rows()) = b;
    at += static_cast<int>(b.rows());
  }
  Echelon<RatFunc> ech = rref(stacked);
  sp.relations = ech.reduced.topRows(ech.rank);

  // Lexicographically first words whose classes are independent.
  SpanBuilder<RatFunc> span(n);
  for (int r = 0; r < sp.relations.rows(); ++r)
    span.add(Vec<RatFunc>(sp.relations.row(r).transpose()));
  for (int j = 0; j < n; ++j) {
    VecF ej = VecF::Zero(n);
    ej(j) = RatFunc(1);
    if (span.add(ej)) sp.class_words.push_back(j);
  }
  const int m = sp.dim();

  // Projection with kernel = relations and the chosen words as a section.
  if (n > 0) {
    MatF b(n, n);
    int col = 0;
    for (int r = 0; r < sp.relations.rows(); ++r) b.col(col++) = sp.relations.row(r).transpose();
    for (int j : sp.class_words) {
      VecF ej = VecF::Zero(n);
      ej(j) = RatFunc(1);
      b.col(col++) = ej;
    }
    MatF binv = inverse(b);
    sp.reduce = binv.bottomRows(m);
  } else {
    sp.reduce = MatF(0, 0);
  }

  sp.gram = MatF(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      sp.gram(i, j) = pairs_->pair(sp.words[sp.class_words[i]], sp.words[sp.class_words[j]]);
      sp.gram(j, i) = sp.gram(i, j);
    }

  spaces_.emplace(drop, std::move(sp));
}

void HWModule::build_actions() {
  for (auto& [drop, sp] : spaces_) {
    sp.e_mat.resize(datum_.rank);
    sp.f_mat.resize(datum_.rank);
    for (int i = 0; i < datum_.rank; ++i) {
      // e_i : this space -> the space one step up (drop - a_i).
      if (drop.mult[i] == 0) {
        sp.e_mat[i] = MatF(0, sp.dim());
      } else {
        const Space& up = spaces_.at(drop - RootSum::simple(datum_.rank, i));
        MatF m(up.dim(), sp.dim());
        for (int j = 0; j < sp.dim(); ++j) {
          WordExpr img = act_e_word(datum_, scale_, i, sp.words[sp.class_words[j]], desc_.hw);
          if (img.is_zero())
            m.col(j) = VecF::Zero(up.dim());
          else
            m.col(j) = up.reduce * word_coordinates(img, up.words);
        }
        sp.e_mat[i] = std::move(m);
      }
      // f_i : this space -> the space one step down (drop + a_i).
      if (drop.height() + 1 > cutoff_) {
        sp.f_mat[i] = MatF(0, 0);
      } else {
        const Space& down = spaces_.at(drop + RootSum::simple(datum_.rank, i));
        MatF m(down.dim(), sp.dim());
        for (int j = 0; j < sp.dim(); ++j) {
          Word w;
          w.letters.push_back(i);
          const Word& rep = sp.words[sp.class_words[j]];
          w.letters.insert(w.letters.end(), rep.letters.begin(), rep.letters.end());
          auto it = std::lower_bound(down.words.begin(), down.words.end(), w);
          m.col(j) = down.reduce.col(static_cast<int>(it - down.words.begin()));
        }
        sp.f_mat[i] = std::move(m);
      }
    }
  }
}

VecF HWModule::act_f(int i, const RootSum& drop, const VecF& x) const {
  const Space& sp = space(drop);
  if (drop.height() + 1 > cutoff_)
    throw CutoffError("f-action leaves the materialized range at height " +
                      std::to_string(drop.height()));
  return sp.f_mat[i] * x;
}

VecF HWModule::act_e(int i, const RootSum& drop, const VecF& x) const {
  const Space& sp = space(drop);
  return sp.e_mat[i] * x;
}

RatFunc HWModule::torus_scalar(int i, const RootSum& drop, int sign) const {
  Rational p = pairing(datum_, desc_.hw, drop, i);
  return scale_.q_power(sign > 0 ? p : -p);
}

VecF HWModule::apply_word_f(const Word& w, const RootSum& at, VecF x) const {
  RootSum cur = at;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    x = act_f(*it, cur, x);
    cur = cur + RootSum::simple(datum_.rank, *it);
  }
  return x;
}

VecF HWModule::apply_word_e(const Word& w, const RootSum& at, VecF x) const {
  if (!contains(at, word_drop(datum_, w)))
    throw std::logic_error("e-word does not fit the drop it is applied at");
  RootSum cur = at;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    x = act_e(*it, cur, x);
    cur = cur - RootSum::simple(datum_.rank, *it);
  }
  return x;
}

MatF HWModule::singular_in(const RootSum& drop) const {
  const Space& sp = space(drop);
  int rows = 0;
  for (int i = 0; i < datum_.rank; ++i) rows += static_cast<int>(sp.e_mat[i].rows());
  MatF stacked(rows, sp.dim());
  int at = 0;
  for (int i = 0; i < datum_.rank; ++i) {
    stacked.middleRows(at, sp.e_mat[i].rows()) = sp.e_mat[i];
    at += static_cast<int>(sp.e_mat[i].rows());
  }
  return kernel_basis(stacked);
}

std::vector<WordExpr> HWModule::annihilator_component(const RootSum& drop) const {
  const Space& sp = space(drop);
  std::vector<WordExpr> out;
  for (int r = 0; r < sp.relations.rows(); ++r)
    out.push_back(
        expr_from_coordinates(datum_, drop, sp.words, VecF(sp.relations.row(r).transpose())));
  return out;
}

WordExpr HWModule::class_expr(const RootSum& drop, const VecF& x) const {
  const Space& sp = space(drop);
  WordExpr e = WordExpr::zero(drop);
  for (int j = 0; j < sp.dim(); ++j)
    if (!x(j).is_zero()) e.add(sp.words[sp.class_words[j]], x(j));
  return e;
}

}  // namespace qtwist
