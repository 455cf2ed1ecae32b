#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qtwist/word.hpp"

namespace qtwist {

struct CutoffError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ModuleKind { verma, irreducible, parabolic };

struct ModuleDesc {
  ModuleKind kind = ModuleKind::verma;
  Weight hw;
  std::vector<int> levi;  // 0-based simple indices; parabolic only
};

// A highest-weight module materialized per weight space up to a height
// cutoff.  Every space is presented as the span of the lexicographic word
// list modulo a canonical relation subspace, with a chosen class basis
// (lexicographically first independent words), the projection onto it, and
// the contravariant Gram matrix of the representatives.
class HWModule {
 public:
  struct Space {
    RootSum drop;
    std::vector<Word> words;
    MatF relations;               // canonical reduced rows spanning the kernel
    std::vector<int> class_words;  // indices into words
    MatF reduce;                   // dim x words: word span -> class basis
    MatF gram;                     // dim x dim
    std::vector<MatF> e_mat;       // per generator: to the space one step up
    std::vector<MatF> f_mat;       // per generator: to the space one step down

    int dim() const { return static_cast<int>(class_words.size()); }
    int word_dim() const { return static_cast<int>(words.size()); }
  };

  HWModule(RootDatum datum, QScale scale, ModuleDesc desc, int cutoff);

  const RootDatum& datum() const { return datum_; }
  const QScale& scale() const { return scale_; }
  const ModuleDesc& desc() const { return desc_; }
  int cutoff() const { return cutoff_; }
  const Weight& hw() const { return desc_.hw; }

  const std::map<RootSum, Space, DropLess>& spaces() const { return spaces_; }
  const Space& space(const RootSum& drop) const;
  bool has_space(const RootSum& drop) const { return spaces_.count(drop) > 0; }
  int dim_at(const RootSum& drop) const;

  // Weight of the space at the given drop, as pairings.
  Weight weight_at(const RootSum& drop) const { return lower_weight(datum_, desc_.hw, drop); }

  // Generator actions on class vectors.  f raises the drop by one simple
  // root and throws CutoffError at the cutoff; e lowers it (the zero vector
  // of the lower space when the drop does not contain the root); the torus
  // action is the scalar q^{sign * (weight, a_i)}.
  VecF act_f(int i, const RootSum& drop, const VecF& x) const;
  VecF act_e(int i, const RootSum& drop, const VecF& x) const;
  RatFunc torus_scalar(int i, const RootSum& drop, int sign) const;

  // Applies a word of f-letters (rightmost letter first).
  VecF apply_word_f(const Word& w, const RootSum& at, VecF x) const;
  // Applies the e-word with the same letters (rightmost letter first).
  VecF apply_word_e(const Word& w, const RootSum& at, VecF x) const;

  // Basis of the joint kernel of all e-generators, as columns.
  MatF singular_in(const RootSum& drop) const;

  // Canonical spanning rows of the kernel of (word span at drop) -> module;
  // equivalently the annihilator component of the highest vector.
  std::vector<WordExpr> annihilator_component(const RootSum& drop) const;

  // Class vector as a linear combination of representative words.
  WordExpr class_expr(const RootSum& drop, const VecF& x) const;

  PairTable& pair_table() const { return *pairs_; }

 private:
  void build_space(const RootSum& drop);
  void build_actions();

  RootDatum datum_;
  QScale scale_;
  ModuleDesc desc_;
  int cutoff_;
  std::map<RootSum, Space, DropLess> spaces_;
  mutable std::unique_ptr<PairTable> pairs_;
};

std::string to_string(ModuleKind k);

}  // namespace qtwist
