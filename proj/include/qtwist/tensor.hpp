#pragma once

#include <optional>

#include "qtwist/hw_module.hpp"

namespace qtwist {

// Weight space of V (x) Z at a total drop, laid out blockwise: one block per
// split d = bv + bz, ordered canonically by bv; inside a block the index is
// (V-class index) * dimZ + (Z-class index).
struct TensorLayout {
  struct Block {
    RootSum bv, bz;
    int offset = 0;
    int dv = 0, dz = 0;
  };
  std::vector<Block> blocks;
  int total = 0;

  int block_index_of(const RootSum& bv) const;
};

TensorLayout tensor_layout(const HWModule& v, const HWModule& z, const RootSum& d);

// Coproduct actions as matrices between total weight spaces.
// f_i: [d] -> [d + a_i] via f (x) 1 + q^{-h} (x) f; requires ht(d) < cutoff.
MatF delta_f(const HWModule& v, const HWModule& z, int i, const RootSum& d);
// e_i: [d] -> [d - a_i] via e (x) q^{h} + 1 (x) e; a 0-row matrix when the
// drop does not contain a_i.
MatF delta_e(const HWModule& v, const HWModule& z, int i, const RootSum& d);

// Joint kernel of all raising operators, with the coefficient blocks along
// the two extreme splits (d, 0) and (0, d).
struct SingularSpace {
  RootSum drop;
  TensorLayout layout;
  MatF basis;      // total x s
  MatF leading_v;  // dimV[d] x s
  MatF leading_z;  // dimZ[d] x s
  int dim() const { return static_cast<int>(basis.cols()); }
};
SingularSpace singular_space(const HWModule& v, const HWModule& z, const RootSum& d);

// Gram matrix of the given columns under the product of the contravariant
// forms of the factors.
MatF product_form_gram(const HWModule& v, const HWModule& z, const RootSum& d,
                       const MatF& columns);

// Extremal data of V relative to Z at drop d:
//  - v_plus: kernel in V[d] of every raising word mirrored from the
//    annihilator of the Z highest vector;
//  - v_perp: span of inverse-antipode images of annihilator elements
//    applied to higher V weight spaces;
//  - complement: lexicographically first class indices completing v_perp.
struct ExtremalData {
  MatF v_plus;
  MatF v_perp;
  std::vector<int> complement;
};
ExtremalData extremal_data(const HWModule& v, const HWModule& z, const RootSum& d);

// The extremal twist at drop d, together with its pullback certificate.
struct TwistData {
  SingularSpace sing;
  ExtremalData ext;
  MatF sections;   // total x p: the singular vector with given leading V-block
  MatF theta_raw;  // dimV[d] x p
  MatF theta;      // coordinates in the complement classes, (dimV[d]-r) x p
  MatF gram;       // p x p: product form in the section basis
  MatF pullback;   // p x p: form of theta images against v_plus
  bool pullback_ok = false;
  int theta_rank = 0;
  int gram_rank = 0;
};
// Throws std::runtime_error when the leading-coefficient system is not
// uniquely solvable (degenerate inputs).
TwistData twist_data(const HWModule& v, const HWModule& z, const RootSum& d);

// Cross path: sections are taken over the universal (verma) module at the
// same highest weight as Z, then pushed into V (x) Z.  hat_z must be the
// verma module with Z's highest weight and cutoff.
struct VermaLift {
  bool hypothesis_ok = false;
  std::string note;  // "dimension gap" when the check fails
  MatF theta;
};
VermaLift theta_via_verma(const HWModule& v, const HWModule& z, const HWModule& hat_z,
                          const RootSum& d);

struct DropRow {
  RootSum drop;
  int dim_singular = 0;
  int gram_rank = 0;
  std::optional<int> theta_rank;
  std::optional<bool> pullback_ok;
};
struct VerdictReport {
  std::vector<DropRow> rows;
  bool reducible = true;
  std::optional<RootSum> defect;
};
// Decides complete reducibility up to the cutoff: the first drop (in the
// canonical order) whose product-form rank on the singular space falls
// short of its dimension is reported as the defect.
VerdictReport verdict(const HWModule& v, const HWModule& z, int cutoff, int jobs = 1);

// Dimensions of the span generated from the given per-drop seed vectors by
// all lowering operators, within the cutoff.
struct ClosureResult {
  std::map<RootSum, int, DropLess> dims;
  bool exhausts = false;  // equals the full tensor dimensions at every drop
  long total = 0;
};
ClosureResult lowering_closure(const HWModule& v, const HWModule& z, int cutoff,
                               const std::map<RootSum, MatF, DropLess>& seeds);

// Closure of all singular vectors up to the cutoff.
ClosureResult singular_span_closure(const HWModule& v, const HWModule& z, int cutoff);

// Degreewise filtration by the V-height of pure tensors v (x) 1:
//  (V (x) Z)_k = action span of the seeds of V-height <= k.
// Checked clauses per level k:
//  - dims:  the filtration step fills every weight space of height <= k;
//  - perp:  v_perp at height-k drops lies one step lower, as v (x) 1;
//  - twist: theta(v) (x) 1 agrees with the section of v one step lower.
struct FiltrationLevel {
  int k = 0;
  bool dims_ok = true;
  bool perp_ok = true;
  bool twist_ok = true;
};
struct FiltrationReport {
  std::vector<FiltrationLevel> levels;
  bool all_ok = true;
};
FiltrationReport filtration_check(const HWModule& v, const HWModule& z, int max_k);

}  // namespace qtwist
