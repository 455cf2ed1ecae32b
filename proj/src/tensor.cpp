#include "qtwist/tensor.hpp"

#include <atomic>
#include <thread>

namespace qtwist {

namespace {
void check_compatible(const HWModule& v, const HWModule& z) {
  if (v.datum().label != z.datum().label)
    throw std::invalid_argument("tensor factors live over different types");
  if (v.scale().D != z.scale().D)
    throw std::invalid_argument("tensor factors use different session scales");
}
}  // namespace

int TensorLayout::block_index_of(const RootSum& bv) const {
  for (size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].bv == bv) return static_cast<int>(i);
  return -1;
}

TensorLayout tensor_layout(const HWModule& v, const HWModule& z, const RootSum& d) {
  check_compatible(v, z);
  TensorLayout l;
  for (const RootSum& bv : sub_drops(v.datum(), d)) {
    TensorLayout::Block b;
    b.bv = bv;
    b.bz = d - bv;
    b.dv = v.dim_at(bv);
    b.dz = z.dim_at(b.bz);
    b.offset = l.total;
    l.total += b.dv * b.dz;
    l.blocks.push_back(std::move(b));
  }
  return l;
}

MatF delta_f(const HWModule& v, const HWModule& z, int i, const RootSum& d) {
  TensorLayout src = tensor_layout(v, z, d);
  RootSum up = d + RootSum::simple(v.datum().rank, i);
  TensorLayout dst = tensor_layout(v, z, up);
  MatF m = MatF::Zero(dst.total, src.total);
  for (const auto& blk : src.blocks) {
    if (blk.dv == 0 || blk.dz == 0) continue;
    // f on the V side
    {
      int t = dst.block_index_of(blk.bv + RootSum::simple(v.datum().rank, i));
      const auto& tb = dst.blocks[t];
      const MatF& fv = v.space(blk.bv).f_mat[i];
      for (int a2 = 0; a2 < tb.dv; ++a2)
        for (int a = 0; a < blk.dv; ++a) {
          if (fv(a2, a).is_zero()) continue;
          for (int b = 0; b < blk.dz; ++b)
            m(tb.offset + a2 * tb.dz + b, blk.offset + a * blk.dz + b) += fv(a2, a);
        }
    }
    // torus on the V side, f on the Z side
    {
      int t = dst.block_index_of(blk.bv);
      const auto& tb = dst.blocks[t];
      RatFunc s = v.torus_scalar(i, blk.bv, -1);
      const MatF& fz = z.space(blk.bz).f_mat[i];
      for (int b2 = 0; b2 < tb.dz; ++b2)
        for (int b = 0; b < blk.dz; ++b) {
          if (fz(b2, b).is_zero()) continue;
          RatFunc c = s * fz(b2, b);
          for (int a = 0; a < blk.dv; ++a)
            m(tb.offset + a * tb.dz + b2, blk.offset + a * blk.dz + b) += c;
        }
    }
  }
  return m;
}

MatF delta_e(const HWModule& v, const HWModule& z, int i, const RootSum& d) {
  TensorLayout src = tensor_layout(v, z, d);
  if (d.mult[i] == 0) return MatF(0, src.total);
  RootSum down = d - RootSum::simple(v.datum().rank, i);
  TensorLayout dst = tensor_layout(v, z, down);
  MatF m = MatF::Zero(dst.total, src.total);
  for (const auto& blk : src.blocks) {
    if (blk.dv == 0 || blk.dz == 0) continue;
    // e on the V side, torus on the Z side
    if (blk.bv.mult[i] > 0) {
      int t = dst.block_index_of(blk.bv - RootSum::simple(v.datum().rank, i));
      const auto& tb = dst.blocks[t];
      const MatF& ev = v.space(blk.bv).e_mat[i];
      RatFunc s = z.torus_scalar(i, blk.bz, +1);
      for (int a2 = 0; a2 < tb.dv; ++a2)
        for (int a = 0; a < blk.dv; ++a) {
          if (ev(a2, a).is_zero()) continue;
          RatFunc c = ev(a2, a) * s;
          for (int b = 0; b < blk.dz; ++b)
            m(tb.offset + a2 * tb.dz + b, blk.offset + a * blk.dz + b) += c;
        }
    }
    // e on the Z side
    if (blk.bz.mult[i] > 0) {
      int t = dst.block_index_of(blk.bv);
      const auto& tb = dst.blocks[t];
      const MatF& ez = z.space(blk.bz).e_mat[i];
      for (int b2 = 0; b2 < tb.dz; ++b2)
        for (int b = 0; b < blk.dz; ++b) {
          if (ez(b2, b).is_zero()) continue;
          for (int a = 0; a < blk.dv; ++a)
            m(tb.offset + a * tb.dz + b2, blk.offset + a * blk.dz + b) += ez(b2, b);
        }
    }
  }
  return m;
}

SingularSpace singular_space(const HWModule& v, const HWModule& z, const RootSum& d) {
  SingularSpace s;
  s.drop = d;
  s.layout = tensor_layout(v, z, d);
  std::vector<MatF> stacks;
  int rows = 0;
  for (int i = 0; i < v.datum().rank; ++i) {
    stacks.push_back(delta_e(v, z, i, d));
    rows += static_cast<int>(stacks.back().rows());
  }
  MatF stacked(rows, s.layout.total);
  int at = 0;
  for (const MatF& m : stacks) {
    stacked.middleRows(at, m.rows()) = m;
    at += static_cast<int>(m.rows());
  }
  s.basis = kernel_basis(stacked);

  const int sd = s.dim();
  s.leading_v = MatF::Zero(v.dim_at(d), sd);
  s.leading_z = MatF::Zero(z.dim_at(d), sd);
  for (const auto& blk : s.layout.blocks) {
    if (blk.bv == d && blk.dz == 1)
      s.leading_v = s.basis.middleRows(blk.offset, blk.dv);
    if (blk.bv.height() == 0 && blk.dv == 1)
      s.leading_z = s.basis.middleRows(blk.offset, blk.dz);
  }
  return s;
}

MatF product_form_gram(const HWModule& v, const HWModule& z, const RootSum& d,
                       const MatF& columns) {
  TensorLayout l = tensor_layout(v, z, d);
  const int s = static_cast<int>(columns.cols());
  MatF g = MatF::Zero(s, s);
  for (const auto& blk : l.blocks) {
    if (blk.dv == 0 || blk.dz == 0) continue;
    const MatF& gv = v.space(blk.bv).gram;
    const MatF& gz = z.space(blk.bz).gram;
    MatF gb(blk.dv * blk.dz, blk.dv * blk.dz);
    for (int a = 0; a < blk.dv; ++a)
      for (int b = 0; b < blk.dz; ++b)
        for (int a2 = 0; a2 < blk.dv; ++a2)
          for (int b2 = 0; b2 < blk.dz; ++b2)
            gb(a * blk.dz + b, a2 * blk.dz + b2) = gv(a, a2) * gz(b, b2);
    MatF part = columns.middleRows(blk.offset, blk.dv * blk.dz);
    g += part.transpose() * gb * part;
  }
  return g;
}

ExtremalData extremal_data(const HWModule& v, const HWModule& z, const RootSum& d) {
  check_compatible(v, z);
  ExtremalData ext;
  const int n = v.dim_at(d);

  // v_plus: joint kernel of the mirrored annihilator operators.
  std::vector<MatF> ops;
  int rows = 0;
  for (const RootSum& beta : sub_drops(v.datum(), d)) {
    if (beta.height() == 0) continue;
    RootSum src_v = d - beta;
    for (const WordExpr& a : z.annihilator_component(beta)) {
      MatF op = MatF::Zero(v.dim_at(src_v), n);
      for (int j = 0; j < n; ++j) {
        VecF ej = VecF::Zero(n);
        ej(j) = RatFunc(1);
        VecF acc = VecF::Zero(v.dim_at(src_v));
        for (const auto& [w, c] : a.terms) acc += c * v.apply_word_e(w, d, ej);
        op.col(j) = acc;
      }
      rows += static_cast<int>(op.rows());
      ops.push_back(std::move(op));
    }
  }
  MatF stacked(rows, n);
  int at = 0;
  for (const MatF& m : ops) {
    stacked.middleRows(at, m.rows()) = m;
    at += static_cast<int>(m.rows());
  }
  ext.v_plus = kernel_basis(stacked);

  // v_perp: inverse-antipode images of the annihilator applied to V.
  std::vector<VecF> cols;
  for (const RootSum& beta : sub_drops(v.datum(), d)) {
    if (beta.height() == 0) continue;
    RootSum src_v = d - beta;
    Weight mu = v.weight_at(src_v);
    for (const WordExpr& a : z.annihilator_component(beta)) {
      for (int j = 0; j < v.dim_at(src_v); ++j) {
        VecF ej = VecF::Zero(v.dim_at(src_v));
        ej(j) = RatFunc(1);
        VecF acc = VecF::Zero(n);
        for (const auto& [w, c] : a.terms) {
          AntipodeImage im = inverse_antipode_word(v.datum(), v.scale(), w, mu);
          acc += (c * im.scalar) * v.apply_word_f(im.reversed, src_v, ej);
        }
        cols.push_back(std::move(acc));
      }
    }
  }
  MatF colrows(static_cast<int>(cols.size()), n);
  for (size_t i = 0; i < cols.size(); ++i) colrows.row(static_cast<int>(i)) = cols[i].transpose();
  Echelon<RatFunc> ech = rref(colrows);
  ext.v_perp = ech.reduced.topRows(ech.rank).transpose();

  SpanBuilder<RatFunc> span(n);
  for (int c = 0; c < ext.v_perp.cols(); ++c) span.add(Vec<RatFunc>(ext.v_perp.col(c)));
  for (int j = 0; j < n; ++j) {
    VecF ej = VecF::Zero(n);
    ej(j) = RatFunc(1);
    if (span.add(ej)) ext.complement.push_back(j);
  }
  return ext;
}

namespace {

// Inverse-antipode lift of a tensor vector into V[d]: every Z-side class is
// replaced by its representative word, which is then pushed into V.
VecF antipode_lift(const HWModule& v, const HWModule& z, const TensorLayout& l, const RootSum& d,
                   const VecF& u) {
  VecF acc = VecF::Zero(v.dim_at(d));
  for (const auto& blk : l.blocks) {
    if (blk.dv == 0 || blk.dz == 0) continue;
    Weight mu = v.weight_at(blk.bv);
    const auto& zsp = z.space(blk.bz);
    for (int b = 0; b < blk.dz; ++b) {
      const Word& w = zsp.words[zsp.class_words[b]];
      AntipodeImage im = inverse_antipode_word(v.datum(), v.scale(), w, mu);
      VecF x = VecF::Zero(blk.dv);
      bool any = false;
      for (int a = 0; a < blk.dv; ++a) {
        x(a) = u(blk.offset + a * blk.dz + b);
        if (!x(a).is_zero()) any = true;
      }
      if (!any) continue;
      acc += im.scalar * v.apply_word_f(im.reversed, blk.bv, x);
    }
  }
  return acc;
}

// Coordinates along [v_perp | complement classes]; returns the complement
// part (the canonical representative modulo v_perp).
MatF complement_coordinates(const ExtremalData& ext, int n, const MatF& raw) {
  const int r = static_cast<int>(ext.v_perp.cols());
  const int m = static_cast<int>(ext.complement.size());
  if (r + m != n) throw std::logic_error("perp/complement split does not fill the space");
  MatF b(n, n);
  for (int c = 0; c < r; ++c) b.col(c) = ext.v_perp.col(c);
  for (int c = 0; c < m; ++c) {
    VecF ej = VecF::Zero(n);
    ej(ext.complement[c]) = RatFunc(1);
    b.col(r + c) = ej;
  }
  auto y = solve_all<RatFunc>(b, raw);
  if (!y) throw std::logic_error("projection system inconsistent");
  return y->bottomRows(m);
}

}  // namespace

TwistData twist_data(const HWModule& v, const HWModule& z, const RootSum& d) {
  TwistData t;
  t.sing = singular_space(v, z, d);
  t.ext = extremal_data(v, z, d);
  const int p = static_cast<int>(t.ext.v_plus.cols());
  const int s = t.sing.dim();
  const int n = v.dim_at(d);

  if (rank_of<RatFunc>(t.sing.leading_v) < s)
    throw std::runtime_error("leading V-coefficients of the singular space are dependent at " +
                             to_string(d));
  auto c = solve_all<RatFunc>(t.sing.leading_v, t.ext.v_plus);
  if (!c)
    throw std::runtime_error("no singular vector has the requested leading V-coefficient at " +
                             to_string(d));
  t.sections = t.sing.basis * (*c);

  t.theta_raw = MatF(n, p);
  for (int a = 0; a < p; ++a)
    t.theta_raw.col(a) = antipode_lift(v, z, t.sing.layout, d, VecF(t.sections.col(a)));
  t.theta = complement_coordinates(t.ext, n, t.theta_raw);

  t.gram = product_form_gram(v, z, d, t.sections);
  t.pullback = t.theta_raw.transpose() * v.space(d).gram * t.ext.v_plus;
  t.pullback_ok = (p == 0) || (t.pullback == t.gram);
  t.theta_rank = rank_of<RatFunc>(t.theta);
  t.gram_rank = rank_of<RatFunc>(t.gram);
  return t;
}

VermaLift theta_via_verma(const HWModule& v, const HWModule& z, const HWModule& hat_z,
                          const RootSum& d) {
  check_compatible(v, z);
  if (!(hat_z.desc().kind == ModuleKind::verma) || !(hat_z.hw() == z.hw()))
    throw std::invalid_argument("hat module must be the universal module at Z's highest weight");
  VermaLift out;

  SingularSpace hat_sing = singular_space(v, hat_z, d);
  SingularSpace sing = singular_space(v, z, d);
  TensorLayout lz = sing.layout;
  const TensorLayout& lh = hat_sing.layout;

  // Push (V (x) hat)[d] -> (V (x) Z)[d] blockwise through representatives.
  MatF push = MatF::Zero(lz.total, lh.total);
  for (size_t bi = 0; bi < lh.blocks.size(); ++bi) {
    const auto& hb = lh.blocks[bi];
    const auto& zb = lz.blocks[bi];  // same bv order
    if (hb.dv == 0 || hb.dz == 0 || zb.dz == 0) continue;
    const auto& hsp = hat_z.space(hb.bz);
    const auto& zsp = z.space(zb.bz);
    for (int j = 0; j < hb.dz; ++j) {
      const Word& w = hsp.words[hsp.class_words[j]];
      auto it = std::lower_bound(zsp.words.begin(), zsp.words.end(), w);
      VecF col = zsp.reduce.col(static_cast<int>(it - zsp.words.begin()));
      for (int a = 0; a < hb.dv; ++a)
        for (int b2 = 0; b2 < zb.dz; ++b2)
          push(zb.offset + a * zb.dz + b2, hb.offset + a * hb.dz + j) = col(b2);
    }
  }

  MatF projected = push * hat_sing.basis;
  if (rank_of<RatFunc>(projected) != sing.dim()) {
    out.hypothesis_ok = false;
    out.note = "dimension gap";
    return out;
  }

  ExtremalData ext = extremal_data(v, z, d);
  const int p = static_cast<int>(ext.v_plus.cols());
  const int n = v.dim_at(d);
  if (rank_of<RatFunc>(hat_sing.leading_v) < hat_sing.dim()) {
    out.hypothesis_ok = false;
    out.note = "dimension gap";
    return out;
  }
  auto c = solve_all<RatFunc>(hat_sing.leading_v, ext.v_plus);
  if (!c) {
    out.hypothesis_ok = false;
    out.note = "dimension gap";
    return out;
  }
  MatF sections = hat_sing.basis * (*c);
  MatF raw(n, p);
  for (int a = 0; a < p; ++a)
    raw.col(a) = antipode_lift(v, hat_z, lh, d, VecF(sections.col(a)));
  out.theta = complement_coordinates(ext, n, raw);
  out.hypothesis_ok = true;
  return out;
}

VerdictReport verdict(const HWModule& v, const HWModule& z, int cutoff, int jobs) {
  check_compatible(v, z);
  if (cutoff > v.cutoff() || cutoff > z.cutoff())
    throw std::invalid_argument("verdict cutoff exceeds the materialized range");
  std::vector<RootSum> drops = enumerate_drops(v.datum(), cutoff);
  std::vector<DropRow> rows(drops.size());

  auto analyze = [&](size_t idx) {
    const RootSum& d = drops[idx];
    DropRow row;
    row.drop = d;
    SingularSpace s = singular_space(v, z, d);
    row.dim_singular = s.dim();
    row.gram_rank = rank_of<RatFunc>(product_form_gram(v, z, d, s.basis));
    try {
      TwistData t = twist_data(v, z, d);
      row.theta_rank = t.theta_rank;
      row.pullback_ok = t.pullback_ok;
    } catch (const std::runtime_error&) {
      row.theta_rank = std::nullopt;
      row.pullback_ok = std::nullopt;
    }
    rows[idx] = std::move(row);
  };

  if (jobs <= 1) {
    for (size_t i = 0; i < drops.size(); ++i) analyze(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t]() {
        try {
          for (size_t i = next.fetch_add(1); i < drops.size(); i = next.fetch_add(1)) analyze(i);
        } catch (...) {
          errors[static_cast<size_t>(t)] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  VerdictReport rep;
  rep.rows = std::move(rows);
  for (const DropRow& r : rep.rows) {
    if (r.gram_rank < r.dim_singular) {
      rep.reducible = false;
      rep.defect = r.drop;
      break;
    }
  }
  return rep;
}

ClosureResult lowering_closure(const HWModule& v, const HWModule& z, int cutoff,
                               const std::map<RootSum, MatF, DropLess>& seeds) {
  check_compatible(v, z);
  std::vector<RootSum> drops = enumerate_drops(v.datum(), cutoff);
  std::map<RootSum, SpanBuilder<RatFunc>, DropLess> spans;
  std::map<RootSum, std::vector<VecF>, DropLess> gens;
  std::map<RootSum, TensorLayout, DropLess> layouts;
  for (const RootSum& d : drops) {
    layouts.emplace(d, tensor_layout(v, z, d));
    spans.emplace(d, SpanBuilder<RatFunc>(layouts.at(d).total));
  }
  auto feed = [&](const RootSum& d, const VecF& x) {
    if (spans.at(d).add(x)) gens[d].push_back(x);
  };
  for (const auto& [d, m] : seeds)
    for (int c = 0; c < m.cols(); ++c) feed(d, VecF(m.col(c)));
  // One ascending pass: lowering strictly raises the height.
  for (const RootSum& d : drops) {
    if (d.height() + 1 > cutoff) continue;
    auto git = gens.find(d);
    if (git == gens.end()) continue;
    for (int i = 0; i < v.datum().rank; ++i) {
      MatF df = delta_f(v, z, i, d);
      RootSum up = d + RootSum::simple(v.datum().rank, i);
      for (const VecF& x : git->second) feed(up, VecF(df * x));
    }
  }
  ClosureResult res;
  res.exhausts = true;
  for (const RootSum& d : drops) {
    int r = spans.at(d).rank();
    res.dims[d] = r;
    res.total += r;
    if (r != layouts.at(d).total) res.exhausts = false;
  }
  return res;
}

ClosureResult singular_span_closure(const HWModule& v, const HWModule& z, int cutoff) {
  std::map<RootSum, MatF, DropLess> seeds;
  for (const RootSum& d : enumerate_drops(v.datum(), cutoff)) {
    SingularSpace s = singular_space(v, z, d);
    if (s.dim() > 0) seeds.emplace(d, s.basis);
  }
  return lowering_closure(v, z, cutoff, seeds);
}

namespace {
// Seed vectors v (x) 1 for all class vectors v of V-height <= k.
std::map<RootSum, MatF, DropLess> height_seeds(const HWModule& v, const HWModule& z, int cutoff,
                                               int k) {
  std::map<RootSum, MatF, DropLess> seeds;
  for (const RootSum& bv : enumerate_drops(v.datum(), std::min(k, cutoff))) {
    int dv = v.dim_at(bv);
    if (dv == 0) continue;
    TensorLayout l = tensor_layout(v, z, bv);
    int bi = l.block_index_of(bv);
    const auto& blk = l.blocks[bi];
    if (blk.dz != 1) continue;  // the highest Z space is one-dimensional
    MatF m = MatF::Zero(l.total, dv);
    for (int a = 0; a < dv; ++a) m(blk.offset + a, a) = RatFunc(1);
    seeds.emplace(bv, std::move(m));
  }
  return seeds;
}
}  // namespace

FiltrationReport filtration_check(const HWModule& v, const HWModule& z, int max_k) {
  check_compatible(v, z);
  const int cutoff = std::min(v.cutoff(), z.cutoff());
  if (max_k > cutoff) throw std::invalid_argument("filtration level exceeds the cutoff");
  FiltrationReport rep;

  // Collected generating vectors of the previous level, per drop.
  std::map<RootSum, std::vector<VecF>, DropLess> prev_gens;
  std::map<RootSum, TensorLayout, DropLess> layouts;
  for (const RootSum& d : enumerate_drops(v.datum(), cutoff))
    layouts.emplace(d, tensor_layout(v, z, d));

  for (int k = 0; k <= max_k; ++k) {
    FiltrationLevel lvl;
    lvl.k = k;

    // Build the level-k span from scratch (levels are small).
    std::map<RootSum, SpanBuilder<RatFunc>, DropLess> spans;
    std::map<RootSum, std::vector<VecF>, DropLess> gens;
    for (const auto& [d, l] : layouts) spans.emplace(d, SpanBuilder<RatFunc>(l.total));
    auto feed = [&](const RootSum& d, const VecF& x) {
      if (spans.at(d).add(x)) gens[d].push_back(x);
    };
    for (const auto& [d, m] : height_seeds(v, z, cutoff, k))
      for (int c = 0; c < m.cols(); ++c) feed(d, VecF(m.col(c)));
    for (const auto& [d, l] : layouts) {
      if (d.height() + 1 > cutoff) continue;
      auto git = gens.find(d);
      if (git == gens.end()) continue;
      for (int i = 0; i < v.datum().rank; ++i) {
        MatF df = delta_f(v, z, i, d);
        RootSum up = d + RootSum::simple(v.datum().rank, i);
        for (const VecF& x : git->second) feed(up, VecF(df * x));
      }
    }

    for (const auto& [d, l] : layouts)
      if (d.height() <= k && spans.at(d).rank() != l.total) lvl.dims_ok = false;

    if (k >= 1) {
      // Previous-level span builders for membership tests.
      std::map<RootSum, SpanBuilder<RatFunc>, DropLess> prev_spans;
      for (const auto& [d, l] : layouts) {
        SpanBuilder<RatFunc> sb(l.total);
        auto it = prev_gens.find(d);
        if (it != prev_gens.end())
          for (const VecF& x : it->second) sb.add(x);
        prev_spans.emplace(d, std::move(sb));
      }
      for (const auto& [d, l] : layouts) {
        if (d.height() != k) continue;
        int bi = l.block_index_of(d);
        const auto& blk = l.blocks[bi];
        ExtremalData ext = extremal_data(v, z, d);
        for (int c = 0; c < ext.v_perp.cols(); ++c) {
          VecF emb = VecF::Zero(l.total);
          for (int a = 0; a < blk.dv; ++a) emb(blk.offset + a * blk.dz) = ext.v_perp(a, c);
          if (!prev_spans.at(d).contains(emb)) lvl.perp_ok = false;
        }
        SingularSpace sing = singular_space(v, z, d);
        if (sing.dim() > 0 || ext.v_plus.cols() > 0) {
          try {
            TwistData t = twist_data(v, z, d);
            for (int a = 0; a < t.theta_raw.cols(); ++a) {
              VecF diff = VecF(t.sections.col(a));
              for (int ai = 0; ai < blk.dv; ++ai)
                diff(blk.offset + ai * blk.dz) -= t.theta_raw(ai, a);
              if (!prev_spans.at(d).contains(diff)) lvl.twist_ok = false;
            }
          } catch (const std::runtime_error&) {
            lvl.twist_ok = false;
          }
        }
      }
    }

    prev_gens = std::move(gens);
    if (!(lvl.dims_ok && lvl.perp_ok && lvl.twist_ok)) rep.all_ok = false;
    rep.levels.push_back(lvl);
  }
  return rep;
}

}  // namespace qtwist
