#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qgor/module.hpp"
#include "qgor/ring_spec.hpp"

namespace qgor {

/// Degree of a homogeneous module element under the given twists.
template <class F>
int vector_degree(const FreeVector<F>& v, const std::vector<int>& twists) {
  if (v.is_zero()) throw std::invalid_argument("zero vector has no degree");
  int d = static_cast<int>(v.terms()[0].mon.degree()) + twists[v.terms()[0].pos];
  for (const auto& t : v.terms())
    if (static_cast<int>(t.mon.degree()) + twists[t.pos] != d)
      throw internal_error("inhomogeneous module element where a graded one was expected");
  return d;
}

/// Map between graded free modules; column j is the image of source basis
/// vector j, homogeneous of the degree forced by the twists.
template <class F>
struct ModuleMap {
  RingPtr<F> ring;
  std::vector<int> target_twists;
  std::vector<int> source_twists;
  std::vector<FreeVector<F>> columns;

  std::uint32_t target_rank() const { return static_cast<std::uint32_t>(target_twists.size()); }
  std::uint32_t source_rank() const { return static_cast<std::uint32_t>(source_twists.size()); }

  Polynomial<F> entry(std::uint32_t row, std::uint32_t col) const { return columns[col].component(row); }

  FreeVector<F> apply(const FreeVector<F>& v) const {
    FreeVector<F> acc(ring, target_rank());
    for (const auto& t : v.terms()) acc = acc + columns[t.pos].times_term(t.mon, t.coef);
    return acc;
  }
};

template <class F>
ModuleMap<F> transpose(const ModuleMap<F>& A) {
  ModuleMap<F> T;
  T.ring = A.ring;
  const std::uint32_t tr = A.target_rank();
  const std::uint32_t sr = A.source_rank();
  T.target_twists.resize(sr);
  for (std::uint32_t j = 0; j < sr; ++j) T.target_twists[j] = -A.source_twists[j];
  T.source_twists.resize(tr);
  for (std::uint32_t r = 0; r < tr; ++r) T.source_twists[r] = -A.target_twists[r];
  std::vector<std::vector<ModTerm<F>>> cols(tr);
  for (std::uint32_t j = 0; j < sr; ++j)
    for (const auto& t : A.columns[j].terms()) cols[t.pos].push_back({j, t.mon, t.coef});
  for (std::uint32_t r = 0; r < tr; ++r)
    T.columns.push_back(FreeVector<F>::from_terms(A.ring, sr, std::move(cols[r])));
  return T;
}

/// Graded finitely presented module coker(relations -> S^g), generator j
/// twisted by gen_twists[j]. Over the quotient ring R = S/I the flag is
/// set and the defining generators ride along.
template <class F>
struct ModulePresentation {
  RingPtr<F> ring;
  std::vector<int> gen_twists;
  std::vector<FreeVector<F>> relations;
  bool over_quotient = false;
  std::vector<Polynomial<F>> quotient_gens;
  bool minimal = false;

  std::uint32_t gens() const { return static_cast<std::uint32_t>(gen_twists.size()); }
};

/// S/J as a module over S (one generator in degree zero).
template <class F>
ModulePresentation<F> cyclic_presentation(const Ideal<F>& J) {
  ModulePresentation<F> M;
  M.ring = J.ring();
  M.gen_twists = {0};
  for (const auto& g : J.gens()) M.relations.push_back(FreeVector<F>::from_polynomial(g, 1, 0));
  return M;
}

/// Reinterpret an S-presentation as a presentation over R = S/I.
template <class F>
ModulePresentation<F> as_quotient_module(ModulePresentation<F> M, const RingSpec<F>& R) {
  M.over_quotient = true;
  M.quotient_gens = R.defining.gens();
  M.minimal = false;
  return M;
}

namespace detail {

template <class F>
FreeVector<F> remove_position(const FreeVector<F>& v, std::uint32_t r) {
  std::vector<ModTerm<F>> terms;
  terms.reserve(v.terms().size());
  for (const auto& t : v.terms()) {
    if (t.pos == r) throw internal_error("removing a position that still carries terms");
    terms.push_back({t.pos > r ? t.pos - 1 : t.pos, t.mon, t.coef});
  }
  return FreeVector<F>::from_terms(v.ring(), v.rank() - 1, std::move(terms));
}

template <class F>
FreeVector<F> nf_components(const FreeVector<F>& v, const GroebnerBasis<F>& gb) {
  std::vector<ModTerm<F>> terms;
  for (std::uint32_t p : v.support_positions()) {
    Polynomial<F> c = normal_form(v.component(p), gb);
    for (const auto& t : c.terms()) terms.push_back({p, t.mon, t.coef});
  }
  return FreeVector<F>::from_terms(v.ring(), v.rank(), std::move(terms));
}

// Find a unit (nonzero degree-0) entry of the columns; returns {row, col}.
template <class F>
std::optional<std::pair<std::uint32_t, std::uint32_t>> find_unit_entry(
    const std::vector<FreeVector<F>>& columns) {
  for (std::uint32_t c = 0; c < columns.size(); ++c)
    for (const auto& t : columns[c].terms())
      if (t.mon.is_one()) return std::make_pair(t.pos, c);
  return std::nullopt;
}

// Gaussian cancellation of unit entries in `next` (columns over a target
// with row_twists). Each cancellation removes one target generator and one
// column; when prev is given, the matching column of prev goes too. Over a
// quotient the entries are first normal-formed against the defining ideal.
template <class F>
void gaussian_cancel(std::vector<FreeVector<F>>& next, std::vector<int>& row_twists,
                     std::vector<FreeVector<F>>* prev, const RingPtr<F>& ring,
                     const GroebnerBasis<F>* quotient_gb) {
  const auto& fld = ring->field;
  for (;;) {
    if (quotient_gb) {
      for (auto& col : next) col = nf_components(col, *quotient_gb);
    }
    next.erase(std::remove_if(next.begin(), next.end(),
                              [](const FreeVector<F>& v) { return v.is_zero(); }),
               next.end());
    auto hit = find_unit_entry(next);
    if (!hit) return;
    auto [r, c] = *hit;
    Polynomial<F> pivot_entry = next[c].component(r);
    // pivot must be a bare constant; a unit plus higher terms still works
    // by clearing with the full entry's constant part only if the entry is
    // exactly constant, so reduce the column first when it is not
    auto u = pivot_entry.terms().back().coef;  // degree-0 term is the last one
    if (!pivot_entry.is_constant()) {
      // mixed entry: the degree-0 part is still a legitimate pivot in the
      // graded case only when the entry is homogeneous of degree 0, which
      // forces it constant; anything else signals an inhomogeneity bug
      throw internal_error("non-constant degree-0 pivot in graded cancellation");
    }
    FreeVector<F> pivot_col = next[c];
    for (std::uint32_t cc = 0; cc < next.size(); ++cc) {
      if (cc == c) continue;
      Polynomial<F> e = next[cc].component(r);
      if (e.is_zero()) continue;
      Polynomial<F> factor = e.scaled(fld.inv(u));
      next[cc] = next[cc] - pivot_col.times_poly(factor);
    }
    std::vector<FreeVector<F>> pruned;
    pruned.reserve(next.size() - 1);
    for (std::uint32_t cc = 0; cc < next.size(); ++cc) {
      if (cc == c) continue;
      pruned.push_back(remove_position(next[cc], r));
    }
    next = std::move(pruned);
    row_twists.erase(row_twists.begin() + r);
    if (prev) prev->erase(prev->begin() + r);
  }
}

}  // namespace detail

/// Minimize a presentation: cancel unit entries of the relation matrix
/// (after reducing entries into normal form when over a quotient).
template <class F>
ModulePresentation<F> minimize_presentation(ModulePresentation<F> M) {
  const GroebnerBasis<F>* qgb = nullptr;
  GroebnerBasis<F> storage;
  if (M.over_quotient) {
    storage = reduced_groebner(M.quotient_gens, M.ring);
    qgb = &storage;
  }
  detail::gaussian_cancel(M.relations, M.gen_twists, static_cast<std::vector<FreeVector<F>>*>(nullptr),
                          M.ring, qgb);
  M.minimal = true;
  return M;
}

/// Module Groebner basis of the relation submodule (with the defining
/// ideal adjoined over a quotient); the membership workhorse.
template <class F>
ModuleBasis<F> relation_basis(const ModulePresentation<F>& M) {
  std::vector<FreeVector<F>> gens = M.relations;
  if (M.over_quotient) gens = adjoin_quotient_relations(std::move(gens), M.quotient_gens, M.gens());
  return module_groebner(gens, M.ring, M.gens());
}

/// Zero-test by membership: the module vanishes iff every generator lies
/// in the relation span.
template <class F>
bool is_zero_module(const ModulePresentation<F>& M) {
  if (M.gens() == 0) return true;
  ModuleBasis<F> basis = relation_basis(M);
  for (std::uint32_t j = 0; j < M.gens(); ++j) {
    auto e = FreeVector<F>::basis_vector(M.ring, M.gens(), j);
    if (!normal_form_vector(e, basis).is_zero()) return false;
  }
  return true;
}

/// Minimal graded free resolution 0 <- M <- F0 <- F1 <- ... of a module
/// presented over S, to homological degree `length` (or shorter when the
/// kernel vanishes). Minimality: no relation matrix carries a unit entry.
template <class F>
struct Resolution {
  RingPtr<F> ring;
  std::vector<int> f0_twists;
  std::vector<ModuleMap<F>> maps;
  bool complete = false;

  std::uint32_t rank(std::size_t i) const {
    if (i == 0) return static_cast<std::uint32_t>(f0_twists.size());
    return i <= maps.size() ? maps[i - 1].source_rank() : 0;
  }
  const std::vector<int>& twists(std::size_t i) const {
    static const std::vector<int> empty;
    if (i == 0) return f0_twists;
    return i <= maps.size() ? maps[i - 1].source_twists : empty;
  }
  std::vector<std::size_t> total_betti() const {
    std::vector<std::size_t> b{f0_twists.size()};
    for (const auto& m : maps) b.push_back(m.source_rank());
    while (b.size() > 1 && b.back() == 0) b.pop_back();
    return b;
  }
};

template <class F>
Resolution<F> free_resolution(const ModulePresentation<F>& M_in, std::size_t length) {
  if (length < 1) throw std::invalid_argument("resolution length must be at least 1");
  if (M_in.over_quotient)
    throw std::invalid_argument("free_resolution expects a module presented over S");
  ModulePresentation<F> M = minimize_presentation(M_in);

  Resolution<F> res;
  res.ring = M.ring;
  res.f0_twists = M.gen_twists;
  if (M.relations.empty()) {
    res.complete = true;
    return res;
  }
  {
    ModuleMap<F> A1;
    A1.ring = M.ring;
    A1.target_twists = M.gen_twists;
    for (const auto& col : M.relations) A1.source_twists.push_back(vector_degree(col, M.gen_twists));
    A1.columns = M.relations;
    res.maps.push_back(std::move(A1));
  }
  while (res.maps.size() < length) {
    ModuleMap<F>& prev = res.maps.back();
    std::vector<FreeVector<F>> syz = syzygy_basis(prev.columns, res.ring, prev.target_rank());
    if (syz.empty()) {
      res.complete = true;
      break;
    }
    // cancel unit entries; each cancellation also deletes the matching
    // column of the previous map (its image was redundant)
    std::vector<int> mid_twists = prev.source_twists;
    detail::gaussian_cancel(syz, mid_twists, &prev.columns, res.ring,
                            static_cast<const GroebnerBasis<F>*>(nullptr));
    prev.source_twists = mid_twists;
    if (syz.empty()) {
      res.complete = true;
      break;
    }
    ModuleMap<F> next;
    next.ring = res.ring;
    next.target_twists = mid_twists;
    for (const auto& col : syz) next.source_twists.push_back(vector_degree(col, mid_twists));
    next.columns = std::move(syz);
    res.maps.push_back(std::move(next));
  }
  return res;
}

/// Ext^i_S(M, S) presented as the subquotient ker(A_{i+1}^T)/im(A_i^T):
/// generators are a kernel basis of the transposed map, relations express
/// membership in the image, then the presentation is minimized.
template <class F>
ModulePresentation<F> ext_module(const Resolution<F>& res, std::size_t i) {
  ModulePresentation<F> E;
  E.ring = res.ring;
  const bool fi_exists = (i == 0) || (i <= res.maps.size());
  if (!fi_exists) return E;  // zero module
  const std::uint32_t ri = res.rank(i);
  std::vector<int> dual_twists(ri);
  for (std::uint32_t k = 0; k < ri; ++k) dual_twists[k] = -res.twists(i)[k];

  // kernel of the dualized next differential
  std::vector<FreeVector<F>> K;
  if (i + 1 <= res.maps.size()) {
    ModuleMap<F> T = transpose(res.maps[i]);
    K = syzygy_basis(T.columns, res.ring, T.target_rank());
  } else {
    for (std::uint32_t k = 0; k < ri; ++k)
      K.push_back(FreeVector<F>::basis_vector(res.ring, ri, k));
  }
  if (K.empty()) return E;

  // image of the dualized previous differential
  std::vector<FreeVector<F>> L;
  if (i >= 1) {
    ModuleMap<F> T = transpose(res.maps[i - 1]);
    L = T.columns;
  }

  for (const auto& k : K) E.gen_twists.push_back(vector_degree(k, dual_twists));
  E.relations = preimage_module(K, L, res.ring, ri);
  return minimize_presentation(std::move(E));
}

template <class F>
ModulePresentation<F> ext_module(const ModulePresentation<F>& M, std::size_t i) {
  return ext_module(free_resolution(M, i + 1), i);
}

/// The canonical module omega = Ext^{n-d}_S(R, S) of R = S/I, minimized;
/// its generator count is mu(omega).
template <class F>
ModulePresentation<F> canonical_module(const RingSpec<F>& R) {
  auto M = cyclic_presentation(R.defining);
  return ext_module(M, static_cast<std::size_t>(R.n - R.d));
}

/// Annihilator of a module over S: the intersection over generator slots
/// of (relation-span : e_j), each computed by a syzygy projection.
template <class F>
Ideal<F> annihilator(const ModulePresentation<F>& M) {
  if (M.over_quotient) throw std::invalid_argument("annihilator expects a module over S");
  const auto& ring = M.ring;
  if (M.gens() == 0)
    return Ideal<F>(ring, {Polynomial<F>::constant(ring, ring->field.one())});
  std::optional<Ideal<F>> acc;
  for (std::uint32_t j = 0; j < M.gens(); ++j) {
    std::vector<FreeVector<F>> ej{FreeVector<F>::basis_vector(ring, M.gens(), j)};
    auto pre = preimage_module(ej, M.relations, ring, M.gens());
    std::vector<Polynomial<F>> gens;
    for (const auto& v : pre) gens.push_back(v.component(0));
    Ideal<F> colon_j(ring, std::move(gens));
    acc = acc ? intersect(*acc, colon_j) : colon_j;
  }
  return *acc;
}

/// depth(M) = n - max{ i : Ext^i_S(M, S) != 0 } (graded local duality).
template <class F>
int depth(const ModulePresentation<F>& M) {
  if (M.over_quotient) throw std::invalid_argument("depth expects a module over S");
  if (is_zero_module(M)) throw std::invalid_argument("depth of the zero module");
  const int n = static_cast<int>(M.ring->nvars());
  Resolution<F> res = free_resolution(M, static_cast<std::size_t>(n) + 1);
  for (std::size_t i = res.maps.size() + 1; i-- > 0;) {
    if (!is_zero_module(ext_module(res, i))) return n - static_cast<int>(i);
  }
  throw internal_error("no nonvanishing Ext against S for a nonzero module");
}

/// Kernel-of-multiplication test: x is a nonzerodivisor on M iff
/// (relation-span : x) adds nothing to the relation span.
template <class F>
bool is_nzd_on_module(const Polynomial<F>& x, const ModulePresentation<F>& M) {
  if (x.is_zero()) throw std::invalid_argument("zero multiplier");
  if (!x.is_homogeneous()) throw std::invalid_argument("multiplier must be homogeneous");
  if (M.gens() == 0) return true;
  const auto& ring = M.ring;
  const std::vector<Polynomial<F>>& Igens =
      M.over_quotient ? M.quotient_gens : std::vector<Polynomial<F>>{};
  std::vector<FreeVector<F>> xe;
  for (std::uint32_t j = 0; j < M.gens(); ++j)
    xe.push_back(FreeVector<F>::from_polynomial(x, M.gens(), j));
  auto pre = preimage_module(xe, M.relations, ring, M.gens(), Igens);
  ModuleBasis<F> basis = relation_basis(M);
  for (const auto& v : pre)
    if (!normal_form_vector(v, basis).is_zero()) return false;
  return true;
}

/// Whether the hypersurface-section obstruction under x vanishes: x must
/// be a nonzerodivisor on R, and the verdict is the nonzerodivisor test on
/// Ext^{n-d+1}_S(R, S), the graded dual of the next-to-top local
/// cohomology; vacuously true when that Ext vanishes.
template <class F>
bool att_avoidance(const Polynomial<F>& x, const RingSpec<F>& R) {
  if (x.is_zero() || x.is_constant()) throw std::invalid_argument("x must be a nonunit nonzero element");
  if (!x.is_homogeneous()) throw std::invalid_argument("x must be homogeneous");
  if (!ideal_equal(colon(R.defining, x), R.defining))
    throw std::invalid_argument("x is a zerodivisor on R");
  auto E = ext_module(cyclic_presentation(R.defining), static_cast<std::size_t>(R.n - R.d + 1));
  if (is_zero_module(E)) return true;
  return is_nzd_on_module(x, E);
}

namespace detail {

// Resolution over R = S/I: syzygies with I adjoined at every position,
// minimized step by step (entries normal-formed, units cancelled).
template <class F>
Resolution<F> quotient_resolution(const ModulePresentation<F>& M_in, std::size_t length,
                                  const GroebnerBasis<F>& qgb) {
  ModulePresentation<F> M = minimize_presentation(M_in);
  Resolution<F> res;
  res.ring = M.ring;
  res.f0_twists = M.gen_twists;
  if (M.relations.empty()) {
    res.complete = true;
    return res;
  }
  ModuleMap<F> A1;
  A1.ring = M.ring;
  A1.target_twists = M.gen_twists;
  for (const auto& col : M.relations) A1.source_twists.push_back(vector_degree(col, M.gen_twists));
  A1.columns = M.relations;
  res.maps.push_back(std::move(A1));
  while (res.maps.size() < length) {
    ModuleMap<F>& prev = res.maps.back();
    std::vector<FreeVector<F>> syz =
        syzygy_basis(prev.columns, res.ring, prev.target_rank(), M.quotient_gens);
    std::vector<int> mid_twists = prev.source_twists;
    detail::gaussian_cancel(syz, mid_twists, &prev.columns, res.ring, &qgb);
    prev.source_twists = mid_twists;
    if (syz.empty()) {
      res.complete = true;  // M turned out to have finite projective dimension over R
      break;
    }
    ModuleMap<F> next;
    next.ring = res.ring;
    next.target_twists = mid_twists;
    for (const auto& col : syz) next.source_twists.push_back(vector_degree(col, mid_twists));
    next.columns = std::move(syz);
    res.maps.push_back(std::move(next));
  }
  return res;
}

}  // namespace detail

template <class F>
struct ExtOverQuotient {
  bool is_zero = true;
  ModulePresentation<F> presentation;
};

/// Ext^i_R(A, B) for modules over R = S/I, i <= 2: resolve A over R to
/// step i+1 (truncation is by design; R-resolutions need not terminate),
/// apply Hom_R(-, B), and decide exactness at spot i by membership of
/// kernel generators in the image submodule.
template <class F>
ExtOverQuotient<F> ext_over_quotient(const ModulePresentation<F>& A, const ModulePresentation<F>& B,
                                     std::size_t i) {
  if (i > 2) throw std::invalid_argument("ext over the quotient ring is supported only for i <= 2");
  if (!A.over_quotient || !B.over_quotient)
    throw std::invalid_argument("ext_over_quotient expects modules over R = S/I");
  const auto& ring = A.ring;
  const auto& Igens = A.quotient_gens;
  GroebnerBasis<F> qgb = reduced_groebner(Igens, ring);

  ModulePresentation<F> Bmin = minimize_presentation(B);
  const std::uint32_t gB = Bmin.gens();
  ExtOverQuotient<F> out;
  out.presentation.ring = ring;
  out.presentation.over_quotient = true;
  out.presentation.quotient_gens = Igens;
  if (gB == 0) return out;

  Resolution<F> res = detail::quotient_resolution(A, i + 1, qgb);
  const bool fi_exists = (i == 0) || (i <= res.maps.size());
  if (!fi_exists) return out;  // F_i = 0, Ext vanishes
  const std::uint32_t ri = res.rank(i);
  const std::uint32_t hom_rank = gB * ri;

  std::vector<int> hom_twists(hom_rank);
  for (std::uint32_t t = 0; t < ri; ++t)
    for (std::uint32_t b = 0; b < gB; ++b)
      hom_twists[t * gB + b] = Bmin.gen_twists[b] - res.twists(i)[t];

  // B-relations planted in every Hom slot; also the target span for the
  // kernel computation one step up
  auto slot_relations = [&](std::uint32_t rank_slots) {
    std::vector<FreeVector<F>> rels;
    for (std::uint32_t s = 0; s < rank_slots; ++s)
      for (const auto& rho : Bmin.relations) {
        std::vector<ModTerm<F>> terms;
        for (const auto& t : rho.terms()) terms.push_back({s * gB + t.pos, t.mon, t.coef});
        rels.push_back(FreeVector<F>::from_terms(ring, gB * rank_slots, std::move(terms)));
      }
    return rels;
  };

  // columns of Hom(F_i, B) -> Hom(F_{i+1}, B): basis (b, t) maps to
  // sum_s A_{i+1}[t][s] * e_{(b, s)}
  std::vector<FreeVector<F>> K;
  if (i + 1 <= res.maps.size()) {
    const ModuleMap<F>& Anext = res.maps[i];
    const std::uint32_t rnext = Anext.source_rank();
    std::vector<FreeVector<F>> delta_cols;
    for (std::uint32_t t = 0; t < ri; ++t)
      for (std::uint32_t b = 0; b < gB; ++b) {
        std::vector<ModTerm<F>> terms;
        for (std::uint32_t s = 0; s < rnext; ++s) {
          Polynomial<F> e = Anext.entry(t, s);
          for (const auto& tm : e.terms()) terms.push_back({s * gB + b, tm.mon, tm.coef});
        }
        delta_cols.push_back(FreeVector<F>::from_terms(ring, gB * rnext, std::move(terms)));
      }
    K = preimage_module(delta_cols, slot_relations(rnext), ring, gB * rnext, Igens);
  } else {
    for (std::uint32_t k = 0; k < hom_rank; ++k)
      K.push_back(FreeVector<F>::basis_vector(ring, hom_rank, k));
  }
  if (K.empty()) return out;

  // image span at spot i: previous differential plus the Hom-space
  // relations themselves
  std::vector<FreeVector<F>> span = slot_relations(ri);
  if (i >= 1) {
    const ModuleMap<F>& Aprev = res.maps[i - 1];
    const std::uint32_t rprev = Aprev.target_rank();
    for (std::uint32_t t = 0; t < rprev; ++t)
      for (std::uint32_t b = 0; b < gB; ++b) {
        std::vector<ModTerm<F>> terms;
        for (std::uint32_t s = 0; s < ri; ++s) {
          Polynomial<F> e = Aprev.entry(t, s);
          for (const auto& tm : e.terms()) terms.push_back({s * gB + b, tm.mon, tm.coef});
        }
        span.push_back(FreeVector<F>::from_terms(ring, hom_rank, std::move(terms)));
      }
  }

  std::vector<FreeVector<F>> span_with_I = adjoin_quotient_relations(span, Igens, hom_rank);
  ModuleBasis<F> span_basis = module_groebner(span_with_I, ring, hom_rank);
  bool all_in = true;
  for (const auto& k : K)
    if (!normal_form_vector(k, span_basis).is_zero()) {
      all_in = false;
      break;
    }
  out.is_zero = all_in;

  for (const auto& k : K) out.presentation.gen_twists.push_back(vector_degree(k, hom_twists));
  out.presentation.relations = preimage_module(K, span, ring, hom_rank, Igens);
  out.presentation = minimize_presentation(std::move(out.presentation));
  return out;
}

/// Complex check: consecutive maps compose to zero, symbolically.
template <class F>
bool composes_to_zero(const ModuleMap<F>& A, const ModuleMap<F>& B) {
  for (const auto& col : B.columns)
    if (!A.apply(col).is_zero()) return false;
  return true;
}

}  // namespace qgor
