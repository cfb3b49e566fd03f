#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qgor/groebner.hpp"

namespace qgor {

template <class F>
struct ModTerm {
  std::uint32_t pos;
  Monomial mon;
  typename F::Elem coef;
};

/// Position-over-term compare, positions ascending: a term in a lower
/// position dominates; ties fall through to the ring's monomial order.
template <class F>
int compare_mod_terms(const ModTerm<F>& a, const ModTerm<F>& b, const MonomialOrder& order) {
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return compare_monomials(a.mon, b.mon, order);
}

/// Element of a free module S^rank, terms strictly descending in the
/// position-over-term order.
template <class F>
class FreeVector {
 public:
  using Elem = typename F::Elem;

  FreeVector() = default;
  FreeVector(RingPtr<F> ring, std::uint32_t rank) : ring_(std::move(ring)), rank_(rank) {}

  static FreeVector from_terms(RingPtr<F> ring, std::uint32_t rank, std::vector<ModTerm<F>> terms) {
    FreeVector v(std::move(ring), rank);
    v.terms_ = std::move(terms);
    v.canonicalize();
    return v;
  }

  static FreeVector basis_vector(RingPtr<F> ring, std::uint32_t rank, std::uint32_t pos) {
    auto one = ring->field.one();
    Monomial m(ring->nvars());
    return from_terms(std::move(ring), rank, {{pos, std::move(m), std::move(one)}});
  }

  /// p * e_pos
  static FreeVector from_polynomial(const Polynomial<F>& p, std::uint32_t rank, std::uint32_t pos) {
    std::vector<ModTerm<F>> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) terms.push_back({pos, t.mon, t.coef});
    return from_terms(p.ring(), rank, std::move(terms));
  }

  const RingPtr<F>& ring() const { return ring_; }
  std::uint32_t rank() const { return rank_; }
  const std::vector<ModTerm<F>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const ModTerm<F>& leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("zero vector has no leading term");
    return terms_.front();
  }

  /// The coordinate at position p, as a polynomial.
  Polynomial<F> component(std::uint32_t p) const {
    std::vector<Term<F>> terms;
    for (const auto& t : terms_)
      if (t.pos == p) terms.push_back({t.mon, t.coef});
    return Polynomial<F>::from_terms(ring_, std::move(terms));
  }

  /// Positions with a nonzero coordinate.
  std::vector<std::uint32_t> support_positions() const {
    std::vector<std::uint32_t> ps;
    for (const auto& t : terms_)
      if (ps.empty() || ps.back() != t.pos) ps.push_back(t.pos);
    return ps;
  }

  FreeVector operator-() const {
    FreeVector r(*this);
    for (auto& t : r.terms_) t.coef = ring_->field.neg(t.coef);
    return r;
  }

  friend FreeVector operator+(const FreeVector& a, const FreeVector& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.rank_ != b.rank_) throw std::invalid_argument("free-module rank mismatch");
    const auto& fld = a.ring_->field;
    const auto& ord = a.ring_->order;
    FreeVector r(a.ring_, a.rank_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = compare_mod_terms(a.terms_[i], b.terms_[j], ord);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(b.terms_[j++]);
      } else {
        auto s = fld.add(a.terms_[i].coef, b.terms_[j].coef);
        if (!fld.is_zero(s)) r.terms_.push_back({a.terms_[i].pos, a.terms_[i].mon, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
  }

  friend FreeVector operator-(const FreeVector& a, const FreeVector& b) { return a + (-b); }

  FreeVector times_term(const Monomial& m, const Elem& c) const {
    const auto& fld = ring_->field;
    FreeVector r(ring_, rank_);
    if (fld.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.pos, t.mon * m, fld.mul(t.coef, c)});
    return r;
  }

  FreeVector times_poly(const Polynomial<F>& p) const {
    FreeVector acc(ring_, rank_);
    for (const auto& t : p.terms()) acc = acc + times_term(t.mon, t.coef);
    return acc;
  }

  FreeVector monic() const {
    if (is_zero()) return *this;
    return times_term(Monomial(ring_->nvars()), ring_->field.inv(terms_.front().coef));
  }

  bool operator==(const FreeVector& o) const {
    if (rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
    const auto& fld = ring_->field;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].pos != o.terms_[i].pos || terms_[i].mon != o.terms_[i].mon ||
          !fld.equal(terms_[i].coef, o.terms_[i].coef))
        return false;
    }
    return true;
  }
  bool operator!=(const FreeVector& o) const { return !(*this == o); }

 private:
  void canonicalize() {
    const auto& ord = ring_->order;
    const auto& fld = ring_->field;
    std::stable_sort(terms_.begin(), terms_.end(), [&](const ModTerm<F>& a, const ModTerm<F>& b) {
      return compare_mod_terms(a, b, ord) > 0;
    });
    std::vector<ModTerm<F>> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().pos == t.pos && merged.back().mon == t.mon) {
        merged.back().coef = fld.add(merged.back().coef, t.coef);
      } else {
        merged.push_back(std::move(t));
      }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [&](const ModTerm<F>& t) { return fld.is_zero(t.coef); }),
                 merged.end());
    for (const auto& t : merged)
      if (t.pos >= rank_) throw std::invalid_argument("term position exceeds module rank");
    terms_ = std::move(merged);
  }

  RingPtr<F> ring_;
  std::uint32_t rank_ = 0;
  std::vector<ModTerm<F>> terms_;
};

/// Buchberger-complete basis of a submodule of S^rank, position-over-term
/// order, inter-reduced and sorted (canonical for fixed input module).
template <class F>
struct ModuleBasis {
  RingPtr<F> ring;
  std::uint32_t rank = 0;
  std::vector<FreeVector<F>> vectors;
};

template <class F>
FreeVector<F> normal_form_vector(const FreeVector<F>& v, const std::vector<FreeVector<F>>& basis) {
  if (basis.empty()) return v;
  const auto& fld = v.ring()->field;
  FreeVector<F> h = v;
  std::vector<ModTerm<F>> remainder;
  while (!h.is_zero()) {
    const ModTerm<F>& lt = h.leading_term();
    const FreeVector<F>* reducer = nullptr;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      const ModTerm<F>& glt = g.leading_term();
      if (glt.pos == lt.pos && divides(glt.mon, lt.mon)) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      Monomial m = quotient(lt.mon, reducer->leading_term().mon);
      auto c = fld.div(lt.coef, reducer->leading_term().coef);
      h = h - reducer->times_term(m, c);
    } else {
      remainder.push_back(lt);
      h = h - FreeVector<F>::from_terms(v.ring(), v.rank(), {lt});
    }
  }
  return FreeVector<F>::from_terms(v.ring(), v.rank(), std::move(remainder));
}

template <class F>
FreeVector<F> normal_form_vector(const FreeVector<F>& v, const ModuleBasis<F>& basis) {
  return normal_form_vector(v, basis.vectors);
}

namespace detail {

template <class F>
struct ModPair {
  std::size_t i, j;
  std::uint32_t pos;
  Monomial lcm;
};

// True when every term of v sits in one position (v is a polynomial times
// a basis vector); only then is the coprimality criterion sound for
// module S-pairs.
template <class F>
bool single_position(const FreeVector<F>& v) {
  const auto& ts = v.terms();
  for (std::size_t k = 1; k < ts.size(); ++k)
    if (ts[k].pos != ts[0].pos) return false;
  return true;
}

template <class F>
void module_gm_update(std::vector<ModPair<F>>& pairs, const std::vector<FreeVector<F>>& gens, std::size_t t) {
  const ModTerm<F>& lt_new = gens[t].leading_term();
  struct Cand {
    std::size_t i;
    Monomial lcm;
    bool drop_product;
    bool keep = true;
  };
  std::vector<Cand> cands;
  for (std::size_t i = 0; i < t; ++i) {
    if (gens[i].is_zero()) continue;
    const ModTerm<F>& lt_i = gens[i].leading_term();
    if (lt_i.pos != lt_new.pos) continue;
    bool prod = coprime(lt_i.mon, lt_new.mon) && single_position(gens[i]) && single_position(gens[t]);
    cands.push_back({i, lcm(lt_i.mon, lt_new.mon), prod});
  }
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (!cands[a].keep) continue;
    for (std::size_t b = 0; b < cands.size(); ++b) {
      if (a == b || !cands[b].keep) continue;
      if (cands[b].lcm == cands[a].lcm) {
        if (b < a) continue;
        cands[b].keep = false;
      } else if (divides(cands[a].lcm, cands[b].lcm)) {
        cands[b].keep = false;
      }
    }
  }
  std::vector<ModPair<F>> surviving;
  surviving.reserve(pairs.size());
  for (auto& p : pairs) {
    if (p.pos == lt_new.pos && divides(lt_new.mon, p.lcm) &&
        lcm(gens[p.i].leading_term().mon, lt_new.mon) != p.lcm &&
        lcm(gens[p.j].leading_term().mon, lt_new.mon) != p.lcm) {
      continue;
    }
    surviving.push_back(std::move(p));
  }
  pairs = std::move(surviving);
  for (auto& c : cands) {
    if (!c.keep || c.drop_product) continue;
    pairs.push_back({c.i, t, lt_new.pos, std::move(c.lcm)});
  }
}

template <class F>
std::size_t select_mod_pair(const std::vector<ModPair<F>>& pairs, const MonomialOrder& order) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    const auto& a = pairs[k];
    const auto& b = pairs[best];
    if (a.lcm.degree() != b.lcm.degree()) {
      if (a.lcm.degree() < b.lcm.degree()) best = k;
      continue;
    }
    if (a.pos != b.pos) {
      if (a.pos < b.pos) best = k;
      continue;
    }
    int c = compare_monomials(a.lcm, b.lcm, order);
    if (c < 0 || (c == 0 && (a.i < b.i || (a.i == b.i && a.j < b.j)))) best = k;
  }
  return best;
}

}  // namespace detail

template <class F>
FreeVector<F> s_vector(const FreeVector<F>& f, const FreeVector<F>& g) {
  const auto& fld = f.ring()->field;
  const auto& lf = f.leading_term();
  const auto& lg = g.leading_term();
  Monomial l = lcm(lf.mon, lg.mon);
  return f.times_term(quotient(l, lf.mon), fld.inv(lf.coef)) -
         g.times_term(quotient(l, lg.mon), fld.inv(lg.coef));
}

template <class F>
ModuleBasis<F> module_groebner(const std::vector<FreeVector<F>>& gens, const RingPtr<F>& ring,
                               std::uint32_t rank) {
  std::vector<FreeVector<F>> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.rank() != rank) throw std::invalid_argument("free-module rank mismatch");
    basis.push_back(g.monic());
  }
  std::vector<detail::ModPair<F>> pairs;
  for (std::size_t t = 0; t < basis.size(); ++t) detail::module_gm_update(pairs, basis, t);
  while (!pairs.empty()) {
    std::size_t k = detail::select_mod_pair(pairs, ring->order);
    detail::ModPair<F> p = std::move(pairs[k]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
    FreeVector<F> s = s_vector(basis[p.i], basis[p.j]);
    FreeVector<F> r = normal_form_vector(s, basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    detail::module_gm_update(pairs, basis, basis.size() - 1);
  }
  // inter-reduce: minimal leads, then tail-reduce, then sort
  std::vector<FreeVector<F>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const auto& li = basis[i].leading_term();
      const auto& lj = basis[j].leading_term();
      if (lj.pos == li.pos && divides(lj.mon, li.mon)) {
        if (lj.mon == li.mon && j > i) continue;
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<FreeVector<F>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<FreeVector<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    FreeVector<F> r = normal_form_vector(minimal[i], others).monic();
    if (!r.is_zero()) reduced.push_back(r);
  }
  std::sort(reduced.begin(), reduced.end(), [&](const FreeVector<F>& a, const FreeVector<F>& b) {
    return compare_mod_terms(a.leading_term(), b.leading_term(), ring->order) < 0;
  });
  return ModuleBasis<F>{ring, rank, std::move(reduced)};
}

/// Adjoin g*e_j for every generator g of I and every position j; the
/// standard device for running one kernel over the quotient ring R = S/I.
template <class F>
std::vector<FreeVector<F>> adjoin_quotient_relations(std::vector<FreeVector<F>> gens,
                                                     const std::vector<Polynomial<F>>& I_gens,
                                                     std::uint32_t rank) {
  for (const auto& g : I_gens)
    for (std::uint32_t j = 0; j < rank; ++j)
      gens.push_back(FreeVector<F>::from_polynomial(g, rank, j));
  return gens;
}

/// Generators of the first syzygy module of `columns` (in S, or in S/I
/// when I_gens is nonempty): v is a syzygy iff sum_i v_i * column_i = 0
/// (resp. lies in I*S^rank). Computed by the tag-block elimination: each
/// column is augmented with a fresh basis vector; basis elements landing
/// entirely in the tag block are exactly the syzygies.
template <class F>
std::vector<FreeVector<F>> syzygy_basis(const std::vector<FreeVector<F>>& columns, const RingPtr<F>& ring,
                                        std::uint32_t rank, const std::vector<Polynomial<F>>& I_gens = {}) {
  const std::uint32_t k = static_cast<std::uint32_t>(columns.size());
  const std::uint32_t big = rank + k;
  std::vector<FreeVector<F>> gens;
  gens.reserve(columns.size() + I_gens.size() * rank);
  for (std::uint32_t i = 0; i < k; ++i) {
    std::vector<ModTerm<F>> terms(columns[i].terms());
    terms.push_back({rank + i, Monomial(ring->nvars()), ring->field.one()});
    gens.push_back(FreeVector<F>::from_terms(ring, big, std::move(terms)));
  }
  for (const auto& g : I_gens)
    for (std::uint32_t j = 0; j < rank; ++j) gens.push_back(FreeVector<F>::from_polynomial(g, big, j));

  ModuleBasis<F> basis = module_groebner(gens, ring, big);
  std::vector<FreeVector<F>> syz;
  for (const auto& v : basis.vectors) {
    if (v.is_zero()) continue;
    if (v.leading_term().pos < rank) continue;  // touches the original block
    std::vector<ModTerm<F>> shifted;
    shifted.reserve(v.terms().size());
    for (const auto& t : v.terms()) shifted.push_back({t.pos - rank, t.mon, t.coef});
    syz.push_back(FreeVector<F>::from_terms(ring, k, std::move(shifted)));
  }
  return syz;
}

/// Rank-1 convenience: syzygies of a list of polynomials.
template <class F>
std::vector<FreeVector<F>> syzygy_basis(const std::vector<Polynomial<F>>& polys, const RingPtr<F>& ring,
                                        const std::vector<Polynomial<F>>& I_gens = {}) {
  std::vector<FreeVector<F>> cols;
  cols.reserve(polys.size());
  for (const auto& p : polys) cols.push_back(FreeVector<F>::from_polynomial(p, 1, 0));
  return syzygy_basis(cols, ring, 1, I_gens);
}

/// Generators of {v : map(v) lies in span(targets) (+ I*S^rank)}, where
/// map sends e_i to image_columns[i]. Projection of a syzygy computation
/// on the combined columns.
template <class F>
std::vector<FreeVector<F>> preimage_module(const std::vector<FreeVector<F>>& image_columns,
                                           const std::vector<FreeVector<F>>& targets, const RingPtr<F>& ring,
                                           std::uint32_t target_rank,
                                           const std::vector<Polynomial<F>>& I_gens = {}) {
  std::vector<FreeVector<F>> combined = image_columns;
  combined.insert(combined.end(), targets.begin(), targets.end());
  auto syz = syzygy_basis(combined, ring, target_rank, I_gens);
  const std::uint32_t k = static_cast<std::uint32_t>(image_columns.size());
  std::vector<FreeVector<F>> result;
  for (const auto& v : syz) {
    std::vector<ModTerm<F>> head;
    for (const auto& t : v.terms())
      if (t.pos < k) head.push_back(t);
    FreeVector<F> proj = FreeVector<F>::from_terms(ring, k, std::move(head));
    if (!proj.is_zero()) result.push_back(std::move(proj));
  }
  return result;
}

}  // namespace qgor
