#pragma once

#include <algorithm>
#include <cstdint>
#include <list>
#include <stdexcept>
#include <vector>

#include "qgor/polynomial.hpp"

namespace qgor {

/// Reduced Groebner basis: monic, inter-reduced, sorted ascending by
/// leading monomial. Canonical for a fixed ideal, field, and order.
template <class F>
struct GroebnerBasis {
  RingPtr<F> ring;
  std::vector<Polynomial<F>> polys;

  bool contains_unit() const {
    return polys.size() == 1 && polys[0].is_unit();
  }
};

/// Remainder of f on division by basis: no term of the result is divisible
/// by any leading monomial of the basis. Canonical coset representative
/// when the basis is a (reduced) Groebner basis.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis) {
  if (basis.empty()) return f;
  const auto& fld = f.ring()->field;
  Polynomial<F> rem = Polynomial<F>::zero(f.ring());
  Polynomial<F> h = f;
  std::vector<Term<F>> remainder_terms;
  while (!h.is_zero()) {
    const Term<F>& lt = h.leading_term();
    const Polynomial<F>* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && divides(g.leading_monomial(), lt.mon)) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      Monomial m = quotient(lt.mon, reducer->leading_monomial());
      auto c = fld.div(lt.coef, reducer->leading_term().coef);
      h = h - reducer->times_term(m, c);
    } else {
      remainder_terms.push_back(lt);
      h = h - Polynomial<F>::monomial(f.ring(), lt.mon, lt.coef);
    }
  }
  return Polynomial<F>::from_terms(f.ring(), std::move(remainder_terms));
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
  require_same_ring(f.ring(), gb.ring);
  return normal_form(f, gb.polys);
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  const auto& fld = f.ring()->field;
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Monomial mf = quotient(l, f.leading_monomial());
  Monomial mg = quotient(l, g.leading_monomial());
  auto cf = fld.inv(f.leading_term().coef);
  auto cg = fld.inv(g.leading_term().coef);
  return f.times_term(mf, cf) - g.times_term(mg, cg);
}

namespace detail {

template <class F>
struct SPair {
  std::size_t i, j;  // i < j, indices into the working basis
  Monomial lcm;
};

// Gebauer-Moeller update: prune the pending pair set against the new
// element and generate the surviving new pairs (product + chain criteria).
template <class F>
void gm_update(std::vector<SPair<F>>& pairs, const std::vector<Polynomial<F>>& gens, std::size_t t) {
  const Monomial& lt_new = gens[t].leading_monomial();

  struct Cand {
    std::size_t i;
    Monomial lcm;
    bool coprime;
    bool keep = true;
  };
  std::vector<Cand> cands;
  cands.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    if (gens[i].is_zero()) continue;
    const Monomial& lt_i = gens[i].leading_monomial();
    cands.push_back({i, lcm(lt_i, lt_new), coprime(lt_i, lt_new)});
  }
  // among new pairs keep one representative per minimal lcm
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (!cands[a].keep) continue;
    for (std::size_t b = 0; b < cands.size(); ++b) {
      if (a == b || !cands[b].keep) continue;
      if (cands[b].lcm == cands[a].lcm) {
        if (b < a) continue;  // keep the earlier one
        cands[b].keep = false;
      } else if (divides(cands[a].lcm, cands[b].lcm)) {
        cands[b].keep = false;
      }
    }
  }
  // chain criterion against existing pairs
  std::vector<SPair<F>> surviving;
  surviving.reserve(pairs.size());
  for (auto& p : pairs) {
    const Monomial& lij = p.lcm;
    if (divides(lt_new, lij) && lcm(gens[p.i].leading_monomial(), lt_new) != lij &&
        lcm(gens[p.j].leading_monomial(), lt_new) != lij) {
      continue;  // discarded by chain criterion
    }
    surviving.push_back(std::move(p));
  }
  pairs = std::move(surviving);
  for (auto& c : cands) {
    if (!c.keep || c.coprime) continue;  // product criterion
    pairs.push_back({c.i, t, std::move(c.lcm)});
  }
}

// Normal selection: minimal (lcm degree, lcm monomial, i, j).
template <class F>
std::size_t select_pair(const std::vector<SPair<F>>& pairs, const MonomialOrder& order) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    const auto& a = pairs[k];
    const auto& b = pairs[best];
    if (a.lcm.degree() != b.lcm.degree()) {
      if (a.lcm.degree() < b.lcm.degree()) best = k;
      continue;
    }
    int c = compare_monomials(a.lcm, b.lcm, order);
    if (c < 0 || (c == 0 && (a.i < b.i || (a.i == b.i && a.j < b.j)))) best = k;
  }
  return best;
}

}  // namespace detail

/// Buchberger completion of the input generators (not yet reduced).
template <class F>
std::vector<Polynomial<F>> buchberger(std::vector<Polynomial<F>> gens, const RingPtr<F>& ring) {
  std::vector<Polynomial<F>> basis;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(g.ring(), ring);
    basis.push_back(g.monic());
  }
  std::vector<detail::SPair<F>> pairs;
  for (std::size_t t = 0; t < basis.size(); ++t) detail::gm_update(pairs, basis, t);
  while (!pairs.empty()) {
    std::size_t k = detail::select_pair(pairs, ring->order);
    detail::SPair<F> p = std::move(pairs[k]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
    Polynomial<F> s = s_polynomial(basis[p.i], basis[p.j]);
    Polynomial<F> r = normal_form(s, basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    detail::gm_update(pairs, basis, basis.size() - 1);
  }
  return basis;
}

/// Inter-reduction: make the Buchberger output minimal and tail-reduced.
template <class F>
std::vector<Polynomial<F>> inter_reduce(std::vector<Polynomial<F>> basis, const RingPtr<F>& ring) {
  // minimal: drop g whenever another kept element's lead divides its lead
  std::vector<Polynomial<F>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || basis[j].is_zero()) continue;
      if (divides(basis[j].leading_monomial(), basis[i].leading_monomial())) {
        // on equal leads keep the earlier element
        if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i) continue;
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // tail-reduce each against the others
  std::vector<Polynomial<F>> reduced(minimal.size(), Polynomial<F>::zero(ring));
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<F>> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced[i] = normal_form(minimal[i], others).monic();
  }
  reduced.erase(std::remove_if(reduced.begin(), reduced.end(),
                               [](const Polynomial<F>& p) { return p.is_zero(); }),
                reduced.end());
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    return compare_monomials(a.leading_monomial(), b.leading_monomial(), ring->order) < 0;
  });
  return reduced;
}

/// The reduced Groebner basis of the ideal generated by `gens`.
/// Empty input yields the empty basis (the zero ideal).
template <class F>
GroebnerBasis<F> reduced_groebner(const std::vector<Polynomial<F>>& gens, const RingPtr<F>& ring) {
  auto completed = buchberger(gens, ring);
  return GroebnerBasis<F>{ring, inter_reduce(std::move(completed), ring)};
}

}  // namespace qgor
