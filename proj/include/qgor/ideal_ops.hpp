#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "qgor/errors.hpp"
#include "qgor/ideal.hpp"

namespace qgor {

/// Transport a polynomial to another ring over the same field.
/// var_map[i] is the target index of source variable i, or -1 if the
/// variable is dropped (its exponent must then vanish in every term).
template <class F>
Polynomial<F> map_polynomial(const Polynomial<F>& p, const RingPtr<F>& target, const std::vector<int>& var_map) {
  std::vector<Term<F>> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> e(target->nvars(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (var_map[i] < 0) {
        if (t.mon[i] != 0) throw std::invalid_argument("cannot drop a variable that occurs");
      } else {
        e[static_cast<std::size_t>(var_map[i])] = t.mon[i];
      }
    }
    terms.push_back({Monomial(std::move(e)), t.coef});
  }
  return Polynomial<F>::from_terms(target, std::move(terms));
}

namespace detail {

inline std::string fresh_var_name(const std::vector<std::string>& used) {
  for (int k = 0;; ++k) {
    std::string cand = "t" + std::to_string(k) + "_";
    if (std::find(used.begin(), used.end(), cand) == used.end()) return cand;
  }
}

}  // namespace detail

enum class CombineOp { sum, product, power };

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& A, const Ideal<F>& B) {
  require_same_ring(A.ring(), B.ring());
  std::vector<Polynomial<F>> gens = A.gens();
  gens.insert(gens.end(), B.gens().begin(), B.gens().end());
  return Ideal<F>(A.ring(), std::move(gens));
}

template <class F>
Ideal<F> ideal_product(const Ideal<F>& A, const Ideal<F>& B) {
  require_same_ring(A.ring(), B.ring());
  std::vector<Polynomial<F>> gens;
  for (const auto& a : A.gens())
    for (const auto& b : B.gens()) gens.push_back(a * b);
  return Ideal<F>(A.ring(), std::move(gens));
}

template <class F>
Ideal<F> ideal_power(const Ideal<F>& A, std::uint32_t k) {
  if (k == 0) {
    // A^0 is the unit ideal
    return Ideal<F>(A.ring(), {Polynomial<F>::constant(A.ring(), A.ring()->field.one())});
  }
  Ideal<F> r = A;
  for (std::uint32_t i = 1; i < k; ++i) r = ideal_product(r, A);
  return r;
}

/// Equality by comparing reduced Groebner bases (canonical forms).
template <class F>
bool ideal_equal(const Ideal<F>& A, const Ideal<F>& B) {
  require_same_ring(A.ring(), B.ring());
  const auto& ga = A.gb().polys;
  const auto& gbp = B.gb().polys;
  if (ga.size() != gbp.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (ga[i] != gbp[i]) return false;
  return true;
}

template <class F>
bool ideal_contains(const Ideal<F>& A, const Ideal<F>& B) {
  for (const auto& g : B.gens())
    if (!is_member(g, A)) return false;
  return true;
}

/// A cap B via a fresh elimination variable t and a block order:
/// the t-free part of a Groebner basis of t*A + (1-t)*B.
template <class F>
Ideal<F> intersect(const Ideal<F>& A, const Ideal<F>& B) {
  require_same_ring(A.ring(), B.ring());
  const RingPtr<F>& ring = A.ring();
  if (!A.has_generators() || !B.has_generators()) return Ideal<F>::zero(ring);

  std::vector<std::string> vars;
  vars.push_back(detail::fresh_var_name(ring->vars));
  vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
  RingPtr<F> ext = make_ring(ring->field, std::move(vars), MonomialOrder::Block(1));

  std::vector<int> up(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i) up[i] = static_cast<int>(i) + 1;

  Polynomial<F> t = Polynomial<F>::variable(ext, 0);
  Polynomial<F> one_minus_t = Polynomial<F>::constant(ext, ext->field.one()) - t;
  std::vector<Polynomial<F>> gens;
  for (const auto& a : A.gens()) gens.push_back(t * map_polynomial(a, ext, up));
  for (const auto& b : B.gens()) gens.push_back(one_minus_t * map_polynomial(b, ext, up));

  auto basis = reduced_groebner(gens, ext);
  std::vector<int> down(ext->nvars());
  down[0] = -1;
  for (std::size_t i = 1; i < ext->nvars(); ++i) down[i] = static_cast<int>(i) - 1;

  std::vector<Polynomial<F>> result;
  for (const auto& g : basis.polys) {
    bool uses_t = false;
    for (const auto& term : g.terms())
      if (term.mon[0] != 0) {
        uses_t = true;
        break;
      }
    if (!uses_t) result.push_back(map_polynomial(g, ring, down));
  }
  return Ideal<F>(ring, std::move(result));
}

/// (A : f), computed by the intersection method: every generator of
/// A cap (f) is exactly divisible by f.
template <class F>
Ideal<F> colon(const Ideal<F>& A, const Polynomial<F>& f) {
  require_same_ring(A.ring(), f.ring());
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  if (f.is_unit()) return A;
  Ideal<F> inter = intersect(A, Ideal<F>(A.ring(), {f}));
  std::vector<Polynomial<F>> gens;
  for (const auto& g : inter.gens()) gens.push_back(exact_divide(g, f));
  return Ideal<F>(A.ring(), std::move(gens));
}

/// (A : B) = intersection of (A : b) over the generators b of B.
template <class F>
Ideal<F> colon(const Ideal<F>& A, const Ideal<F>& B) {
  require_same_ring(A.ring(), B.ring());
  if (!B.has_generators())
    return Ideal<F>(A.ring(), {Polynomial<F>::constant(A.ring(), A.ring()->field.one())});
  Ideal<F> acc = colon(A, B.gens()[0]);
  for (std::size_t i = 1; i < B.gens().size(); ++i) acc = intersect(acc, colon(A, B.gens()[i]));
  return acc;
}

template <class F>
struct Saturation {
  Ideal<F> ideal;
  int exponent;  // minimal k with (A : f^k) = (A : f^{k+1})
};

/// Iterated colon until the ascending chain repeats; coincidence of two
/// consecutive terms certifies stabilization.
template <class F>
Saturation<F> saturate(const Ideal<F>& A, const Polynomial<F>& f) {
  if (f.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
  Ideal<F> cur = A;
  for (int k = 0; k < 1000; ++k) {
    Ideal<F> nxt = colon(cur, f);
    if (ideal_equal(cur, nxt)) return {cur, k};
    cur = nxt;
  }
  throw internal_error("saturation chain failed to stabilize");
}

template <class F>
Saturation<F> saturate(const Ideal<F>& A, const Ideal<F>& B) {
  Ideal<F> cur = A;
  for (int k = 0; k < 1000; ++k) {
    Ideal<F> nxt = colon(cur, B);
    if (ideal_equal(cur, nxt)) return {cur, k};
    cur = nxt;
  }
  throw internal_error("saturation chain failed to stabilize");
}

/// A cap K[remaining vars], via a block order that eliminates `vars`.
/// The result is returned as an ideal of the original ring.
template <class F>
Ideal<F> eliminate(const Ideal<F>& A, const std::vector<std::size_t>& vars) {
  const RingPtr<F>& ring = A.ring();
  if (vars.empty()) throw std::invalid_argument("no variables to eliminate");
  std::vector<bool> kill(ring->nvars(), false);
  for (auto v : vars) {
    if (v >= ring->nvars()) throw std::invalid_argument("variable index out of range");
    kill[v] = true;
  }
  std::size_t k = 0;
  for (bool b : kill) k += b ? 1 : 0;
  if (k == ring->nvars()) throw std::invalid_argument("cannot eliminate every variable");

  // permuted ring: eliminated variables first
  std::vector<std::string> names;
  std::vector<int> perm(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (kill[i]) {
      perm[i] = static_cast<int>(names.size());
      names.push_back(ring->vars[i]);
    }
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (!kill[i]) {
      perm[i] = static_cast<int>(names.size());
      names.push_back(ring->vars[i]);
    }
  RingPtr<F> ext = make_ring(ring->field, std::move(names), MonomialOrder::Block(static_cast<std::uint32_t>(k)));

  std::vector<Polynomial<F>> gens;
  for (const auto& g : A.gens()) gens.push_back(map_polynomial(g, ext, perm));
  auto basis = reduced_groebner(gens, ext);

  std::vector<int> inv(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  std::vector<Polynomial<F>> result;
  for (const auto& g : basis.polys) {
    bool uses_killed = false;
    for (const auto& term : g.terms())
      for (std::size_t i = 0; i < k && !uses_killed; ++i)
        if (term.mon[i] != 0) uses_killed = true;
    if (!uses_killed) result.push_back(map_polynomial(g, ring, inv));
  }
  return Ideal<F>(ring, std::move(result));
}

/// Generators sorted by the ring's monomial order (leading monomial
/// ascending, full compare as tie-break) -- the canonical listing used in
/// reports.
template <class F>
std::vector<Polynomial<F>> sorted_generators(const Ideal<F>& A) {
  std::vector<Polynomial<F>> gens = A.gens();
  std::sort(gens.begin(), gens.end(), [](const Polynomial<F>& a, const Polynomial<F>& b) {
    int c = compare_monomials(a.leading_monomial(), b.leading_monomial(), a.ring()->order);
    if (c != 0) return c < 0;
    return compare_polynomials(a, b) < 0;
  });
  return gens;
}

}  // namespace qgor
