#pragma once

// Independent oracles used by the test suites. Everything here recomputes
// values through linear algebra or direct combinatorics, deliberately
// avoiding the Groebner/syzygy code paths it cross-checks.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "qgor/homology.hpp"
#include "qgor/random.hpp"

namespace oracles {

using namespace qgor;

/// Row-echelon accumulator over an exact field.
template <class F>
class RowSpace {
 public:
  using Elem = typename F::Elem;

  RowSpace(F field, std::size_t width) : field_(std::move(field)), width_(width) {}

  std::vector<Elem> reduce(std::vector<Elem> v) const {
    for (const auto& row : rows_) {
      std::size_t p = pivots_[&row - rows_.data()];
      if (!field_.is_zero(v[p])) {
        Elem c = v[p];
        for (std::size_t j = 0; j < width_; ++j) v[j] = field_.sub(v[j], field_.mul(c, row[j]));
      }
    }
    return v;
  }

  bool add(std::vector<Elem> v) {
    v = reduce(std::move(v));
    std::size_t p = width_;
    for (std::size_t j = 0; j < width_; ++j)
      if (!field_.is_zero(v[j])) {
        p = j;
        break;
      }
    if (p == width_) return false;
    Elem inv = field_.inv(v[p]);
    for (std::size_t j = 0; j < width_; ++j) v[j] = field_.mul(v[j], inv);
    // keep earlier rows reduced against the new one
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Elem c = rows_[r][p];
      if (!field_.is_zero(c))
        for (std::size_t j = 0; j < width_; ++j)
          rows_[r][j] = field_.sub(rows_[r][j], field_.mul(c, v[j]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  bool contains(std::vector<Elem> v) const {
    v = reduce(std::move(v));
    for (const auto& c : v)
      if (!field_.is_zero(c)) return false;
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  F field_;
  std::size_t width_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

/// All monomials of total degree <= bound, with an index lookup.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t nvars, std::uint32_t bound) {
    for (std::uint32_t e = 0; e <= bound; ++e)
      for (auto& m : monomials_of_degree(nvars, e)) {
        index_[m.exponents()] = mons_.size();
        mons_.push_back(m);
      }
  }
  std::size_t size() const { return mons_.size(); }
  const Monomial& at(std::size_t i) const { return mons_[i]; }
  std::size_t index_of(const Monomial& m) const { return index_.at(m.exponents()); }
  bool has(const Monomial& m) const { return index_.count(m.exponents()) != 0; }

 private:
  std::vector<Monomial> mons_;
  std::map<std::vector<std::uint32_t>, std::size_t> index_;
};

template <class F>
std::vector<typename F::Elem> coords_of(const Polynomial<F>& p, const MonomialIndex& idx) {
  std::vector<typename F::Elem> v(idx.size(), p.ring()->field.zero());
  for (const auto& t : p.terms()) v[idx.index_of(t.mon)] = t.coef;
  return v;
}

/// Degree-bounded Macaulay-matrix membership: span all monomial multiples
/// m*g of total degree <= bound and test f against the row space.
template <class F>
bool macaulay_member(const Polynomial<F>& f, const std::vector<Polynomial<F>>& gens,
                     std::uint32_t bound) {
  const auto& ring = f.ring();
  MonomialIndex idx(ring->nvars(), bound);
  RowSpace<F> rows(ring->field, idx.size());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int dg = g.degree();
    for (std::uint32_t e = 0; e + static_cast<std::uint32_t>(dg) <= bound; ++e)
      for (const auto& m : monomials_of_degree(ring->nvars(), e))
        rows.add(coords_of(g.times_term(m, ring->field.one()), idx));
  }
  return rows.contains(coords_of(f, idx));
}

/// Basis of the degree-e piece of a twisted free module S^g.
template <class F>
struct PieceBasis {
  std::vector<std::pair<std::uint32_t, Monomial>> elems;  // (position, monomial)
  std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::size_t> index;

  static PieceBasis build(const RingPtr<F>& ring, const std::vector<int>& twists, int e) {
    PieceBasis b;
    for (std::uint32_t p = 0; p < twists.size(); ++p) {
      int d = e - twists[p];
      if (d < 0) continue;
      for (auto& m : monomials_of_degree(ring->nvars(), static_cast<std::uint32_t>(d))) {
        b.index[{p, m.exponents()}] = b.elems.size();
        b.elems.push_back({p, m});
      }
    }
    return b;
  }

  std::size_t size() const { return elems.size(); }

  std::vector<typename F::Elem> coords(const FreeVector<F>& v, const F& field) const {
    std::vector<typename F::Elem> out(elems.size(), field.zero());
    for (const auto& t : v.terms()) out[index.at({t.pos, t.mon.exponents()})] = t.coef;
    return out;
  }
};

/// Row space of a submodule's degree-e piece: all monomial multiples of
/// the columns (and of I*e_j) landing in degree e.
template <class F>
RowSpace<F> piece_rowspace(const RingPtr<F>& ring, const std::vector<int>& twists,
                           const std::vector<FreeVector<F>>& columns,
                           const std::vector<Polynomial<F>>& I_gens, int e,
                           const PieceBasis<F>& basis) {
  RowSpace<F> rows(ring->field, basis.size());
  auto add_multiples = [&](const FreeVector<F>& col, int coldeg) {
    int shift = e - coldeg;
    if (shift < 0) return;
    for (const auto& m : monomials_of_degree(ring->nvars(), static_cast<std::uint32_t>(shift)))
      rows.add(basis.coords(col.times_term(m, ring->field.one()), ring->field));
  };
  for (const auto& col : columns) {
    if (col.is_zero()) continue;
    add_multiples(col, vector_degree(col, twists));
  }
  const std::uint32_t g = static_cast<std::uint32_t>(twists.size());
  for (const auto& f : I_gens)
    for (std::uint32_t j = 0; j < g; ++j) {
      FreeVector<F> v = FreeVector<F>::from_polynomial(f, g, j);
      if (!v.is_zero()) add_multiples(v, vector_degree(v, twists));
    }
  return rows;
}

/// Dimension of ker(x : M_e -> M_{e+deg x}) where M = coker(columns) over
/// S (or S/I), computed with dense linear algebra on graded pieces.
template <class F>
std::size_t kernel_piece_dim(const Polynomial<F>& x, const RingPtr<F>& ring,
                             const std::vector<int>& twists, const std::vector<FreeVector<F>>& columns,
                             const std::vector<Polynomial<F>>& I_gens, int e) {
  int dx = x.degree();
  auto W = PieceBasis<F>::build(ring, twists, e);
  auto Wup = PieceBasis<F>::build(ring, twists, e + dx);
  if (W.size() == 0) return 0;
  RowSpace<F> rel_here = piece_rowspace(ring, twists, columns, I_gens, e, W);
  RowSpace<F> rel_up = piece_rowspace(ring, twists, columns, I_gens, e + dx, Wup);
  RowSpace<F> image(ring->field, Wup.size());
  std::size_t image_rank = 0;
  for (const auto& [pos, mon] : W.elems) {
    FreeVector<F> b = FreeVector<F>::from_terms(ring, static_cast<std::uint32_t>(twists.size()),
                                                {{pos, mon, ring->field.one()}});
    auto v = rel_up.reduce(Wup.coords(b.times_poly(x), ring->field));
    if (image.add(std::move(v))) ++image_rank;
  }
  std::size_t preimage_dim = W.size() - image_rank;  // {v : x v in relations}
  return preimage_dim - rel_here.rank();
}

/// Total Betti numbers of S/J for a monomial ideal J, from the Taylor
/// complex tensored down to the residue field: differentials keep only the
/// +-1 entries where dropping a generator leaves the lcm unchanged.
inline std::vector<std::size_t> taylor_betti(const std::vector<Monomial>& gens) {
  const std::size_t k = gens.size();
  const std::size_t nvars = gens.empty() ? 0 : gens[0].nvars();
  std::vector<std::vector<std::uint32_t>> subsets_by_size(k + 1);
  std::vector<std::vector<std::uint32_t>> subsets(1u << k);
  std::vector<Monomial> lcms(1u << k, Monomial(nvars));
  std::vector<std::vector<std::size_t>> level(k + 1);
  std::vector<std::size_t> index_in_level(1u << k);
  for (std::uint32_t s = 0; s < (1u << k); ++s) {
    Monomial l(nvars);
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (s & (1u << i)) {
        l = lcm(l, gens[i]);
        ++bits;
      }
    lcms[s] = l;
    index_in_level[s] = level[static_cast<std::size_t>(bits)].size();
    level[static_cast<std::size_t>(bits)].push_back(s);
  }
  // rank of d_i : T_i -> T_{i-1} over Q
  std::vector<std::size_t> rank(k + 2, 0);
  for (std::size_t i = 1; i <= k; ++i) {
    RowSpace<QQ> rows(QQ{}, level[i - 1].size());
    for (std::size_t a = 0; a < level[i].size(); ++a) {
      std::uint32_t s = static_cast<std::uint32_t>(level[i][a]);
      std::vector<Rational> row(level[i - 1].size(), Rational(0));
      int j = 0;
      for (std::size_t t = 0; t < k; ++t) {
        if (!(s & (1u << t))) continue;
        std::uint32_t sub = s & ~(1u << t);
        if (lcms[sub] == lcms[s]) row[index_in_level[sub]] = (j % 2 == 0) ? Rational(1) : Rational(-1);
        ++j;
      }
      rows.add(std::move(row));
    }
    rank[i] = rows.rank();
  }
  std::vector<std::size_t> betti;
  for (std::size_t i = 0; i <= k; ++i) {
    std::size_t b = level[i].size() - rank[i] - rank[i + 1];
    betti.push_back(b);
  }
  while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
  return betti;
}

/// Minimal generators of a monomial ideal (divisibility antichain).
inline std::vector<Monomial> minimal_monomial_gens(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      if (divides(gens[j], gens[i]) && !(gens[i] == gens[j] && j > i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

/// Classical oracle: a monomial m-primary ideal is irreducible iff it is
/// generated by pure variable powers.
inline bool monomial_irreducible(const std::vector<Monomial>& gens) {
  for (const auto& m : minimal_monomial_gens(gens)) {
    std::size_t support = 0;
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (m[i] != 0) ++support;
    if (support != 1) return false;
  }
  return true;
}

/// lcm-pairs oracle for the intersection of two monomial ideals.
inline std::vector<Monomial> monomial_intersection(const std::vector<Monomial>& A,
                                                   const std::vector<Monomial>& B) {
  std::vector<Monomial> lcms;
  for (const auto& a : A)
    for (const auto& b : B) lcms.push_back(lcm(a, b));
  return minimal_monomial_gens(std::move(lcms));
}

/// Direct independent-set dimension for an ideal generated by monomials
/// (no basis computation involved).
inline int monomial_dimension(const std::vector<Monomial>& gens, std::size_t nvars) {
  int best = -1;
  for (std::uint64_t v = 0; v < (std::uint64_t(1) << nvars); ++v) {
    bool independent = true;
    for (const auto& m : gens) {
      if (m.is_one()) return -1;
      if ((support_mask(m) & ~v) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, static_cast<int>(__builtin_popcountll(v)));
  }
  return best;
}

/// Standard-monomial count by depth-first search from 1 (divisor-closed
/// set), independent of the per-degree counting in the library.
template <class F>
std::uint64_t dfs_standard_monomials(const Ideal<F>& J, std::uint64_t cap = 100000) {
  auto lts = leading_monomials(J);
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Monomial> stack{Monomial(J.ring()->nvars())};
  std::uint64_t count = 0;
  while (!stack.empty()) {
    Monomial m = stack.back();
    stack.pop_back();
    if (seen.count(m.exponents())) continue;
    bool standard = true;
    for (const auto& lt : lts)
      if (divides(lt, m)) {
        standard = false;
        break;
      }
    if (!standard) continue;
    seen.insert(m.exponents());
    if (++count > cap) throw std::runtime_error("dfs cap exceeded (ideal not m-primary?)");
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      Monomial up = m;
      up.set(i, m[i] + 1);
      stack.push_back(up);
    }
  }
  return count;
}

}  // namespace oracles
