#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "qgor/ideal_ops.hpp"
#include "qgor/random.hpp"

namespace qgor {

/// Leading monomials of the reduced basis of J.
template <class F>
std::vector<Monomial> leading_monomials(const Ideal<F>& J) {
  std::vector<Monomial> lts;
  for (const auto& g : J.gb().polys) lts.push_back(g.leading_monomial());
  return lts;
}

/// dim S/J as the maximal size of a variable subset V such that no
/// leading-term monomial of J is supported entirely on V. Returns -1 for
/// the unit ideal (the zero ring).
template <class F>
int krull_dimension(const Ideal<F>& J) {
  const std::size_t n = J.ring()->nvars();
  if (n > 31) throw std::invalid_argument("dimension search limited to 31 variables");
  auto lts = leading_monomials(J);
  for (const auto& m : lts)
    if (m.is_one()) return -1;
  std::vector<std::uint64_t> masks;
  masks.reserve(lts.size());
  for (const auto& m : lts) masks.push_back(support_mask(m));
  int best = -1;
  const std::uint64_t top = std::uint64_t(1) << n;
  for (std::uint64_t v = 0; v < top; ++v) {
    bool independent = true;
    for (auto m : masks)
      if ((m & ~v) == 0) {
        independent = false;
        break;
      }
    if (independent) best = std::max(best, static_cast<int>(__builtin_popcountll(v)));
  }
  return best;
}

/// True iff every variable has a pure power among the leading terms,
/// equivalently dim S/J = 0.
template <class F>
bool is_m_primary(const Ideal<F>& J) {
  if (!J.is_homogeneous()) throw std::invalid_argument("m-primary test requires a homogeneous ideal");
  const std::size_t n = J.ring()->nvars();
  auto lts = leading_monomials(J);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (const auto& m : lts) {
      if (m.is_one()) return true;  // unit ideal
      if (m[i] != 0 && support_mask(m) == (std::uint64_t(1) << i)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// Number of degree-e standard monomials (monomials outside the
/// leading-term ideal).
template <class F>
std::uint64_t standard_monomial_count(const Ideal<F>& J, std::uint32_t degree) {
  auto lts = leading_monomials(J);
  std::uint64_t count = 0;
  for (const auto& m : monomials_of_degree(J.ring()->nvars(), degree)) {
    bool standard = true;
    for (const auto& lt : lts)
      if (divides(lt, m)) {
        standard = false;
        break;
      }
    if (standard) ++count;
  }
  return count;
}

/// Hilbert data of S/J by degree: vdim of the degree-e graded piece.
struct HilbertTable {
  std::map<std::uint32_t, std::uint64_t> by_degree;
  bool finite = false;        // true when J is m-primary (table eventually zero)
  std::uint64_t total = 0;    // meaningful when finite
};

template <class F>
HilbertTable hilbert_table(const Ideal<F>& J, std::uint32_t bound) {
  HilbertTable t;
  for (std::uint32_t e = 0; e <= bound; ++e) t.by_degree[e] = standard_monomial_count(J, e);
  t.finite = is_m_primary(J);
  if (t.finite)
    for (auto& [e, c] : t.by_degree) t.total += c;
  return t;
}

/// vdim_K S/J for m-primary J, by counting standard monomials degree by
/// degree; standard monomials are closed under division, so the count is
/// complete once one degree yields none.
template <class F>
std::uint64_t vdim_artinian(const Ideal<F>& J) {
  if (!is_m_primary(J)) throw std::invalid_argument("vdim requires an m-primary ideal");
  std::uint64_t total = 0;
  for (std::uint32_t e = 0;; ++e) {
    std::uint64_t c = standard_monomial_count(J, e);
    if (c == 0) break;
    total += c;
  }
  return total;
}

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Minimal number of generators of J/I as a module over R = S/I (graded
/// Nakayama): sum over degrees of vdim J_e - vdim (m*J + I)_e.
template <class F>
std::uint64_t mu_homogeneous(const Ideal<F>& J, const Ideal<F>& I) {
  require_same_ring(J.ring(), I.ring());
  if (!J.is_homogeneous() || !I.is_homogeneous())
    throw std::invalid_argument("mu requires homogeneous ideals");
  if (!ideal_contains(J, I)) throw std::invalid_argument("mu context: J must contain I");
  const std::size_t n = J.ring()->nvars();
  Ideal<F> mJ_plus_I = ideal_sum(ideal_product(irrelevant_ideal(J.ring()), J), I);
  int maxdeg = 0;
  for (const auto& g : J.gb().polys) maxdeg = std::max(maxdeg, g.degree());
  std::uint64_t mu = 0;
  for (std::uint32_t e = 0; e <= static_cast<std::uint32_t>(maxdeg); ++e) {
    std::uint64_t full = detail::binomial(e + n - 1, n - 1);
    std::uint64_t dim_J = full - standard_monomial_count(J, e);
    std::uint64_t dim_mJI = full - standard_monomial_count(mJ_plus_I, e);
    mu += dim_J - dim_mJI;
  }
  return mu;
}

/// Vdim Soc(R/a) for a containing the quotient context I and m-primary:
/// lambda(R/a) - lambda(R/(a:m)).
template <class F>
std::uint64_t socle_dimension(const Ideal<F>& a) {
  if (!is_m_primary(a)) throw std::invalid_argument("socle requires an m-primary ideal");
  Ideal<F> am = colon(a, irrelevant_ideal(a.ring()));
  std::uint64_t va = vdim_artinian(a);
  std::uint64_t vam = am.is_unit_ideal() ? 0 : vdim_artinian(am);
  return va - vam;
}

/// Irreducibility of an m-primary ideal, with the mu-based cross-check
/// recorded alongside the socle verdict.
struct IrreducibleCert {
  bool irreducible = false;
  std::uint64_t socle_dim = 0;
  std::uint64_t mu_colon = 0;  // mu(a : m)
  std::uint64_t mu_ideal = 0;  // mu(a)
  bool mu_identity = false;    // mu(a:m) == mu(a) + 1
  bool identity_matches_verdict = false;
};

template <class F>
IrreducibleCert is_irreducible_mprimary(const Ideal<F>& a, const Ideal<F>& I) {
  IrreducibleCert cert;
  cert.socle_dim = socle_dimension(a);
  cert.irreducible = cert.socle_dim == 1;
  Ideal<F> am = colon(a, irrelevant_ideal(a.ring()));
  cert.mu_colon = mu_homogeneous(am, I);
  cert.mu_ideal = mu_homogeneous(a, I);
  cert.mu_identity = cert.mu_colon == cert.mu_ideal + 1;
  cert.identity_matches_verdict = cert.mu_identity == cert.irreducible;
  return cert;
}

}  // namespace qgor
