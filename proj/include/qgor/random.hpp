#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qgor/polynomial.hpp"

namespace qgor {

/// Deterministic seed mixing (splitmix64 step).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL + b;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t hash_string(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace detail {

/// All degree-d exponent vectors in n variables, lexicographic on the
/// exponent vectors themselves (deterministic enumeration order).
inline void monomials_of_degree_rec(std::size_t n, std::uint32_t d, std::vector<std::uint32_t>& cur,
                                    std::size_t i, std::vector<Monomial>& out) {
  if (i + 1 == n) {
    cur[i] = d;
    out.emplace_back(cur);
    return;
  }
  for (std::uint32_t e = d + 1; e-- > 0;) {
    cur[i] = e;
    monomials_of_degree_rec(n, d - e, cur, i + 1, out);
  }
  cur[i] = 0;
}

}  // namespace detail

inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> cur(nvars, 0);
  detail::monomials_of_degree_rec(nvars, degree, cur, 0, out);
  return out;
}

namespace detail {

template <class F>
typename F::Elem random_coefficient(const F& field, std::mt19937_64& rng);

inline QQ::Elem random_coefficient(const QQ&, std::mt19937_64& rng) {
  // small integers from a fixed range
  return QQ::from_int(static_cast<long long>(rng() % 19) - 9);
}

inline GFp::Elem random_coefficient(const GFp& field, std::mt19937_64& rng) {
  return static_cast<GFp::Elem>(rng() % field.characteristic());
}

}  // namespace detail

/// Homogeneous form of the given degree with pseudo-random coefficients;
/// byte-for-byte reproducible for a fixed seed (mt19937_64 is pinned by
/// the standard). Never returns zero.
template <class F>
Polynomial<F> random_homogeneous_form(const RingPtr<F>& ring, std::uint32_t degree, std::uint64_t seed) {
  if (degree == 0) throw std::invalid_argument("random form degree must be positive");
  std::mt19937_64 rng(seed);
  auto mons = monomials_of_degree(ring->nvars(), degree);
  std::vector<Term<F>> terms;
  for (const auto& m : mons) {
    auto c = detail::random_coefficient(ring->field, rng);
    if (!ring->field.is_zero(c)) terms.push_back({m, c});
  }
  if (terms.empty()) terms.push_back({mons.front(), ring->field.one()});
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

}  // namespace qgor
