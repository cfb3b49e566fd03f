#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qgor/monomial.hpp"

namespace qgor {

enum class OrderKind { lex, grevlex, block };

/// A monomial order on exponent vectors. `block(k)` eliminates the first k
/// variables: monomials are compared grevlex on the first k coordinates,
/// ties broken grevlex on the rest.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::uint32_t block_size = 0;

  static MonomialOrder Lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder Grevlex() { return {OrderKind::grevlex, 0}; }
  static MonomialOrder Block(std::uint32_t k) { return {OrderKind::block, k}; }

  bool operator==(const MonomialOrder&) const = default;

  std::string name() const {
    switch (kind) {
      case OrderKind::lex: return "lex";
      case OrderKind::grevlex: return "grevlex";
      case OrderKind::block: return "block(" + std::to_string(block_size) + ")";
    }
    return "?";
  }
};

namespace detail {

// Grevlex on the coordinate range [lo, hi): higher degree wins; on equal
// degree the last nonzero entry of a-b decides, negative meaning a > b.
inline int cmp_grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace detail

/// Three-way comparison: +1 if a > b, 0 if equal, -1 if a < b.
inline int compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial length mismatch");
  const std::size_t n = a.nvars();
  switch (order.kind) {
    case OrderKind::lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case OrderKind::grevlex:
      return detail::cmp_grevlex_range(a, b, 0, n);
    case OrderKind::block: {
      std::size_t k = order.block_size;
      if (k > n) throw std::invalid_argument("block size exceeds variable count");
      if (int c = detail::cmp_grevlex_range(a, b, 0, k)) return c;
      return detail::cmp_grevlex_range(a, b, k, n);
    }
  }
  return 0;
}

}  // namespace qgor
