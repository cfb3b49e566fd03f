#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgor/field.hpp"
#include "qgor/order.hpp"

namespace qgor {

/// Ambient polynomial ring S = K[x_1,...,x_n], standard-graded (all
/// variables degree 1), with a fixed monomial order. Immutable after
/// construction; shared by pointer.
template <class F>
struct Ring {
  using field_type = F;

  F field;
  std::vector<std::string> vars;
  MonomialOrder order;

  std::size_t nvars() const { return vars.size(); }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool operator==(const Ring& o) const {
    return field == o.field && vars == o.vars && order == o.order;
  }
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> vars, MonomialOrder order = MonomialOrder::Grevlex()) {
  if (vars.empty()) throw std::invalid_argument("ring needs at least one variable");
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw std::invalid_argument("duplicate variable name " + vars[i]);
  return std::make_shared<const Ring<F>>(Ring<F>{std::move(field), std::move(vars), order});
}

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

template <class F>
void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  if (!same_ring(a, b)) throw std::invalid_argument("operands live in different rings");
}

}  // namespace qgor
