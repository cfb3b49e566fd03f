#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "qgor/groebner.hpp"

namespace qgor {

/// Handle to an ideal of S: a generator list plus a lazily computed,
/// write-once cached reduced Groebner basis. Ideals of R = S/I are
/// represented as ideals of S containing I.
template <class F>
class Ideal {
 public:
  Ideal() = default;

  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens) : data_(std::make_shared<Data>()) {
    data_->ring = std::move(ring);
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      require_same_ring(g.ring(), data_->ring);
      data_->gens.push_back(std::move(g));
    }
  }

  static Ideal zero(RingPtr<F> ring) { return Ideal(std::move(ring), {}); }

  const RingPtr<F>& ring() const { return data_->ring; }
  const std::vector<Polynomial<F>>& gens() const { return data_->gens; }
  bool has_generators() const { return data_ && !data_->gens.empty(); }

  bool is_homogeneous() const {
    for (const auto& g : gens())
      if (!g.is_homogeneous()) return false;
    return true;
  }

  int max_generator_degree() const {
    int d = 0;
    for (const auto& g : gens()) d = std::max(d, g.degree());
    return d;
  }

  /// Reduced Groebner basis, computed once and shared.
  const GroebnerBasis<F>& gb() const {
    std::call_once(data_->once, [this] { data_->gb = reduced_groebner(data_->gens, data_->ring); });
    return data_->gb;
  }

  bool is_unit_ideal() const { return gb().contains_unit(); }
  bool is_zero_ideal() const { return gb().polys.empty(); }

 private:
  struct Data {
    RingPtr<F> ring;
    std::vector<Polynomial<F>> gens;
    mutable std::once_flag once;
    mutable GroebnerBasis<F> gb;
  };
  std::shared_ptr<Data> data_;
};

template <class F>
Ideal<F> make_ideal(const RingPtr<F>& ring, std::vector<Polynomial<F>> gens) {
  return Ideal<F>(ring, std::move(gens));
}

/// Membership test: f belongs to J iff its normal form vanishes.
template <class F>
bool is_member(const Polynomial<F>& f, const Ideal<F>& J) {
  require_same_ring(f.ring(), J.ring());
  return normal_form(f, J.gb()).is_zero();
}

/// The irrelevant maximal ideal m = (all variables).
template <class F>
Ideal<F> irrelevant_ideal(const RingPtr<F>& ring) {
  std::vector<Polynomial<F>> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial<F>::variable(ring, i));
  return Ideal<F>(ring, std::move(vars));
}

}  // namespace qgor
