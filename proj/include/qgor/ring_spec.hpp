#pragma once

#include <string>
#include <vector>

#include "qgor/invariants.hpp"

namespace qgor {

/// The graded algebra R = S/I at the irrelevant maximal ideal: ambient
/// ring S, homogeneous defining ideal I (possibly zero), with the variable
/// count n and the Krull dimension d of R cached at construction.
template <class F>
struct RingSpec {
  RingPtr<F> ring;   // S
  Ideal<F> defining; // I
  int n = 0;
  int d = 0;

  const F& field() const { return ring->field; }
  bool is_polynomial_ring() const { return !defining.has_generators(); }
};

template <class F>
RingSpec<F> make_ring_spec(const RingPtr<F>& ring, std::vector<Polynomial<F>> defining_gens) {
  Ideal<F> I(ring, std::move(defining_gens));
  if (!I.is_homogeneous()) throw std::invalid_argument("defining ideal must be homogeneous");
  int d = krull_dimension(I);
  if (d < 0) throw std::invalid_argument("defining ideal is the unit ideal");
  return RingSpec<F>{ring, std::move(I), static_cast<int>(ring->nvars()), d};
}

template <class F>
RingSpec<F> make_ring_spec(const RingPtr<F>& ring, const Ideal<F>& I) {
  std::vector<Polynomial<F>> gens = I.gens();
  return make_ring_spec(ring, std::move(gens));
}

/// Quotient of R by further homogeneous elements: R/(xs) = S/(I + (xs)).
template <class F>
RingSpec<F> quotient_by(const RingSpec<F>& R, const std::vector<Polynomial<F>>& xs) {
  std::vector<Polynomial<F>> gens = R.defining.gens();
  gens.insert(gens.end(), xs.begin(), xs.end());
  return make_ring_spec(R.ring, std::move(gens));
}

}  // namespace qgor
