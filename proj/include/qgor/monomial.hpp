#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qgor {

/// Exponent vector with cached total degree. Length always equals the
/// ambient ring's variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0), deg_(0) {}
  explicit Monomial(std::vector<std::uint32_t> exps)
      : exps_(std::move(exps)), deg_(std::accumulate(exps_.begin(), exps_.end(), std::uint32_t(0))) {}

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t degree() const { return deg_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, std::uint32_t e) {
    deg_ = deg_ - exps_[i] + e;
    exps_[i] = e;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t deg_ = 0;
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial length mismatch");
  std::vector<std::uint32_t> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
  return Monomial(std::move(e));
}

inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial length mismatch");
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// b / a, assuming a | b.
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  std::vector<std::uint32_t> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (a[i] > b[i]) throw std::invalid_argument("inexact monomial quotient");
    e[i] = b[i] - a[i];
  }
  return Monomial(std::move(e));
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

/// Bitmask of variables appearing in m (nvars <= 32 in practice).
inline std::uint64_t support_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i)
    if (m[i] != 0) mask |= (std::uint64_t(1) << i);
  return mask;
}

}  // namespace qgor
