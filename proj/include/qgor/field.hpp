#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qgor {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Field of exact rationals. Values are always stored reduced with a
/// positive denominator, so equality is structural.
struct QQ {
  using Elem = Rational;

  static Elem zero() { return Elem(0); }
  static Elem one() { return Elem(1); }
  static Elem from_int(long long v) { return Elem(v); }
  static Elem make(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Elem(BigInt(num), BigInt(den));
  }

  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg(const Elem& a) { return -a; }
  static Elem inv(const Elem& a) {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    return 1 / a;
  }
  static Elem div(const Elem& a, const Elem& b) { return mul(a, inv(b)); }
  static bool is_zero(const Elem& a) { return a == 0; }
  static bool is_one(const Elem& a) { return a == 1; }
  static bool equal(const Elem& a, const Elem& b) { return a == b; }

  static std::string to_string(const Elem& a) {
    BigInt num = numerator(a);
    BigInt den = denominator(a);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  static std::uint32_t characteristic() { return 0; }
  std::string name() const { return "Q"; }
  bool operator==(const QQ&) const = default;
};

/// Prime field F_p with 2 <= p < 2^31. Elements are canonical
/// representatives in [0, p).
class GFp {
 public:
  using Elem = std::uint32_t;

  explicit GFp(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }
  Elem make(long long num, long long den) const { return div(from_int(num), from_int(den)); }

  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    if (s >= p_) s -= p_;
    return static_cast<Elem>(s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t(a) * b % p_); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    // extended Euclid on signed 64-bit, p < 2^31 keeps everything in range
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  static bool is_zero(Elem a) { return a == 0; }
  bool is_one(Elem a) const { return a == one(); }
  static bool equal(Elem a, Elem b) { return a == b; }

  static std::string to_string(Elem a) { return std::to_string(a); }

  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "F" + std::to_string(p_); }
  bool operator==(const GFp&) const = default;

  static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t q = 3; q * q <= p; q += 2)
      if (p % q == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

}  // namespace qgor
