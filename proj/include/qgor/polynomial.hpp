#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgor/monomial.hpp"
#include "qgor/ring.hpp"

namespace qgor {

template <class F>
struct Term {
  Monomial mon;
  typename F::Elem coef;
};

/// Sparse polynomial: nonzero terms strictly descending in the ring's
/// order. The zero polynomial is the empty term list.
template <class F>
class Polynomial {
 public:
  using Elem = typename F::Elem;

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  /// Builds canonical form from an arbitrary term soup.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<Term<F>> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  static Polynomial zero(RingPtr<F> ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr<F> ring, Elem c) {
    Polynomial p(ring);
    if (!ring->field.is_zero(c)) p.terms_.push_back({Monomial(ring->nvars()), std::move(c)});
    return p;
  }

  static Polynomial monomial(RingPtr<F> ring, Monomial m, Elem c) {
    Polynomial p(ring);
    if (!ring->field.is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  static Polynomial variable(RingPtr<F> ring, std::size_t i, std::uint32_t power = 1) {
    Monomial m(ring->nvars());
    m.set(i, power);
    return monomial(ring, std::move(m), ring->field.one());
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Term<F>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term<F>& leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mon; }

  /// Total degree (of the highest-degree term); -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mon.degree()));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint32_t d = terms_.front().mon.degree();
    for (const auto& t : terms_)
      if (t.mon.degree() != d) return false;
    return true;
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }
  bool is_unit() const { return terms_.size() == 1 && terms_[0].mon.is_one(); }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coef = ring_->field.neg(t.coef);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    const auto& fld = a.ring_->field;
    const auto& ord = a.ring_->order;
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = compare_monomials(a.terms_[i].mon, b.terms_[j].mon, ord);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(b.terms_[j++]);
      } else {
        auto s = fld.add(a.terms_[i].coef, b.terms_[j].coef);
        if (!fld.is_zero(s)) r.terms_.push_back({a.terms_[i].mon, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    const auto& fld = a.ring_->field;
    Polynomial r(a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_)
        r.terms_.push_back({ta.mon * tb.mon, fld.mul(ta.coef, tb.coef)});
    r.canonicalize();
    return r;
  }

  Polynomial scaled(const Elem& c) const {
    const auto& fld = ring_->field;
    Polynomial r(ring_);
    if (fld.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mon, fld.mul(t.coef, c)});
    return r;
  }

  /// c * X^m * this, preserving term order (monomial multiplication is
  /// order-preserving).
  Polynomial times_term(const Monomial& m, const Elem& c) const {
    const auto& fld = ring_->field;
    Polynomial r(ring_);
    if (fld.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mon * m, fld.mul(t.coef, c)});
    return r;
  }

  Polynomial pow(std::uint32_t k) const {
    Polynomial r = constant(ring_, ring_->field.one());
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1) r = r * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return r;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field.inv(terms_.front().coef));
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    const auto& fld = ring_->field;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].mon != o.terms_[i].mon || !fld.equal(terms_[i].coef, o.terms_[i].coef)) return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = ring_->field.to_string(t.coef);
      bool negative = !c.empty() && c[0] == '-';
      if (first) {
        if (negative) out << "-";
      } else {
        out << (negative ? " - " : " + ");
      }
      first = false;
      std::string mag = negative ? c.substr(1) : c;
      std::string mon = monomial_string(t.mon);
      if (mon.empty()) {
        out << mag;
      } else if (mag == "1") {
        out << mon;
      } else {
        out << mag << "*" << mon;
      }
    }
    return out.str();
  }

 private:
  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += ring_->vars[i];
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  void canonicalize() {
    const auto& ord = ring_->order;
    const auto& fld = ring_->field;
    std::stable_sort(terms_.begin(), terms_.end(), [&](const Term<F>& a, const Term<F>& b) {
      return compare_monomials(a.mon, b.mon, ord) > 0;
    });
    std::vector<Term<F>> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().mon == t.mon) {
        merged.back().coef = fld.add(merged.back().coef, t.coef);
      } else {
        merged.push_back(std::move(t));
      }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [&](const Term<F>& t) { return fld.is_zero(t.coef); }),
                 merged.end());
    terms_ = std::move(merged);
  }

  RingPtr<F> ring_;
  std::vector<Term<F>> terms_;
};

/// Deterministic total order on polynomials of one ring: compare term
/// lists lexicographically by (monomial, then textual coefficient).
template <class F>
int compare_polynomials(const Polynomial<F>& a, const Polynomial<F>& b) {
  const auto& ord = a.ring()->order;
  const auto na = a.terms().size(), nb = b.terms().size();
  for (std::size_t i = 0; i < std::min(na, nb); ++i) {
    int c = compare_monomials(a.terms()[i].mon, b.terms()[i].mon, ord);
    if (c != 0) return c;
    std::string ca = F::to_string(a.terms()[i].coef);
    std::string cb = F::to_string(b.terms()[i].coef);
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  if (na != nb) return na < nb ? -1 : 1;
  return 0;
}

/// Exact division q = a / b; throws if b does not divide a.
template <class F>
Polynomial<F> exact_divide(const Polynomial<F>& a, const Polynomial<F>& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const auto& fld = a.ring()->field;
  Polynomial<F> rem = a;
  std::vector<Term<F>> qterms;
  while (!rem.is_zero()) {
    const auto& lt = rem.leading_term();
    if (!divides(b.leading_monomial(), lt.mon)) throw std::invalid_argument("inexact polynomial division");
    Monomial m = quotient(lt.mon, b.leading_monomial());
    auto c = fld.div(lt.coef, b.leading_term().coef);
    qterms.push_back({m, c});
    rem = rem - b.times_term(m, c);
  }
  return Polynomial<F>::from_terms(a.ring(), std::move(qterms));
}

}  // namespace qgor
