#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include "qgor/homology.hpp"

namespace qgor {

/// A homogeneous system of parameters for R, with its verification
/// certificate: adding the elements to the defining ideal is m-primary.
template <class F>
struct ParamSystem {
  std::vector<Polynomial<F>> elems;
  std::vector<int> degrees;
  std::uint64_t seed = 0;
  bool random_used = false;
  bool certified = false;
};

template <class F>
Ideal<F> ideal_with_defining(const RingSpec<F>& R, const std::vector<Polynomial<F>>& extra) {
  std::vector<Polynomial<F>> gens = R.defining.gens();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal<F>(R.ring, std::move(gens));
}

/// Certify a user-supplied sequence as a system of parameters.
template <class F>
ParamSystem<F> make_param_system(const RingSpec<F>& R, std::vector<Polynomial<F>> elems) {
  if (static_cast<int>(elems.size()) != R.d)
    throw std::invalid_argument("system of parameters must have length dim R = " + std::to_string(R.d));
  ParamSystem<F> ps;
  for (const auto& e : elems) {
    if (e.is_zero() || !e.is_homogeneous() || e.is_constant())
      throw std::invalid_argument("parameters must be nonzero nonunit homogeneous elements");
    ps.degrees.push_back(e.degree());
  }
  ps.elems = std::move(elems);
  if (!is_m_primary(ideal_with_defining(R, ps.elems)))
    throw std::invalid_argument("sequence is not a system of parameters (not m-primary)");
  ps.certified = true;
  return ps;
}

/// Deterministic s.o.p. search: single variables, then variable sums, then
/// seeded random forms of ascending degree, greedily extending while the
/// dimension drops by one each step.
template <class F>
ParamSystem<F> find_sop(const RingSpec<F>& R, std::uint64_t seed = 0, int max_degree = 3,
                        int tries_per_degree = 25) {
  ParamSystem<F> ps;
  ps.seed = seed;
  if (R.d == 0) {
    ps.certified = true;
    return ps;
  }
  const auto& ring = R.ring;
  std::vector<Polynomial<F>> chosen;
  int cur_dim = R.d;
  std::uint64_t attempts = 0;
  for (int step = 0; step < R.d; ++step) {
    std::vector<Polynomial<F>> candidates;
    for (std::size_t i = 0; i < ring->nvars(); ++i) candidates.push_back(Polynomial<F>::variable(ring, i));
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      for (std::size_t j = i + 1; j < ring->nvars(); ++j)
        candidates.push_back(Polynomial<F>::variable(ring, i) + Polynomial<F>::variable(ring, j));
    {
      Polynomial<F> total = Polynomial<F>::zero(ring);
      for (std::size_t i = 0; i < ring->nvars(); ++i) total = total + Polynomial<F>::variable(ring, i);
      candidates.push_back(total);
    }
    bool advanced = false;
    auto try_candidate = [&](const Polynomial<F>& c) {
      ++attempts;
      std::vector<Polynomial<F>> ext = chosen;
      ext.push_back(c);
      Ideal<F> J = ideal_with_defining(R, ext);
      if (krull_dimension(J) == cur_dim - 1) {
        chosen.push_back(c);
        --cur_dim;
        return true;
      }
      return false;
    };
    for (const auto& c : candidates)
      if ((advanced = try_candidate(c))) break;
    if (!advanced) {
      for (int deg = 1; deg <= max_degree && !advanced; ++deg)
        for (int t = 0; t < tries_per_degree && !advanced; ++t) {
          std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(step) * 1000003ULL +
                                               static_cast<std::uint64_t>(deg) * 1009ULL +
                                               static_cast<std::uint64_t>(t));
          Polynomial<F> c = random_homogeneous_form(ring, static_cast<std::uint32_t>(deg), s);
          if (try_candidate(c)) {
            advanced = true;
            ps.random_used = true;
          }
        }
    }
    if (!advanced) {
      std::ostringstream msg;
      msg << "system-of-parameters search exhausted after " << attempts << " attempts at step "
          << step + 1 << " of " << R.d << " (max degree " << max_degree
          << "); raise the degree budget or change the field";
      throw budget_error(msg.str());
    }
  }
  ps.elems = std::move(chosen);
  for (const auto& e : ps.elems) ps.degrees.push_back(e.degree());
  if (!is_m_primary(ideal_with_defining(R, ps.elems)))
    throw internal_error("sop search produced an uncertified sequence");
  ps.certified = true;
  return ps;
}

/// Budgets shared by the iterative procedures.
struct Budgets {
  int t_max = 20;
  int window = 2;
  int n_max = 6;
};

template <class F>
struct LimitClosureResult {
  Ideal<F> ideal;              // {x^n}^lim, as an ideal of S containing I
  int t_stab = 0;              // first index of the certified window
  std::vector<Ideal<F>> chain; // J_0, J_1, ... as inspected
  int window = 2;
  int power = 1;
};

/// Limit closure {x^n}^lim of a certified system of parameters: the
/// stabilized value of J_t = ((x_1^{n+t},...,x_d^{n+t}) + I) : (x_1...x_d)^t,
/// declared stable after `window` consecutive equal ideals. The chain is
/// ascending (certified by membership of generators).
template <class F>
LimitClosureResult<F> limit_closure(const RingSpec<F>& R, const ParamSystem<F>& x, int power = 1,
                                    const Budgets& budgets = {}) {
  if (!x.certified) throw std::invalid_argument("parameter system lacks its certificate");
  if (power < 1) throw std::invalid_argument("power must be at least 1");
  LimitClosureResult<F> out;
  out.window = budgets.window;
  out.power = power;
  if (x.elems.empty()) {
    out.ideal = R.defining;
    out.chain = {R.defining};
    return out;
  }
  Polynomial<F> prod = Polynomial<F>::constant(R.ring, R.ring->field.one());
  for (const auto& e : x.elems) prod = prod * e;

  auto term = [&](int t) {
    std::vector<Polynomial<F>> gens;
    for (const auto& e : x.elems) gens.push_back(e.pow(static_cast<std::uint32_t>(power + t)));
    Ideal<F> A = ideal_with_defining(R, gens);
    if (t == 0) return A;
    return colon(A, prod.pow(static_cast<std::uint32_t>(t)));
  };

  int equal_run = 1;
  out.chain.push_back(term(0));
  for (int t = 1; t <= budgets.t_max; ++t) {
    Ideal<F> next = term(t);
    // chain ascent certificate
    for (const auto& g : out.chain.back().gens())
      if (!is_member(g, next))
        throw internal_error("limit-closure chain failed to ascend at t = " + std::to_string(t));
    if (ideal_equal(next, out.chain.back())) {
      ++equal_run;
    } else {
      equal_run = 1;
    }
    out.chain.push_back(std::move(next));
    if (equal_run >= budgets.window) {
      out.t_stab = t - equal_run + 1;
      out.ideal = out.chain[static_cast<std::size_t>(out.t_stab)];
      return out;
    }
  }
  throw budget_error("limit closure did not stabilize within t_max = " + std::to_string(budgets.t_max) +
                     " (window " + std::to_string(budgets.window) + ")");
}

/// {x}^lim = (x) + I holds iff x is a regular sequence on R; both
/// directions of that reformulation are exercised by this single equality.
template <class F>
bool is_regular_sequence_via_limit(const RingSpec<F>& R, const ParamSystem<F>& x,
                                   const Budgets& budgets = {}) {
  auto lim = limit_closure(R, x, 1, budgets);
  return ideal_equal(lim.ideal, ideal_with_defining(R, x.elems));
}

struct SocleSequence {
  std::vector<std::uint64_t> values;  // s_n for n = 1..n_used
  bool stabilized = false;            // the last two values agree
  int n_used = 0;
};

/// s_n = socle dimension of R/{x^n}^lim for n = 1, 2, ...; stops once two
/// consecutive values agree (or at n_max). The stabilized value estimates
/// the socle dimension of the top local cohomology.
template <class F>
SocleSequence socle_sequence(const RingSpec<F>& R, const ParamSystem<F>& x,
                                const Budgets& budgets = {}) {
  SocleSequence seq;
  for (int n = 1; n <= budgets.n_max; ++n) {
    auto lim = limit_closure(R, x, n, budgets);
    seq.values.push_back(socle_dimension(lim.ideal));
    seq.n_used = n;
    if (n >= 2 && seq.values[seq.values.size() - 1] == seq.values[seq.values.size() - 2]) {
      seq.stabilized = true;
      break;
    }
  }
  return seq;
}

/// The two-route quasi-Gorenstein verdict and all intermediate data.
template <class F>
struct QGReport {
  bool quasi_gorenstein = false;

  // route A: canonical module cyclic and faithful
  std::uint64_t mu_omega = 0;
  Ideal<F> ann_omega;
  bool unmixed = false;  // ann(omega) == I
  bool verdict_a = false;

  // route B: unmixed and stabilized socle dimension one
  ParamSystem<F> sop;
  SocleSequence socle;
  std::optional<bool> verdict_b;
  bool routes_agree = true;
  bool partial = false;  // socle sequence unstabilized; verdict from route A alone
};

/// Route A decides via omega = Ext^{n-d}(R, S): cyclic (mu = 1) and
/// faithful (annihilator equal to the defining ideal). Route B re-decides
/// via limit-closure socles; a disagreement between completed routes is a
/// hard error.
template <class F>
QGReport<F> qg_check(const RingSpec<F>& R, std::optional<ParamSystem<F>> x = std::nullopt,
                     const Budgets& budgets = {}, std::uint64_t seed = 0) {
  QGReport<F> rep;
  auto omega = canonical_module(R);
  rep.mu_omega = omega.gens();
  rep.ann_omega = annihilator(omega);
  rep.unmixed = ideal_equal(rep.ann_omega, R.defining);
  rep.verdict_a = (rep.mu_omega == 1) && rep.unmixed;

  rep.sop = x ? *x : find_sop(R, seed);
  rep.socle = socle_sequence(R, rep.sop, budgets);
  if (rep.socle.stabilized) {
    rep.verdict_b = rep.unmixed && rep.socle.values.back() == 1;
    rep.routes_agree = (*rep.verdict_b == rep.verdict_a);
    if (!rep.routes_agree)
      throw internal_error("quasi-Gorenstein routes disagree: canonical-module route says " +
                           std::string(rep.verdict_a ? "yes" : "no") + ", socle route says " +
                           std::string(*rep.verdict_b ? "yes" : "no"));
  } else {
    rep.partial = true;
  }
  rep.quasi_gorenstein = rep.verdict_a;
  return rep;
}

template <class F>
QGReport<F> qg_check(const RingSpec<F>& R, const ParamSystem<F>& x, const Budgets& budgets = {},
                     std::uint64_t seed = 0) {
  return qg_check(R, std::optional<ParamSystem<F>>(x), budgets, seed);
}

template <class F>
struct BuchsbaumProbe {
  bool annihilation = false;   // m * {x}^lim lies in (x) + I
  bool colon_formula = false;  // {x}^lim = ((x_1^2,...,x_d^2) + I) : x_1...x_d
  LimitClosureResult<F> lim;
};

template <class F>
BuchsbaumProbe<F> buchsbaum_probe(const RingSpec<F>& R, const ParamSystem<F>& x,
                                  const Budgets& budgets = {}) {
  BuchsbaumProbe<F> probe;
  probe.lim = limit_closure(R, x, 1, budgets);
  Ideal<F> xI = ideal_with_defining(R, x.elems);

  probe.annihilation = true;
  for (std::size_t v = 0; v < R.ring->nvars() && probe.annihilation; ++v) {
    Polynomial<F> var = Polynomial<F>::variable(R.ring, v);
    for (const auto& g : probe.lim.ideal.gens())
      if (!is_member(var * g, xI)) {
        probe.annihilation = false;
        break;
      }
  }

  if (!x.elems.empty()) {
    std::vector<Polynomial<F>> squares;
    Polynomial<F> prod = Polynomial<F>::constant(R.ring, R.ring->field.one());
    for (const auto& e : x.elems) {
      squares.push_back(e.pow(2));
      prod = prod * e;
    }
    Ideal<F> rhs = colon(ideal_with_defining(R, squares), prod);
    probe.colon_formula = ideal_equal(probe.lim.ideal, rhs);
  } else {
    probe.colon_formula = true;
  }
  return probe;
}

struct GcmResult {
  int exponent = 0;      // minimal uniform n with m^n * {x}^lim in (x) + I
  bool prefix_ok = true; // m^n * ((x_1..x_i) + I : x_{i+1}) in (x_1..x_i) + I
};

/// Smallest uniform exponent over the supplied systems, with the
/// weak-sequence prefix consequence checked at that exponent.
template <class F>
GcmResult gcm_exponent(const RingSpec<F>& R, const std::vector<ParamSystem<F>>& systems, int n_cap = 8,
                          const Budgets& budgets = {}) {
  if (systems.empty()) throw std::invalid_argument("gcm probe needs at least one parameter system");
  std::vector<LimitClosureResult<F>> lims;
  std::vector<Ideal<F>> xIs;
  for (const auto& x : systems) {
    lims.push_back(limit_closure(R, x, 1, budgets));
    xIs.push_back(ideal_with_defining(R, x.elems));
  }
  auto contained_after_m_power = [&](int n) {
    for (std::size_t k = 0; k < systems.size(); ++k) {
      Ideal<F> scaled = lims[k].ideal;
      if (n > 0)
        scaled = ideal_product(ideal_power(irrelevant_ideal(R.ring), static_cast<std::uint32_t>(n)),
                               scaled);
      for (const auto& g : scaled.gens())
        if (!is_member(g, xIs[k])) return false;
    }
    return true;
  };
  int found = -1;
  for (int n = 0; n <= n_cap; ++n)
    if (contained_after_m_power(n)) {
      found = n;
      break;
    }
  if (found < 0)
    throw budget_error("gcm exponent exceeds cap " + std::to_string(n_cap));

  GcmResult out;
  out.exponent = found;
  Ideal<F> mn = ideal_power(irrelevant_ideal(R.ring), static_cast<std::uint32_t>(std::max(found, 0)));
  for (const auto& x : systems) {
    for (std::size_t i = 0; i + 1 <= x.elems.size() && out.prefix_ok; ++i) {
      std::vector<Polynomial<F>> prefix(x.elems.begin(), x.elems.begin() + static_cast<std::ptrdiff_t>(i));
      Ideal<F> base = ideal_with_defining(R, prefix);
      Ideal<F> quot = colon(base, x.elems[i]);
      Ideal<F> scaled = found > 0 ? ideal_product(mn, quot) : quot;
      for (const auto& g : scaled.gens())
        if (!is_member(g, base)) {
          out.prefix_ok = false;
          break;
        }
    }
  }
  return out;
}

template <class F>
struct DeformationProbe {
  std::vector<bool> verdicts;  // R/x^n R quasi-Gorenstein, n = 1..N
  std::vector<QGReport<F>> reports;
};

/// Finite evidence for the analytic-deformation direction: quotient by
/// ascending powers of a nonzerodivisor and re-run the full checker.
template <class F>
DeformationProbe<F> deformation_probe(const RingSpec<F>& R, const Polynomial<F>& x, int N = 3,
                                      const Budgets& budgets = {}, std::uint64_t seed = 0) {
  if (!ideal_equal(colon(R.defining, x), R.defining))
    throw std::invalid_argument("deformation probe requires a nonzerodivisor");
  DeformationProbe<F> probe;
  for (int n = 1; n <= N; ++n) {
    RingSpec<F> Rn = quotient_by(R, {x.pow(static_cast<std::uint32_t>(n))});
    QGReport<F> rep = qg_check(Rn, std::optional<ParamSystem<F>>{}, budgets, mix_seed(seed, static_cast<std::uint64_t>(n)));
    probe.verdicts.push_back(rep.quasi_gorenstein);
    probe.reports.push_back(std::move(rep));
  }
  return probe;
}

struct QuotientProbe {
  bool hypothesis_ok = false;  // R itself quasi-Gorenstein
  bool avoidance = false;
  bool qg_quotient = false;
  bool consistent = false;
};

/// Regular-element probe: under the quasi-Gorenstein hypothesis the
/// avoidance test and the quotient verdict must agree; when the hypothesis
/// fails the probe still runs but is labeled hypothesis-violated.
template <class F>
QuotientProbe quotient_probe(const RingSpec<F>& R, const Polynomial<F>& x,
                                const Budgets& budgets = {}, std::uint64_t seed = 0) {
  QuotientProbe probe;
  probe.hypothesis_ok = qg_check(R, std::optional<ParamSystem<F>>{}, budgets, seed).quasi_gorenstein;
  probe.avoidance = att_avoidance(x, R);
  RingSpec<F> Q = quotient_by(R, {x});
  probe.qg_quotient = qg_check(Q, std::optional<ParamSystem<F>>{}, budgets, mix_seed(seed, 1)).quasi_gorenstein;
  probe.consistent = (probe.avoidance == probe.qg_quotient);
  return probe;
}

}  // namespace qgor
