#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qgor/report.hpp"
#include "qgor/session.hpp"
#include "qgor/version.hpp"

namespace qgor {

struct CommandOptions {
  std::string file;
  std::string ring;
  std::vector<std::string> ideals;
  std::vector<std::string> seqs;
  bool json = false;
  std::uint64_t seed = 0;
  int t_max = 20;
  int n_max = 6;
  int window = 2;
  int power = 1;     // limit-closure power
  int index = 1;     // ext index
  int length = 0;    // resolution length; 0 = variable count
  int cap = 8;       // gcm exponent cap
  int deform_n = 3;  // deformation probe depth
  bool timings = false;
  std::string dir;   // corpus directory
  int jobs = 0;      // corpus worker pool size; 0 = hardware
};

/// exit 0: computed (mathematical "no" included); exit 1: usage error;
/// exit 2: computation budget exceeded; exit 4: internal invariant failed.
struct CommandResult {
  int exit_code = 0;
  std::string text;
  Json doc;
  bool has_doc = false;
};

namespace detail {

struct Payload {
  Json inputs;
  Json result;
  std::string text;
};

template <class F>
RingSpec<F> assemble_ring_spec(const Session& session, const RingPtr<F>& ring,
                               const Session::RingDecl& rdecl, const CommandOptions& opts) {
  const Session::IdealDecl* idecl = nullptr;
  if (!opts.ideals.empty()) {
    idecl = session.find_ideal(opts.ideals[0]);
    if (!idecl) throw std::invalid_argument("unknown ideal '" + opts.ideals[0] + "'");
    if (idecl->ring_name != rdecl.name)
      throw std::invalid_argument("ideal '" + idecl->name + "' belongs to ring '" + idecl->ring_name +
                                  "', not '" + rdecl.name + "'");
  } else {
    idecl = session.first_ideal_of(rdecl.name);  // may be null: polynomial ring
  }
  if (!idecl) return make_ring_spec(ring, std::vector<Polynomial<F>>{});
  return make_ring_spec(ring, std::get<Ideal<F>>(idecl->ideal));
}

template <class F>
std::vector<Polynomial<F>> resolve_seq(const Session& session, const std::string& name,
                                       const std::string& ring_name) {
  const auto* sdecl = session.find_seq(name);
  if (!sdecl) throw std::invalid_argument("unknown seq '" + name + "'");
  if (sdecl->ring_name != ring_name)
    throw std::invalid_argument("seq '" + name + "' belongs to ring '" + sdecl->ring_name + "', not '" +
                                ring_name + "'");
  return std::get<std::vector<Polynomial<F>>>(sdecl->seq);
}

template <class F>
Ideal<F> resolve_ideal_same_field(const Session& session, const std::string& name, const char* what) {
  const auto* idecl = session.find_ideal(name);
  if (!idecl) throw std::invalid_argument(std::string("unknown ideal '") + name + "'");
  const Ideal<F>* typed = std::get_if<Ideal<F>>(&idecl->ideal);
  if (!typed)
    throw std::invalid_argument(std::string(what) + ": ideal '" + name + "' lives over a different field");
  return *typed;
}

inline Budgets budgets_from(const CommandOptions& opts) {
  return Budgets{opts.t_max, opts.window, opts.n_max};
}

inline std::string bool_word(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

/// Runs one subcommand against a parsed session. See the README for the
/// per-command argument conventions.
CommandResult run_command(const Session& session, const std::string& command, const CommandOptions& opts);

namespace detail {

// ---- ideal-centric commands (dispatch over the first ideal's field) ----

template <class F>
Payload cmd_gb(const Session&, const Ideal<F>& A) {
  Payload p;
  Json basis = Json::array();
  std::string text;
  for (const auto& g : A.gb().polys) {
    basis.push_back(g.to_string());
    text += g.to_string() + "\n";
  }
  p.result["basis"] = basis;
  p.result["size"] = A.gb().polys.size();
  p.text = text.empty() ? "empty basis (zero ideal)\n" : text;
  return p;
}

template <class F>
Payload cmd_dim(const Session&, const Ideal<F>& A) {
  Payload p;
  int d = krull_dimension(A);
  p.result["dimension"] = d;
  p.result["m_primary"] = A.is_homogeneous() ? Json(is_m_primary(A)) : Json(nullptr);
  p.text = "dimension " + std::to_string(d) + "\n";
  return p;
}

template <class F>
Payload cmd_two_ideal(const Session& session, const Ideal<F>& A, const CommandOptions& opts,
                      const std::string& command) {
  if (opts.ideals.size() < 2)
    throw std::invalid_argument(command + " needs two --ideal arguments");
  Ideal<F> B = resolve_ideal_same_field<F>(session, opts.ideals[1], command.c_str());
  require_same_ring(A.ring(), B.ring());
  Payload p;
  if (command == "colon") {
    Ideal<F> C = colon(A, B);
    p.result["generators"] = ideal_to_json(C);
  } else if (command == "intersect") {
    Ideal<F> C = intersect(A, B);
    p.result["generators"] = ideal_to_json(C);
  } else {  // saturate
    auto sat = saturate(A, B);
    p.result["generators"] = ideal_to_json(sat.ideal);
    p.result["exponent"] = sat.exponent;
    p.text += "exponent " + std::to_string(sat.exponent) + "\n";
  }
  for (const auto& g : p.result["generators"]) p.text += g.get<std::string>() + "\n";
  return p;
}

template <class F>
Payload cmd_hilbert(const Session&, const Ideal<F>& A) {
  Payload p;
  std::uint32_t bound;
  if (is_m_primary(A)) {
    std::uint32_t e = 0;
    while (standard_monomial_count(A, e) != 0) ++e;
    bound = e;
  } else {
    bound = static_cast<std::uint32_t>(A.max_generator_degree()) + 3;
  }
  HilbertTable t = hilbert_table(A, bound);
  p.result = hilbert_to_json(t);
  for (auto [e, c] : t.by_degree) p.text += "H(" + std::to_string(e) + ") = " + std::to_string(c) + "\n";
  if (t.finite) p.text += "total " + std::to_string(t.total) + "\n";
  return p;
}

template <class F>
Payload cmd_mu_socle_irreducible(const Session& session, const Ideal<F>& A, const CommandOptions& opts,
                                 const std::string& command) {
  Ideal<F> context = Ideal<F>::zero(A.ring());
  if (opts.ideals.size() >= 2)
    context = resolve_ideal_same_field<F>(session, opts.ideals[1], command.c_str());
  Payload p;
  if (command == "mu") {
    auto mu = mu_homogeneous(A, context);
    p.result["mu"] = mu;
    p.text = "mu = " + std::to_string(mu) + "\n";
  } else if (command == "socle") {
    auto s = socle_dimension(A);
    p.result["socle_dimension"] = s;
    p.text = "socle dimension " + std::to_string(s) + "\n";
  } else {
    auto cert = is_irreducible_mprimary(A, context);
    p.result = irreducible_to_json(cert);
    p.text = std::string("irreducible: ") + bool_word(cert.irreducible) + " (socle " +
             std::to_string(cert.socle_dim) + ", mu(a:m) = " + std::to_string(cert.mu_colon) +
             ", mu(a) = " + std::to_string(cert.mu_ideal) + ")\n";
  }
  return p;
}

template <class F>
Payload cmd_resolve_ext_depth(const Ideal<F>& A, const CommandOptions& opts, const std::string& command) {
  Payload p;
  auto M = cyclic_presentation(A);
  if (command == "resolve") {
    std::size_t len = opts.length > 0 ? static_cast<std::size_t>(opts.length) : A.ring()->nvars() + 1;
    auto res = free_resolution(M, len);
    p.result = resolution_to_json(res);
    p.text = resolution_to_text(res);
  } else if (command == "ext") {
    auto E = ext_module(M, static_cast<std::size_t>(opts.index));
    p.result = presentation_to_json(E);
    p.result["is_zero"] = is_zero_module(E);
    p.text = "Ext^" + std::to_string(opts.index) + ": " + std::to_string(E.gens()) + " generators, " +
             std::to_string(E.relations.size()) + " relations" + (is_zero_module(E) ? " (zero module)" : "") +
             "\n";
  } else {  // depth
    int dep = depth(M);
    p.result["depth"] = dep;
    p.text = "depth " + std::to_string(dep) + "\n";
  }
  return p;
}

// ---- ring-centric commands ----

template <class F>
Payload cmd_sop(const RingSpec<F>& R, const CommandOptions& opts) {
  Payload p;
  auto x = find_sop(R, opts.seed);
  p.result = param_system_to_json(x);
  for (const auto& e : x.elems) p.text += e.to_string() + "\n";
  if (x.elems.empty()) p.text = "empty system (dimension 0)\n";
  return p;
}

template <class F>
ParamSystem<F> sop_for(const Session& session, const RingSpec<F>& R, const Session::RingDecl& rdecl,
                       const CommandOptions& opts) {
  if (!opts.seqs.empty()) {
    auto elems = resolve_seq<F>(session, opts.seqs[0], rdecl.name);
    return make_param_system(R, std::move(elems));
  }
  return find_sop(R, opts.seed);
}

template <class F>
Payload cmd_limit_closure(const Session& session, const RingSpec<F>& R, const Session::RingDecl& rdecl,
                          const CommandOptions& opts) {
  Payload p;
  auto x = sop_for(session, R, rdecl, opts);
  auto lim = limit_closure(R, x, opts.power, budgets_from(opts));
  p.result = limit_closure_to_json(lim);
  p.result["sop"] = param_system_to_json(x);
  p.result["regular_sequence"] = ideal_equal(lim.ideal, ideal_with_defining(R, x.elems));
  for (const auto& g : p.result["generators"]) p.text += g.get<std::string>() + "\n";
  p.text += "t_stab " + std::to_string(lim.t_stab) + " (window " + std::to_string(lim.window) + ")\n";
  return p;
}

template <class F>
Payload cmd_canonical(const RingSpec<F>& R) {
  Payload p;
  auto omega = canonical_module(R);
  auto ann = annihilator(omega);
  p.result = presentation_to_json(omega);
  p.result["mu"] = omega.gens();
  p.result["annihilator"] = ideal_to_json(ann);
  p.result["ann_equals_defining"] = ideal_equal(ann, R.defining);
  p.text = "mu(omega) = " + std::to_string(omega.gens()) + "\n" +
           "annihilator equals defining ideal: " + bool_word(p.result["ann_equals_defining"].get<bool>()) +
           "\n";
  return p;
}

template <class F>
Payload cmd_qgcheck(const Session& session, const RingSpec<F>& R, const Session::RingDecl& rdecl,
                    const CommandOptions& opts) {
  Payload p;
  std::optional<ParamSystem<F>> x;
  if (!opts.seqs.empty())
    x = make_param_system(R, resolve_seq<F>(session, opts.seqs[0], rdecl.name));
  auto rep = qg_check(R, x, budgets_from(opts), opts.seed);
  p.result = qg_report_to_json(rep);
  std::ostringstream out;
  out << "quasi-Gorenstein: " << bool_word(rep.quasi_gorenstein) << "\n"
      << "  mu(omega) = " << rep.mu_omega << ", unmixed: " << bool_word(rep.unmixed) << "\n"
      << "  socle sequence:";
  for (auto v : rep.socle.values) out << " " << v;
  out << (rep.socle.stabilized ? " (stabilized)" : " (NOT stabilized)") << "\n";
  if (rep.partial) out << "  route B unstabilized at n_max; verdict from route A only\n";
  p.text = out.str();
  return p;
}

template <class F>
Payload cmd_buchsbaum(const Session& session, const RingSpec<F>& R, const Session::RingDecl& rdecl,
                      const CommandOptions& opts) {
  Payload p;
  auto x = sop_for(session, R, rdecl, opts);
  auto probe = buchsbaum_probe(R, x, budgets_from(opts));
  p.result["annihilation"] = probe.annihilation;
  p.result["colon_formula"] = probe.colon_formula;
  p.result["limit_closure"] = limit_closure_to_json(probe.lim);
  p.result["sop"] = param_system_to_json(x);
  p.text = "m * lim in (x) + I: " + bool_word(probe.annihilation) +
           "\ncolon formula reproduces lim: " + bool_word(probe.colon_formula) + "\n";
  return p;
}

template <class F>
Payload cmd_gcm(const Session& session, const RingSpec<F>& R, const Session::RingDecl& rdecl,
                const CommandOptions& opts) {
  Payload p;
  std::vector<ParamSystem<F>> systems;
  if (opts.seqs.empty()) {
    systems.push_back(find_sop(R, opts.seed));
  } else {
    for (const auto& name : opts.seqs)
      systems.push_back(make_param_system(R, resolve_seq<F>(session, name, rdecl.name)));
  }
  auto res = gcm_exponent(R, systems, opts.cap, budgets_from(opts));
  p.result["exponent"] = res.exponent;
  p.result["prefix_ok"] = res.prefix_ok;
  p.result["systems"] = systems.size();
  p.text = "gcm exponent " + std::to_string(res.exponent) + ", prefix colon checks: " +
           bool_word(res.prefix_ok) + "\n";
  return p;
}

template <class F>
Polynomial<F> first_seq_element(const Session& session, const Session::RingDecl& rdecl,
                                const CommandOptions& opts, const char* cmd) {
  if (opts.seqs.empty()) throw std::invalid_argument(std::string(cmd) + " needs --seq (x = first element)");
  auto elems = resolve_seq<F>(session, opts.seqs[0], rdecl.name);
  if (elems.empty()) throw std::invalid_argument("seq is empty");
  return elems[0];
}

template <class F>
Payload cmd_deform(const Session& session, const RingSpec<F>& R, const Session::RingDecl& rdecl,
                   const CommandOptions& opts) {
  Payload p;
  Polynomial<F> x = first_seq_element<F>(session, rdecl, opts, "deform");
  auto probe = deformation_probe(R, x, opts.deform_n, budgets_from(opts), opts.seed);
  Json verdicts = Json::array();
  Json reports = Json::array();
  for (std::size_t k = 0; k < probe.verdicts.size(); ++k) {
    verdicts.push_back(static_cast<bool>(probe.verdicts[k]));
    reports.push_back(qg_report_to_json(probe.reports[k]));
    p.text += "R/x^" + std::to_string(k + 1) + "R quasi-Gorenstein: " + bool_word(probe.verdicts[k]) + "\n";
  }
  p.result["verdicts"] = verdicts;
  p.result["reports"] = reports;
  p.result["x"] = x.to_string();
  return p;
}

template <class F>
Payload cmd_quotient_probe(const Session& session, const RingSpec<F>& R, const Session::RingDecl& rdecl,
                           const CommandOptions& opts) {
  Payload p;
  Polynomial<F> x = first_seq_element<F>(session, rdecl, opts, "quotient-probe");
  auto probe = quotient_probe(R, x, budgets_from(opts), opts.seed);
  p.result["hypothesis_ok"] = probe.hypothesis_ok;
  p.result["avoidance"] = probe.avoidance;
  p.result["qg_quotient"] = probe.qg_quotient;
  p.result["consistent"] = probe.consistent;
  p.result["x"] = x.to_string();
  p.text = std::string("hypothesis (R quasi-Gorenstein): ") + bool_word(probe.hypothesis_ok) +
           (probe.hypothesis_ok ? "" : "  [probe labeled hypothesis-violated]") + "\n" +
           "avoidance: " + bool_word(probe.avoidance) + "\nR/xR quasi-Gorenstein: " +
           bool_word(probe.qg_quotient) + "\nconsistent: " + bool_word(probe.consistent) + "\n";
  return p;
}

template <class Fn>
Payload dispatch_first_ideal(const Session& session, const CommandOptions& opts, const char* cmd,
                             Fn&& fn) {
  if (opts.ideals.empty()) throw std::invalid_argument(std::string(cmd) + " needs --ideal");
  const auto* idecl = session.find_ideal(opts.ideals[0]);
  if (!idecl) throw std::invalid_argument("unknown ideal '" + opts.ideals[0] + "'");
  return std::visit([&](const auto& ideal) { return fn(ideal, *idecl); }, idecl->ideal);
}

template <class Fn>
Payload dispatch_ring(const Session& session, const CommandOptions& opts, const char* cmd, Fn&& fn) {
  if (opts.ring.empty()) throw std::invalid_argument(std::string(cmd) + " needs --ring");
  const auto* rdecl = session.find_ring(opts.ring);
  if (!rdecl) throw std::invalid_argument("unknown ring '" + opts.ring + "'");
  return std::visit(
      [&](const auto& ring) {
        auto R = assemble_ring_spec(session, ring, *rdecl, opts);
        return fn(R, *rdecl);
      },
      rdecl->ring);
}

}  // namespace detail

inline CommandResult run_command(const Session& session, const std::string& command,
                                 const CommandOptions& opts) {
  using namespace detail;
  auto start = std::chrono::steady_clock::now();
  CommandResult out;
  Payload p;
  try {
    if (command == "gb" || command == "dim" || command == "hilbert") {
      p = dispatch_first_ideal(session, opts, command.c_str(), [&](const auto& A, const auto& idecl) {
        Payload q;
        if (command == "gb") q = cmd_gb(session, A);
        if (command == "dim") q = cmd_dim(session, A);
        if (command == "hilbert") q = cmd_hilbert(session, A);
        q.inputs["ideal"] = idecl.name;
        q.inputs["generators"] = ideal_to_json(A);
        q.inputs["ring"] = ring_to_json(A.ring());
        return q;
      });
    } else if (command == "colon" || command == "intersect" || command == "saturate") {
      p = dispatch_first_ideal(session, opts, command.c_str(), [&](const auto& A, const auto& idecl) {
        Payload q = cmd_two_ideal(session, A, opts, command);
        q.inputs["ideal"] = opts.ideals;
        q.inputs["ring"] = ring_to_json(A.ring());
        (void)idecl;
        return q;
      });
    } else if (command == "mu" || command == "socle" || command == "irreducible") {
      p = dispatch_first_ideal(session, opts, command.c_str(), [&](const auto& A, const auto& idecl) {
        Payload q = cmd_mu_socle_irreducible(session, A, opts, command);
        q.inputs["ideal"] = opts.ideals;
        q.inputs["ring"] = ring_to_json(A.ring());
        (void)idecl;
        return q;
      });
    } else if (command == "resolve" || command == "ext" || command == "depth") {
      p = dispatch_first_ideal(session, opts, command.c_str(), [&](const auto& A, const auto& idecl) {
        Payload q = cmd_resolve_ext_depth(A, opts, command);
        q.inputs["ideal"] = idecl.name;
        q.inputs["ring"] = ring_to_json(A.ring());
        if (command == "ext") q.inputs["index"] = opts.index;
        return q;
      });
    } else if (command == "sop") {
      p = dispatch_ring(session, opts, "sop", [&](const auto& R, const auto& rdecl) {
        Payload q = cmd_sop(R, opts);
        q.inputs["ring"] = ring_spec_to_json(R);
        (void)rdecl;
        return q;
      });
    } else if (command == "limit-closure") {
      p = dispatch_ring(session, opts, "limit-closure", [&](const auto& R, const auto& rdecl) {
        Payload q = cmd_limit_closure(session, R, rdecl, opts);
        q.inputs["ring"] = ring_spec_to_json(R);
        q.inputs["power"] = opts.power;
        return q;
      });
    } else if (command == "canonical") {
      p = dispatch_ring(session, opts, "canonical", [&](const auto& R, const auto& rdecl) {
        Payload q = cmd_canonical(R);
        q.inputs["ring"] = ring_spec_to_json(R);
        (void)rdecl;
        return q;
      });
    } else if (command == "qgcheck") {
      p = dispatch_ring(session, opts, "qgcheck", [&](const auto& R, const auto& rdecl) {
        Payload q = cmd_qgcheck(session, R, rdecl, opts);
        q.inputs["ring"] = ring_spec_to_json(R);
        return q;
      });
    } else if (command == "buchsbaum") {
      p = dispatch_ring(session, opts, "buchsbaum", [&](const auto& R, const auto& rdecl) {
        Payload q = cmd_buchsbaum(session, R, rdecl, opts);
        q.inputs["ring"] = ring_spec_to_json(R);
        return q;
      });
    } else if (command == "gcm") {
      p = dispatch_ring(session, opts, "gcm", [&](const auto& R, const auto& rdecl) {
        Payload q = cmd_gcm(session, R, rdecl, opts);
        q.inputs["ring"] = ring_spec_to_json(R);
        q.inputs["cap"] = opts.cap;
        return q;
      });
    } else if (command == "deform") {
      p = dispatch_ring(session, opts, "deform", [&](const auto& R, const auto& rdecl) {
        Payload q = cmd_deform(session, R, rdecl, opts);
        q.inputs["ring"] = ring_spec_to_json(R);
        q.inputs["n"] = opts.deform_n;
        return q;
      });
    } else if (command == "quotient-probe") {
      p = dispatch_ring(session, opts, "quotient-probe", [&](const auto& R, const auto& rdecl) {
        Payload q = cmd_quotient_probe(session, R, rdecl, opts);
        q.inputs["ring"] = ring_spec_to_json(R);
        return q;
      });
    } else {
      throw std::invalid_argument("unknown command '" + command + "'");
    }
  } catch (const budget_error& e) {
    out.exit_code = 2;
    out.text = std::string("budget exceeded: ") + e.what() + "\n";
    return out;
  } catch (const parse_error& e) {
    out.exit_code = 1;
    out.text = std::string("parse error at ") + std::to_string(e.line()) + ":" +
               std::to_string(e.column()) + ": " + e.what() + "\n";
    return out;
  } catch (const internal_error& e) {
    out.exit_code = 4;
    out.text = std::string("internal invariant failure: ") + e.what() + "\n";
    return out;
  } catch (const std::invalid_argument& e) {
    out.exit_code = 1;
    out.text = std::string("error: ") + e.what() + "\n";
    return out;
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  if (!opts.file.empty()) p.inputs["file"] = opts.file;
  Json doc;
  doc["tool"] = kToolName;
  doc["version"] = kVersion;
  doc["seed"] = opts.seed;
  doc["command"] = command;
  doc["inputs"] = p.inputs;
  doc["result"] = p.result;
  doc["budgets"] = Json{{"t_max", opts.t_max}, {"n_max", opts.n_max}, {"window", opts.window}};
  doc["timings_ms"] = opts.timings ? Json(elapsed) : Json(0);
  out.doc = std::move(doc);
  out.has_doc = true;
  out.text = std::move(p.text);
  return out;
}

}  // namespace qgor
