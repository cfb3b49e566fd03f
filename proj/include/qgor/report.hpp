#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "qgor/qg.hpp"

namespace qgor {

using Json = nlohmann::json;  // std::map-backed objects: keys emit sorted

template <class F>
Json ideal_to_json(const Ideal<F>& A) {
  Json gens = Json::array();
  for (const auto& g : sorted_generators(A)) gens.push_back(g.to_string());
  return gens;
}

template <class F>
Json ring_to_json(const RingPtr<F>& ring) {
  Json j;
  j["field"] = ring->field.name();
  j["variables"] = ring->vars;
  j["order"] = ring->order.name();
  return j;
}

template <class F>
Json ring_spec_to_json(const RingSpec<F>& R) {
  Json j = ring_to_json(R.ring);
  j["defining_ideal"] = ideal_to_json(R.defining);
  j["n"] = R.n;
  j["d"] = R.d;
  return j;
}

template <class F>
Json param_system_to_json(const ParamSystem<F>& x) {
  Json j;
  Json elems = Json::array();
  for (const auto& e : x.elems) elems.push_back(e.to_string());
  j["elements"] = elems;
  j["degrees"] = x.degrees;
  j["certified"] = x.certified;
  j["random_used"] = x.random_used;
  if (x.random_used) j["seed"] = x.seed;
  return j;
}

inline Json socle_sequence_to_json(const SocleSequence& s) {
  Json j;
  j["values"] = s.values;
  j["stabilized"] = s.stabilized;
  j["n_used"] = s.n_used;
  return j;
}

template <class F>
Json limit_closure_to_json(const LimitClosureResult<F>& lim) {
  Json j;
  j["generators"] = ideal_to_json(lim.ideal);
  j["t_stab"] = lim.t_stab;
  j["window"] = lim.window;
  j["power"] = lim.power;
  j["chain_length"] = lim.chain.size();
  return j;
}

template <class F>
Json presentation_to_json(const ModulePresentation<F>& M) {
  Json j;
  j["generators"] = M.gens();
  j["gen_twists"] = M.gen_twists;
  j["relations"] = M.relations.size();
  j["minimal"] = M.minimal;
  j["over_quotient"] = M.over_quotient;
  return j;
}

/// Betti rows in the report format "step: total (degree: count, ...)".
template <class F>
Json resolution_to_json(const Resolution<F>& res) {
  Json rows = Json::array();
  auto row = [](std::size_t step, const std::vector<int>& twists) {
    Json r;
    r["step"] = step;
    r["total"] = twists.size();
    std::map<int, int> by_degree;
    for (int t : twists) by_degree[t] += 1;
    Json bd;
    for (auto [deg, count] : by_degree) bd[std::to_string(deg)] = count;
    r["by_degree"] = bd;
    return r;
  };
  rows.push_back(row(0, res.twists(0)));
  for (std::size_t i = 1; i <= res.maps.size(); ++i) rows.push_back(row(i, res.twists(i)));
  Json j;
  j["betti"] = rows;
  j["complete"] = res.complete;
  return j;
}

template <class F>
std::string resolution_to_text(const Resolution<F>& res) {
  std::string out;
  auto row = [&](std::size_t step, const std::vector<int>& twists) {
    std::map<int, int> by_degree;
    for (int t : twists) by_degree[t] += 1;
    out += std::to_string(step) + ": " + std::to_string(twists.size());
    if (!by_degree.empty()) {
      out += " (";
      bool first = true;
      for (auto [deg, count] : by_degree) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(deg) + ": " + std::to_string(count);
      }
      out += ")";
    }
    out += "\n";
  };
  row(0, res.twists(0));
  for (std::size_t i = 1; i <= res.maps.size(); ++i) row(i, res.twists(i));
  return out;
}

template <class F>
Json qg_report_to_json(const QGReport<F>& rep) {
  Json j;
  j["quasi_gorenstein"] = rep.quasi_gorenstein;
  j["mu_omega"] = rep.mu_omega;
  j["unmixed"] = rep.unmixed;
  j["ann_omega"] = ideal_to_json(rep.ann_omega);
  j["socle_sequence"] = rep.socle.values;
  j["socle_stabilized"] = rep.socle.stabilized;
  j["route_a"] = Json{{"verdict", rep.verdict_a}, {"mu_omega", rep.mu_omega}, {"unmixed", rep.unmixed}};
  Json rb;
  rb["socle"] = socle_sequence_to_json(rep.socle);
  if (rep.verdict_b)
    rb["verdict"] = *rep.verdict_b;
  else
    rb["verdict"] = nullptr;
  j["route_b"] = rb;
  j["routes_agree"] = rep.routes_agree;
  j["partial"] = rep.partial;
  j["sop"] = param_system_to_json(rep.sop);
  return j;
}

inline Json irreducible_to_json(const IrreducibleCert& cert) {
  Json j;
  j["irreducible"] = cert.irreducible;
  j["socle_dimension"] = cert.socle_dim;
  j["mu_colon"] = cert.mu_colon;
  j["mu_ideal"] = cert.mu_ideal;
  j["mu_identity"] = cert.mu_identity;
  j["identity_matches_verdict"] = cert.identity_matches_verdict;
  return j;
}

inline Json hilbert_to_json(const HilbertTable& t) {
  Json j;
  Json bd;
  for (auto [e, c] : t.by_degree) bd[std::to_string(e)] = c;
  j["by_degree"] = bd;
  j["finite"] = t.finite;
  if (t.finite) j["total"] = t.total;
  return j;
}

}  // namespace qgor
