#include "quadent/json_io.hpp"

#include <cmath>

namespace quadent {

Json kets_to_json(const PureState& s) {
  Json out = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Complex a = s.amplitude(i);
    if (std::abs(a) < 1e-15) continue;
    out.push_back({{"label", basis_label(i, s.num_qubits())}, {"re", a.real()}, {"im", a.imag()}});
  }
  return out;
}

PureState kets_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error("ket list must be a non-empty array");
  std::vector<std::pair<std::string, Complex>> kets;
  for (const auto& k : j) {
    for (const auto& [key, v] : k.items())
      if (key != "label" && key != "re" && key != "im") throw Error("unknown ket field '" + key + "'");
    kets.emplace_back(k.at("label").get<std::string>(), Complex(k.value("re", 0.0), k.value("im", 0.0)));
  }
  return PureState::from_kets(kets);
}

Json to_json(const OutcomeReport& r) {
  return {{"labels", r.labels},
          {"min_probability", r.min_probability},
          {"max_probability", r.max_probability},
          {"fidelity", r.fidelity},
          {"correction", r.correction},
          {"derived_residual", r.derived_residual},
          {"printed_residual", r.printed_residual},
          {"printed_status", r.printed_status},
          {"printed_duplicate_of", r.printed_duplicate_of}};
}

OutcomeReport outcome_report_from_json(const Json& j) {
  OutcomeReport r;
  r.labels = j.at("labels").get<std::vector<std::string>>();
  r.min_probability = j.at("min_probability");
  r.max_probability = j.at("max_probability");
  r.fidelity = j.at("fidelity");
  r.correction = j.at("correction");
  r.derived_residual = j.at("derived_residual");
  r.printed_residual = j.at("printed_residual");
  r.printed_status = j.at("printed_status");
  r.printed_duplicate_of = j.at("printed_duplicate_of");
  return r;
}

Json to_json(const TeleportReport& r) {
  Json per = Json::array();
  for (const auto& o : r.per_outcome) per.push_back(to_json(o));
  return {{"scenario_id", r.scenario_id},
          {"feasible", r.feasible},
          {"worst_fidelity", r.worst_fidelity},
          {"worst_structured", r.worst_structured},
          {"worst_random", r.worst_random},
          {"cost_cbits", r.cost_cbits},
          {"branch_count", r.branch_count},
          {"outcome_uniform", r.outcome_uniform},
          {"linearity_certified", r.linearity_certified},
          {"perp_flag", r.perp_flag},
          {"synthesized", r.synthesized},
          {"per_outcome", per}};
}

TeleportReport teleport_report_from_json(const Json& j) {
  TeleportReport r;
  r.scenario_id = j.at("scenario_id");
  r.feasible = j.at("feasible");
  r.worst_fidelity = j.at("worst_fidelity");
  r.worst_structured = j.at("worst_structured");
  r.worst_random = j.at("worst_random");
  r.cost_cbits = j.at("cost_cbits");
  r.branch_count = j.at("branch_count");
  r.outcome_uniform = j.at("outcome_uniform");
  r.linearity_certified = j.at("linearity_certified");
  r.perp_flag = j.at("perp_flag");
  r.synthesized = j.at("synthesized");
  for (const auto& o : j.at("per_outcome")) r.per_outcome.push_back(outcome_report_from_json(o));
  return r;
}

Json to_json(const CapacityReport& r) {
  Json per = Json::object();
  for (const auto& [k, v] : r.per_distribution) per[k] = v;
  std::vector<int> senders;
  for (int q : r.sender_qubits) senders.push_back(q + 1);
  return {{"state", r.state},
          {"scenario", r.scenario},
          {"distribution", {{"Alice", senders}}},
          {"encoded_count", r.encoded_count},
          {"N", r.max_orthogonal},
          {"cbits", r.capacity_cbits},
          {"witness_labels", r.witness},
          {"per_distribution", per}};
}

CapacityReport capacity_report_from_json(const Json& j) {
  CapacityReport r;
  r.state = j.at("state");
  r.scenario = j.at("scenario");
  for (int q : j.at("distribution").at("Alice")) r.sender_qubits.push_back(q - 1);
  r.encoded_count = j.at("encoded_count");
  r.max_orthogonal = j.at("N");
  r.capacity_cbits = j.at("cbits");
  r.witness = j.at("witness_labels").get<std::vector<std::string>>();
  for (const auto& [k, v] : j.at("per_distribution").items()) r.per_distribution[k] = v.get<int>();
  return r;
}

namespace {

Json double_map(const std::map<std::string, double>& m) {
  Json o = Json::object();
  for (const auto& [k, v] : m) o[k] = v;
  return o;
}

std::map<std::string, double> read_double_map(const Json& j) {
  std::map<std::string, double> m;
  for (const auto& [k, v] : j.items()) m[k] = v.get<double>();
  return m;
}

}  // namespace

Json to_json(const EntanglementProfile& p) {
  return {{"state", p.state},
          {"genuine", p.genuine},
          {"max_purity", p.max_purity},
          {"purity", double_map(p.purity)},
          {"concurrence", double_map(p.concurrence)},
          {"mixed_tangle_bound", double_map(p.mixed_tangle_bound)}};
}

EntanglementProfile profile_from_json(const Json& j) {
  EntanglementProfile p;
  p.state = j.at("state");
  p.genuine = j.at("genuine");
  p.max_purity = j.at("max_purity");
  p.purity = read_double_map(j.at("purity"));
  p.concurrence = read_double_map(j.at("concurrence"));
  p.mixed_tangle_bound = read_double_map(j.at("mixed_tangle_bound"));
  return p;
}

Json to_json(const DiscriminationReport& r) {
  Json t = Json::object();
  for (const auto& [k, v] : r.transcripts_of) t[k] = v;
  return {{"protocol", r.protocol},
          {"success", r.success},
          {"candidates", r.candidates},
          {"transcripts", r.transcripts},
          {"recovered_cbits", r.recovered_cbits},
          {"inter_receiver_cbits", r.inter_receiver_cbits},
          {"orthogonal_per_round", r.orthogonal_per_round},
          {"failure", r.failure},
          {"transcripts_of", t}};
}

DiscriminationReport discrimination_report_from_json(const Json& j) {
  DiscriminationReport r;
  r.protocol = j.at("protocol");
  r.success = j.at("success");
  r.candidates = j.at("candidates");
  r.transcripts = j.at("transcripts");
  r.recovered_cbits = j.at("recovered_cbits");
  r.inter_receiver_cbits = j.at("inter_receiver_cbits");
  r.orthogonal_per_round = j.at("orthogonal_per_round");
  r.failure = j.at("failure");
  for (const auto& [k, v] : j.at("transcripts_of").items()) r.transcripts_of[k] = v.get<std::vector<std::string>>();
  return r;
}

Json to_json(const NamedState& s) {
  Json params = Json::object();
  for (const auto& [k, v] : s.params) params[k] = v;
  return {{"name", s.name}, {"params", params}, {"kets", kets_to_json(s.state)}};
}

Json to_json(const NamedBasis& b) {
  Json vecs = Json::array();
  for (std::size_t i = 0; i < b.size(); ++i)
    vecs.push_back({{"label", b.outcome_labels[i]}, {"kets", kets_to_json(b.vectors[i])}});
  Json corr = Json::array();
  for (const auto& c : b.corrections)
    corr.push_back({{"label", c.label},
                    {"method", c.method},
                    {"as_printed", kets_to_json(c.as_printed)},
                    {"as_corrected", kets_to_json(c.as_corrected)},
                    {"unique", c.unique},
                    {"certificate", c.certificate}});
  auto v = validate_orthonormal(b);
  return {{"name", b.name},
          {"num_qubits", b.num_qubits},
          {"complete", b.complete()},
          {"max_offdiag", v.max_offdiag},
          {"vectors", vecs},
          {"corrections", corr}};
}

Json catalog_dump() {
  Json states = Json::array();
  for (const auto& n : catalog_state_names()) states.push_back(to_json(make_state(n)));
  Json bases = Json::array();
  for (const auto& n : catalog_basis_names()) bases.push_back(to_json(make_basis(n)));
  return {{"states", states}, {"bases", bases}};
}

}  // namespace quadent
