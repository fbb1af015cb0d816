#include "quadent/scenario_file.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "quadent/builtin_locc.hpp"
#include "quadent/builtin_teleport.hpp"
#include "quadent/entanglement.hpp"

namespace quadent {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) fail(where, "unknown field '" + k + "'");
}

const Json& need(const Json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

std::string get_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

int get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

bool get_bool(const Json& j, const std::string& where) {
  if (!j.is_boolean()) fail(where, "expected a boolean");
  return j.get<bool>();
}

std::vector<int> get_ints(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of integers");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(get_int(x, where));
  return out;
}

std::vector<std::string> get_strings(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(get_string(x, where));
  return out;
}

// Wraps library errors raised while resolving names into parse errors.
template <class F>
auto resolve(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

PureState parse_kets(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a ket list");
  for (const auto& k : j) {
    check_keys(k, {"label", "re", "im"}, where);
    get_string(need(k, "label", where), where + ".label");
    for (const char* f : {"re", "im"})
      if (k.contains(f) && !k.at(f).is_number()) fail(where, std::string("'") + f + "' must be a number");
  }
  return resolve(where, [&] { return kets_from_json(j); });
}

// "GHZ4" | {"name": "W_mn", "params": {...}} | {"name": "mine", "kets": [...]}
NamedState parse_state(const Json& j, const std::string& where) {
  if (j.is_string()) return resolve(where, [&] { return make_state(j.get<std::string>()); });
  check_keys(j, {"name", "params", "kets"}, where);
  if (j.contains("kets")) {
    if (j.contains("params")) fail(where, "'params' only applies to catalog states");
    NamedState s;
    s.name = j.contains("name") ? get_string(j.at("name"), where + ".name") : "inline";
    s.state = parse_kets(j.at("kets"), where + ".kets");
    return s;
  }
  std::string name = get_string(need(j, "name", where), where + ".name");
  StateParams params;
  if (j.contains("params")) {
    const auto& p = j.at("params");
    if (!p.is_object()) fail(where + ".params", "expected an object");
    for (const auto& [k, v] : p.items()) {
      if (!v.is_number()) fail(where + ".params." + k, "expected a number");
      params[k] = v.get<double>();
    }
  }
  return resolve(where, [&] { return make_state(name, params); });
}

// "bell" | {"name": "mine", "vectors": [{"label": "x", "kets": [...]}, ...]}
NamedBasis parse_basis(const Json& j, const std::string& where) {
  if (j.is_string()) return resolve(where, [&] { return make_basis(j.get<std::string>()); });
  check_keys(j, {"name", "vectors"}, where);
  std::string name = j.contains("name") ? get_string(j.at("name"), where + ".name") : "inline";
  const auto& vs = need(j, "vectors", where);
  if (!vs.is_array() || vs.empty()) fail(where + ".vectors", "expected a non-empty array");
  std::vector<PureState> vectors;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::string w = where + ".vectors[" + std::to_string(i) + "]";
    check_keys(vs[i], {"label", "kets"}, w);
    labels.push_back(get_string(need(vs[i], "label", w), w + ".label"));
    vectors.push_back(parse_kets(need(vs[i], "kets", w), w + ".kets"));
  }
  auto b = resolve(where, [&] { return basis_from_vectors(name, std::move(vectors), std::move(labels)); });
  auto v = validate_orthonormal(b);
  if (v.max_offdiag > kTol || v.max_norm_dev > kTol) fail(where, "basis vectors are not orthonormal");
  return b;
}

UnknownFamily parse_family(const Json& j, const std::string& where) {
  check_keys(j, {"kind", "qubits", "dressing", "span"}, where);
  std::string kind = get_string(need(j, "kind", where), where + ".kind");
  auto qubits = [&] { return get_int(need(j, "qubits", where), where + ".qubits"); };
  auto dressing = [&] { return get_ints(need(j, "dressing", where), where + ".dressing"); };
  return resolve(where, [&]() -> UnknownFamily {
    if (kind == "arbitrary") {
      int k = qubits();
      if (k < 1 || k > 3) fail(where, "unknown qubit count must be 1..3");
      return arbitrary_family(k);
    }
    if (kind == "ghz_subclass") return ghz_subclass(qubits(), dressing());
    if (kind == "omega_subclass") return omega_subclass(dressing());
    if (kind == "w_subclass") return w_subclass();
    if (kind == "custom") {
      const auto& span = need(j, "span", where);
      if (!span.is_array() || span.empty()) fail(where + ".span", "expected a non-empty array of ket lists");
      std::vector<PureState> v;
      for (std::size_t i = 0; i < span.size(); ++i)
        v.push_back(parse_kets(span[i], where + ".span[" + std::to_string(i) + "]"));
      return custom_family(std::move(v));
    }
    fail(where + ".kind", "unknown family '" + kind + "'");
  });
}

Correction parse_correction(const Json& j, const std::string& where) {
  check_keys(j, {"outcome", "paulis", "joint", "cz", "flip"}, where);
  Correction c;
  c.paulis = get_ints(need(j, "paulis", where), where + ".paulis");
  for (int p : c.paulis)
    if (p < 0 || p > 3) fail(where + ".paulis", "Pauli codes are 0..3");
  std::string joint = j.contains("joint") ? get_string(j.at("joint"), where + ".joint") : "none";
  if (joint == "none") {
    c.joint = Correction::Joint::None;
  } else if (joint == "cz") {
    auto q = get_ints(need(j, "cz", where), where + ".cz");
    if (q.size() != 2) fail(where + ".cz", "expected two receiver positions");
    c.joint = Correction::Joint::CZ;
    c.cz_a = q[0];
    c.cz_b = q[1];
  } else if (joint == "flip") {
    c.joint = Correction::Joint::PhaseFlip;
    c.flip_label = resolve(where, [&] { return parse_label(get_string(need(j, "flip", where), where + ".flip")); });
  } else {
    fail(where + ".joint", "expected none, cz or flip");
  }
  return c;
}

TeleportScenario parse_teleport(const Json& j, const std::string& where) {
  if (j.contains("builtin")) {
    check_keys(j, {"kind", "id", "builtin"}, where);
    auto s = resolve(where, [&] { return builtin_teleport(get_string(j.at("builtin"), where + ".builtin")); });
    if (j.contains("id")) s.id = get_string(j.at("id"), where + ".id");
    return s;
  }
  check_keys(j,
             {"kind", "id", "description", "resource", "family", "parties", "receiver", "plan", "allowed_ops",
              "corrections", "printed_residuals", "expect"},
             where);
  TeleportScenario s;
  s.id = get_string(need(j, "id", where), where + ".id");
  s.group = "file";
  if (j.contains("description")) s.description = get_string(j.at("description"), where + ".description");
  s.resource = parse_state(need(j, "resource", where), where + ".resource");
  s.family = j.contains("family") ? parse_family(j.at("family"), where + ".family") : arbitrary_family(1);
  const int k = s.family.num_qubits, r = s.resource.state.num_qubits();
  if (k + r > kMaxQubits) fail(where, "joint register exceeds " + std::to_string(kMaxQubits) + " qubits");
  auto index = [&](const std::string& q, const std::string& w) {
    return resolve(w, [&] { return qubit_index(q, k, r); });
  };

  if (j.contains("receiver")) s.distribution.receiver = get_string(j.at("receiver"), where + ".receiver");
  const auto& parties = need(j, "parties", where);
  if (!parties.is_array() || parties.empty()) fail(where + ".parties", "expected a non-empty array");
  std::vector<int> owned(static_cast<std::size_t>(k + r), 0);
  bool has_receiver = false;
  for (std::size_t i = 0; i < parties.size(); ++i) {
    std::string w = where + ".parties[" + std::to_string(i) + "]";
    check_keys(parties[i], {"name", "qubits"}, w);
    Party p{get_string(need(parties[i], "name", w), w + ".name"), {}};
    for (const auto& q : get_strings(need(parties[i], "qubits", w), w + ".qubits")) {
      int x = index(q, w);
      if (owned[static_cast<std::size_t>(x)]) fail(w, "qubit '" + q + "' assigned twice");
      owned[static_cast<std::size_t>(x)] = 1;
      p.qubits.push_back(x);
    }
    has_receiver |= p.name == s.distribution.receiver;
    s.distribution.parties.push_back(std::move(p));
  }
  // unlisted qubits belong to the receiver
  Party rest{s.distribution.receiver, {}};
  for (int x = 0; x < k + r; ++x)
    if (!owned[static_cast<std::size_t>(x)]) rest.qubits.push_back(x);
  if (!rest.qubits.empty()) {
    if (has_receiver) fail(where + ".parties", "receiver listed explicitly but qubits are left unassigned");
    s.distribution.parties.push_back(std::move(rest));
  }

  const auto& plan = need(j, "plan", where);
  if (!plan.is_array() || plan.empty()) fail(where + ".plan", "expected a non-empty array");
  for (std::size_t i = 0; i < plan.size(); ++i) {
    std::string w = where + ".plan[" + std::to_string(i) + "]";
    check_keys(plan[i], {"qubits", "basis"}, w);
    std::vector<int> targets;
    for (const auto& q : get_strings(need(plan[i], "qubits", w), w + ".qubits")) targets.push_back(index(q, w));
    auto basis = parse_basis(need(plan[i], "basis", w), w + ".basis");
    resolve(w, [&] {
      s.plan.add_step(std::move(targets), std::move(basis));
      return 0;
    });
  }
  resolve(where, [&] {
    s.distribution.check(k + r, k);
    s.plan.check(k + r);
    return 0;
  });

  if (j.contains("allowed_ops"))
    s.allowed_ops =
        resolve(where, [&] { return allowed_ops_from_string(get_string(j.at("allowed_ops"), where + ".allowed_ops")); });
  if (j.contains("corrections")) {
    const auto& cs = j.at("corrections");
    if (!cs.is_array()) fail(where + ".corrections", "expected an array");
    CorrectionTable t;
    t.ops = s.allowed_ops;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      std::string w = where + ".corrections[" + std::to_string(i) + "]";
      auto key = get_strings(need(cs[i], "outcome", w), w + ".outcome");
      if (!t.entries.emplace(key, parse_correction(cs[i], w)).second) fail(w, "duplicate outcome");
    }
    s.corrections = std::move(t);
  }
  if (j.contains("printed_residuals")) {
    const auto& ps = j.at("printed_residuals");
    if (!ps.is_array()) fail(where + ".printed_residuals", "expected an array");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      std::string w = where + ".printed_residuals[" + std::to_string(i) + "]";
      check_keys(ps[i], {"outcome", "matrix"}, w);
      PrintedResidual pr;
      pr.outcome = get_strings(need(ps[i], "outcome", w), w + ".outcome");
      const auto& m = need(ps[i], "matrix", w);
      if (!m.is_array()) fail(w + ".matrix", "expected an array of [re, im] pairs");
      for (const auto& e : m) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
          fail(w + ".matrix", "expected [re, im] pairs");
        pr.matrix.emplace_back(e[0].get<double>(), e[1].get<double>());
      }
      s.printed_residuals.push_back(std::move(pr));
    }
  }
  if (j.contains("expect")) {
    const auto& e = j.at("expect");
    check_keys(e, {"feasible", "cost_cbits"}, where + ".expect");
    if (e.contains("feasible")) s.expect_feasible = get_bool(e.at("feasible"), where + ".expect.feasible");
    if (e.contains("cost_cbits")) s.expected_cost = get_int(e.at("cost_cbits"), where + ".expect.cost_cbits");
  }
  return s;
}

DensecodeEntry parse_densecode(const Json& j, const std::string& where) {
  check_keys(j, {"kind", "id", "resource", "scenario", "senders", "plain_sigma2", "expect"}, where);
  DensecodeEntry d;
  d.resource = parse_state(need(j, "resource", where), where + ".resource");
  d.scenario = get_string(need(j, "scenario", where), where + ".scenario");
  d.id = j.contains("id") ? get_string(j.at("id"), where + ".id") : d.resource.name + "_" + d.scenario;
  if (d.scenario.size() < 3 || d.scenario.rfind("DC", 0) != 0) fail(where + ".scenario", "expected DC<k>");
  const int n = d.resource.state.num_qubits();
  if (j.contains("senders")) {
    std::vector<int> s;
    for (int q : get_ints(j.at("senders"), where + ".senders")) {
      if (q < 1 || q > n) fail(where + ".senders", "sender qubits are 1.." + std::to_string(n));
      s.push_back(q - 1);
    }
    d.senders = std::move(s);
  }
  if (j.contains("plain_sigma2")) d.plain_sigma2 = get_bool(j.at("plain_sigma2"), where + ".plain_sigma2");
  if (j.contains("expect")) {
    check_keys(j.at("expect"), {"N"}, where + ".expect");
    if (j.at("expect").contains("N")) d.expect_n = get_int(j.at("expect").at("N"), where + ".expect.N");
  }
  return d;
}

LoccProtocol parse_protocol(const Json& j, const std::string& where, int n) {
  check_keys(j, {"name", "parties", "rounds"}, where);
  LoccProtocol p;
  p.name = j.contains("name") ? get_string(j.at("name"), where + ".name") : "inline";
  auto qubits = [&](const Json& q, const std::string& w) {
    std::vector<int> out;
    for (int x : get_ints(q, w)) {
      if (x < 1 || x > n) fail(w, "qubits are 1.." + std::to_string(n));
      out.push_back(x - 1);
    }
    return out;
  };
  const auto& parties = need(j, "parties", where);
  if (!parties.is_array()) fail(where + ".parties", "expected an array");
  for (std::size_t i = 0; i < parties.size(); ++i) {
    std::string w = where + ".parties[" + std::to_string(i) + "]";
    check_keys(parties[i], {"name", "qubits"}, w);
    p.parties.push_back(
        {get_string(need(parties[i], "name", w), w + ".name"), qubits(need(parties[i], "qubits", w), w + ".qubits")});
  }
  const auto& rounds = need(j, "rounds", where);
  if (!rounds.is_array() || rounds.empty()) fail(where + ".rounds", "expected a non-empty array");
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    std::string w = where + ".rounds[" + std::to_string(i) + "]";
    check_keys(rounds[i], {"party", "qubits", "basis"}, w);
    p.rounds.push_back({get_string(need(rounds[i], "party", w), w + ".party"),
                        qubits(need(rounds[i], "qubits", w), w + ".qubits"),
                        parse_basis(need(rounds[i], "basis", w), w + ".basis")});
  }
  resolve(where, [&] {
    p.check(n);
    return 0;
  });
  return p;
}

LoccEntry parse_locc(const Json& j, const std::string& where) {
  LoccEntry e;
  if (j.contains("builtin")) {
    check_keys(j, {"kind", "id", "builtin", "certificate"}, where);
    auto c = resolve(where, [&] { return builtin_locc_case(get_string(j.at("builtin"), where + ".builtin")); });
    e.id = j.contains("id") ? get_string(j.at("id"), where + ".id") : c.id;
    e.candidates = builtin_locc_set(c.set).candidates;
    e.protocol = c.protocol;
    e.expect_success = c.expect_success;
    e.expect_inter_cbits = c.expected_inter_cbits;
    e.check_certificate = j.contains("certificate") ? get_bool(j.at("certificate"), where + ".certificate") : true;
    return e;
  }
  check_keys(j, {"kind", "id", "set", "candidates", "protocol", "certificate", "expect"}, where);
  e.id = get_string(need(j, "id", where), where + ".id");
  if (j.contains("set") == j.contains("candidates")) fail(where, "give exactly one of 'set' or 'candidates'");
  if (j.contains("set")) {
    e.candidates = resolve(where, [&] { return builtin_locc_set(get_string(j.at("set"), where + ".set")).candidates; });
  } else {
    const auto& cs = j.at("candidates");
    if (!cs.is_array() || cs.size() < 2) fail(where + ".candidates", "expected at least two candidates");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      std::string w = where + ".candidates[" + std::to_string(i) + "]";
      check_keys(cs[i], {"label", "kets"}, w);
      e.candidates.push_back(
          {get_string(need(cs[i], "label", w), w + ".label"), parse_kets(need(cs[i], "kets", w), w + ".kets")});
    }
    for (const auto& c : e.candidates)
      if (c.state.num_qubits() != e.candidates[0].state.num_qubits()) fail(where, "candidates differ in size");
  }
  e.protocol = parse_protocol(need(j, "protocol", where), where + ".protocol", e.candidates[0].state.num_qubits());
  if (j.contains("certificate")) e.check_certificate = get_bool(j.at("certificate"), where + ".certificate");
  if (j.contains("expect")) {
    const auto& x = j.at("expect");
    check_keys(x, {"success", "inter_cbits"}, where + ".expect");
    if (x.contains("success")) e.expect_success = get_bool(x.at("success"), where + ".expect.success");
    if (x.contains("inter_cbits")) e.expect_inter_cbits = get_int(x.at("inter_cbits"), where + ".expect.inter_cbits");
  }
  return e;
}

DiagnoseEntry parse_diagnose(const Json& j, const std::string& where) {
  check_keys(j, {"kind", "id", "resource"}, where);
  DiagnoseEntry d;
  d.resource = parse_state(need(j, "resource", where), where + ".resource");
  if (d.resource.state.num_qubits() != 4) fail(where + ".resource", "diagnostics need a four-qubit state");
  d.id = j.contains("id") ? get_string(j.at("id"), where + ".id") : d.resource.name;
  return d;
}

}  // namespace

ScenarioFile parse_scenario_file(const Json& j) {
  check_keys(j, {"version", "entries"}, "file");
  ScenarioFile f;
  f.version = get_int(need(j, "version", "file"), "file.version");
  if (f.version != kScenarioFileVersion)
    fail("file.version", "unsupported version " + std::to_string(f.version) + " (expected " +
                             std::to_string(kScenarioFileVersion) + ")");
  const auto& entries = need(j, "entries", "file");
  if (!entries.is_array()) fail("file.entries", "expected an array");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::string w = "entries[" + std::to_string(i) + "]";
    if (!entries[i].is_object()) fail(w, "expected an object");
    std::string kind = get_string(need(entries[i], "kind", w), w + ".kind");
    ScenarioEntry e = [&]() -> ScenarioEntry {
      if (kind == "teleport") return TeleportEntry{parse_teleport(entries[i], w)};
      if (kind == "densecode") return parse_densecode(entries[i], w);
      if (kind == "locc") return parse_locc(entries[i], w);
      if (kind == "diagnose") return parse_diagnose(entries[i], w);
      fail(w + ".kind", "unknown kind '" + kind + "'");
    }();
    if (!ids.insert(entry_id(e)).second) fail(w, "duplicate id '" + entry_id(e) + "'");
    f.entries.push_back(std::move(e));
  }
  return f;
}

ScenarioFile parse_scenario_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_scenario_file(j);
}

ScenarioFile load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario_text(ss.str());
}

std::string entry_id(const ScenarioEntry& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, TeleportEntry>)
          return x.scenario.id;
        else
          return x.id;
      },
      e);
}

std::string entry_kind(const ScenarioEntry& e) {
  static const char* names[] = {"teleport", "densecode", "locc", "diagnose"};
  return names[e.index()];
}

EntryResult run_entry(const ScenarioEntry& e, const RunOptions& opt) {
  EntryResult r{entry_id(e), entry_kind(e), Json::object(), "", true};
  std::ostringstream line;
  line.precision(12);
  if (const auto* t = std::get_if<TeleportEntry>(&e)) {
    auto rep = run_scenario(t->scenario, opt);
    r.report = to_json(rep);
    r.expectation_met = rep.feasible == t->scenario.expect_feasible &&
                        (!rep.feasible || !t->scenario.expected_cost || rep.cost_cbits == *t->scenario.expected_cost);
    line << "feasible=" << (rep.feasible ? "true" : "false") << " worst_fidelity=" << rep.worst_fidelity
         << " cost=" << rep.cost_cbits << " cbits";
  } else if (const auto* d = std::get_if<DensecodeEntry>(&e)) {
    auto rep = capacity(d->resource, d->scenario, d->senders, d->plain_sigma2);
    r.report = to_json(rep);
    r.expectation_met = !d->expect_n || rep.max_orthogonal == *d->expect_n;
    line << "N=" << rep.max_orthogonal << " cbits=" << rep.capacity_cbits << " senders={"
         << qubit_set_label(rep.sender_qubits) << "}";
  } else if (const auto* l = std::get_if<LoccEntry>(&e)) {
    auto rep = run_discrimination(l->candidates, l->protocol, opt.tolerance);
    r.report = to_json(rep);
    r.expectation_met = (!l->expect_success || rep.success == *l->expect_success) &&
                        (!l->expect_inter_cbits || !rep.success || rep.inter_receiver_cbits == *l->expect_inter_cbits);
    line << "success=" << (rep.success ? "true" : "false") << " inter_receiver=" << rep.inter_receiver_cbits
         << " cbits";
    if (l->check_certificate && l->protocol.rounds.size() == 2) {
      const auto& p = l->protocol;
      auto cert = certificate_from_bases(l->candidates, p.rounds[0].qubits, p.rounds[0].basis, p.rounds[1].qubits,
                                         p.rounds[1].basis, opt.tolerance);
      auto chk = check_certificate(l->candidates, cert, opt.tolerance);
      r.report["certificate"] = {{"pass", chk.pass},
                                 {"max_reconstruction_error", chk.max_reconstruction_error},
                                 {"max_cross_overlap", chk.max_cross_overlap},
                                 {"violation", chk.violation}};
      line << " certificate=" << (chk.pass ? "pass" : "fail");
      if (l->expect_success && *l->expect_success && !chk.pass) r.expectation_met = false;
    }
  } else if (const auto* g = std::get_if<DiagnoseEntry>(&e)) {
    auto p = profile(g->resource);
    r.report = to_json(p);
    line << "genuine=" << (p.genuine ? "true" : "false") << " max_purity=" << p.max_purity;
  }
  r.summary = line.str();
  return r;
}

}  // namespace quadent
