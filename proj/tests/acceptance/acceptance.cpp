// Acceptance checks, one per criterion. Usage: quadent_acceptance [c1..c7]
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support.hpp"
#include "quadent/builtin_locc.hpp"
#include "quadent/builtin_teleport.hpp"
#include "quadent/densecode.hpp"
#include "quadent/entanglement.hpp"
#include "quadent/gates.hpp"
#include "quadent/measurement.hpp"

using namespace quadent;
using namespace quadent::testing;

namespace {

struct Verdict {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("not met: " + what);
    }
  }
  void note(const std::string& s) { details.push_back(s); }
};

std::string fmt(double x) {
  std::ostringstream o;
  o.precision(12);
  o << x;
  return o.str();
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

// 1. Teleportation positives.
Verdict c1() {
  Verdict v;
  const std::vector<std::string> required = {
      "ghz_1q_4p",           "ghz_1q_3p1",          "ghz_1q_bellbell",  "ghz_1q_bell11",
      "omega_1q_omega",      "omega_1q_ghzbasis",   "omega_1q_3p1",     "omega_1q_bell_a2_13",
      "w11_1q_etazeta",      "q4_1q_rho",           "q4_1q_tau",        "q4_11_1q_etazeta",
      "q5_1q_varphi",        "q5_1q_xi",            "q5_1q_omega3p1",   "omega_2q_omega16",
      "omega_2q_bellbell_cz", "w_3q_equal"};
  const std::map<std::string, int> families = {{"ghz_2q_subclass:", 16}, {"ghz_3q_subclass:", 64},
                                               {"omega_3q_subclass:", 16}};
  std::set<std::string> seen;
  std::map<std::string, int> family_seen;
  int checked = 0;
  double worst = 1;
  for (const auto& s : builtin_teleport_scenarios()) {
    if (!s.expect_feasible) continue;
    auto r = run_scenario(s);
    ++checked;
    seen.insert(s.id);
    for (const auto& [prefix, n] : families)
      if (starts_with(s.id, prefix)) ++family_seen[prefix];
    worst = std::min(worst, r.worst_fidelity);
    v.require(r.feasible && r.worst_fidelity >= 1 - 1e-10, s.id + " worst fidelity " + fmt(r.worst_fidelity));
    v.require(s.expected_cost.has_value(), s.id + " has a published cost");
    if (s.expected_cost)
      v.require(r.cost_cbits == *s.expected_cost,
                s.id + " cost " + std::to_string(r.cost_cbits) + " vs " + std::to_string(*s.expected_cost));
    // one-qubit plans cost one cbit per party, except the three-party Ω Bell+Bell
    // relay, published at 4 (Charlie's four outcome classes need 2 cbits)
    const int per_party = s.id == "omega_1q_bell_a2_13_3party" ? 4 : static_cast<int>(s.distribution.parties.size());
    if (s.group == "teleport-1q")
      v.require(r.cost_cbits == per_party,
                s.id + " cost " + std::to_string(r.cost_cbits) + " for " +
                    std::to_string(s.distribution.parties.size()) + " parties");
    if (s.id == "w_3q_equal") v.require(r.cost_cbits == 1, "W 3-qubit costs 1 cbit");
  }
  for (const auto& id : required) v.require(seen.count(id) == 1, "scenario " + id + " present");
  for (const auto& [prefix, n] : families)
    v.require(family_seen[prefix] == n, prefix + "* has " + std::to_string(family_seen[prefix]) + " of " +
                                            std::to_string(n) + " dressings");
  v.note(std::to_string(checked) + " scenarios, worst fidelity " + fmt(worst));
  return v;
}

// 2. Teleportation negatives with Pauli-only corrections.
Verdict c2() {
  Verdict v;
  for (const char* id : {"w_plain_1q", "q4_1q_a123", "omega_2q_bellbell_nocz"}) {
    auto s = builtin_teleport(id);
    auto syn = synthesize_corrections(s.resource, s.plan, s.distribution, s.family, AllowedOps::Paulis);
    v.require(!syn.feasible && syn.worst < 1 - 1e-3, std::string(id) + " best Pauli worst case " + fmt(syn.worst));
    v.note(std::string(id) + ": best Pauli worst-case fidelity " + fmt(syn.worst));
  }
  return v;
}

// 3. Dense coding table, exact integers.
Verdict c3() {
  Verdict v;
  auto n = [](const std::string& st, const std::string& dc, std::optional<std::vector<int>> senders = std::nullopt) {
    auto r = capacity(make_state(st), dc, senders);
    return r;
  };
  auto exact = [&](const std::string& st, const std::string& dc, int want,
                   std::optional<std::vector<int>> senders = std::nullopt) {
    auto r = n(st, dc, senders);
    v.require(r.max_orthogonal == want, st + " " + dc + (senders ? " at {" + qubit_set_label(*senders) + "}" : "") +
                                            " N=" + std::to_string(r.max_orthogonal) + ", expected " +
                                            std::to_string(want));
    v.require(std::abs(r.capacity_cbits - std::log2(r.max_orthogonal)) < 1e-12, st + " " + dc + " capacity is log2 N");
  };
  auto below = [&](const std::string& st, const std::string& dc, int bound,
                   std::optional<std::vector<int>> senders = std::nullopt) {
    auto r = n(st, dc, senders);
    v.require(r.max_orthogonal < bound, st + " " + dc + (senders ? " at {" + qubit_set_label(*senders) + "}" : "") +
                                            " N=" + std::to_string(r.max_orthogonal) + ", expected < " +
                                            std::to_string(bound));
  };
  exact("GHZ4", "DC1", 4);
  exact("GHZ4", "DC2", 8);
  exact("GHZ4", "DC3", 16);
  below("W4", "DC1", 4);
  exact("W4", "DC2", 8);
  exact("W4", "DC3", 8);
  exact("W_mn", "DC1", 4);
  exact("W_mn", "DC3", 8);
  exact("Omega", "DC1", 4);
  exact("Omega", "DC2", 16);
  exact("Omega", "DC3", 16);
  exact("Q4", "DC1", 4, std::vector<int>{1});
  below("Q4", "DC1", 4, std::vector<int>{0});
  exact("Q4", "DC2", 8);
  exact("Q4", "DC3", 8);
  exact("Q5", "DC1", 4, std::vector<int>{1});
  exact("Q5", "DC2", 8);
  exact("Q5", "DC3", 16);
  return v;
}

// 4. Basis hygiene.
Verdict c4() {
  Verdict v;
  std::vector<std::string> extra;
  bool omega15 = false;
  for (const auto& name : catalog_basis_names()) {
    auto b = make_basis(name);
    auto val = validate_orthonormal(b, 1e-12);
    v.require(val.max_offdiag <= 1e-12 && val.max_norm_dev <= 1e-12,
              name + " Gram deviation " + fmt(std::max(val.max_offdiag, val.max_norm_dev)));
    for (const auto& c : b.corrections) {
      v.require(!c.certificate.empty(), name + " " + c.label + " carries a derivation certificate");
      auto printed = b;
      printed.vectors[printed.index_of(c.label)] = c.as_printed;
      v.require(!validate_orthonormal(printed, 1e-12).pass, name + " " + c.label + " is needed");
      if (name == "omega16" && c.label == "Ω_15") {
        omega15 = c.unique;
      } else {
        extra.push_back(name + ":" + c.label);
      }
    }
  }
  v.require(omega15, "Ω_15 repaired by a unique sign pattern");
  auto derived = derive_omega15_correction();
  v.require(derived.unique && !derived.certificate.empty(), "Ω_15 derivation reproducible");

  // the duplicated published branches are flagged and resolved by the derived table
  for (const char* id : {"w11_1q_etazeta", "q5_1q_varphi"}) {
    auto r = run_scenario(builtin_teleport(id));
    int dup = 0;
    for (const auto& o : r.per_outcome)
      if (!o.printed_duplicate_of.empty() && o.printed_status == "disagrees") ++dup;
    v.require(dup == 1 && r.feasible, std::string(id) + " flags exactly one duplicated branch (found " +
                                          std::to_string(dup) + ")");
  }
  if (!extra.empty()) {
    std::string s = "further certified corrections, each required for orthonormality:";
    for (const auto& e : extra) s += " " + e;
    v.note(s);
  }
  return v;
}

// 5. Entanglement profile.
Verdict c5() {
  Verdict v;
  for (const char* st : {"GHZ4", "W4", "Omega", "Q4", "Q5"}) {
    auto p = profile(make_state(st));
    for (const auto& [k, pu] : p.purity)
      v.require(pu <= 1 - 1e-6, std::string(st) + " reduction {" + k + "} purity " + fmt(pu));
    if (std::string(st) == "W4")
      for (const auto& [k, c] : p.concurrence)
        v.require(std::abs(c - 0.5) <= 1e-9, "W4 pair " + k + " concurrence " + fmt(c));
    if (std::string(st) == "Omega" || std::string(st) == "Q5")
      for (const auto& [k, c] : p.concurrence)
        v.require(std::abs(c) <= 1e-9, std::string(st) + " pair " + k + " concurrence " + fmt(c));
  }
  double g = three_tangle_pure(make_state("GHZ:3").state), w = three_tangle_pure(make_state("W:3").state);
  v.require(std::abs(g - 1) <= 1e-9, "GHZ3 three-tangle " + fmt(g));
  v.require(std::abs(w) <= 1e-9, "W3 three-tangle " + fmt(w));
  return v;
}

// 6. LOCC discrimination.
Verdict c6() {
  Verdict v;
  std::map<std::string, int> cost;
  for (const auto& c : builtin_locc_cases()) {
    auto set = builtin_locc_set(c.set);
    auto r = run_discrimination(set.candidates, c.protocol);
    v.require(r.success, c.id + " succeeds" + (r.failure.empty() ? "" : ": " + r.failure));
    cost[c.id] = r.inter_receiver_cbits;
    auto chk = check_certificate(set.candidates, certificate_for(set, c.protocol));
    v.require(chk.pass, c.id + " certificate" + (chk.violation.empty() ? "" : ": " + chk.violation));
  }
  v.require(cost.count("ghz8_bell_bell") && cost["ghz8_bell_bell"] == 2, "GHZ 8-set Bell/Bell costs 2 cbits");
  v.require(cost.count("ghz8_pm_3ghz") && cost["ghz8_pm_3ghz"] == 1, "GHZ 8-set 3GHZ/± costs 1 cbit");
  for (const char* id : {"omega4", "w4", "q5_4"}) {
    bool covered = false;
    for (const auto& c : builtin_locc_cases()) covered |= c.set == id;
    v.require(covered, std::string(id) + " has a protocol");
  }
  auto omega16 = builtin_locc_set("omega16");
  auto protocols = catalog_protocols(4);
  int passing = 0;
  for (const auto& p : protocols) passing += run_discrimination(omega16.candidates, p).success ? 1 : 0;
  v.require(passing == 0, "Ω 16-set: " + std::to_string(passing) + " catalog protocols pass");
  v.note("Ω 16-set: 0 of " + std::to_string(protocols.size()) + " catalog protocols discriminate");
  return v;
}

MeasurementPlan random_plan(int n, std::mt19937_64& rng) {
  auto pick = [&](int k) -> NamedBasis {
    std::vector<NamedBasis> choices = {computational_basis(k)};
    if (k == 1) choices.push_back(make_basis("plus_minus"));
    if (k == 2) choices.push_back(make_basis("bell"));
    if (k == 3) choices.push_back(make_basis("ghz3_full"));
    if (k == 4) {
      choices.push_back(make_basis("omega_meas"));  // incomplete, completed with ⊥ vectors
      choices.push_back(make_basis("omega16"));
    }
    // a Haar-random basis
    auto u = random_unitary(k, rng);
    std::vector<PureState> vs;
    std::vector<std::string> labels;
    for (int c = 0; c < (1 << k); ++c) {
      std::vector<Complex> col(std::size_t{1} << k);
      for (int r = 0; r < (1 << k); ++r) col[static_cast<std::size_t>(r)] = u(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      vs.push_back(PureState(k, col));
      labels.push_back("u" + std::to_string(c));
    }
    choices.push_back(basis_from_vectors("haar", std::move(vs), std::move(labels)));
    return choices[rng() % choices.size()];
  };
  MeasurementPlan plan;
  auto order = random_perm(n, rng);
  std::size_t used = 0;
  const std::size_t measured = 1 + rng() % static_cast<std::size_t>(n);
  while (used < measured) {
    int k = static_cast<int>(1 + rng() % std::min<std::size_t>(4, measured - used));
    std::vector<int> t(order.begin() + static_cast<long>(used), order.begin() + static_cast<long>(used) + k);
    plan.add_step(t, pick(k));
    used += static_cast<std::size_t>(k);
  }
  return plan;
}

// 7. Property suites.
Verdict c7() {
  Verdict v;
  std::mt19937_64 rng(20261019);
  const int cases = 200;

  double norm_dev = 0, unit_dev = 0;
  int perm_bad = 0;
  for (int c = 0; c < cases; ++c) {
    int n = 1 + static_cast<int>(rng() % 8);
    auto s = random_state(n, rng);
    for (int op = 0; op < 20; ++op) {
      int k = 1 + static_cast<int>(rng() % static_cast<std::size_t>(std::min(n, 3)));
      auto u = (op % 2) ? random_unitary(k, rng) : gates::pauli_string(std::vector<int>(static_cast<std::size_t>(k), static_cast<int>(rng() % 4)));
      s = apply_local(s, u, random_targets(n, k, rng));
    }
    norm_dev = std::max(norm_dev, std::abs(norm_of(s) - 1));

    auto u = random_unitary(1 + static_cast<int>(rng() % 3), rng);
    unit_dev = std::max(unit_dev, ((u.adjoint() * u).matrix() - Eigen::MatrixXcd::Identity(static_cast<long>(u.dim()), static_cast<long>(u.dim()))).cwiseAbs().maxCoeff());

    auto p1 = random_perm(n, rng), p2 = random_perm(n, rng);
    std::vector<int> comp(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = p2[static_cast<std::size_t>(p1[i])];
    auto twice = permute_qubits(permute_qubits(s, p1), p2);
    auto once = permute_qubits(s, comp);
    if (fidelity_phase_invariant(twice, once) < 1 - 1e-12 || std::abs(inner(twice, once) - Complex(1)) > 1e-10)
      ++perm_bad;
  }
  v.require(norm_dev <= 1e-10, "normalization drift " + fmt(norm_dev));
  v.require(unit_dev <= 1e-10, "unitarity deviation " + fmt(unit_dev));
  v.require(perm_bad == 0, std::to_string(perm_bad) + " permutation compositions disagree");

  double prob_dev = 0;
  for (int c = 0; c < cases; ++c) {
    int n = 1 + static_cast<int>(rng() % 7);
    auto s = random_state(n, rng);
    double total = 0;
    for (const auto& b : enumerate_outcomes(s, random_plan(n, rng))) total += b.probability;
    prob_dev = std::max(prob_dev, std::abs(total - 1));
  }
  v.require(prob_dev <= 1e-10, "outcome probabilities sum off by " + fmt(prob_dev));

  // GHZ 3+1: one joint step versus the two successive steps
  MeasurementPlan joint, split;
  joint.add_step({0, 1, 2, 3}, product_basis(make_basis("ghz3_full"), make_basis("plus_minus")));
  split.add_step({0, 1, 2}, make_basis("ghz3_full"));
  split.add_step({3}, make_basis("plus_minus"));
  int refine_bad = 0;
  for (int c = 0; c < cases; ++c) {
    auto s = tensor(random_state(1, rng), make_state("GHZ4").state);
    auto a = enumerate_outcomes(s, joint), b = enumerate_outcomes(s, split);
    std::map<std::string, const OutcomeBranch*> by_label;
    for (const auto& x : a) by_label[x.labels[0]] = &x;
    if (a.size() != b.size()) ++refine_bad;
    for (const auto& y : b) {
      auto it = by_label.find(y.labels[0] + "," + y.labels[1]);
      if (it == by_label.end() || std::abs(it->second->probability - y.probability) > 1e-12 ||
          fidelity_phase_invariant(it->second->residual, y.residual) < 1 - 1e-12)
        ++refine_bad;
    }
  }
  v.require(refine_bad == 0, std::to_string(refine_bad) + " refinement mismatches");
  v.note(std::to_string(cases) + " cases per property; max norm drift " + fmt(norm_dev) + ", probability sum error " +
         fmt(prob_dev));
  return v;
}

const std::vector<std::pair<std::string, std::pair<std::string, std::function<Verdict()>>>> kCriteria = {
    {"c1", {"teleportation positives", c1}}, {"c2", {"teleportation negatives", c2}},
    {"c3", {"dense coding table", c3}},      {"c4", {"basis hygiene", c4}},
    {"c5", {"entanglement profile", c5}},    {"c6", {"LOCC discrimination", c6}},
    {"c7", {"property suites", c7}},
};

}  // namespace

int main(int argc, char** argv) {
  std::string only = argc > 1 ? argv[1] : "";
  bool all_pass = true, matched = false;
  for (const auto& [id, rest] : kCriteria) {
    if (!only.empty() && only != id) continue;
    matched = true;
    Verdict v;
    try {
      v = rest.second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.note(std::string("exception: ") + e.what());
    }
    std::printf("%s %s: %s\n", id.c_str(), v.pass ? "PASS" : "FAIL", rest.first.c_str());
    for (const auto& d : v.details) std::printf("    %s\n", d.c_str());
    all_pass &= v.pass;
  }
  if (!matched) {
    std::fprintf(stderr, "unknown criterion '%s'\n", only.c_str());
    return 2;
  }
  return all_pass ? 0 : 1;
}
