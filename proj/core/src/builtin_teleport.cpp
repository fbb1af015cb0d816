#include "quadent/builtin_teleport.hpp"

namespace quadent {

namespace {

struct StepSpec {
  std::vector<std::string> qubits;
  std::string basis;
};

struct PartySpec {
  std::string name;
  std::vector<std::string> qubits;
};

TeleportScenario make(std::string id, std::string group, std::string description, const std::string& resource,
                      UnknownFamily family, const std::vector<StepSpec>& steps, std::vector<PartySpec> senders,
                      AllowedOps ops, bool feasible, std::optional<int> cost) {
  TeleportScenario s;
  s.id = std::move(id);
  s.group = std::move(group);
  s.description = std::move(description);
  s.resource = make_state(resource);
  s.family = std::move(family);
  const int k = s.family.num_qubits, r = s.resource.state.num_qubits();
  for (const auto& st : steps) {
    std::vector<int> t;
    for (const auto& q : st.qubits) t.push_back(qubit_index(q, k, r));
    s.plan.add_step(std::move(t), make_basis(st.basis));
  }
  std::vector<int> owned(k + r, 0);
  for (const auto& p : senders) {
    Party party{p.name, {}};
    for (const auto& q : p.qubits) {
      int i = qubit_index(q, k, r);
      party.qubits.push_back(i);
      owned[i] = 1;
    }
    s.distribution.parties.push_back(std::move(party));
  }
  Party bob{"Bob", {}};
  for (int i = 0; i < k + r; ++i)
    if (!owned[i]) bob.qubits.push_back(i);
  s.distribution.parties.push_back(std::move(bob));
  s.allowed_ops = ops;
  s.expect_feasible = feasible;
  s.expected_cost = cost;
  return s;
}

// Residual maps for the single-qubit family: rows Bob's |0>,|1>, cols α, β.
std::vector<Complex> map2(double a0, double b0, double a1, double b1) { return {a0, b0, a1, b1}; }
const std::vector<Complex> kSame = map2(1, 0, 0, 1);    // α|0> + β|1>
const std::vector<Complex> kFlipZ = map2(1, 0, 0, -1);  // α|0> - β|1>
const std::vector<Complex> kSwap = map2(0, 1, 1, 0);    // α|1> + β|0>
const std::vector<Complex> kSwapZ = map2(0, -1, 1, 0);  // α|1> - β|0>

// Parses a printed residual such as "+a01+b00-c11" (a..d for the family
// coefficients, then Bob's ket) into its row-major map.
std::vector<Complex> parse_map(std::string_view text, int rows, int cols) {
  std::vector<Complex> m(static_cast<std::size_t>(rows * cols));
  std::size_t i = 0;
  while (i < text.size()) {
    double sign = text[i] == '-' ? -1 : 1;
    if (text[i] == '+' || text[i] == '-') ++i;
    int col = text[i++] - 'a';
    std::size_t j = i;
    while (j < text.size() && (text[j] == '0' || text[j] == '1')) ++j;
    int row = static_cast<int>(parse_label(text.substr(i, j - i)));
    m[static_cast<std::size_t>(row * cols + col)] += sign;
    i = j;
  }
  return m;
}

std::string dressing_suffix(const std::vector<int>& d) {
  std::string s;
  for (int x : d) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace

std::vector<TeleportScenario> builtin_teleport_scenarios() {
  using P = AllowedOps;
  std::vector<TeleportScenario> out;
  auto one = arbitrary_family(1);
  auto two = arbitrary_family(2);
  const std::vector<StepSpec> ghz4p = {{{"a", "1", "2", "3"}, "ghz4_full"}};
  const std::vector<StepSpec> ghz3p1 = {{{"a", "1", "2"}, "ghz3_full"}, {{"3"}, "plus_minus"}};
  const std::vector<StepSpec> bellbell = {{{"a", "1"}, "bell"}, {{"2", "3"}, "bell"}};
  const std::vector<StepSpec> bell11 = {{{"a", "1"}, "bell"}, {{"2"}, "plus_minus"}, {{"3"}, "plus_minus"}};
  const std::vector<StepSpec> bella2 = {{{"a", "2"}, "bell"}, {{"1", "3"}, "bell"}};
  const PartySpec alice4{"Alice", {"a", "1", "2", "3"}};

  auto s = make("ghz_1q_4p", "teleport-1q", "GHZ, four-particle GHZ basis", "GHZ4", one, ghz4p, {alice4}, P::Paulis,
                true, 2);
  s.printed_residuals = {{{"4GHZ1+"}, kSame}, {{"4GHZ1-"}, kFlipZ}, {{"4GHZ2+"}, kSwap}, {{"4GHZ2-"}, kSwapZ}};
  out.push_back(s);
  out.push_back(make("ghz_1q_3p1", "teleport-1q", "GHZ, three-particle GHZ basis then ± on qubit 3", "GHZ4", one,
                     ghz3p1, {alice4}, P::Paulis, true, 2));
  out.push_back(make("ghz_1q_3p1_3party", "teleport-1q", "GHZ 3+1 plan, Alice {a,1,2}, Charlie {3}", "GHZ4", one,
                     ghz3p1, {{"Alice", {"a", "1", "2"}}, {"Charlie", {"3"}}}, P::Paulis, true, 3));
  out.push_back(make("ghz_1q_bellbell", "teleport-1q", "GHZ, Bell on (a,1) then Bell on (2,3)", "GHZ4", one, bellbell,
                     {alice4}, P::Paulis, true, 2));
  out.push_back(make("ghz_1q_bellbell_3party", "teleport-1q", "GHZ Bell+Bell, Alice {a,1}, Charlie {2,3}", "GHZ4", one,
                     bellbell, {{"Alice", {"a", "1"}}, {"Charlie", {"2", "3"}}}, P::Paulis, true, 3));
  out.push_back(make("ghz_1q_bell11", "teleport-1q", "GHZ, Bell on (a,1), ± on 2 and on 3", "GHZ4", one, bell11,
                     {alice4}, P::Paulis, true, 2));
  out.push_back(make("ghz_1q_bell11_3party", "teleport-1q", "GHZ Bell+1+1, Alice {a,1}, Charlie {2,3}", "GHZ4", one,
                     bell11, {{"Alice", {"a", "1"}}, {"Charlie", {"2", "3"}}}, P::Paulis, true, 3));
  out.push_back(make("ghz_1q_bell11_4party", "teleport-1q", "GHZ Bell+1+1, Alice {a,1}, Charlie {2}, Dave {3}", "GHZ4",
                     one, bell11, {{"Alice", {"a", "1"}}, {"Charlie", {"2"}}, {"Dave", {"3"}}}, P::Paulis, true, 4));

  out.push_back(make("omega_1q_omega", "teleport-1q", "Ω, four-particle Ω basis", "Omega", one,
                     {{{"a", "1", "2", "3"}, "omega_meas"}}, {alice4}, P::Paulis, true, 2));
  out.push_back(make("omega_1q_ghzbasis", "teleport-1q", "Ω, four-particle GHZ basis", "Omega", one, ghz4p, {alice4},
                     P::Paulis, true, 2));
  out.push_back(make("omega_1q_3p1", "teleport-1q", "Ω, three-particle GHZ basis then ± on qubit 3", "Omega", one,
                     ghz3p1, {alice4}, P::Paulis, true, 2));
  out.push_back(make("omega_1q_3p1_3party", "teleport-1q", "Ω 3+1 plan, Alice {a,1,2}, Charlie {3}", "Omega", one,
                     ghz3p1, {{"Alice", {"a", "1", "2"}}, {"Charlie", {"3"}}}, P::Paulis, true, 3));
  out.push_back(make("omega_1q_bell_a2_13", "teleport-1q", "Ω, Bell on (a,2) then Bell on (1,3)", "Omega", one, bella2,
                     {alice4}, P::Paulis, true, 2));
  out.push_back(make("omega_1q_bell_a2_13_3party", "teleport-1q", "Ω Bell(a2)+Bell(13), Alice {a,2}, Charlie {1,3}",
                     "Omega", one, bella2, {{"Alice", {"a", "2"}}, {"Charlie", {"1", "3"}}}, P::Paulis, true, 4));

  s = make("w11_1q_etazeta", "teleport-1q", "W_11, η/ζ basis", "W11", one, {{{"a", "1", "2", "3"}, "eta_zeta_W11"}},
           {alice4}, P::Paulis, true, 2);
  s.printed_residuals = {{{"η+"}, kSame}, {{"η-"}, kFlipZ}, {{"ζ+"}, kSwap}, {{"ζ-"}, kFlipZ}};
  out.push_back(s);

  const PartySpec alice134{"Alice", {"a", "1", "3", "4"}};
  out.push_back(make("q4_1q_rho", "teleport-1q", "Q4, ρ basis on (a,1,3,4), Bob holds 2", "Q4", one,
                     {{{"a", "1", "3", "4"}, "rho_Q4"}}, {alice134}, P::Paulis, true, 2));
  out.push_back(make("q4_1q_tau", "teleport-1q", "Q4, τ basis on (a,1,3,4), Bob holds 2", "Q4", one,
                     {{{"a", "1", "3", "4"}, "tau_Q4"}}, {alice134}, P::Paulis, true, 2));
  out.push_back(make("q4_11_1q_etazeta", "teleport-1q", "Q4_11, η/ζ basis", "Q4_11", one,
                     {{{"a", "1", "2", "3"}, "eta_zeta_Q4"}}, {alice4}, P::Paulis, true, 2));

  s = make("q5_1q_varphi", "teleport-1q", "Q5, φ basis", "Q5", one, {{{"a", "1", "2", "3"}, "varphi_Q5"}}, {alice4},
           P::Paulis, true, 2);
  s.printed_residuals = {{{"φ1+"}, kSame}, {{"φ1-"}, kFlipZ}, {{"φ2+"}, kSwap}, {{"φ2-"}, kFlipZ}};
  out.push_back(s);
  out.push_back(make("q5_1q_xi", "teleport-1q", "Q5, ξ basis", "Q5", one, {{{"a", "1", "2", "3"}, "xi_Q5"}}, {alice4},
                     P::Paulis, true, 2));
  const std::vector<StepSpec> om3 = {{{"a", "2", "3"}, "omega3_Q5"}, {{"1"}, "plus_minus"}};
  out.push_back(make("q5_1q_omega3p1", "teleport-1q", "Q5, ω basis on (a,2,3) then ± on qubit 1", "Q5", one, om3,
                     {alice4}, P::Paulis, true, 2));
  out.push_back(make("q5_1q_omega3p1_3party", "teleport-1q", "Q5 ω 3+1 plan, Alice {a,2,3}, Charlie {1}", "Q5", one,
                     om3, {{"Alice", {"a", "2", "3"}}, {"Charlie", {"1"}}}, P::Paulis, true, 3));

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::string d = dressing_suffix({i, j});
      out.push_back(make("ghz_2q_subclass:" + d, "teleport-2q", "GHZ, two-qubit subclass dressed (" + d + "), π basis",
                         "GHZ4", ghz_subclass(2, {i, j}), {{{"a", "b", "1", "2"}, "pi_2q:" + d}},
                         {{"Alice", {"a", "b", "1", "2"}}}, P::Paulis, true, 2));
    }
  out.push_back(make("omega_2q_omega16", "teleport-2q", "Ω, arbitrary two-qubit state, 16-vector Ω basis", "Omega", two,
                     {{{"a", "b", "1", "2"}, "omega16"}}, {{"Alice", {"a", "b", "1", "2"}}}, P::Paulis, true, 4));
  {
    const char* printed[16] = {"+a01+b00+c11+d10", "+a01+b00-c11-d10", "+a01-b00+c11-d10", "+a01-b00-c11+d10",
                               "+a11-b10+c01-d10", "+a11-b10-c01+d10", "+a11+b10+c01+d10", "+a11+b10-c01-d10",
                               "+a00+b01-c10-d11", "+a00+b01+c10+d11", "+a00-b01-c10+d11", "+a00-b01+c10-d11",
                               "+a10-b11-c10+d11", "+a10-b11+c10-d11", "+a10+b11-c10-d11", "+a10+b11+c10+d11"};
    auto& om = out.back();
    for (int i = 0; i < 16; ++i)
      om.printed_residuals.push_back({{"Ω_" + std::to_string(i + 1)}, parse_map(printed[i], 4, 4)});
  }
  const std::vector<StepSpec> bb2 = {{{"a", "2"}, "bell"}, {{"b", "1"}, "bell"}};
  out.push_back(make("omega_2q_bellbell_cz", "teleport-2q", "Ω, Bell on (a,2) and (b,1), controlled-phase allowed",
                     "Omega", two, bb2, {{"Alice", {"a", "b", "1", "2"}}}, P::PaulisCZ, true, 4));

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int l = 0; l < 4; ++l) {
        std::string d = dressing_suffix({i, j, l});
        out.push_back(make("ghz_3q_subclass:" + d, "teleport-3q",
                           "GHZ, three-qubit subclass dressed (" + d + "), π basis", "GHZ4", ghz_subclass(3, {i, j, l}),
                           {{{"a", "b", "c", "1"}, "pi_3q:" + d}}, {{"Alice", {"a", "b", "c", "1"}}}, P::Paulis, true,
                           2));
      }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::string d = dressing_suffix({i, j});
      out.push_back(make("omega_3q_subclass:" + d, "teleport-3q",
                         "Ω, three-qubit subclass dressed (" + d + "), basis on (a,b,1,c)", "Omega", omega_subclass({i, j}),
                         {{{"a", "b", "1", "c"}, "Omega34_3q:" + d}}, {{"Alice", {"a", "b", "c", "1"}}}, P::Paulis, true,
                         2));
    }
  out.push_back(make("w_3q_equal", "teleport-3q", "W, equal-coefficient three-qubit state, Σ basis, joint sign flip",
                     "W4", w_subclass(), {{{"a", "b", "c", "1"}, "sigma_W"}}, {{"Alice", {"a", "b", "c", "1"}}},
                     P::PaulisJointDiagonal, true, 1));

  out.push_back(make("w_plain_1q", "teleport-negative", "plain W, four-particle GHZ basis, Pauli corrections", "W4", one,
                     ghz4p, {alice4}, P::Paulis, false, std::nullopt));
  out.push_back(make("q4_1q_a123", "teleport-negative", "Q4, GHZ basis on (a,1,2,3), Bob holds 4", "Q4", one, ghz4p,
                     {alice4}, P::Paulis, false, std::nullopt));
  out.push_back(make("omega_2q_bellbell_nocz", "teleport-negative", "Ω, Bell on (a,2) and (b,1), Paulis only", "Omega",
                     two, bb2, {{"Alice", {"a", "b", "1", "2"}}}, P::Paulis, false, std::nullopt));
  return out;
}

std::vector<std::string> builtin_teleport_ids() {
  std::vector<std::string> ids;
  for (const auto& s : builtin_teleport_scenarios()) ids.push_back(s.id);
  return ids;
}

TeleportScenario builtin_teleport(std::string_view id) {
  for (auto& s : builtin_teleport_scenarios())
    if (s.id == id) return s;
  throw UnknownNameError("unknown teleport scenario '" + std::string(id) + "'");
}

}  // namespace quadent
