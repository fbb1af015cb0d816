#include "quadent/builtin_locc.hpp"

#include "quadent/gates.hpp"

namespace quadent {

namespace {

// Ket written with receiver grouping "q1q3|q2q4", as the published sets are.
PureState grouped(const std::vector<std::pair<std::string, double>>& terms) {
  std::vector<std::pair<std::string, Complex>> kets;
  for (const auto& [g, c] : terms) {
    std::string l = {g[0], g[3], g[1], g[4]};
    kets.emplace_back(l, c);
  }
  return PureState::from_kets(kets);
}

LoccSet encoded(std::string id, const std::string& resource, const std::vector<std::pair<int, int>>& ops,
                const std::vector<std::string>& labels) {
  LoccSet s{std::move(id), resource, {}, {}, {}};
  auto st = make_state(resource).state;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    auto u = gates::pauli_string({ops[i].first, ops[i].second});
    s.candidates.push_back({labels[i], apply_local(st, u, {0, 1})});
  }
  return s;
}

LoccRound round(const std::string& party, std::vector<int> qubits, const std::string& basis) {
  return {party, std::move(qubits), make_basis(basis)};
}

LoccProtocol two_receivers(std::string name, std::vector<int> first, const std::string& first_basis,
                           std::vector<int> second, const std::string& second_basis) {
  LoccProtocol p;
  p.name = std::move(name);
  p.parties = {{"B1", first}, {"B2", second}};
  p.rounds = {round("B1", first, first_basis), round("B2", second, second_basis)};
  return p;
}

std::vector<std::string> bases_of_size(int k) {
  switch (k) {
    case 1:
      return {"plus_minus", "computational:1"};
    case 2:
      return {"bell", "computational:2"};
    case 3:
      return {"ghz3_full", "omega3_Q5", "computational:3"};
    default:
      return {};
  }
}

std::string qubits_label(const std::vector<int>& q) {
  std::string s;
  for (int x : q) s += std::to_string(x + 1);
  return s;
}

}  // namespace

std::vector<std::string> builtin_locc_set_ids() { return {"ghz8", "omega4", "w4", "q5_4", "omega16"}; }

LoccSet builtin_locc_set(std::string_view id) {
  if (id == "ghz8") {
    LoccSet s{"ghz8", "GHZ4", {}, {}, {}};
    auto b = make_basis("ghz4_full");
    for (std::size_t i = 0; i < b.size(); ++i) s.candidates.push_back({b.outcome_labels[i], b.vectors[i]});
    s.notes.push_back("the eight two-qubit encodings of GHZ on qubits 1,2 up to phase");
    return s;
  }
  if (id == "omega4") {
    auto s = encoded("omega4", "Omega", {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {"Ω1", "Ω5", "Ω9", "Ω13"});
    s.printed = {grouped({{"00|00", 1}, {"01|10", 1}, {"10|01", 1}, {"11|11", -1}}),
                 grouped({{"00|10", 1}, {"01|00", 1}, {"10|11", 1}, {"11|01", -1}}),
                 grouped({{"10|00", 1}, {"11|10", 1}, {"00|01", 1}, {"01|11", -1}}),
                 grouped({{"10|10", 1}, {"11|00", 1}, {"00|11", 1}, {"01|01", -1}})};
    s.notes.push_back("re-derived as I, I⊗σ1, σ1⊗I, σ1⊗σ1 on qubits 1,2 of Ω; a stray typesetting token in the source is ignored");
    return s;
  }
  if (id == "w4") {
    auto s = encoded("w4", "W4", {{0, 0}, {3, 3}, {1, 0}, {2, 3}}, {"W1", "W2", "W3", "W4"});
    s.printed = {grouped({{"00|01", 1}, {"00|10", 1}, {"01|00", 1}, {"10|00", 1}}),
                 grouped({{"00|01", 1}, {"00|10", -1}, {"01|00", 1}, {"10|00", -1}}),
                 grouped({{"10|01", 1}, {"10|10", 1}, {"11|00", 1}, {"00|00", 1}}),
                 grouped({{"10|01", -1}, {"10|10", 1}, {"11|00", -1}, {"00|00", 1}})};
    s.notes.push_back("re-derived as I, σ3⊗σ3, σ1⊗I, iσ2⊗σ3 on qubits 1,2 of W");
    return s;
  }
  if (id == "q5_4") {
    auto s = encoded("q5_4", "Q5", {{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {"Q5_1", "Q5_2", "Q5_3", "Q5_4"});
    s.printed = {grouped({{"00|00", 1}, {"11|01", 1}, {"10|11", 1}, {"11|10", 1}}),
                 std::nullopt,
                 grouped({{"00|10", 1}, {"11|11", 1}, {"10|01", 1}, {"11|00", 1}}),
                 grouped({{"10|10", 1}, {"01|11", 1}, {"00|01", 1}, {"01|00", 1}})};
    s.notes.push_back("re-derived as I, σ1⊗I, I⊗σ1, σ1⊗σ1 on qubits 1,2 of Q5");
    s.notes.push_back("published Q5_2 has a fourth ket with two (2,4) factors and no (1,3) factor; not comparable as printed");
    return s;
  }
  if (id == "omega16") {
    LoccSet s{"omega16", "Omega", {}, {}, {}};
    auto st = make_state("Omega").state;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        s.candidates.push_back({gates::pauli_word({i, j}), apply_local(st, gates::pauli_string({i, j}), {0, 1})});
    s.notes.push_back("all sixteen two-qubit encodings of Ω on qubits 1,2");
    return s;
  }
  throw UnknownNameError("unknown LOCC set '" + std::string(id) + "'");
}

std::vector<LoccCase> builtin_locc_cases() {
  std::vector<LoccCase> out;
  out.push_back({"ghz8_bell_bell", "ghz8", two_receivers("Bell(13) then Bell(24)", {0, 2}, "bell", {1, 3}, "bell"), true, 2});
  out.push_back({"ghz8_pm_3ghz", "ghz8",
                 two_receivers("± on 4 then 3GHZ on (1,2,3)", {3}, "plus_minus", {0, 1, 2}, "ghz3_full"), true, 1});
  out.push_back({"omega4_computational", "omega4",
                 two_receivers("computational (13) then (24)", {0, 2}, "computational:2", {1, 3}, "computational:2"),
                 true, 2});
  out.push_back({"w4_bell_bell", "w4", two_receivers("Bell(13) then Bell(24)", {0, 2}, "bell", {1, 3}, "bell"), true, 2});
  out.push_back({"q5_4_computational", "q5_4",
                 two_receivers("computational (13) then (24)", {0, 2}, "computational:2", {1, 3}, "computational:2"),
                 true, 2});
  return out;
}

LoccCase builtin_locc_case(std::string_view id) {
  for (auto& c : builtin_locc_cases())
    if (c.id == id) return c;
  throw UnknownNameError("unknown LOCC case '" + std::string(id) + "'");
}

ChenLiCertificate certificate_for(const LoccSet& set, const LoccProtocol& p) {
  if (p.rounds.size() != 2) throw Error("certificates are read off two-round protocols");
  return certificate_from_bases(set.candidates, p.rounds[0].qubits, p.rounds[0].basis, p.rounds[1].qubits,
                                p.rounds[1].basis);
}

std::vector<LoccProtocol> catalog_protocols(int n) {
  std::vector<LoccProtocol> out;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> first, second;
    for (int q = 0; q < n; ++q) (mask & (1u << q) ? first : second).push_back(q);
    for (const auto& b1 : bases_of_size(static_cast<int>(first.size())))
      for (const auto& b2 : bases_of_size(static_cast<int>(second.size())))
        out.push_back(two_receivers(b1 + "(" + qubits_label(first) + ") then " + b2 + "(" + qubits_label(second) + ")",
                                    first, b1, second, b2));
  }
  return out;
}

}  // namespace quadent
