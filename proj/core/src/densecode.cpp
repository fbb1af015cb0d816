#include "quadent/densecode.hpp"

#include <cmath>

#include "quadent/clique.hpp"
#include "quadent/gates.hpp"

namespace quadent {

std::string qubit_set_label(const std::vector<int>& q) {
  std::string s;
  for (int x : q) s += (s.empty() ? "" : ",") + std::to_string(x + 1);
  return s;
}

std::vector<EncodedState> generate_encoded(const NamedState& resource, const EncodingSpec& spec) {
  const int n = resource.state.num_qubits();
  const int k = static_cast<int>(spec.sender_qubits.size());
  if (k < 1 || k >= n) throw ConstraintError("sender must hold between 1 and n-1 qubits");
  check_targets(n, spec.sender_qubits);
  std::vector<bool> plain(k, spec.plain_sigma2);
  std::vector<EncodedState> out;
  for (std::size_t w = 0; w < (std::size_t{1} << (2 * k)); ++w) {
    std::vector<int> ops(k);
    for (int i = 0; i < k; ++i) ops[i] = static_cast<int>((w >> (2 * (k - 1 - i))) & 3);
    auto u = gates::pauli_string(ops, plain);
    std::string label = gates::pauli_word(ops);
    out.push_back({label, ops, apply_local(resource.state, u, std::span<const int>(spec.sender_qubits))});
  }
  return out;
}

OrthogonalSubset max_mutually_orthogonal(const std::vector<PureState>& states, double tol) {
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < states.size(); ++i) {
    bool dup = false;
    for (std::size_t r : reps)
      if (std::abs(std::abs(inner(states[r], states[i])) - 1) < 1e-9) {
        dup = true;
        break;
      }
    if (!dup) reps.push_back(i);
  }
  Graph g(reps.size());
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = a + 1; b < reps.size(); ++b)
      if (std::abs(inner(states[reps[a]], states[reps[b]])) < tol) g.add_edge(a, b);
  OrthogonalSubset out;
  out.distinct = reps.size();
  for (std::size_t v : lex_smallest_max_clique(g)) out.witness.push_back(reps[v]);
  return out;
}

namespace {

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int q = start; q < n; ++q) {
    cur.push_back(q);
    subsets(n, k, q + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

CapacityReport capacity(const NamedState& resource, const std::string& scenario,
                        const std::optional<std::vector<int>>& senders, bool plain_sigma2) {
  if (scenario.size() < 3 || scenario.rfind("DC", 0) != 0) throw UnknownNameError("unknown scenario '" + scenario + "'");
  const int k = std::stoi(scenario.substr(2));
  const int n = resource.state.num_qubits();
  if (k < 1 || k >= n) throw ConstraintError(scenario + " needs fewer sender qubits than the resource holds");
  std::vector<std::vector<int>> choices;
  if (senders) {
    if (static_cast<int>(senders->size()) != k) throw ConstraintError(scenario + " needs exactly " + std::to_string(k) + " sender qubits");
    choices.push_back(*senders);
  } else {
    std::vector<int> cur;
    subsets(n, k, 0, cur, choices);
  }
  CapacityReport rep;
  rep.state = resource.name;
  rep.scenario = scenario;
  rep.max_orthogonal = -1;
  for (const auto& q : choices) {
    auto enc = generate_encoded(resource, {q, scenario, plain_sigma2});
    std::vector<PureState> states;
    for (const auto& e : enc) states.push_back(e.state);
    auto sub = max_mutually_orthogonal(states);
    int nmax = static_cast<int>(sub.witness.size());
    rep.per_distribution[qubit_set_label(q)] = nmax;
    if (nmax > rep.max_orthogonal) {
      rep.max_orthogonal = nmax;
      rep.sender_qubits = q;
      rep.encoded_count = static_cast<int>(enc.size());
      rep.witness.clear();
      for (auto i : sub.witness) rep.witness.push_back(enc[i].label);
    }
  }
  rep.capacity_cbits = std::log2(static_cast<double>(rep.max_orthogonal));
  return rep;
}

}  // namespace quadent
