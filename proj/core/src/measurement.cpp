#include "quadent/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace quadent {

NamedBasis complete_basis(const NamedBasis& basis) {
  auto v = validate_orthonormal(basis, kTol);
  if (!v.pass) throw Error("basis " + basis.name + " is not orthonormal; cannot complete");
  NamedBasis out = basis;
  const std::size_t d = std::size_t{1} << basis.num_qubits;
  int added = 0;
  for (std::size_t e = 0; e < d && out.vectors.size() < d; ++e) {
    std::vector<Complex> w(d);
    w[e] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : out.vectors) {
        Complex c = 0;
        auto ba = b.amplitudes();
        for (std::size_t i = 0; i < d; ++i) c += std::conj(ba[i]) * w[i];
        for (std::size_t i = 0; i < d; ++i) w[i] -= c * ba[i];
      }
    }
    double nrm = 0;
    for (auto a : w) nrm += std::norm(a);
    if (std::sqrt(nrm) < 1e-8) continue;
    out.vectors.push_back(PureState::normalized(basis.num_qubits, std::move(w)));
    out.outcome_labels.push_back(kPerpPrefix + std::to_string(++added));
  }
  if (out.vectors.size() != d) throw Error("basis " + basis.name + " could not be completed");
  return out;
}

void MeasurementPlan::add_step(std::vector<int> targets, NamedBasis basis) {
  if (static_cast<int>(targets.size()) != basis.num_qubits)
    throw DimensionError("step on " + std::to_string(targets.size()) + " qubits given a " +
                         std::to_string(basis.num_qubits) + "-qubit basis");
  for (const auto& s : steps_)
    for (int t : targets)
      if (std::find(s.targets.begin(), s.targets.end(), t) != s.targets.end())
        throw DimensionError("measurement steps overlap on qubit " + std::to_string(t));
  std::vector<int> sorted = targets;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw DimensionError("duplicate target in step");
  std::size_t named = basis.size();
  steps_.push_back({std::move(targets), complete_basis(basis), named});
}

std::vector<int> MeasurementPlan::measured_qubits() const {
  std::vector<int> q;
  for (const auto& s : steps_) q.insert(q.end(), s.targets.begin(), s.targets.end());
  std::sort(q.begin(), q.end());
  return q;
}

void MeasurementPlan::check(int n) const {
  for (int q : measured_qubits())
    if (q < 0 || q >= n) throw DimensionError("plan targets qubit " + std::to_string(q) + " outside the register");
}

bool OutcomeBranch::has_perp() const {
  return std::any_of(labels.begin(), labels.end(), [](const std::string& l) { return l.rfind(kPerpPrefix, 0) == 0; });
}

std::vector<RawBranch> enumerate_raw(const PureState& state, const MeasurementPlan& plan) {
  const int n = state.num_qubits();
  plan.check(n);
  struct Node {
    std::vector<int> idx;
    std::vector<Complex> amps;
    std::vector<int> alive;  // original positions of the current register
  };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  std::vector<Node> cur{{{}, std::vector<Complex>(state.amplitudes().begin(), state.amplitudes().end()), all}};
  for (const auto& step : plan.steps()) {
    std::vector<Node> next;
    for (const auto& node : cur) {
      std::vector<int> local;
      for (int t : step.targets) local.push_back(static_cast<int>(std::find(node.alive.begin(), node.alive.end(), t) - node.alive.begin()));
      std::vector<int> rest;
      for (int q : node.alive)
        if (std::find(step.targets.begin(), step.targets.end(), q) == step.targets.end()) rest.push_back(q);
      for (std::size_t b = 0; b < step.basis.size(); ++b) {
        auto r = contract(node.amps, static_cast<int>(node.alive.size()), step.basis.vectors[b].amplitudes(), local);
        double p = 0;
        for (auto a : r) p += std::norm(a);
        if (p < kBranchDrop) continue;
        auto idx = node.idx;
        idx.push_back(static_cast<int>(b));
        next.push_back({std::move(idx), std::move(r), rest});
      }
    }
    cur = std::move(next);
  }
  std::vector<RawBranch> out;
  out.reserve(cur.size());
  for (auto& node : cur) out.push_back({std::move(node.idx), std::move(node.amps)});
  return out;
}

std::vector<OutcomeBranch> enumerate_outcomes(const PureState& state, const MeasurementPlan& plan) {
  const int n = state.num_qubits();
  auto measured = plan.measured_qubits();
  std::vector<int> rest;
  for (int q = 0; q < n; ++q)
    if (!std::binary_search(measured.begin(), measured.end(), q)) rest.push_back(q);
  std::vector<OutcomeBranch> out;
  for (auto& raw : enumerate_raw(state, plan)) {
    double p = 0;
    for (auto a : raw.amps) p += std::norm(a);
    if (p < kBranchDrop) continue;
    OutcomeBranch br;
    br.indices = raw.indices;
    for (std::size_t s = 0; s < raw.indices.size(); ++s)
      br.labels.push_back(plan.steps()[s].basis.outcome_labels[raw.indices[s]]);
    br.probability = p;
    br.residual = PureState::normalized(static_cast<int>(rest.size()), std::move(raw.amps));
    br.residual_qubits = rest;
    out.push_back(std::move(br));
  }
  return out;
}

OutcomeBranch sample(const PureState& state, const MeasurementPlan& plan, std::uint64_t seed) {
  auto branches = enumerate_outcomes(state, plan);
  std::mt19937_64 rng(seed);
  double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  double acc = 0;
  for (const auto& b : branches) {
    acc += b.probability;
    if (u < acc) return b;
  }
  return branches.back();
}

}  // namespace quadent
