#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quadent/catalog.hpp"

namespace quadent {

inline constexpr double kBranchDrop = 1e-12;
inline const std::string kPerpPrefix = "⊥";

struct MeasurementStep {
  std::vector<int> targets;  // positions in the measured state; basis qubit i acts on targets[i]
  NamedBasis basis;          // completed on construction of the plan
  std::size_t named_count = 0;  // vectors before completion
};

class MeasurementPlan {
 public:
  MeasurementPlan() = default;
  void add_step(std::vector<int> targets, NamedBasis basis);

  const std::vector<MeasurementStep>& steps() const { return steps_; }
  std::vector<int> measured_qubits() const;
  // Validates targets against a register of n qubits.
  void check(int num_qubits) const;

 private:
  std::vector<MeasurementStep> steps_;
};

struct OutcomeBranch {
  std::vector<std::string> labels;  // one per step
  std::vector<int> indices;         // basis vector index per step
  double probability = 0;
  PureState residual = PureState::basis(0, 0);
  std::vector<int> residual_qubits;  // original positions, ascending

  bool has_perp() const;
};

// Gram-Schmidt completion over the computational basis; new outcomes are
// labelled ⊥1, ⊥2, ...
NamedBasis complete_basis(const NamedBasis& basis);

std::vector<OutcomeBranch> enumerate_outcomes(const PureState& state, const MeasurementPlan& plan);
OutcomeBranch sample(const PureState& state, const MeasurementPlan& plan, std::uint64_t seed);

// Unnormalized branch amplitudes; used where branch-relative phases matter.
struct RawBranch {
  std::vector<int> indices;
  std::vector<Complex> amps;  // over residual qubits, unnormalized
};
std::vector<RawBranch> enumerate_raw(const PureState& state, const MeasurementPlan& plan);

}  // namespace quadent
