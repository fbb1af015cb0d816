#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadent/catalog.hpp"
#include "quadent/measurement.hpp"

namespace quadent {

enum class FamilyKind { Arbitrary, GhzSubclass, OmegaSubclass, WSubclass, Custom };

std::string to_string(FamilyKind k);
FamilyKind family_kind_from_string(std::string_view s);

// The set of unknown states the protocol must transmit: the linear span of
// `span` (orthonormal), living on num_qubits qubits a, b, c.
struct UnknownFamily {
  int num_qubits = 1;
  FamilyKind kind = FamilyKind::Arbitrary;
  std::vector<int> dressing;
  std::vector<PureState> span;
};

UnknownFamily arbitrary_family(int k);
// σ dressing (one Pauli code per qubit) applied to α|0..0> + β|1..1>.
UnknownFamily ghz_subclass(int k, std::vector<int> dressing);
// σi on a, σj on c applied to α φ+_ab|0>_c + β φ-_ab|1>_c.
UnknownFamily omega_subclass(std::vector<int> dressing);
// The fixed state (|001>+|010>+|100>+|000>)/2.
UnknownFamily w_subclass();
UnknownFamily custom_family(std::vector<PureState> span);

std::vector<PureState> probe_states(const UnknownFamily& family, std::uint64_t seed, int random_count = 20);
// Number of leading probes that are basis or phase-pair probes.
std::size_t structured_probe_count(const UnknownFamily& family);

// Qubit naming on the joint register: unknown qubits a, b, c first, then
// resource qubits "1".."n".
std::string qubit_name(int index, int unknown_count);
int qubit_index(std::string_view name, int unknown_count, int resource_count);

struct Party {
  std::string name;
  std::vector<int> qubits;
};

struct PartyDistribution {
  std::vector<Party> parties;
  std::string receiver = "Bob";

  const Party& party(std::string_view name) const;
  const Party& owner_of(int qubit) const;
  std::vector<int> receiver_qubits() const;  // ascending
  void check(int total_qubits, int unknown_count) const;
};

enum class AllowedOps { Paulis, PaulisCZ, PaulisJointDiagonal };
std::string to_string(AllowedOps ops);
AllowedOps allowed_ops_from_string(std::string_view s);

struct Correction {
  enum class Joint { None, CZ, PhaseFlip };
  std::vector<int> paulis;  // one code per receiver qubit, ascending qubit order
  Joint joint = Joint::None;
  int cz_a = 0, cz_b = 0;       // receiver-register positions
  std::uint64_t flip_label = 0;  // receiver-register basis index

  // Joint operation first, then the Pauli word.
  LocalUnitary unitary() const;
  std::string describe() const;
  bool operator==(const Correction&) const = default;
};

using OutcomeKey = std::vector<std::string>;

struct CorrectionTable {
  AllowedOps ops = AllowedOps::Paulis;
  std::map<OutcomeKey, Correction> entries;
};

// All candidates of an op set on m receiver qubits, in tie-break order.
std::vector<Correction> correction_candidates(int m, AllowedOps ops);

// Residual as published: Bob's state = matrix * (family coefficients).
// matrix is row-major, rows = receiver basis, cols = family span index.
struct PrintedResidual {
  OutcomeKey outcome;
  std::vector<Complex> matrix;
};

struct TeleportScenario {
  std::string id;
  std::string group;
  std::string description;
  NamedState resource;
  UnknownFamily family;
  PartyDistribution distribution;
  MeasurementPlan plan;  // targets index the joint register
  AllowedOps allowed_ops = AllowedOps::Paulis;
  std::optional<CorrectionTable> corrections;  // synthesized when absent
  std::vector<PrintedResidual> printed_residuals;
  bool expect_feasible = true;
  std::optional<int> expected_cost;

  int total_qubits() const { return family.num_qubits + resource.state.num_qubits(); }
};

struct OutcomeReport {
  OutcomeKey labels;
  double min_probability = 0;
  double max_probability = 0;
  double fidelity = 0;  // worst over probes reaching this outcome
  std::string correction;
  std::string derived_residual;
  std::string printed_residual;   // empty when the source prints none
  std::string printed_status;     // "", "agrees", "disagrees"
  std::string printed_duplicate_of;

  bool operator==(const OutcomeReport&) const = default;
};

struct TeleportReport {
  std::string scenario_id;
  bool feasible = false;
  double worst_fidelity = 0;
  double worst_structured = 0;
  double worst_random = 0;
  int cost_cbits = 0;
  int branch_count = 0;
  bool outcome_uniform = false;
  bool linearity_certified = false;
  bool perp_flag = false;
  bool synthesized = false;
  std::vector<OutcomeReport> per_outcome;

  bool operator==(const TeleportReport&) const = default;
};

struct SynthesisResult {
  bool feasible = false;
  CorrectionTable table;  // best correction per outcome, feasible or not
  std::map<OutcomeKey, double> best_fidelity;
  double worst = 0;
};

struct RunOptions {
  std::uint64_t seed = 42;
  double tolerance = kTol;
  int random_probes = 20;
};

SynthesisResult synthesize_corrections(const NamedState& resource, const MeasurementPlan& plan,
                                       const PartyDistribution& distribution, const UnknownFamily& family,
                                       AllowedOps ops, const RunOptions& opt = {});
SynthesisResult synthesize_corrections(const TeleportScenario& s, const RunOptions& opt = {});

TeleportReport run_scenario(const TeleportScenario& s, const RunOptions& opt = {});
int classical_cost(const TeleportScenario& s, const RunOptions& opt = {});

// Pretty form of a residual map, e.g. "α|1> - β|0>".
std::string render_residual(const std::vector<Complex>& matrix, int rows, int cols);

}  // namespace quadent
