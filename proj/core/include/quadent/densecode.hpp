#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadent/catalog.hpp"

namespace quadent {

// Sender applies one of {I, σ1, iσ2, σ3} to each of its qubits.
struct EncodingSpec {
  std::vector<int> sender_qubits;  // 0-based, ordered
  std::string tag;                 // "DC1", "DC2", ...
  bool plain_sigma2 = false;       // σ2 in place of iσ2
};

struct EncodedState {
  std::string label;  // e.g. "σ1⊗iσ2"
  std::vector<int> ops;
  PureState state;
};

std::vector<EncodedState> generate_encoded(const NamedState& resource, const EncodingSpec& spec);

struct OrthogonalSubset {
  std::vector<std::size_t> witness;  // indices into the input, ascending
  std::size_t distinct = 0;          // states left after merging phase-equal ones
};

// Exact maximum set of pairwise orthogonal states (|<i|j>| < tol); states equal
// up to phase are merged first, keeping the earliest.
OrthogonalSubset max_mutually_orthogonal(const std::vector<PureState>& states, double tol = kTol);

struct CapacityReport {
  std::string state;
  std::string scenario;
  std::vector<int> sender_qubits;  // 0-based, the maximizing choice
  int encoded_count = 0;
  int max_orthogonal = 0;
  double capacity_cbits = 0;
  std::vector<std::string> witness;
  std::map<std::string, int> per_distribution;  // "1,2" (1-based) -> N

  bool operator==(const CapacityReport&) const = default;
};

// scenario is "DC<k>"; without explicit senders every k-subset is tried and
// the maximum reported (earliest subset on ties).
CapacityReport capacity(const NamedState& resource, const std::string& scenario,
                        const std::optional<std::vector<int>>& senders = std::nullopt, bool plain_sigma2 = false);

std::string qubit_set_label(const std::vector<int>& zero_based);

}  // namespace quadent
