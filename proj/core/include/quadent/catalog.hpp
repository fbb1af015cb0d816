#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "quadent/pure_state.hpp"

namespace quadent {

using StateParams = std::map<std::string, double>;

struct NamedState {
  std::string name;
  StateParams params;
  PureState state = PureState::basis(0, 0);
};

// A vector of the basis that differs from its published form.
struct BasisCorrection {
  std::string label;
  PureState as_printed;
  PureState as_corrected;
  std::string method;                    // "sign-pattern completion", "support relabel", "single-ket substitution"
  std::vector<std::string> certificate;  // derivation trace, one step per line
  bool unique = true;                    // the search admitted exactly one repair
};

struct NamedBasis {
  std::string name;
  int num_qubits = 0;
  std::vector<PureState> vectors;
  std::vector<std::string> outcome_labels;
  std::vector<BasisCorrection> corrections;

  bool complete() const { return vectors.size() == (std::size_t{1} << num_qubits); }
  std::size_t size() const { return vectors.size(); }
  std::size_t index_of(std::string_view label) const;
};

struct BasisValidation {
  double max_offdiag = 0;
  double max_norm_dev = 0;
  bool complete = false;
  bool pass = false;
};

NamedState make_state(std::string_view name, const StateParams& params = {});
// Basis names may carry a Pauli dressing suffix, e.g. "pi_2q:1,3".
NamedBasis make_basis(std::string_view name);
NamedBasis make_basis(std::string_view name, const std::vector<int>& dressing);

BasisValidation validate_orthonormal(const NamedBasis& basis, double tol = kNormTol);

NamedBasis basis_from_vectors(std::string name, std::vector<PureState> vectors, std::vector<std::string> labels);
NamedBasis computational_basis(int k);
// Product basis, labels joined with ','.
NamedBasis product_basis(const NamedBasis& a, const NamedBasis& b);

// Names accepted by make_state / make_basis without parameters, in catalog order.
std::vector<std::string> catalog_state_names();
std::vector<std::string> catalog_basis_names();

// The four-qubit resources Q1..Q5 of the classification section.
std::vector<NamedState> resource_states();

// Ω_15 repair search over the 8 sign patterns on span{0011,0101,1010,1100}.
BasisCorrection derive_omega15_correction();

}  // namespace quadent
