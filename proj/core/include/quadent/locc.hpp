#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadent/catalog.hpp"

namespace quadent {

struct LabeledState {
  std::string label;
  PureState state;
};

struct LoccRound {
  std::string party;
  std::vector<int> qubits;  // basis qubit i acts on qubits[i]
  NamedBasis basis;
  int message_cbits() const;  // ceil(log2 outcomes)
};

struct LoccParty {
  std::string name;
  std::vector<int> qubits;
};

// Non-adaptive: each round's basis is fixed in advance. The last round's
// party identifies the state; every earlier round is a message to it.
struct LoccProtocol {
  std::string name;
  std::vector<LoccParty> parties;
  std::vector<LoccRound> rounds;
  // transcript -> candidate label; derived from the candidates when absent
  std::optional<std::map<std::vector<std::string>, std::string>> identification;

  void check(int num_qubits) const;
  int inter_receiver_cbits() const;
};

struct DiscriminationReport {
  std::string protocol;
  bool success = false;
  int candidates = 0;
  int transcripts = 0;
  double recovered_cbits = 0;
  int inter_receiver_cbits = 0;
  bool orthogonal_per_round = true;  // candidates stay orthogonal on every partial transcript
  std::string failure;               // offending transcript and reason
  std::map<std::string, std::vector<std::string>> transcripts_of;  // candidate -> "a|b" transcripts

  bool operator==(const DiscriminationReport&) const = default;
};

DiscriminationReport run_discrimination(const std::vector<LabeledState>& candidates, const LoccProtocol& protocol,
                                        double tol = kTol);

struct ProductTerm {
  PureState a;  // on the A-side qubits, in listed order
  PureState b;
  Complex coefficient = 1.0;
};

struct ChenLiCertificate {
  std::vector<int> a_qubits;
  std::vector<int> b_qubits;
  std::vector<std::vector<ProductTerm>> terms;  // one list per candidate
};

struct CertificateCheck {
  bool pass = false;
  double max_reconstruction_error = 0;
  double max_cross_overlap = 0;
  std::string violation;
};

CertificateCheck check_certificate(const std::vector<LabeledState>& candidates, const ChenLiCertificate& cert,
                                   double tol = kTol);

// Expands every candidate in the product basis a_basis ⊗ b_basis.
ChenLiCertificate certificate_from_bases(const std::vector<LabeledState>& candidates, const std::vector<int>& a_qubits,
                                         const NamedBasis& a_basis, const std::vector<int>& b_qubits,
                                         const NamedBasis& b_basis, double tol = kTol);

// Conditional states <e_k|ψ_i> on the remaining qubits must be pairwise
// orthogonal for each basis vector e_k of the qubit.
bool walgate_hardy_qubit_check(const std::vector<LabeledState>& candidates, int alice_qubit, const NamedBasis& basis,
                               double tol = kTol);

}  // namespace quadent
