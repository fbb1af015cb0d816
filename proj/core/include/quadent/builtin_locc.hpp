#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadent/locc.hpp"

namespace quadent {

struct LoccSet {
  std::string id;
  std::string resource;
  std::vector<LabeledState> candidates;
  // published form of each candidate where the source prints one
  std::vector<std::optional<PureState>> printed;
  std::vector<std::string> notes;
};

// "ghz8", "omega4", "w4", "q5_4", "omega16"
LoccSet builtin_locc_set(std::string_view id);
std::vector<std::string> builtin_locc_set_ids();

struct LoccCase {
  std::string id;
  std::string set;
  LoccProtocol protocol;
  bool expect_success = true;
  std::optional<int> expected_inter_cbits;
};

std::vector<LoccCase> builtin_locc_cases();
LoccCase builtin_locc_case(std::string_view id);

// Chen-Li certificate read off a two-round protocol's product bases.
ChenLiCertificate certificate_for(const LoccSet& set, const LoccProtocol& protocol);

// Every two-receiver protocol built from catalog bases: each ordered split of
// the register, each catalog basis that fits each side.
std::vector<LoccProtocol> catalog_protocols(int num_qubits);

}  // namespace quadent
