#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quadent/densecode.hpp"
#include "quadent/json_io.hpp"
#include "quadent/locc.hpp"
#include "quadent/teleport.hpp"

namespace quadent {

inline constexpr int kScenarioFileVersion = 1;

struct ParseError : Error {
  using Error::Error;
};

struct TeleportEntry {
  TeleportScenario scenario;
};

struct DensecodeEntry {
  std::string id;
  NamedState resource;
  std::string scenario;                    // "DC<k>"
  std::optional<std::vector<int>> senders;  // 0-based
  bool plain_sigma2 = false;
  std::optional<int> expect_n;
};

struct LoccEntry {
  std::string id;
  std::vector<LabeledState> candidates;
  LoccProtocol protocol;
  bool check_certificate = false;  // read a certificate off the two rounds
  std::optional<bool> expect_success;
  std::optional<int> expect_inter_cbits;
};

struct DiagnoseEntry {
  std::string id;
  NamedState resource;
};

using ScenarioEntry = std::variant<TeleportEntry, DensecodeEntry, LoccEntry, DiagnoseEntry>;

struct ScenarioFile {
  int version = kScenarioFileVersion;
  std::vector<ScenarioEntry> entries;
};

// Strict: unknown keys, wrong types and unresolved names raise ParseError.
ScenarioFile parse_scenario_file(const Json& j);
ScenarioFile parse_scenario_text(const std::string& text);
ScenarioFile load_scenario_file(const std::filesystem::path& path);

std::string entry_id(const ScenarioEntry& e);
std::string entry_kind(const ScenarioEntry& e);

struct EntryResult {
  std::string id;
  std::string kind;
  Json report;
  std::string summary;      // one line
  bool expectation_met = true;
};

EntryResult run_entry(const ScenarioEntry& e, const RunOptions& opt = {});

}  // namespace quadent
