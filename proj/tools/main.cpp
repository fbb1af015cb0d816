#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "quadent/builtin_locc.hpp"
#include "quadent/builtin_teleport.hpp"
#include "quadent/scenario_file.hpp"
#include "quadent/suite.hpp"

namespace fs = std::filesystem;
using namespace quadent;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnmet = 1;
constexpr int kExitParse = 2;

struct Output {
  std::uint64_t seed = 42;
  double tolerance = kTol;
  std::string format = "both";
  std::string out_dir;

  RunOptions run_options() const {
    RunOptions o;
    o.seed = seed;
    o.tolerance = tolerance;
    return o;
  }

  // Files go to --out; stdout gets whatever formats were asked for.
  void emit(const std::string& stem, const Json& json, const std::string& text) const {
    const bool want_json = format != "text", want_text = format != "json";
    const std::string dumped = json.dump(2) + "\n";
    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      if (want_json) std::ofstream(fs::path(out_dir) / (stem + ".json")) << dumped;
      if (want_text) std::ofstream(fs::path(out_dir) / (stem + ".txt")) << text;
    }
    if (want_text) std::cout << text;
    if (want_text && want_json) std::cout << "\n";
    if (want_json) std::cout << dumped;
  }
};

std::string pad(const std::string& s, std::size_t w) {
  std::size_t n = 0;
  for (unsigned char ch : s) n += (ch & 0xC0) != 0x80;
  return s + std::string(w > n ? w - n : 0, ' ');
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::size_t n = 0;
      for (unsigned char ch : r[i]) n += (ch & 0xC0) != 0x80;
      if (w.size() <= i) w.push_back(0);
      w[i] = std::max(w[i], n);
    }
  std::ostringstream out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) line += i + 1 < r.size() ? pad(r[i], w[i] + 2) : r[i];
    out << line << "\n";
  }
  return out.str();
}

std::string fixed(double x, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

std::string outcome_table(const Json& report) {
  std::vector<std::vector<std::string>> rows = {{"outcome", "p", "fidelity", "correction", "residual", "printed"}};
  for (const auto& o : report.at("per_outcome")) {
    std::string label;
    for (const auto& l : o.at("labels")) label += (label.empty() ? "" : ",") + l.get<std::string>();
    std::string printed = o.at("printed_status");
    if (!o.at("printed_duplicate_of").get<std::string>().empty())
      printed += " (copy of " + o.at("printed_duplicate_of").get<std::string>() + ")";
    rows.push_back({label, fixed(o.at("max_probability"), 6), fixed(o.at("fidelity"), 12), o.at("correction"),
                    o.at("derived_residual"), printed});
  }
  return table(rows);
}

// Runs entries, prints them, returns the exit status.
int run_entries(const std::vector<ScenarioEntry>& entries, const std::string& stem, const Output& out,
                bool detail) {
  const auto opt = out.run_options();
  std::vector<EntryResult> results(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) results[i] = run_entry(entries[i], opt);

  Json j = {{"seed", out.seed}, {"tolerance", out.tolerance}, {"results", Json::array()}};
  std::vector<std::vector<std::string>> rows = {{"id", "kind", "result", "expectation"}};
  bool all_met = true;
  for (const auto& r : results) {
    j["results"].push_back({{"id", r.id}, {"kind", r.kind}, {"expectation_met", r.expectation_met}, {"report", r.report}});
    rows.push_back({r.id, r.kind, r.summary, r.expectation_met ? "met" : "UNMET"});
    all_met &= r.expectation_met;
  }
  std::string text = table(rows);
  if (detail)
    for (const auto& r : results)
      if (r.kind == "teleport") text += "\n" + r.id + "\n" + outcome_table(r.report);
  out.emit(stem, j, text);
  return all_met ? kExitOk : kExitUnmet;
}

std::vector<int> parse_senders(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      out.push_back(std::stoi(part) - 1);
    } catch (const std::exception&) {
      throw ParseError("bad sender list '" + s + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadent: teleportation, dense coding and LOCC checks on four-qubit entangled resources"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--seed", out.seed, "seed for random probe states")->capture_default_str();
  app.add_option("--tolerance", out.tolerance, "feasibility and orthogonality tolerance")->capture_default_str();
  app.add_option("--format", out.format, "json, text or both")
      ->check(CLI::IsMember({"json", "text", "both"}))
      ->capture_default_str();
  app.add_option("--out", out.out_dir, "directory for report files");

  auto* catalog = app.add_subcommand("catalog", "list or dump catalog states and bases");
  bool dump = false;
  catalog->add_flag("--dump", dump, "emit every state and basis as JSON");

  auto* teleport = app.add_subcommand("teleport", "run teleportation scenarios");
  std::vector<std::string> scenario_ids;
  std::string teleport_file;
  bool teleport_list = false;
  teleport->add_option("--scenario", scenario_ids, "built-in scenario id (repeatable)");
  teleport->add_option("--file", teleport_file, "scenario file")->check(CLI::ExistingFile);
  teleport->add_flag("--list", teleport_list, "list built-in scenarios");

  auto* densecode = app.add_subcommand("densecode", "dense-coding capacities");
  std::vector<std::string> dc_states;
  std::string dc_scenario, dc_senders, dc_file;
  bool plain_sigma2 = false;
  densecode->add_option("--state", dc_states, "catalog state (repeatable)");
  densecode->add_option("--scenario", dc_scenario, "DC1, DC2, DC3 ...; all of DC1..DC3 when omitted");
  densecode->add_option("--senders", dc_senders, "1-based sender qubits, e.g. 1,2");
  densecode->add_flag("--plain-sigma2", plain_sigma2, "encode with σ2 instead of iσ2");
  densecode->add_option("--file", dc_file, "scenario file")->check(CLI::ExistingFile);

  auto* locc = app.add_subcommand("locc", "multi-receiver LOCC discrimination");
  std::vector<std::string> locc_cases;
  std::string locc_file;
  bool locc_list = false;
  locc->add_option("--case", locc_cases, "built-in case id (repeatable)");
  locc->add_option("--file", locc_file, "scenario file")->check(CLI::ExistingFile);
  locc->add_flag("--list", locc_list, "list built-in cases and sets");

  auto* diagnose = app.add_subcommand("diagnose", "entanglement profiles");
  std::vector<std::string> diag_states;
  std::string diag_file;
  diagnose->add_option("--state", diag_states, "catalog state (repeatable); the five resources by default");
  diagnose->add_option("--file", diag_file, "scenario file")->check(CLI::ExistingFile);

  auto* suite = app.add_subcommand("paper-suite", "check every published claim");
  unsigned threads = 0;
  suite->add_option("--threads", threads, "worker threads, 0 for all cores");

  auto* run = app.add_subcommand("run", "run every entry of a scenario file");
  std::string run_file;
  run->add_option("file", run_file, "scenario file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (catalog->parsed()) {
      if (dump) {
        auto j = catalog_dump();
        if (!out.out_dir.empty()) {
          fs::create_directories(out.out_dir);
          std::ofstream(fs::path(out.out_dir) / "catalog.json") << j.dump(2) << "\n";
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
      }
      std::vector<std::vector<std::string>> rows = {{"kind", "name", "qubits", "vectors", "corrections"}};
      for (const auto& n : catalog_state_names()) {
        auto s = make_state(n);
        rows.push_back({"state", n, std::to_string(s.state.num_qubits()), "", ""});
      }
      for (const auto& n : catalog_basis_names()) {
        auto b = make_basis(n);
        rows.push_back({"basis", n, std::to_string(b.num_qubits), std::to_string(b.size()),
                        std::to_string(b.corrections.size())});
      }
      std::cout << table(rows);
      return kExitOk;
    }

    if (teleport->parsed()) {
      if (teleport_list) {
        std::vector<std::vector<std::string>> rows = {{"id", "group", "description"}};
        for (const auto& s : builtin_teleport_scenarios()) rows.push_back({s.id, s.group, s.description});
        std::cout << table(rows);
        return kExitOk;
      }
      std::vector<ScenarioEntry> entries;
      for (const auto& id : scenario_ids) entries.push_back(TeleportEntry{builtin_teleport(id)});
      if (!teleport_file.empty())
        for (auto& e : load_scenario_file(teleport_file).entries)
          if (std::holds_alternative<TeleportEntry>(e)) entries.push_back(std::move(e));
      if (entries.empty()) throw ParseError("teleport needs --scenario, --file or --list");
      return run_entries(entries, "teleport", out, true);
    }

    if (densecode->parsed()) {
      std::vector<ScenarioEntry> entries;
      if (!dc_file.empty())
        for (auto& e : load_scenario_file(dc_file).entries)
          if (std::holds_alternative<DensecodeEntry>(e)) entries.push_back(std::move(e));
      if (dc_states.empty() && dc_file.empty()) dc_states = {"GHZ4", "W4", "W_mn", "Omega", "Q4", "Q5"};
      std::vector<std::string> scenarios =
          dc_scenario.empty() ? std::vector<std::string>{"DC1", "DC2", "DC3"} : std::vector<std::string>{dc_scenario};
      for (const auto& st : dc_states)
        for (const auto& sc : scenarios) {
          DensecodeEntry d;
          d.resource = make_state(st);
          d.scenario = sc;
          d.id = st + "_" + sc;
          if (!dc_senders.empty()) d.senders = parse_senders(dc_senders);
          d.plain_sigma2 = plain_sigma2;
          entries.push_back(std::move(d));
        }
      return run_entries(entries, "densecode", out, false);
    }

    if (locc->parsed()) {
      if (locc_list) {
        std::vector<std::vector<std::string>> rows = {{"case", "set", "protocol"}};
        for (const auto& c : builtin_locc_cases()) rows.push_back({c.id, c.set, c.protocol.name});
        std::cout << table(rows) << "\nsets:";
        for (const auto& s : builtin_locc_set_ids()) std::cout << " " << s;
        std::cout << "\n";
        return kExitOk;
      }
      std::vector<ScenarioEntry> entries;
      for (const auto& id : locc_cases) {
        auto c = builtin_locc_case(id);
        LoccEntry e;
        e.id = c.id;
        e.candidates = builtin_locc_set(c.set).candidates;
        e.protocol = c.protocol;
        e.check_certificate = true;
        e.expect_success = c.expect_success;
        e.expect_inter_cbits = c.expected_inter_cbits;
        entries.push_back(std::move(e));
      }
      if (!locc_file.empty())
        for (auto& e : load_scenario_file(locc_file).entries)
          if (std::holds_alternative<LoccEntry>(e)) entries.push_back(std::move(e));
      if (entries.empty()) throw ParseError("locc needs --case, --file or --list");
      return run_entries(entries, "locc", out, false);
    }

    if (diagnose->parsed()) {
      std::vector<ScenarioEntry> entries;
      if (!diag_file.empty())
        for (auto& e : load_scenario_file(diag_file).entries)
          if (std::holds_alternative<DiagnoseEntry>(e)) entries.push_back(std::move(e));
      if (diag_states.empty() && diag_file.empty()) diag_states = {"GHZ4", "W4", "Omega", "Q4", "Q5"};
      for (const auto& st : diag_states) entries.push_back(DiagnoseEntry{st, make_state(st)});
      return run_entries(entries, "diagnose", out, false);
    }

    if (suite->parsed()) {
      auto rep = run_paper_suite(out.run_options(), threads);
      out.emit("paper_suite", to_json(rep), render_table(rep));
      return rep.ok() ? kExitOk : kExitUnmet;
    }

    if (run->parsed()) return run_entries(load_scenario_file(run_file).entries, "run", out, true);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UnknownNameError& e) {
    std::cerr << "unknown name: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnmet;
  }
  return kExitOk;
}
