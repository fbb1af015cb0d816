#include "quadent/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "quadent/gates.hpp"

namespace quadent {

namespace {

const char* const kSymbols[] = {"α", "β", "γ", "δ", "ε", "ζ", "η", "θ"};

int ceil_log2(std::size_t n) {
  int b = 0;
  while ((std::size_t{1} << b) < n) ++b;
  return b;
}

std::string fmt_coeff(Complex c) {
  std::ostringstream os;
  os << std::setprecision(4);
  if (std::abs(c.imag()) < 1e-9)
    os << c.real();
  else if (std::abs(c.real()) < 1e-9)
    os << c.imag() << "i";
  else
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
  return os.str();
}

struct Sample {
  std::size_t probe;
  Eigen::VectorXcd residual;  // normalized
  double probability;
};

struct Collected {
  std::vector<PureState> probes;
  std::size_t structured = 0;
  // keyed by basis indices so reports follow basis order
  std::map<std::vector<int>, std::pair<OutcomeKey, std::vector<Sample>>> outcomes;
  // unnormalized residuals of the span vectors, per outcome and span index
  std::map<OutcomeKey, std::vector<std::vector<Complex>>> span_raw;
  std::vector<int> receiver;
};

OutcomeKey key_of(const MeasurementPlan& plan, const std::vector<int>& idx) {
  OutcomeKey k;
  for (std::size_t s = 0; s < idx.size(); ++s) k.push_back(plan.steps()[s].basis.outcome_labels[idx[s]]);
  return k;
}

Collected collect(const NamedState& resource, const MeasurementPlan& plan, const PartyDistribution& dist,
                  const UnknownFamily& family, const RunOptions& opt) {
  Collected c;
  const int k = family.num_qubits;
  const int total = k + resource.state.num_qubits();
  dist.check(total, k);
  plan.check(total);
  c.receiver = dist.receiver_qubits();
  auto measured = plan.measured_qubits();
  std::vector<int> rest;
  for (int q = 0; q < total; ++q)
    if (!std::binary_search(measured.begin(), measured.end(), q)) rest.push_back(q);
  if (rest != c.receiver) throw Error("plan/distribution mismatch: unmeasured qubits are not exactly the receiver's");
  if (static_cast<int>(rest.size()) != k)
    throw Error("receiver holds " + std::to_string(rest.size()) + " qubits for a " + std::to_string(k) + "-qubit family");
  for (const auto& step : plan.steps()) {
    const Party& owner = dist.owner_of(step.targets.front());
    for (int t : step.targets)
      if (dist.owner_of(t).name != owner.name) throw Error("plan/distribution mismatch: a step spans two parties");
    if (owner.name == dist.receiver) throw Error("plan/distribution mismatch: receiver measures");
  }

  c.probes = probe_states(family, opt.seed, opt.random_probes);
  c.structured = structured_probe_count(family);
  const std::size_t ns = family.span.size();
  for (std::size_t p = 0; p < c.probes.size(); ++p) {
    PureState joint = tensor(c.probes[p], resource.state);
    for (auto& raw : enumerate_raw(joint, plan)) {
      double pr = 0;
      for (auto a : raw.amps) pr += std::norm(a);
      if (pr < kBranchDrop) continue;
      OutcomeKey key = key_of(plan, raw.indices);
      if (p < ns) {
        auto& cols = c.span_raw[key];
        cols.resize(ns, std::vector<Complex>(raw.amps.size()));
        cols[p] = raw.amps;
      }
      Eigen::VectorXcd r(static_cast<Eigen::Index>(raw.amps.size()));
      for (std::size_t i = 0; i < raw.amps.size(); ++i) r(static_cast<Eigen::Index>(i)) = raw.amps[i] / std::sqrt(pr);
      auto& slot = c.outcomes[raw.indices];
      slot.first = key;
      slot.second.push_back({p, std::move(r), pr});
    }
  }
  return c;
}

Eigen::VectorXcd to_eigen(const PureState& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s.amplitude(i);
  return v;
}

double outcome_fidelity(const Eigen::MatrixXcd& u, const std::vector<Sample>& samples,
                        const std::vector<Eigen::VectorXcd>& targets, double stop_below = -1) {
  double worst = 1.0;
  for (const auto& s : samples) {
    double f = std::norm(targets[s.probe].dot(u * s.residual));
    worst = std::min(worst, f);
    if (worst < stop_below) break;
  }
  return std::min(worst, 1.0);
}

SynthesisResult synthesize_from(const Collected& c, int m, AllowedOps ops, double tol) {
  SynthesisResult res;
  res.table.ops = ops;
  auto cands = correction_candidates(m, ops);
  std::vector<Eigen::MatrixXcd> mats;
  mats.reserve(cands.size());
  for (const auto& cd : cands) mats.push_back(cd.unitary().matrix());
  std::vector<Eigen::VectorXcd> targets;
  for (const auto& p : c.probes) targets.push_back(to_eigen(p));

  res.feasible = true;
  res.worst = 1.0;
  for (const auto& [idx, entry] : c.outcomes) {
    const auto& [key, samples] = entry;
    double best = -1;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      double f = outcome_fidelity(mats[i], samples, targets, best);
      if (f > best + 1e-12) {
        best = f;
        best_i = i;
      }
      if (best >= 1 - tol) break;
    }
    res.table.entries[key] = cands[best_i];
    res.best_fidelity[key] = best;
    res.worst = std::min(res.worst, best);
    if (best < 1 - tol) res.feasible = false;
  }
  return res;
}

int cost_from(const TeleportScenario& s, const CorrectionTable& table, const std::vector<OutcomeKey>& reachable) {
  const auto& steps = s.plan.steps();
  const auto& dist = s.distribution;
  const std::string primary = dist.owner_of(0).name;

  // correction classes up to phase
  std::vector<LocalUnitary> classes;
  std::map<OutcomeKey, int> class_of;
  for (const auto& key : reachable) {
    LocalUnitary u = table.entries.at(key).unitary();
    int id = -1;
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (classes[i].equivalent_up_to_phase(u)) id = static_cast<int>(i);
    if (id < 0) {
      id = static_cast<int>(classes.size());
      classes.push_back(u);
    }
    class_of[key] = id;
  }
  int cost = ceil_log2(classes.size());

  std::vector<std::string> others;
  for (const auto& st : steps) {
    const std::string& name = dist.owner_of(st.targets.front()).name;
    if (name != primary && std::find(others.begin(), others.end(), name) == others.end()) others.push_back(name);
  }
  // A relaying party only has to tell apart outcomes that change Bob's correction.
  for (const auto& name : others) {
    std::map<OutcomeKey, std::map<OutcomeKey, int>> signature;
    for (const auto& key : reachable) {
      OutcomeKey mine, theirs;
      for (std::size_t i = 0; i < steps.size(); ++i)
        (dist.owner_of(steps[i].targets.front()).name == name ? mine : theirs).push_back(key[i]);
      signature[mine][theirs] = class_of[key];
    }
    std::set<std::map<OutcomeKey, int>> distinct;
    for (const auto& [mine, sig] : signature) distinct.insert(sig);
    cost += ceil_log2(distinct.size());
  }
  return cost;
}

std::vector<Complex> derived_matrix(const Collected& c, const OutcomeKey& key, std::size_t rows, std::size_t cols) {
  std::vector<Complex> m(rows * cols);
  auto it = c.span_raw.find(key);
  if (it == c.span_raw.end()) return m;
  for (std::size_t j = 0; j < cols && j < it->second.size(); ++j)
    for (std::size_t r = 0; r < rows && r < it->second[j].size(); ++r) m[r * cols + j] = it->second[j][r];
  return m;
}

double matrix_overlap(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s = 0;
  double na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += std::conj(a[i]) * b[i];
    na += std::norm(a[i]);
    nb += std::norm(b[i]);
  }
  if (na < 1e-300 || nb < 1e-300) return 0;
  return std::abs(s) / std::sqrt(na * nb);
}

}  // namespace

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::Arbitrary:
      return "arbitrary";
    case FamilyKind::GhzSubclass:
      return "ghz_subclass";
    case FamilyKind::OmegaSubclass:
      return "omega_subclass";
    case FamilyKind::WSubclass:
      return "w_subclass";
    case FamilyKind::Custom:
      return "custom";
  }
  return "?";
}

FamilyKind family_kind_from_string(std::string_view s) {
  for (auto k : {FamilyKind::Arbitrary, FamilyKind::GhzSubclass, FamilyKind::OmegaSubclass, FamilyKind::WSubclass,
                 FamilyKind::Custom})
    if (to_string(k) == s) return k;
  throw UnknownNameError("unknown family kind '" + std::string(s) + "'");
}

UnknownFamily arbitrary_family(int k) {
  if (k < 1 || k > 3) throw ConstraintError("unknown-state qubit count must be 1, 2 or 3");
  UnknownFamily f{k, FamilyKind::Arbitrary, {}, {}};
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << k); ++i) f.span.push_back(PureState::basis(k, i));
  return f;
}

UnknownFamily ghz_subclass(int k, std::vector<int> dressing) {
  if (k < 2 || k > 3) throw ConstraintError("GHZ subclass is defined for 2 or 3 qubits");
  if (dressing.empty()) dressing.assign(k, 0);
  if (static_cast<int>(dressing.size()) != k) throw ConstraintError("dressing needs one Pauli per qubit");
  auto u = gates::pauli_string(dressing);
  std::vector<int> all(k);
  for (int i = 0; i < k; ++i) all[i] = i;
  UnknownFamily f{k, FamilyKind::GhzSubclass, dressing, {}};
  f.span.push_back(apply_local(PureState::basis(k, 0), u, std::span<const int>(all)));
  f.span.push_back(apply_local(PureState::basis(k, (std::uint64_t{1} << k) - 1), u, std::span<const int>(all)));
  return f;
}

UnknownFamily omega_subclass(std::vector<int> dressing) {
  if (dressing.empty()) dressing = {0, 0};
  if (dressing.size() != 2) throw ConstraintError("Ω subclass dressing is (σi on a, σj on c)");
  auto u = gates::pauli_string({dressing[0], 0, dressing[1]});
  UnknownFamily f{3, FamilyKind::OmegaSubclass, dressing, {}};
  f.span.push_back(apply_local(PureState::from_kets({{"000", 1}, {"110", 1}}), u, {0, 1, 2}));
  f.span.push_back(apply_local(PureState::from_kets({{"001", 1}, {"111", -1}}), u, {0, 1, 2}));
  return f;
}

UnknownFamily w_subclass() {
  UnknownFamily f{3, FamilyKind::WSubclass, {}, {}};
  f.span.push_back(PureState::from_kets({{"001", 1}, {"010", 1}, {"100", 1}, {"000", 1}}));
  return f;
}

UnknownFamily custom_family(std::vector<PureState> span) {
  if (span.empty()) throw ConstraintError("custom family needs at least one state");
  int k = span.front().num_qubits();
  if (k < 1 || k > 3) throw ConstraintError("unknown-state qubit count must be 1, 2 or 3");
  std::vector<PureState> ortho;
  for (const auto& v : span) {
    if (v.num_qubits() != k) throw DimensionError("custom family states of mixed size");
    std::vector<Complex> w(v.amplitudes().begin(), v.amplitudes().end());
    for (const auto& o : ortho) {
      Complex c = inner(o, v);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * o.amplitude(i);
    }
    double nrm = 0;
    for (auto a : w) nrm += std::norm(a);
    if (std::sqrt(nrm) < 1e-9) continue;
    ortho.push_back(PureState::normalized(k, std::move(w)));
  }
  return UnknownFamily{k, FamilyKind::Custom, {}, std::move(ortho)};
}

std::size_t structured_probe_count(const UnknownFamily& family) {
  std::size_t d = family.span.size();
  return d + d * (d - 1);
}

std::vector<PureState> probe_states(const UnknownFamily& family, std::uint64_t seed, int random_count) {
  const auto& s = family.span;
  const int k = family.num_qubits;
  const double r = 1 / std::sqrt(2.0);
  std::vector<PureState> out(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      for (Complex ph : {Complex(1, 0), Complex(0, 1)}) {
        std::vector<Complex> a(s[i].dim());
        for (std::size_t t = 0; t < a.size(); ++t) a[t] = r * (s[i].amplitude(t) + ph * s[j].amplitude(t));
        out.push_back(PureState::normalized(k, std::move(a)));
      }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int n = 0; n < random_count; ++n) {
    std::vector<Complex> a(s.front().dim());
    for (const auto& v : s) {
      Complex c(g(rng), g(rng));
      for (std::size_t t = 0; t < a.size(); ++t) a[t] += c * v.amplitude(t);
    }
    out.push_back(PureState::normalized(k, std::move(a)));
  }
  return out;
}

std::string qubit_name(int index, int unknown_count) {
  if (index < unknown_count) return std::string(1, static_cast<char>('a' + index));
  return std::to_string(index - unknown_count + 1);
}

int qubit_index(std::string_view name, int unknown_count, int resource_count) {
  if (name.size() == 1 && name[0] >= 'a' && name[0] < 'a' + unknown_count) return name[0] - 'a';
  int r = 0;
  for (char ch : name) {
    if (ch < '0' || ch > '9') throw UnknownNameError("bad qubit name '" + std::string(name) + "'");
    r = r * 10 + (ch - '0');
  }
  if (name.empty() || r < 1 || r > resource_count) throw UnknownNameError("bad qubit name '" + std::string(name) + "'");
  return unknown_count + r - 1;
}

const Party& PartyDistribution::party(std::string_view name) const {
  for (const auto& p : parties)
    if (p.name == name) return p;
  throw UnknownNameError("no party '" + std::string(name) + "'");
}

const Party& PartyDistribution::owner_of(int qubit) const {
  for (const auto& p : parties)
    if (std::find(p.qubits.begin(), p.qubits.end(), qubit) != p.qubits.end()) return p;
  throw Error("qubit " + std::to_string(qubit) + " has no owner");
}

std::vector<int> PartyDistribution::receiver_qubits() const {
  auto q = party(receiver).qubits;
  std::sort(q.begin(), q.end());
  return q;
}

void PartyDistribution::check(int total, int unknown_count) const {
  std::vector<int> seen(total, 0);
  for (const auto& p : parties)
    for (int q : p.qubits) {
      if (q < 0 || q >= total) throw DimensionError("party " + p.name + " owns a qubit outside the register");
      if (seen[q]++) throw Error("qubit " + std::to_string(q) + " owned twice");
    }
  for (int q = 0; q < total; ++q)
    if (!seen[q]) throw Error("qubit " + qubit_name(q, unknown_count) + " has no owner");
  auto r = receiver_qubits();
  if (r.empty() || r.front() < unknown_count) throw Error("receiver must own resource qubits only");
}

std::string to_string(AllowedOps ops) {
  switch (ops) {
    case AllowedOps::Paulis:
      return "paulis";
    case AllowedOps::PaulisCZ:
      return "paulis+cz";
    case AllowedOps::PaulisJointDiagonal:
      return "paulis+joint-diagonal";
  }
  return "?";
}

AllowedOps allowed_ops_from_string(std::string_view s) {
  for (auto o : {AllowedOps::Paulis, AllowedOps::PaulisCZ, AllowedOps::PaulisJointDiagonal})
    if (to_string(o) == s) return o;
  throw UnknownNameError("unknown op set '" + std::string(s) + "'");
}

LocalUnitary Correction::unitary() const {
  const int m = static_cast<int>(paulis.size());
  LocalUnitary p = gates::pauli_string(paulis);
  switch (joint) {
    case Joint::None:
      return p;
    case Joint::CZ:
      return p * gates::cz(m, cz_a, cz_b);
    case Joint::PhaseFlip:
      return p * gates::phase_flip(m, flip_label);
  }
  return p;
}

std::string Correction::describe() const {
  std::string w = gates::pauli_word(paulis);
  switch (joint) {
    case Joint::None:
      return w;
    case Joint::CZ:
      return "CZ(" + std::to_string(cz_a) + "," + std::to_string(cz_b) + ") then " + w;
    case Joint::PhaseFlip:
      return "D(" + basis_label(flip_label, static_cast<int>(paulis.size())) + ") then " + w;
  }
  return w;
}

std::vector<Correction> correction_candidates(int m, AllowedOps ops) {
  std::vector<Correction> out;
  const std::size_t words = std::size_t{1} << (2 * m);
  for (std::size_t w = 0; w < words; ++w) {
    std::vector<int> codes(m);
    for (int i = 0; i < m; ++i) codes[i] = static_cast<int>((w >> (2 * (m - 1 - i))) & 3);
    out.push_back({codes, Correction::Joint::None, 0, 0, 0});
    if (ops == AllowedOps::PaulisCZ)
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) out.push_back({codes, Correction::Joint::CZ, a, b, 0});
    if (ops == AllowedOps::PaulisJointDiagonal)
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x)
        out.push_back({codes, Correction::Joint::PhaseFlip, 0, 0, x});
  }
  return out;
}

std::string render_residual(const std::vector<Complex>& m, int rows, int cols) {
  const int nq = [&] {
    int q = 0;
    while ((1 << q) < rows) ++q;
    return q;
  }();
  Complex pivot = 0;
  for (int j = 0; j < cols && pivot == Complex(0); ++j)
    for (int r = 0; r < rows; ++r)
      if (std::abs(m[r * cols + j]) > 1e-9) {
        pivot = m[r * cols + j];
        break;
      }
  if (pivot == Complex(0)) return "0";
  std::string s;
  for (int j = 0; j < cols; ++j)
    for (int r = 0; r < rows; ++r) {
      Complex c = m[r * cols + j] / pivot;
      if (std::abs(c) < 1e-9) continue;
      bool neg = std::abs(c.imag()) < 1e-9 && c.real() < 0;
      if (neg) c = -c;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      if (std::abs(c - Complex(1)) > 1e-9) s += fmt_coeff(c);
      s += std::string(j < 8 ? kSymbols[j] : "?") + "|" + basis_label(static_cast<std::uint64_t>(r), nq) + ">";
    }
  return s;
}

SynthesisResult synthesize_corrections(const NamedState& resource, const MeasurementPlan& plan,
                                       const PartyDistribution& distribution, const UnknownFamily& family,
                                       AllowedOps ops, const RunOptions& opt) {
  Collected c = collect(resource, plan, distribution, family, opt);
  return synthesize_from(c, static_cast<int>(c.receiver.size()), ops, opt.tolerance);
}

SynthesisResult synthesize_corrections(const TeleportScenario& s, const RunOptions& opt) {
  return synthesize_corrections(s.resource, s.plan, s.distribution, s.family, s.allowed_ops, opt);
}

TeleportReport run_scenario(const TeleportScenario& s, const RunOptions& opt) {
  Collected c = collect(s.resource, s.plan, s.distribution, s.family, opt);
  const int m = static_cast<int>(c.receiver.size());
  TeleportReport rep;
  rep.scenario_id = s.id;

  CorrectionTable table;
  if (s.corrections) {
    table = *s.corrections;
  } else {
    table = synthesize_from(c, m, s.allowed_ops, opt.tolerance).table;
    rep.synthesized = true;
  }

  std::vector<Eigen::VectorXcd> targets;
  for (const auto& p : c.probes) targets.push_back(to_eigen(p));

  std::vector<OutcomeKey> reachable;
  double pmin = 1, pmax = 0;
  rep.worst_fidelity = rep.worst_structured = rep.worst_random = 1.0;
  const std::size_t rows = std::size_t{1} << m, cols = s.family.span.size();

  std::map<OutcomeKey, std::vector<Complex>> printed;
  for (const auto& pr : s.printed_residuals) {
    if (pr.matrix.size() != rows * cols) throw DimensionError("printed residual matrix has the wrong size");
    printed[pr.outcome] = pr.matrix;
  }

  for (const auto& [idx, entry] : c.outcomes) {
    const auto& [key, samples] = entry;
    auto it = table.entries.find(key);
    if (it == table.entries.end()) {
      std::string k;
      for (const auto& l : key) k += (k.empty() ? "" : ",") + l;
      throw Error("missing correction entry for outcome (" + k + ")");
    }
    reachable.push_back(key);
    Eigen::MatrixXcd u = it->second.unitary().matrix();
    OutcomeReport o;
    o.labels = key;
    o.correction = it->second.describe();
    o.min_probability = 1;
    o.fidelity = 1;
    for (const auto& smp : samples) {
      double f = std::min(1.0, std::norm(targets[smp.probe].dot(u * smp.residual)));
      o.fidelity = std::min(o.fidelity, f);
      (smp.probe < c.structured ? rep.worst_structured : rep.worst_random) =
          std::min(smp.probe < c.structured ? rep.worst_structured : rep.worst_random, f);
      o.min_probability = std::min(o.min_probability, smp.probability);
      o.max_probability = std::max(o.max_probability, smp.probability);
    }
    pmin = std::min(pmin, o.min_probability);
    pmax = std::max(pmax, o.max_probability);
    rep.worst_fidelity = std::min(rep.worst_fidelity, o.fidelity);
    bool perp = std::any_of(key.begin(), key.end(), [](const std::string& l) { return l.rfind(kPerpPrefix, 0) == 0; });
    if (perp && o.max_probability > kTol) rep.perp_flag = true;

    auto dm = derived_matrix(c, key, rows, cols);
    o.derived_residual = render_residual(dm, static_cast<int>(rows), static_cast<int>(cols));
    if (auto p = printed.find(key); p != printed.end()) {
      o.printed_residual = render_residual(p->second, static_cast<int>(rows), static_cast<int>(cols));
      o.printed_status = matrix_overlap(p->second, dm) > 1 - 1e-9 ? "agrees" : "disagrees";
      for (const auto& [other, om] : printed)
        if (other != key && matrix_overlap(om, p->second) > 1 - 1e-9) {
          for (const auto& l : other) o.printed_duplicate_of += (o.printed_duplicate_of.empty() ? "" : ",") + l;
          break;
        }
    }
    rep.per_outcome.push_back(std::move(o));
  }
  rep.branch_count = static_cast<int>(reachable.size());
  rep.feasible = rep.worst_fidelity > 1 - opt.tolerance;
  rep.outcome_uniform = pmax - pmin <= opt.tolerance;
  bool structured_ok = rep.worst_structured > 1 - opt.tolerance;
  bool random_ok = rep.worst_random > 1 - opt.tolerance;
  rep.linearity_certified = !structured_ok || random_ok;
  rep.cost_cbits = cost_from(s, table, reachable);
  return rep;
}

int classical_cost(const TeleportScenario& s, const RunOptions& opt) { return run_scenario(s, opt).cost_cbits; }

}  // namespace quadent
