#include "quadent/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "quadent/gates.hpp"

namespace quadent {

namespace {

using KetList = std::vector<std::pair<std::string, Complex>>;

const double kR3 = std::sqrt(3.0);

PureState kets(const KetList& k) { return PureState::from_kets(k); }

PureState pm(const std::string& a, const std::string& b, int sign) { return kets({{a, 1.0}, {b, double(sign)}}); }

void add_pm_pairs(NamedBasis& b, const std::string& stem, const std::vector<std::pair<std::string, std::string>>& pairs,
                  int first_index = 1) {
  int i = first_index;
  for (const auto& [x, y] : pairs) {
    for (int s : {1, -1}) {
      b.vectors.push_back(pm(x, y, s));
      b.outcome_labels.push_back(stem + std::to_string(i) + (s > 0 ? "+" : "-"));
    }
    ++i;
  }
}

NamedBasis start(std::string name, int k) {
  NamedBasis b;
  b.name = std::move(name);
  b.num_qubits = k;
  return b;
}

double param(const StateParams& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

PureState ghz(int n) {
  if (n < 2 || n > kMaxQubits) throw ConstraintError("GHZ:n needs 2 <= n <= 12");
  return kets({{std::string(n, '0'), 1.0}, {std::string(n, '1'), 1.0}});
}

PureState w_state(int n) {
  if (n < 2 || n > kMaxQubits) throw ConstraintError("W:n needs 2 <= n <= 12");
  KetList k;
  for (int q = 0; q < n; ++q) {
    std::string s(n, '0');
    s[q] = '1';
    k.emplace_back(s, 1.0);
  }
  return kets(k);
}

PureState bell(std::string_view which) {
  if (which == "phi+") return pm("00", "11", 1);
  if (which == "phi-") return pm("00", "11", -1);
  if (which == "psi+") return pm("01", "10", 1);
  if (which == "psi-") return pm("01", "10", -1);
  throw UnknownNameError("unknown Bell state '" + std::string(which) + "'");
}

// |x>|y> with x, y given as states, concatenated in order.
PureState cat(const PureState& a, const PureState& b) { return tensor(a, b); }

PureState dress(const PureState& v, const std::vector<int>& codes, const std::vector<int>& positions) {
  if (codes.empty()) return v;
  return apply_local(v, gates::pauli_string(codes), std::span<const int>(positions));
}

std::vector<int> parse_dressing(std::string_view s) {
  std::vector<int> out;
  std::stringstream ss{std::string(s)};
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.size() != 1 || tok[0] < '0' || tok[0] > '3') throw UnknownNameError("bad Pauli dressing '" + std::string(s) + "'");
    out.push_back(tok[0] - '0');
  }
  return out;
}

// ---- published forms of the repaired bases -------------------------------

PureState omega16_printed(int i) {
  static const std::vector<KetList> rows = {
      {{"0000", 1}, {"0110", 1}, {"1001", 1}, {"1111", -1}},
      {{"0000", 1}, {"0110", 1}, {"1001", -1}, {"1111", 1}},
      {{"0000", 1}, {"0110", -1}, {"1001", 1}, {"1111", 1}},
      {{"0000", 1}, {"0110", -1}, {"1001", -1}, {"1111", -1}},
      {{"0001", 1}, {"0111", 1}, {"1000", 1}, {"1110", -1}},
      {{"0001", 1}, {"0111", 1}, {"1000", -1}, {"1110", 1}},
      {{"0001", 1}, {"0111", -1}, {"1000", 1}, {"1110", 1}},
      {{"0001", 1}, {"0111", -1}, {"1000", -1}, {"1110", -1}},
      {{"0010", 1}, {"0100", 1}, {"1011", 1}, {"1101", -1}},
      {{"0010", 1}, {"0100", 1}, {"1011", -1}, {"1101", 1}},
      {{"0010", 1}, {"0100", -1}, {"1011", 1}, {"1101", 1}},
      {{"0010", 1}, {"0100", -1}, {"1011", -1}, {"1101", -1}},
      {{"0011", 1}, {"0101", 1}, {"1010", -1}, {"1100", 1}},
      {{"0011", 1}, {"0101", 1}, {"1010", 1}, {"1100", -1}},
      {{"0011", 1}, {"0101", 1}, {"1010", -1}, {"1100", 1}},
      {{"0011", 1}, {"0101", -1}, {"1010", -1}, {"1100", -1}},
  };
  return kets(rows.at(i));
}

struct PlusMinusSpec {
  std::vector<std::string> left, right;  // (left) ± (right), unit weights
};

PureState from_spec(const PlusMinusSpec& s, int sign) {
  KetList k;
  for (const auto& l : s.left) k.emplace_back(l, 1.0);
  for (const auto& r : s.right) k.emplace_back(r, double(sign));
  return kets(k);
}

// Published rho and tau vectors, and the published grouping of ψ_a ⊗ Q4 on
// (a,1,3,4 | 2) that they were read from.
const std::vector<PlusMinusSpec> kRhoPrinted = {{{"0000", "0100"}, {"1001", "1011"}}, {{"0001", "0011"}, {"1001", "1100"}}};
const std::vector<PlusMinusSpec> kTauPrinted = {
    {{"0000"}, {"1001"}}, {{"0001"}, {"1000"}}, {{"0100"}, {"1011"}}, {{"0011"}, {"1100"}}};
const std::vector<std::pair<std::string, char>> kQ4PublishedGrouping = {
    {"0000", '0'}, {"0001", '1'}, {"0100", '0'}, {"0011", '1'}, {"1000", '0'}, {"1001", '1'}, {"1100", '0'}, {"1011", '1'}};

// Regroup ψ_a ⊗ Q4 on (a,1,3,4 | 2) directly from the resource amplitudes.
std::vector<std::pair<std::string, char>> q4_derived_grouping() {
  const PureState q4 = make_state("Q4").state;
  std::vector<std::pair<std::string, char>> out;
  for (char a : {'0', '1'}) {
    for (std::uint64_t i = 0; i < q4.dim(); ++i) {
      if (std::abs(q4.amplitude(i)) < kTol) continue;
      std::string l = basis_label(i, 4);
      out.emplace_back(std::string{a, l[0], l[2], l[3]}, l[1]);
    }
  }
  return out;
}

// Labels that appear in the published grouping but not in the re-derived
// one, matched to their replacements by (a-bit, Bob-bit).
std::map<std::string, std::string> q4_relabel_map(std::vector<std::string>& trace) {
  auto derived = q4_derived_grouping();
  std::set<std::pair<std::string, char>> pub(kQ4PublishedGrouping.begin(), kQ4PublishedGrouping.end());
  std::set<std::pair<std::string, char>> der(derived.begin(), derived.end());
  std::vector<std::pair<std::string, char>> only_pub, only_der;
  std::set_difference(pub.begin(), pub.end(), der.begin(), der.end(), std::back_inserter(only_pub));
  std::set_difference(der.begin(), der.end(), pub.begin(), pub.end(), std::back_inserter(only_der));
  std::map<std::string, std::string> m;
  for (const auto& p : only_pub) {
    std::vector<std::string> matches;
    for (const auto& d : only_der)
      if (d.second == p.second && d.first[0] == p.first[0]) matches.push_back(d.first);
    if (matches.size() != 1) throw Error("Q4 regrouping diff is ambiguous for " + p.first);
    m[p.first] = matches.front();
    trace.push_back("published term |" + p.first + ">_{a134}|" + p.second + ">_2 is absent from the expansion of ψ_a⊗Q4; the expansion has |" +
                    matches.front() + ">_{a134}|" + p.second + ">_2");
  }
  return m;
}

std::string relabel(const std::string& l, const std::map<std::string, std::string>& m) {
  auto it = m.find(l);
  return it == m.end() ? l : it->second;
}

bool orthonormal(const std::vector<PureState>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (std::abs(inner(v[i], v[j])) > kNormTol) return false;
  return true;
}

std::string spec_string(const PlusMinusSpec& s, const char* sign) {
  auto join = [](const std::vector<std::string>& v) {
    std::string o;
    for (std::size_t i = 0; i < v.size(); ++i) o += (i ? "+|" : "|") + v[i] + ">";
    return o;
  };
  return "(" + join(s.left) + ")" + sign + "(" + join(s.right) + ")";
}

// Builds rho_Q4 or tau_Q4. Published labels are first relabelled by the
// regrouping diff; any vector still overlapping an earlier one gets its
// colliding ket replaced, searching the derived support for a unique fix.
NamedBasis q4_repaired(const std::string& name, const std::string& stem, const std::vector<PlusMinusSpec>& printed) {
  NamedBasis b = start(name, 4);
  std::vector<std::string> relabel_trace;
  auto map = q4_relabel_map(relabel_trace);

  std::vector<PlusMinusSpec> fixed = printed;
  for (auto& s : fixed) {
    for (auto& l : s.left) l = relabel(l, map);
    for (auto& l : s.right) l = relabel(l, map);
  }

  std::set<std::string> support;
  for (const auto& [l, bob] : q4_derived_grouping()) support.insert(l);

  std::vector<std::vector<std::string>> subst_trace(fixed.size());
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    std::vector<PureState> earlier;
    for (std::size_t j = 0; j < i; ++j)
      for (int s : {1, -1}) earlier.push_back(from_spec(fixed[j], s));
    auto ok_with = [&](const PlusMinusSpec& cand) {
      auto all = earlier;
      for (int s : {1, -1}) all.push_back(from_spec(cand, s));
      return orthonormal(all);
    };
    if (ok_with(fixed[i])) continue;
    std::set<std::string> used;
    for (std::size_t j = 0; j < fixed.size(); ++j)
      for (const auto* side : {&fixed[j].left, &fixed[j].right}) used.insert(side->begin(), side->end());
    std::vector<std::pair<std::string, std::string>> fixes;
    std::vector<PlusMinusSpec> fixed_specs;
    for (auto* side : {&fixed[i].left, &fixed[i].right}) {
      for (auto& ket : *side) {
        for (const auto& cand : support) {
          if (used.count(cand)) continue;
          PlusMinusSpec trial = fixed[i];
          auto& tside = side == &fixed[i].left ? trial.left : trial.right;
          *std::find(tside.begin(), tside.end(), ket) = cand;
          if (ok_with(trial)) {
            fixes.emplace_back(ket, cand);
            fixed_specs.push_back(trial);
          }
        }
      }
    }
    auto& tr = subst_trace[i];
    tr.push_back(stem + std::to_string(i + 1) + "± after relabel, " + spec_string(fixed[i], "±") +
                 ", overlaps an earlier vector");
    for (const auto& [from, to] : fixes) tr.push_back("candidate |" + from + "> -> |" + to + "> restores orthonormality");
    if (fixes.size() != 1) throw Error(name + ": single-ket repair is not unique");
    tr.push_back("unique repair |" + fixes[0].first + "> -> |" + fixes[0].second + ">");
    fixed[i] = fixed_specs[0];
  }

  for (std::size_t i = 0; i < fixed.size(); ++i) {
    for (int s : {1, -1}) {
      std::string label = stem + std::to_string(i + 1) + (s > 0 ? "+" : "-");
      PureState corrected = from_spec(fixed[i], s);
      PureState published = from_spec(printed[i], s);
      b.vectors.push_back(corrected);
      b.outcome_labels.push_back(label);
      if (fidelity_phase_invariant(corrected, published) > 1 - kNormTol) continue;
      BasisCorrection c{label, published, corrected, subst_trace[i].empty() ? "support relabel" : "support relabel + single-ket substitution",
                        {}, true};
      c.certificate.push_back("published: " + spec_string(printed[i], s > 0 ? "+" : "-"));
      for (const auto& l : relabel_trace) c.certificate.push_back(l);
      for (const auto& l : subst_trace[i]) c.certificate.push_back(l);
      c.certificate.push_back("corrected: " + spec_string(fixed[i], s > 0 ? "+" : "-"));
      b.corrections.push_back(std::move(c));
    }
  }
  return b;
}

NamedBasis build(std::string_view name, const std::vector<int>& dressing) {
  if (name == "bell") {
    NamedBasis b = start("bell", 2);
    for (const char* w : {"phi+", "phi-", "psi+", "psi-"}) {
      b.vectors.push_back(bell(w));
      b.outcome_labels.push_back(w);
    }
    return b;
  }
  if (name == "plus_minus") {
    NamedBasis b = start("plus_minus", 1);
    add_pm_pairs(b, "", {{"0", "1"}});
    b.outcome_labels = {"+", "-"};
    return b;
  }
  if (name == "ghz4_full") {
    NamedBasis b = start("ghz4_full", 4);
    add_pm_pairs(b, "4GHZ", {{"0000", "1111"}, {"0111", "1000"}, {"0011", "1100"}, {"0100", "1011"}});
    return b;
  }
  if (name == "ghz3_full") {
    NamedBasis b = start("ghz3_full", 3);
    add_pm_pairs(b, "3GHZ", {{"000", "111"}, {"011", "100"}, {"001", "110"}, {"010", "101"}});
    return b;
  }
  if (name == "omega_meas") {
    NamedBasis b = start("omega_meas", 4);
    const double r = 1 / std::sqrt(2.0);
    auto e = [](const char* s) { return PureState::from_label(s); };
    PureState p = bell("phi+"), m = bell("phi-");
    for (int s : {1, -1}) {
      std::vector<Complex> a(16);
      auto x = cat(e("00"), p), y = cat(e("11"), m);
      for (int i = 0; i < 16; ++i) a[i] = r * (x.amplitude(i) + double(s) * y.amplitude(i));
      b.vectors.push_back(PureState::normalized(4, a));
      b.outcome_labels.push_back(s > 0 ? "Ω1+" : "Ω1-");
    }
    for (int s : {1, -1}) {
      std::vector<Complex> a(16);
      auto x = cat(e("01"), m), y = cat(e("10"), p);
      for (int i = 0; i < 16; ++i) a[i] = r * (x.amplitude(i) + double(s) * y.amplitude(i));
      b.vectors.push_back(PureState::normalized(4, a));
      b.outcome_labels.push_back(s > 0 ? "Ω2+" : "Ω2-");
    }
    return b;
  }
  if (name == "eta_zeta_W11" || name == "eta_zeta_Q4") {
    bool w = name == "eta_zeta_W11";
    NamedBasis b = start(std::string(name), 4);
    std::vector<std::string> eta = w ? std::vector<std::string>{"0100", "0010", "0001"}
                                     : std::vector<std::string>{"0000", "0100", "0111"};
    std::vector<std::string> zeta = w ? std::vector<std::string>{"1100", "1010", "1001"}
                                      : std::vector<std::string>{"1000", "1100", "1111"};
    std::string eta_x = w ? "1000" : "1010", zeta_x = w ? "0000" : "0010";
    for (auto [terms, extra, stem] : {std::tuple{eta, eta_x, "η"}, std::tuple{zeta, zeta_x, "ζ"}}) {
      for (int s : {1, -1}) {
        KetList k;
        for (const auto& t : terms) k.emplace_back(t, 1.0);
        k.emplace_back(extra, s * kR3);
        b.vectors.push_back(kets(k));
        b.outcome_labels.push_back(std::string(stem) + (s > 0 ? "+" : "-"));
      }
    }
    return b;
  }
  if (name == "rho_Q4") return q4_repaired("rho_Q4", "ρ", kRhoPrinted);
  if (name == "tau_Q4") return q4_repaired("tau_Q4", "τ", kTauPrinted);
  if (name == "varphi_Q5") {
    NamedBasis b = start("varphi_Q5", 4);
    std::vector<PlusMinusSpec> rows = {{{"0000", "0111"}, {"1101", "1110"}}, {{"0101", "0110"}, {"1000", "1111"}}};
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (int s : {1, -1}) {
        b.vectors.push_back(from_spec(rows[i], s));
        b.outcome_labels.push_back("φ" + std::to_string(i + 1) + (s > 0 ? "+" : "-"));
      }
    return b;
  }
  if (name == "xi_Q5") {
    NamedBasis b = start("xi_Q5", 4);
    add_pm_pairs(b, "ξ", {{"0000", "1101"}, {"0111", "1110"}, {"0101", "1000"}, {"0110", "1111"}});
    return b;
  }
  if (name == "omega3_Q5") {
    NamedBasis b = start("omega3_Q5", 3);
    add_pm_pairs(b, "ω", {{"000", "101"}, {"001", "100"}, {"010", "111"}, {"011", "110"}});
    return b;
  }
  if (name == "omega16") {
    NamedBasis b = start("omega16", 4);
    for (int i = 0; i < 16; ++i) {
      b.vectors.push_back(omega16_printed(i));
      b.outcome_labels.push_back("Ω_" + std::to_string(i + 1));
    }
    BasisCorrection c = derive_omega15_correction();
    b.vectors[14] = c.as_corrected;
    b.corrections.push_back(std::move(c));
    return b;
  }
  if (name == "pi_2q") {
    std::vector<int> d = dressing.empty() ? std::vector<int>{0, 0} : dressing;
    if (d.size() != 2) throw UnknownNameError("pi_2q takes a dressing of two Pauli codes");
    NamedBasis b = start("pi_2q:" + std::to_string(d[0]) + "," + std::to_string(d[1]), 4);
    int i = 1;
    for (auto [x, y] : {std::pair{"0000", "1111"}, std::pair{"0011", "1100"}}) {
      for (int s : {1, -1}) {
        b.vectors.push_back(dress(pm(x, y, s), d, {0, 1}));
        b.outcome_labels.push_back("π" + std::to_string(i) + (s > 0 ? "+" : "-"));
      }
      ++i;
    }
    return b;
  }
  if (name == "pi_3q") {
    std::vector<int> d = dressing.empty() ? std::vector<int>{0, 0, 0} : dressing;
    if (d.size() != 3) throw UnknownNameError("pi_3q takes a dressing of three Pauli codes");
    NamedBasis b = start("pi_3q:" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]), 4);
    int i = 3;
    for (auto [x, y] : {std::pair{"0000", "1111"}, std::pair{"0001", "1110"}}) {
      for (int s : {1, -1}) {
        b.vectors.push_back(dress(pm(x, y, s), d, {0, 1, 2}));
        b.outcome_labels.push_back("π" + std::to_string(i) + (s > 0 ? "+" : "-"));
      }
      ++i;
    }
    return b;
  }
  if (name == "Omega34_3q") {
    // vectors read on (a, b, 1, c); σi dresses a, σj dresses c
    std::vector<int> d = dressing.empty() ? std::vector<int>{0, 0} : dressing;
    if (d.size() != 2) throw UnknownNameError("Omega34_3q takes a dressing of two Pauli codes");
    NamedBasis b = start("Omega34_3q:" + std::to_string(d[0]) + "," + std::to_string(d[1]), 4);
    PureState p = bell("phi+"), m = bell("phi-");
    auto e = [](const char* s) { return PureState::from_label(s); };
    const double r = 1 / std::sqrt(2.0);
    int i = 3;
    for (auto [x, y] : {std::pair{"00", "11"}, std::pair{"10", "01"}}) {
      for (int s : {1, -1}) {
        std::vector<Complex> a(16);
        auto u = cat(p, e(x)), v = cat(m, e(y));
        for (int t = 0; t < 16; ++t) a[t] = r * (u.amplitude(t) + double(s) * v.amplitude(t));
        b.vectors.push_back(dress(PureState::normalized(4, a), d, {0, 3}));
        b.outcome_labels.push_back("Ω" + std::to_string(i) + (s > 0 ? "+" : "-"));
      }
      ++i;
    }
    return b;
  }
  if (name == "sigma_W") {
    NamedBasis b = start("sigma_W", 4);
    add_pm_pairs(b, "Σ", {{"0010", "0011"}, {"0100", "0101"}, {"1000", "1001"}, {"0000", "0001"}});
    return b;
  }
  if (name.rfind("computational:", 0) == 0) {
    int k = std::stoi(std::string(name.substr(14)));
    return computational_basis(k);
  }
  throw UnknownNameError("unknown basis '" + std::string(name) + "'");
}

}  // namespace

std::size_t NamedBasis::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < outcome_labels.size(); ++i)
    if (outcome_labels[i] == label) return i;
  throw UnknownNameError("basis " + name + " has no outcome '" + std::string(label) + "'");
}

NamedState make_state(std::string_view name, const StateParams& params) {
  NamedState ns{std::string(name), params, PureState::basis(0, 0)};
  if (name == "GHZ4") {
    ns.state = ghz(4);
  } else if (name == "GHZ:n" || name.rfind("GHZ:", 0) == 0) {
    int n = name == "GHZ:n" ? static_cast<int>(param(params, "n", 4)) : std::stoi(std::string(name.substr(4)));
    ns.name = "GHZ:n";
    ns.params = {{"n", double(n)}};
    ns.state = ghz(n);
  } else if (name == "W4") {
    ns.state = w_state(4);
  } else if (name == "W:n" || name.rfind("W:", 0) == 0) {
    int n = name == "W:n" ? static_cast<int>(param(params, "n", 4)) : std::stoi(std::string(name.substr(2)));
    ns.name = "W:n";
    ns.params = {{"n", double(n)}};
    ns.state = w_state(n);
  } else if (name == "Omega") {
    ns.state = kets({{"0000", 1}, {"0110", 1}, {"1001", 1}, {"1111", -1}});
  } else if (name == "Q4") {
    ns.state = kets({{"0000", 1}, {"0101", 1}, {"1000", 1}, {"1110", 1}});
  } else if (name == "Q4_11") {
    ns.state = kets({{"0000", 1}, {"1000", 1}, {"1110", 1}, {"0101", kR3}});
  } else if (name == "Q5") {
    ns.state = kets({{"0000", 1}, {"1011", 1}, {"1101", 1}, {"1110", 1}});
  } else if (name == "W_mn" || name == "W11") {
    double m = param(params, "m", 1), n = param(params, "n", 1);
    if (m < 0 || n < 0) throw ConstraintError("W_mn needs m, n >= 0");
    double rho = param(params, "rho", 0), eta = param(params, "eta", 0), sig = param(params, "sigma", 0);
    ns.name = "W_mn";
    ns.params = {{"m", m}, {"n", n}, {"rho", rho}, {"eta", eta}, {"sigma", sig}};
    ns.state = kets({{"1000", 1.0},
                     {"0100", std::sqrt(m) * std::polar(1.0, rho)},
                     {"0010", std::sqrt(n) * std::polar(1.0, eta)},
                     {"0001", std::sqrt(m + n + 1) * std::polar(1.0, sig)}});
  } else if (name == "W_pqrs") {
    Complex p{param(params, "p", 1), param(params, "p_im", 0)};
    Complex q{param(params, "q", 1), param(params, "q_im", 0)};
    Complex r{param(params, "r", 1), param(params, "r_im", 0)};
    Complex s{param(params, "s", kR3), param(params, "s_im", 0)};
    if (std::abs(std::norm(p) + std::norm(q) + std::norm(r) - std::norm(s)) > kTol)
      throw ConstraintError("W_pqrs needs |p|^2+|q|^2+|r|^2 = |s|^2");
    ns.state = kets({{"1000", p}, {"0100", q}, {"0010", r}, {"0001", s}});
  } else if (name.rfind("Bell:", 0) == 0) {
    ns.state = bell(name.substr(5));
  } else {
    throw UnknownNameError("unknown state '" + std::string(name) + "'");
  }
  return ns;
}

NamedBasis make_basis(std::string_view name) {
  auto colon = name.find(':');
  if (colon != std::string_view::npos && name.rfind("computational:", 0) != 0)
    return make_basis(name.substr(0, colon), parse_dressing(name.substr(colon + 1)));
  return make_basis(name, {});
}

NamedBasis make_basis(std::string_view name, const std::vector<int>& dressing) {
  NamedBasis b = build(name, dressing);
  auto v = validate_orthonormal(b);
  if (!v.pass) throw Error("catalog basis " + b.name + " failed validation");
  return b;
}

BasisValidation validate_orthonormal(const NamedBasis& basis, double tol) {
  BasisValidation r;
  for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
    double nrm = 0;
    for (auto a : basis.vectors[i].amplitudes()) nrm += std::norm(a);
    r.max_norm_dev = std::max(r.max_norm_dev, std::abs(std::sqrt(nrm) - 1));
    for (std::size_t j = i + 1; j < basis.vectors.size(); ++j)
      r.max_offdiag = std::max(r.max_offdiag, std::abs(inner(basis.vectors[i], basis.vectors[j])));
  }
  r.complete = basis.complete();
  r.pass = r.max_offdiag <= tol && r.max_norm_dev <= tol && basis.vectors.size() <= (std::size_t{1} << basis.num_qubits);
  return r;
}

NamedBasis basis_from_vectors(std::string name, std::vector<PureState> vectors, std::vector<std::string> labels) {
  if (vectors.empty()) throw DimensionError("basis needs at least one vector");
  if (labels.size() != vectors.size()) throw DimensionError("basis label count mismatch");
  NamedBasis b = start(std::move(name), vectors.front().num_qubits());
  for (const auto& v : vectors)
    if (v.num_qubits() != b.num_qubits) throw DimensionError("basis vectors of mixed size");
  b.vectors = std::move(vectors);
  b.outcome_labels = std::move(labels);
  return b;
}

NamedBasis computational_basis(int k) {
  if (k < 1 || k > kMaxQubits) throw UnknownNameError("computational basis size out of range");
  NamedBasis b = start("computational:" + std::to_string(k), k);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << k); ++i) {
    b.vectors.push_back(PureState::basis(k, i));
    b.outcome_labels.push_back(basis_label(i, k));
  }
  return b;
}

NamedBasis product_basis(const NamedBasis& a, const NamedBasis& b) {
  NamedBasis out = start(a.name + "⊗" + b.name, a.num_qubits + b.num_qubits);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      out.vectors.push_back(tensor(a.vectors[i], b.vectors[j]));
      out.outcome_labels.push_back(a.outcome_labels[i] + "," + b.outcome_labels[j]);
    }
  return out;
}

std::vector<std::string> catalog_state_names() {
  return {"GHZ4", "W4", "Omega", "Q4", "Q5", "W_mn", "Q4_11", "W_pqrs", "GHZ:n", "W:n",
          "Bell:phi+", "Bell:phi-", "Bell:psi+", "Bell:psi-"};
}

std::vector<std::string> catalog_basis_names() {
  return {"ghz4_full", "ghz3_full", "bell",      "plus_minus", "omega_meas", "eta_zeta_W11",
          "rho_Q4",    "tau_Q4",    "eta_zeta_Q4", "varphi_Q5", "xi_Q5",     "omega3_Q5",
          "omega16",   "pi_2q",     "pi_3q",     "Omega34_3q", "sigma_W",   "computational:1",
          "computational:2", "computational:3", "computational:4"};
}

std::vector<NamedState> resource_states() {
  return {make_state("GHZ4"), make_state("W4"), make_state("Omega"), make_state("Q4"), make_state("Q5")};
}

BasisCorrection derive_omega15_correction() {
  const std::array<const char*, 4> support = {"0011", "0101", "1010", "1100"};
  std::vector<PureState> others = {omega16_printed(12), omega16_printed(13), omega16_printed(15)};
  BasisCorrection c{"Ω_15", omega16_printed(14), omega16_printed(14), "sign-pattern completion", {}, false};
  c.certificate.push_back("published Ω_15 equals published Ω_13 (|<Ω_13|Ω_15>| = " +
                          std::to_string(std::abs(inner(omega16_printed(12), omega16_printed(14)))) + ")");
  int hits = 0;
  for (int mask = 0; mask < 8; ++mask) {
    KetList k = {{support[0], 1.0}};
    std::string pattern = "+";
    for (int b = 0; b < 3; ++b) {
      bool neg = mask & (4 >> b);
      k.emplace_back(support[b + 1], neg ? -1.0 : 1.0);
      pattern += neg ? "-" : "+";
    }
    PureState v = kets(k);
    double worst = 0;
    for (const auto& o : others) worst = std::max(worst, std::abs(inner(v, o)));
    bool ok = worst < kNormTol;
    c.certificate.push_back("pattern " + pattern + " max overlap with Ω_13, Ω_14, Ω_16 = " + std::to_string(worst) +
                            (ok ? "  <- orthogonal" : ""));
    if (ok) {
      ++hits;
      c.as_corrected = v;
    }
  }
  c.unique = hits == 1;
  if (!c.unique) throw Error("Ω_15 sign search did not return a unique pattern");
  c.certificate.push_back("corrected: " + c.as_corrected.to_string(4));
  return c;
}

}  // namespace quadent
