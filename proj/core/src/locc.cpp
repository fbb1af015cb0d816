#include "quadent/locc.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "quadent/measurement.hpp"

namespace quadent {

namespace {

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

double norm2(const std::vector<Complex>& v) {
  double s = 0;
  for (auto a : v) s += std::norm(a);
  return s;
}

Complex dot(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

MeasurementPlan plan_of(const std::vector<LoccRound>& rounds, std::size_t count) {
  MeasurementPlan p;
  for (std::size_t r = 0; r < count; ++r) p.add_step(rounds[r].qubits, rounds[r].basis);
  return p;
}

// A-side state on a_qubits tensored with B-side state, laid out on the register.
PureState embed(const PureState& a, const std::vector<int>& aq, const PureState& b, const std::vector<int>& bq) {
  std::vector<int> perm(aq);
  perm.insert(perm.end(), bq.begin(), bq.end());
  return permute_qubits(tensor(a, b), perm);
}

}  // namespace

int LoccRound::message_cbits() const {
  int b = 0;
  while ((std::size_t{1} << b) < (std::size_t{1} << basis.num_qubits)) ++b;
  return b;
}

void LoccProtocol::check(int n) const {
  std::vector<int> seen(n, 0);
  for (const auto& p : parties)
    for (int q : p.qubits) {
      if (q < 0 || q >= n) throw DimensionError("party " + p.name + " owns a qubit outside the register");
      if (seen[q]++) throw Error("qubit " + std::to_string(q) + " owned twice");
    }
  for (const auto& r : rounds) {
    auto it = std::find_if(parties.begin(), parties.end(), [&](const LoccParty& p) { return p.name == r.party; });
    if (it == parties.end()) throw UnknownNameError("round by unknown party '" + r.party + "'");
    for (int q : r.qubits)
      if (std::find(it->qubits.begin(), it->qubits.end(), q) == it->qubits.end())
        throw Error("party " + r.party + " measures a qubit it does not hold");
  }
}

int LoccProtocol::inter_receiver_cbits() const {
  int c = 0;
  for (std::size_t i = 0; i + 1 < rounds.size(); ++i)
    if (rounds[i].party != rounds.back().party) c += rounds[i].message_cbits();
  return c;
}

DiscriminationReport run_discrimination(const std::vector<LabeledState>& cands, const LoccProtocol& protocol,
                                        double tol) {
  DiscriminationReport rep;
  rep.protocol = protocol.name;
  rep.candidates = static_cast<int>(cands.size());
  rep.inter_receiver_cbits = protocol.inter_receiver_cbits();
  if (cands.empty()) throw Error("no candidates");
  const int n = cands.front().state.num_qubits();
  protocol.check(n);
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      if (std::abs(inner(cands[i].state, cands[j].state)) > tol)
        throw ConstraintError("candidates " + cands[i].label + " and " + cands[j].label + " are not orthogonal");

  // orthogonality on every partial transcript
  for (std::size_t r = 1; r <= protocol.rounds.size(); ++r) {
    auto plan = plan_of(protocol.rounds, r);
    std::map<std::vector<int>, std::vector<std::vector<Complex>>> by_prefix;
    for (const auto& c : cands)
      for (auto& raw : enumerate_raw(c.state, plan)) by_prefix[raw.indices].push_back(std::move(raw.amps));
    for (const auto& [prefix, states] : by_prefix)
      for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i + 1; j < states.size(); ++j)
          if (std::abs(dot(states[i], states[j])) > tol * std::sqrt(norm2(states[i]) * norm2(states[j])) + 1e-14)
            rep.orthogonal_per_round = false;
  }

  auto plan = plan_of(protocol.rounds, protocol.rounds.size());
  std::map<std::vector<std::string>, std::set<std::string>> reached;
  for (const auto& c : cands)
    for (const auto& br : enumerate_outcomes(c.state, plan)) {
      reached[br.labels].insert(c.label);
      rep.transcripts_of[c.label].push_back(join(br.labels, "|"));
    }
  rep.transcripts = static_cast<int>(reached.size());
  rep.success = true;
  for (const auto& [t, who] : reached) {
    std::string expected;
    if (protocol.identification) {
      auto it = protocol.identification->find(t);
      if (it == protocol.identification->end()) {
        rep.success = false;
        rep.failure = "unmapped transcript " + join(t, "|");
        break;
      }
      expected = it->second;
    }
    if (who.size() > 1 || (!expected.empty() && *who.begin() != expected)) {
      rep.success = false;
      rep.failure = "transcript " + join(t, "|") + " reached by " +
                    join(std::vector<std::string>(who.begin(), who.end()), ", ");
      break;
    }
  }
  rep.recovered_cbits = rep.success ? std::log2(static_cast<double>(cands.size())) : 0;
  return rep;
}

CertificateCheck check_certificate(const std::vector<LabeledState>& cands, const ChenLiCertificate& cert, double tol) {
  CertificateCheck out;
  out.pass = true;
  if (cert.terms.size() != cands.size()) throw Error("certificate lists " + std::to_string(cert.terms.size()) +
                                                      " decompositions for " + std::to_string(cands.size()) + " candidates");
  const int n = cands.front().state.num_qubits();
  if (static_cast<int>(cert.a_qubits.size() + cert.b_qubits.size()) != n) throw DimensionError("bipartition does not cover the register");
  for (std::size_t i = 0; i < cands.size(); ++i) {
    std::vector<Complex> sum(cands[i].state.dim());
    for (const auto& t : cert.terms[i]) {
      if (t.a.num_qubits() != static_cast<int>(cert.a_qubits.size()) ||
          t.b.num_qubits() != static_cast<int>(cert.b_qubits.size()))
        throw DimensionError("malformed product term for " + cands[i].label);
      PureState prod = embed(t.a, cert.a_qubits, t.b, cert.b_qubits);
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += t.coefficient * prod.amplitude(k);
      double own = std::abs(inner(prod, cands[i].state));
      if (own < tol) {
        out.pass = false;
        if (out.violation.empty()) out.violation = "a term of " + cands[i].label + " has no overlap with it";
      }
      for (std::size_t j = 0; j < cands.size(); ++j) {
        if (j == i) continue;
        double x = std::abs(inner(prod, cands[j].state));
        out.max_cross_overlap = std::max(out.max_cross_overlap, x);
        if (x > tol && out.violation.empty())
          out.violation = "a term of " + cands[i].label + " overlaps " + cands[j].label + " (" + std::to_string(x) + ")";
        if (x > tol) out.pass = false;
      }
    }
    double err = 2;
    if (norm2(sum) > 1e-24) {
      PureState rec = PureState::normalized(n, sum);
      err = 1 - std::abs(inner(rec, cands[i].state));
    }
    out.max_reconstruction_error = std::max(out.max_reconstruction_error, err);
    if (err > tol) {
      out.pass = false;
      if (out.violation.empty()) out.violation = "terms do not rebuild " + cands[i].label;
    }
  }
  return out;
}

ChenLiCertificate certificate_from_bases(const std::vector<LabeledState>& cands, const std::vector<int>& aq,
                                         const NamedBasis& ab, const std::vector<int>& bq, const NamedBasis& bb,
                                         double tol) {
  ChenLiCertificate c{aq, bq, {}};
  for (const auto& cand : cands) {
    std::vector<ProductTerm> terms;
    for (const auto& va : ab.vectors)
      for (const auto& vb : bb.vectors) {
        Complex coeff = inner(embed(va, aq, vb, bq), cand.state);
        if (std::abs(coeff) > tol) terms.push_back({va, vb, coeff});
      }
    c.terms.push_back(std::move(terms));
  }
  return c;
}

bool walgate_hardy_qubit_check(const std::vector<LabeledState>& cands, int q, const NamedBasis& basis, double tol) {
  if (basis.num_qubits != 1 || basis.size() != 2) throw DimensionError("Walgate-Hardy check needs a complete qubit basis");
  const std::vector<int> t{q};
  for (const auto& e : basis.vectors) {
    std::vector<std::vector<Complex>> cond;
    for (const auto& c : cands) cond.push_back(contract(c.state, e, t));
    for (std::size_t i = 0; i < cond.size(); ++i)
      for (std::size_t j = i + 1; j < cond.size(); ++j)
        if (std::abs(dot(cond[i], cond[j])) > tol) return false;
  }
  return true;
}

}  // namespace quadent
