#include <gtest/gtest.h>

#include <map>

#include "quadent/catalog.hpp"
#include "quadent/measurement.hpp"
#include "support.hpp"

using namespace quadent;
using namespace quadent::testing;

namespace {

PureState plus() { return PureState::from_kets({{"0", 1}, {"1", 1}}); }

MeasurementPlan one_step(std::vector<int> targets, NamedBasis b) {
  MeasurementPlan p;
  p.add_step(std::move(targets), std::move(b));
  return p;
}

double total(const std::vector<OutcomeBranch>& bs) {
  double t = 0;
  for (const auto& b : bs) t += b.probability;
  return t;
}

}  // namespace

TEST(Enumerate, PlusInComputational) {
  auto bs = enumerate_outcomes(plus(), one_step({0}, computational_basis(1)));
  ASSERT_EQ(bs.size(), 2u);
  EXPECT_NEAR(bs[0].probability, 0.5, 1e-15);
  EXPECT_NEAR(bs[1].probability, 0.5, 1e-15);
  EXPECT_EQ(bs[0].residual.num_qubits(), 0);
}

TEST(Enumerate, BellInBellBasis) {
  auto b = make_basis("bell");
  auto bs = enumerate_outcomes(make_state("Bell:phi+").state, one_step({0, 1}, b));
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_EQ(bs[0].labels[0], b.outcome_labels[0]);
  EXPECT_NEAR(bs[0].probability, 1, 1e-15);
}

TEST(Enumerate, UnknownTimesGhzInFourVectorBasis) {
  auto full = make_basis("ghz4_full");
  auto four = basis_from_vectors("ghz4_first", {full.vectors.begin(), full.vectors.begin() + 4},
                                 {full.outcome_labels.begin(), full.outcome_labels.begin() + 4});
  const Complex a(0.6, 0), b(0, 0.8);
  auto psi = PureState::from_kets({{"0", a}, {"1", b}});
  auto bs = enumerate_outcomes(tensor(psi, make_state("GHZ4").state), one_step({0, 1, 2, 3}, four));
  ASSERT_EQ(bs.size(), 4u);
  std::vector<PureState> want = {PureState::from_kets({{"0", a}, {"1", b}}), PureState::from_kets({{"0", a}, {"1", -b}}),
                                 PureState::from_kets({{"1", a}, {"0", b}}), PureState::from_kets({{"1", a}, {"0", -b}})};
  std::vector<int> hit(4, 0);
  for (const auto& br : bs) {
    EXPECT_NEAR(br.probability, 0.25, 1e-14);
    EXPECT_EQ(br.residual_qubits, std::vector<int>{4});
    for (int i = 0; i < 4; ++i)
      if (fidelity_phase_invariant(br.residual, want[i]) > 1 - 1e-12) ++hit[i];
  }
  EXPECT_EQ(hit, std::vector<int>(4, 1));
}

TEST(Enumerate, IncompleteBasisIsCompletedWithPerpOutcomes) {
  auto p = one_step({0, 1, 2, 3}, make_basis("ghz4_full"));
  const auto& step = p.steps()[0];
  EXPECT_EQ(step.named_count, 8u);
  EXPECT_EQ(step.basis.size(), 16u);
  EXPECT_EQ(step.basis.outcome_labels.back().rfind(kPerpPrefix, 0), 0u);
  auto bs = enumerate_outcomes(make_state("W4").state, p);
  EXPECT_NEAR(total(bs), 1, 1e-12);
  bool perp = false;
  for (const auto& b : bs) perp |= b.has_perp();
  EXPECT_TRUE(perp);
}

TEST(Enumerate, ResidualsReassembleTheInput) {
  std::mt19937_64 rng(5);
  auto s = random_state(3, rng);
  auto b = make_basis("bell");
  auto bs = enumerate_outcomes(s, one_step({0, 2}, b));
  std::vector<Complex> acc(8);
  for (const auto& br : bs) {
    auto joint = tensor(b.vectors[static_cast<std::size_t>(br.indices[0])], br.residual);
    // joint is ordered (0, 2, 1); move back to (0, 1, 2)
    std::vector<int> perm = {0, 2, 1};
    auto back = permute_qubits(joint, perm);
    // branch phase: align with the input on this branch
    Complex ph = inner(back, s);
    ph /= std::abs(ph);
    for (std::size_t i = 0; i < 8; ++i) acc[i] += std::sqrt(br.probability) * ph * back.amplitude(i);
  }
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(acc[i] - s.amplitude(i)), 0, 1e-10);
}

TEST(Plan, RejectsOverlapAndRange) {
  MeasurementPlan p;
  p.add_step({0, 1}, make_basis("bell"));
  EXPECT_THROW(p.add_step({1, 2}, make_basis("bell")), DimensionError);
  EXPECT_THROW(p.add_step({2}, make_basis("bell")), DimensionError);
  MeasurementPlan q;
  q.add_step({0, 5}, make_basis("bell"));
  EXPECT_THROW(q.check(3), DimensionError);
}

TEST(Sample, DeterministicBranch) {
  for (std::uint64_t seed : {0ull, 1ull, 99ull, 123456789ull}) {
    auto b = sample(make_state("Bell:phi+").state, one_step({0, 1}, make_basis("bell")), seed);
    EXPECT_NEAR(b.probability, 1, 1e-15);
  }
}

TEST(Sample, ReproducibleForFixedSeed) {
  auto p = one_step({0}, computational_basis(1));
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    EXPECT_EQ(sample(plus(), p, seed).labels, sample(plus(), p, seed).labels);
}

TEST(Sample, EmpiricalFrequency) {
  auto p = one_step({0}, computational_basis(1));
  const int n = 100000;
  std::map<std::string, int> counts;
  for (int i = 0; i < n; ++i) counts[sample(plus(), p, static_cast<std::uint64_t>(i)).labels[0]]++;
  ASSERT_EQ(counts.size(), 2u);
  for (const auto& [label, c] : counts) EXPECT_NEAR(static_cast<double>(c) / n, 0.5, 0.01) << label;
}

TEST(MeasurementProperty, ProbabilitiesSumToOne) {
  std::mt19937_64 rng(46);
  const std::vector<std::string> two = {"bell", "computational:2"}, three = {"ghz3_full", "omega3_Q5", "computational:3"},
                                 one = {"plus_minus", "computational:1"};
  for (int c = 0; c < 200; ++c) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto s = random_state(n, rng);
    auto order = random_perm(n, rng);
    MeasurementPlan p;
    std::size_t used = 0;
    int steps = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < steps && used < order.size(); ++k) {
      std::size_t left = order.size() - used;
      std::size_t size = 1 + rng() % std::min<std::size_t>(3, left);
      const auto& pool = size == 1 ? one : size == 2 ? two : three;
      std::vector<int> t(order.begin() + static_cast<long>(used), order.begin() + static_cast<long>(used + size));
      p.add_step(t, make_basis(pool[rng() % pool.size()]));
      used += size;
    }
    auto bs = enumerate_outcomes(s, p);
    ASSERT_NEAR(total(bs), 1, 1e-10) << "case " << c;
    for (const auto& b : bs) ASSERT_NEAR(norm_of(b.residual), 1, 1e-10);
  }
}

TEST(MeasurementProperty, RefinementEquivalenceOnGhzThreePlusOne) {
  // One four-qubit step in ghz3 x plus_minus versus the two successive steps.
  std::mt19937_64 rng(47);
  auto joint_basis = product_basis(make_basis("ghz3_full"), make_basis("plus_minus"));
  MeasurementPlan joint, split;
  joint.add_step({0, 1, 2, 3}, joint_basis);
  split.add_step({0, 1, 2}, make_basis("ghz3_full"));
  split.add_step({3}, make_basis("plus_minus"));
  for (int c = 0; c < 50; ++c) {
    auto s = tensor(random_state(1, rng), make_state("GHZ4").state);
    auto a = enumerate_outcomes(s, joint), b = enumerate_outcomes(s, split);
    std::map<std::string, std::pair<double, PureState>> by_label;
    for (const auto& br : a) by_label.emplace(br.labels[0], std::make_pair(br.probability, br.residual));
    ASSERT_EQ(a.size(), b.size());
    for (const auto& br : b) {
      auto it = by_label.find(br.labels[0] + "," + br.labels[1]);
      ASSERT_NE(it, by_label.end());
      EXPECT_NEAR(it->second.first, br.probability, 1e-12);
      EXPECT_GT(fidelity_phase_invariant(it->second.second, br.residual), 1 - 1e-12);
    }
  }
}
