#include <gtest/gtest.h>

#include "quadent/catalog.hpp"
#include "quadent/entanglement.hpp"
#include "quadent/gates.hpp"
#include "support.hpp"

using namespace quadent;
using namespace quadent::testing;

namespace {

const double s2 = 1 / std::sqrt(2.0);

PureState plus() { return PureState::from_kets({{"0", 1}, {"1", 1}}); }

}  // namespace

TEST(Tensor, ConcatenatesLabels) {
  auto s = tensor(PureState::from_label("0"), PureState::from_label("1"));
  EXPECT_EQ(s, PureState::from_label("01"));
}

TEST(Tensor, PlusWithZero) {
  auto s = tensor(plus(), PureState::from_label("0"));
  EXPECT_NEAR(s.amplitude("00").real(), s2, 1e-15);
  EXPECT_NEAR(s.amplitude("10").real(), s2, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude("01")) + std::abs(s.amplitude("11")), 0, 1e-15);
}

TEST(Tensor, UnknownTimesGhz) {
  auto psi = PureState::from_kets({{"0", 0.6}, {"1", Complex(0, 0.8)}});
  auto s = tensor(psi, make_state("GHZ4").state);
  int nonzero = 0;
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (std::abs(s.amplitude(i)) > 1e-12) ++nonzero;
  EXPECT_EQ(nonzero, 4);
  EXPECT_NEAR(std::abs(s.amplitude("00000")), 0.6 * s2, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude("11111")), 0.8 * s2, 1e-15);
}

TEST(Tensor, CapacityError) {
  auto big = PureState::basis(7, 0);
  EXPECT_THROW(tensor(big, PureState::basis(6, 0)), CapacityError);
}

TEST(ApplyLocal, Sigma1OnQubit0) {
  auto s = apply_local(PureState::from_label("00"), gates::pauli(1), {0});
  EXPECT_EQ(s, PureState::from_label("10"));
}

TEST(ApplyLocal, Sigma3OnBell) {
  auto s = apply_local(make_state("Bell:phi+").state, gates::pauli(3), {0});
  EXPECT_GT(fidelity_phase_invariant(s, make_state("Bell:phi-").state), 1 - 1e-12);
}

TEST(ApplyLocal, ControlledPhaseFlipsOnlyOnes) {
  auto in = PureState::normalized(4, std::vector<Complex>(16, 1.0));
  auto out = apply_local(in, gates::cz(2, 0, 1), {2, 3});
  for (std::size_t i = 0; i < 16; ++i) {
    double sign = (i & 3) == 3 ? -1 : 1;
    EXPECT_NEAR(std::abs(out.amplitude(i) - sign * in.amplitude(i)), 0, 1e-15) << i;
  }
}

TEST(ApplyLocal, Errors) {
  auto s = PureState::basis(3, 0);
  EXPECT_THROW(apply_local(s, gates::cz(2, 0, 1), {0, 0}), DimensionError);
  EXPECT_THROW(apply_local(s, gates::pauli(1), {3}), DimensionError);
  EXPECT_THROW(apply_local(s, gates::pauli(1), {0, 1}), DimensionError);
}

TEST(Permute, SwapTwo) {
  std::vector<int> p = {1, 0};
  EXPECT_EQ(permute_qubits(PureState::from_label("01"), p), PureState::from_label("10"));
}

TEST(Permute, GhzIsSymmetric) {
  std::mt19937_64 rng(7);
  auto g = make_state("GHZ4").state;
  for (int t = 0; t < 24; ++t)
    EXPECT_GT(fidelity_phase_invariant(permute_qubits(g, random_perm(4, rng)), g), 1 - 1e-12);
}

TEST(Permute, Q4IsNotSymmetric) {
  auto q = make_state("Q4").state;
  std::vector<int> p = {0, 2, 1, 3};
  EXPECT_LT(fidelity_phase_invariant(permute_qubits(q, p), q), 1 - 1e-6);
}

TEST(Permute, RejectsNonBijection) {
  std::vector<int> p = {0, 0};
  EXPECT_THROW(permute_qubits(PureState::basis(2, 0), p), DimensionError);
}

TEST(Inner, Basics) {
  EXPECT_NEAR(std::abs(inner(PureState::from_label("0"), PureState::from_label("0")) - 1.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(inner(PureState::from_label("0"), PureState::from_label("1"))), 0, 1e-15);
  auto g = make_state("GHZ4").state;
  EXPECT_NEAR(std::abs(inner(g, apply_local(g, gates::pauli(3), {0}))), 0, 1e-15);
  EXPECT_THROW(inner(PureState::basis(1, 0), PureState::basis(2, 0)), DimensionError);
}

TEST(Fidelity, PhaseInvariance) {
  std::mt19937_64 rng(3);
  auto s = random_state(3, rng);
  EXPECT_NEAR(fidelity_phase_invariant(s, s), 1, 1e-12);
  std::vector<Complex> a(s.amplitudes().begin(), s.amplitudes().end());
  for (auto& x : a) x *= std::polar(1.0, 0.7);
  EXPECT_NEAR(fidelity_phase_invariant(s, PureState(3, a)), 1, 1e-12);
  EXPECT_NEAR(fidelity_phase_invariant(PureState::from_label("0"), plus()), 0.5, 1e-15);
}

TEST(ReducedDensity, KeepAllIsProjector) {
  std::mt19937_64 rng(11);
  auto s = random_state(3, rng);
  auto rho = reduced_density(s, {0, 1, 2});
  EXPECT_NEAR(purity(rho), 1, 1e-12);
  EXPECT_TRUE(rho.matrix().isApprox(DensityMatrix::projector(s).matrix(), 1e-12));
}

TEST(ReducedDensity, GhzSingleQubit) {
  auto rho = reduced_density(make_state("GHZ4").state, {0});
  Eigen::MatrixXcd want = Eigen::MatrixXcd::Identity(2, 2) * 0.5;
  EXPECT_TRUE(rho.matrix().isApprox(want, 1e-14));
  EXPECT_NEAR(purity(rho), 0.5, 1e-14);
}

TEST(ReducedDensity, GhzPairPurity) { EXPECT_NEAR(purity(reduced_density(make_state("GHZ4").state, {0, 1})), 0.5, 1e-14); }

TEST(ReducedDensity, OmegaPairConcurrenceZero) {
  EXPECT_NEAR(wootters_concurrence(reduced_density(make_state("Omega").state, {0, 1})), 0, 1e-9);
}

TEST(ReducedDensity, EmptyKeep) {
  std::vector<int> none;
  EXPECT_THROW(reduced_density(PureState::basis(2, 0), std::span<const int>(none)), DimensionError);
}

TEST(PureStateCtor, Validation) {
  EXPECT_THROW(PureState(1, {1.0, 1.0}), ConstraintError);
  EXPECT_THROW(PureState(2, {1.0, 0.0}), DimensionError);
  EXPECT_THROW(PureState::basis(13, 0), CapacityError);
  EXPECT_THROW(PureState::normalized(1, {0.0, 0.0}), ConstraintError);
  EXPECT_THROW(PureState::from_label("012"), Error);
}

TEST(LocalUnitaryCtor, RejectsNonUnitary) {
  EXPECT_THROW(LocalUnitary(1, {1.0, 1.0, 0.0, 1.0}), ConstraintError);
}

TEST(DensityMatrixCtor, RejectsBadMatrices) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
  EXPECT_THROW(DensityMatrix{m}, ConstraintError);  // trace 2
  m(0, 0) = 1.5;
  m(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix{m}, ConstraintError);  // negative eigenvalue
}

// Randomized invariants, 200 cases each.

TEST(QstateProperty, NormPreservedOverRandomOperationSequences) {
  std::mt19937_64 rng(42);
  for (int c = 0; c < 200; ++c) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto s = random_state(n, rng);
    for (int step = 0; step < 100; ++step) {
      switch (rng() % 3) {
        case 0: {
          int k = 1 + static_cast<int>(rng() % std::min(n, 2));
          auto t = random_targets(n, k, rng);
          s = apply_local(s, random_unitary(k, rng), t);
          break;
        }
        case 1:
          s = permute_qubits(s, random_perm(n, rng));
          break;
        default:
          if (n < 6) {
            s = tensor(s, random_state(1, rng));
            ++n;
          } else {
            s = apply_local(s, gates::hadamard(), {static_cast<int>(rng() % n)});
          }
      }
      ASSERT_NEAR(norm_of(s), 1, 1e-12) << "case " << c << " step " << step;
    }
  }
}

TEST(QstateProperty, AdjointUndoesUnitary) {
  std::mt19937_64 rng(43);
  for (int c = 0; c < 200; ++c) {
    int n = 1 + static_cast<int>(rng() % 5);
    int k = 1 + static_cast<int>(rng() % std::min(n, 3));
    auto s = random_state(n, rng);
    auto u = random_unitary(k, rng);
    auto t = random_targets(n, k, rng);
    auto back = apply_local(apply_local(s, u, t), u.adjoint(), t);
    for (std::size_t i = 0; i < s.dim(); ++i) ASSERT_NEAR(std::abs(back.amplitude(i) - s.amplitude(i)), 0, 1e-12);
  }
}

TEST(QstateProperty, PermutationComposition) {
  std::mt19937_64 rng(44);
  for (int c = 0; c < 200; ++c) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto s = random_state(n, rng);
    auto p1 = random_perm(n, rng), p2 = random_perm(n, rng);
    std::vector<int> comp(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) comp[i] = p2[p1[i]];
    auto a = permute_qubits(permute_qubits(s, p1), p2);
    auto b = permute_qubits(s, comp);
    for (std::size_t i = 0; i < s.dim(); ++i) ASSERT_NEAR(std::abs(a.amplitude(i) - b.amplitude(i)), 0, 1e-15);
  }
}

TEST(QstateProperty, ReducedTraceAndFidelitySymmetry) {
  std::mt19937_64 rng(45);
  for (int c = 0; c < 200; ++c) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto s = random_state(n, rng), t = random_state(n, rng);
    int k = 1 + static_cast<int>(rng() % n);
    auto keep = random_targets(n, k, rng);
    auto rho = reduced_density(s, keep);
    ASSERT_NEAR(std::abs(rho.matrix().trace() - Complex(1)), 0, 1e-12);
    double p = purity(rho);
    ASSERT_GE(p, 1.0 / static_cast<double>(rho.dim()) - 1e-12);
    ASSERT_LE(p, 1 + 1e-12);
    ASSERT_NEAR(fidelity_phase_invariant(s, t), fidelity_phase_invariant(t, s), 1e-15);
  }
}
