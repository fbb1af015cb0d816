#include <gtest/gtest.h>

#include "quadent/catalog.hpp"

using namespace quadent;

TEST(Catalog, OmegaAmplitudes) {
  auto s = make_state("Omega").state;
  EXPECT_NEAR(s.amplitude("0000").real(), 0.5, 1e-15);
  EXPECT_NEAR(s.amplitude("0110").real(), 0.5, 1e-15);
  EXPECT_NEAR(s.amplitude("1001").real(), 0.5, 1e-15);
  EXPECT_NEAR(s.amplitude("1111").real(), -0.5, 1e-15);
}

TEST(Catalog, WmnUnitWeights) {
  auto s = make_state("W_mn", {{"m", 1}, {"n", 1}}).state;
  const double r6 = 1 / std::sqrt(6.0);
  for (const char* k : {"1000", "0100", "0010"}) EXPECT_NEAR(s.amplitude(k).real(), r6, 1e-15) << k;
  EXPECT_NEAR(s.amplitude("0001").real(), std::sqrt(3.0) * r6, 1e-15);
}

TEST(Catalog, GhzNormalizedRegardlessOfPrefactor) {
  auto s = make_state("GHZ:n", {{"n", 4}}).state;
  EXPECT_NEAR(s.amplitude("0000").real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s.amplitude("1111").real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(make_state("GHZ:5").state.num_qubits(), 5);
}

TEST(Catalog, GeneralizedWConstraint) {
  EXPECT_THROW(make_state("W_pqrs", {{"p", 1}, {"q", 1}, {"r", 1}, {"s", 1}}), ConstraintError);
  EXPECT_NO_THROW(make_state("W_pqrs", {{"p", 1}, {"q", 1}, {"r", 1}, {"s", std::sqrt(3.0)}}));
}

TEST(Catalog, UnknownNames) {
  EXPECT_THROW(make_state("nope"), UnknownNameError);
  EXPECT_THROW(make_basis("nope"), UnknownNameError);
}

TEST(Catalog, Deterministic) {
  for (const auto& n : catalog_state_names()) EXPECT_EQ(make_state(n).state, make_state(n).state) << n;
}

TEST(Catalog, BellBasisIsIdentityGram) {
  auto v = validate_orthonormal(make_basis("bell"));
  EXPECT_TRUE(v.pass);
  EXPECT_TRUE(v.complete);
  EXPECT_LT(v.max_offdiag, 1e-15);
}

TEST(Catalog, EveryBasisPassesGram) {
  for (const auto& n : catalog_basis_names()) {
    auto v = validate_orthonormal(make_basis(n));
    EXPECT_TRUE(v.pass) << n;
    EXPECT_LE(v.max_offdiag, 1e-12) << n;
    EXPECT_LE(v.max_norm_dev, 1e-12) << n;
  }
}

TEST(Catalog, Ghz4FullSpansEight) {
  auto b = make_basis("ghz4_full");
  EXPECT_EQ(b.size(), 8u);
  EXPECT_FALSE(b.complete());
  EXPECT_TRUE(validate_orthonormal(b).pass);
}

TEST(Catalog, TauQ4SpansEight) {
  auto b = make_basis("tau_Q4");
  EXPECT_EQ(b.size(), 8u);
  EXPECT_TRUE(validate_orthonormal(b).pass);
}

TEST(Catalog, Omega15Repair) {
  auto b = make_basis("omega16");
  auto want = PureState::from_kets({{"0011", 1}, {"0101", -1}, {"1010", 1}, {"1100", 1}});
  EXPECT_GT(fidelity_phase_invariant(b.vectors[b.index_of("Ω_15")], want), 1 - 1e-12);
  ASSERT_EQ(b.corrections.size(), 1u);
  EXPECT_EQ(b.corrections[0].label, "Ω_15");
  EXPECT_TRUE(b.corrections[0].unique);
  EXPECT_FALSE(b.corrections[0].certificate.empty());
}

TEST(Catalog, VerbatimOmegaPairFailsGram) {
  auto b = make_basis("omega16");
  auto c = b.corrections.at(0);
  b.vectors[b.index_of(c.label)] = c.as_printed;
  auto v = validate_orthonormal(b);
  EXPECT_FALSE(v.pass);
  EXPECT_NEAR(v.max_offdiag, 1, 1e-12);
}

TEST(Catalog, Omega15SearchIsUnique) {
  auto c = derive_omega15_correction();
  EXPECT_TRUE(c.unique);
  EXPECT_EQ(c.method, "sign-pattern completion");
}

TEST(Catalog, EveryCorrectionIsCertifiedAndNecessary) {
  for (const auto& n : catalog_basis_names()) {
    auto b = make_basis(n);
    for (const auto& c : b.corrections) {
      EXPECT_FALSE(c.certificate.empty()) << n << " " << c.label;
      auto p = b;
      p.vectors[p.index_of(c.label)] = c.as_printed;
      EXPECT_FALSE(validate_orthonormal(p).pass) << n << " " << c.label << " was fine as printed";
    }
  }
}

TEST(Catalog, ResourcesAreGenuinelyEntangled) {
  for (const auto& r : resource_states()) {
    for (unsigned mask = 1; mask < 15; ++mask) {
      std::vector<int> keep;
      for (int q = 0; q < 4; ++q)
        if (mask & (1u << q)) keep.push_back(q);
      EXPECT_LE(purity(reduced_density(r.state, keep)), 1 - 1e-6) << r.name << " mask " << mask;
    }
  }
}

TEST(Catalog, PauliDressedBasis) {
  auto plain = make_basis("pi_2q");
  auto dressed = make_basis("pi_2q:1,3");
  EXPECT_EQ(plain.size(), dressed.size());
  EXPECT_TRUE(validate_orthonormal(dressed).pass);
  EXPECT_THROW(make_basis("pi_2q:1"), UnknownNameError);
}
