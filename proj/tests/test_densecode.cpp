#include <gtest/gtest.h>

#include <random>

#include "quadent/clique.hpp"
#include "quadent/densecode.hpp"
#include "quadent/gates.hpp"

using namespace quadent;

namespace {

std::size_t brute_force_clique(const Graph& g) {
  const std::size_t n = g.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = a + 1; b < n && ok; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !g.has_edge(a, b)) ok = false;
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

std::vector<PureState> states_of(const std::vector<EncodedState>& e) {
  std::vector<PureState> s;
  for (const auto& x : e) s.push_back(x.state);
  return s;
}

int n_of(const std::string& state, const std::string& dc, std::optional<std::vector<int>> senders = std::nullopt) {
  return capacity(make_state(state), dc, senders).max_orthogonal;
}

}  // namespace

TEST(Clique, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(9);
  for (int c = 0; c < 200; ++c) {
    std::size_t n = 1 + rng() % 16;
    double p = 0.2 + 0.7 * std::uniform_real_distribution<double>()(rng);
    Graph g(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (std::uniform_real_distribution<double>()(rng) < p) g.add_edge(a, b);
    auto w = lex_smallest_max_clique(g);
    ASSERT_EQ(max_clique_size(g), brute_force_clique(g)) << "case " << c;
    ASSERT_EQ(w.size(), max_clique_size(g));
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j) ASSERT_TRUE(g.has_edge(w[i], w[j]));
  }
}

TEST(Clique, LexSmallestTieBreak) {
  // disjoint triangles: the first wins; overlapping {1,2,3} and {1,3,4}: {1,2,3}
  Graph g(6);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}) g.add_edge(a, b);
  EXPECT_EQ(lex_smallest_max_clique(g), (std::vector<std::size_t>{0, 1, 2}));
  Graph h(5);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 4}, {1, 2}, {2, 3}, {1, 3}, {1, 4}, {3, 4}}) h.add_edge(a, b);
  EXPECT_EQ(lex_smallest_max_clique(h), (std::vector<std::size_t>{1, 2, 3}));
}

TEST(Clique, Complete64) {
  Graph g(64);
  for (std::size_t a = 0; a < 64; ++a)
    for (std::size_t b = a + 1; b < 64; ++b) g.add_edge(a, b);
  EXPECT_EQ(max_clique_size(g), 64u);
}

TEST(DenseCode, GhzSingleQubitEncodings) {
  auto e = generate_encoded(make_state("GHZ4"), {{0}, "DC1", false});
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(e[0].label, "I");
  EXPECT_EQ(max_mutually_orthogonal(states_of(e)).witness.size(), 4u);
}

TEST(DenseCode, WSingleQubitNotOrthogonal) {
  auto e = generate_encoded(make_state("W4"), {{0}, "DC1", false});
  ASSERT_EQ(e.size(), 4u);
  bool some_overlap = false;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) some_overlap |= std::abs(inner(e[i].state, e[j].state)) > 1e-10;
  EXPECT_TRUE(some_overlap);
  EXPECT_LT(max_mutually_orthogonal(states_of(e)).witness.size(), 4u);
}

TEST(DenseCode, OmegaTwoQubitEncodings) {
  auto e = generate_encoded(make_state("Omega"), {{0, 1}, "DC2", false});
  EXPECT_EQ(e.size(), 16u);
  EXPECT_EQ(max_mutually_orthogonal(states_of(e)).witness.size(), 16u);
}

TEST(DenseCode, OrthogonalInputKeptWhole) {
  std::vector<PureState> s;
  for (int i = 0; i < 4; ++i) s.push_back(PureState::basis(2, static_cast<std::uint64_t>(i)));
  EXPECT_EQ(max_mutually_orthogonal(s).witness, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(DenseCode, PhaseEqualStatesMerged) {
  auto a = PureState::from_label("00");
  auto b = apply_local(a, gates::pauli(3), {0});  // same ray
  auto r = max_mutually_orthogonal({a, b, PureState::from_label("11")});
  EXPECT_EQ(r.distinct, 2u);
  EXPECT_EQ(r.witness, (std::vector<std::size_t>{0, 2}));
}

TEST(DenseCode, CapacityTable) {
  EXPECT_EQ(n_of("GHZ4", "DC1"), 4);
  EXPECT_EQ(n_of("GHZ4", "DC2"), 8);
  EXPECT_EQ(n_of("GHZ4", "DC3"), 16);
  EXPECT_LT(n_of("W4", "DC1"), 4);
  EXPECT_EQ(n_of("W4", "DC2"), 8);
  EXPECT_EQ(n_of("W4", "DC3"), 8);
  EXPECT_EQ(n_of("W_mn", "DC1"), 4);
  EXPECT_EQ(n_of("Omega", "DC1"), 4);
  EXPECT_EQ(n_of("Omega", "DC2"), 16);
  EXPECT_EQ(n_of("Omega", "DC3"), 16);
  EXPECT_EQ(n_of("Q4", "DC1", std::vector<int>{1}), 4);
  EXPECT_LT(n_of("Q4", "DC1", std::vector<int>{0}), 4);
  EXPECT_EQ(n_of("Q4", "DC2"), 8);
  EXPECT_EQ(n_of("Q5", "DC1", std::vector<int>{1}), 4);
  EXPECT_EQ(n_of("Q5", "DC2", std::vector<int>{0, 1}), 8);
  EXPECT_EQ(n_of("Q5", "DC3"), 16);
}

TEST(DenseCode, BestSenderForQ4IsQubitTwo) {
  auto r = capacity(make_state("Q4"), "DC1");
  EXPECT_EQ(r.max_orthogonal, 4);
  EXPECT_EQ(r.sender_qubits, std::vector<int>{1});
  EXPECT_EQ(r.per_distribution.at("2"), 4);
  EXPECT_LT(r.per_distribution.at("1"), 4);
}

TEST(DenseCode, GhzFiveSendingFour) {
  auto r = capacity(make_state("GHZ:5"), "DC4");
  EXPECT_EQ(r.max_orthogonal, 32);
  EXPECT_DOUBLE_EQ(r.capacity_cbits, 5.0);
}

TEST(DenseCode, WitnessIsPairwiseOrthogonal) {
  for (const char* st : {"GHZ4", "W4", "Omega", "Q4", "Q5"})
    for (const char* dc : {"DC1", "DC2", "DC3"}) {
      auto res = make_state(st);
      auto r = capacity(res, dc);
      auto e = generate_encoded(res, {r.sender_qubits, dc, false});
      std::vector<PureState> w;
      for (const auto& lbl : r.witness)
        for (const auto& x : e)
          if (x.label == lbl) w.push_back(x.state);
      ASSERT_EQ(w.size(), r.witness.size()) << st << " " << dc;
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) EXPECT_LT(std::abs(inner(w[i], w[j])), 1e-10);
    }
}

TEST(DenseCodeProperty, PlainSigma2LeavesCapacityUnchanged) {
  for (const auto& st : catalog_state_names()) {
    auto s = make_state(st);
    if (s.state.num_qubits() != 4) continue;
    for (const char* dc : {"DC1", "DC2", "DC3"})
      EXPECT_EQ(capacity(s, dc).max_orthogonal, capacity(s, dc, std::nullopt, true).max_orthogonal) << st << dc;
  }
}

TEST(DenseCodeProperty, MonotoneInSenderCount) {
  for (const auto& st : catalog_state_names()) {
    auto s = make_state(st);
    if (s.state.num_qubits() != 4) continue;
    int a = capacity(s, "DC1").max_orthogonal, b = capacity(s, "DC2").max_orthogonal,
        c = capacity(s, "DC3").max_orthogonal;
    EXPECT_LE(a, b) << st;
    EXPECT_LE(b, c) << st;
    EXPECT_LE(c, 16) << st;
  }
}
