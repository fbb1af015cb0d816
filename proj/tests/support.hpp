#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "quadent/pure_state.hpp"

namespace quadent::testing {

inline PureState random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> a(std::size_t{1} << n);
  for (auto& x : a) x = {g(rng), g(rng)};
  return PureState::normalized(n, std::move(a));
}

// Haar-distributed via QR of a complex Ginibre matrix.
inline LocalUnitary random_unitary(int k, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const int d = 1 << k;
  Eigen::MatrixXcd m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = {g(rng), g(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) q.col(i) *= std::polar(1.0, std::arg(r(i, i)));
  return LocalUnitary(q);
}

inline std::vector<int> random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// k distinct qubits out of n, in random order.
inline std::vector<int> random_targets(int n, int k, std::mt19937_64& rng) {
  auto p = random_perm(n, rng);
  p.resize(static_cast<std::size_t>(k));
  return p;
}

inline double norm_of(const PureState& s) {
  double t = 0;
  for (auto a : s.amplitudes()) t += std::norm(a);
  return std::sqrt(t);
}

}  // namespace quadent::testing
