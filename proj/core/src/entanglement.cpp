#include "quadent/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "quadent/densecode.hpp"
#include "quadent/gates.hpp"

namespace quadent {

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.num_qubits() != 2) throw DimensionError("concurrence needs a two-qubit density matrix");
  Eigen::MatrixXcd yy = gates::sigma2().kron(gates::sigma2()).matrix();
  // λ_i are the singular values of T_ij = <v_i|σ2⊗σ2|v_j*> over the subnormalized
  // eigenvectors v_i of ρ. Eigenvalues at rounding level are dropped: near a
  // rank-deficient ρ the square roots would otherwise turn 1e-16 noise into 1e-8.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix());
  const double cut = kNormTol * std::max(1.0, es.eigenvalues().maxCoeff());
  std::vector<Eigen::VectorXcd> v;
  for (int i = 0; i < 4; ++i)
    if (es.eigenvalues()(i) > cut) v.push_back(std::sqrt(es.eigenvalues()(i)) * es.eigenvectors().col(i));
  const auto k = static_cast<Eigen::Index>(v.size());
  Eigen::MatrixXcd t(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      t(i, j) = v[static_cast<std::size_t>(i)].dot(yy * v[static_cast<std::size_t>(j)].conjugate());
  Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(t).singularValues();  // descending
  double c = k ? sv(0) : 0.0;
  for (Eigen::Index i = 1; i < k; ++i) c -= sv(i);
  return std::max(0.0, c);
}

double three_tangle_pure(const PureState& s) {
  if (s.num_qubits() != 3) throw DimensionError("three-tangle needs a three-qubit state");
  auto ra = reduced_density(s, {0});
  double c_a_bc = 4 * std::max(0.0, std::real(ra.matrix().determinant()));
  double cab = wootters_concurrence(reduced_density(s, {0, 1}));
  double cac = wootters_concurrence(reduced_density(s, {0, 2}));
  return std::clamp(c_a_bc - cab * cab - cac * cac, 0.0, 1.0);
}

double three_tangle_spectral_bound(const DensityMatrix& rho) {
  if (rho.num_qubits() != 3) throw DimensionError("three-tangle needs a three-qubit density matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix());
  double bound = 0;
  for (int i = 0; i < 8; ++i) {
    double w = es.eigenvalues()(i);
    if (w < 1e-12) continue;
    std::vector<Complex> v(8);
    for (int j = 0; j < 8; ++j) v[j] = es.eigenvectors()(j, i);
    bound += w * three_tangle_pure(PureState::normalized(3, std::move(v)));
  }
  return bound;
}

EntanglementProfile profile(const NamedState& ns) {
  const PureState& s = ns.state;
  const int n = s.num_qubits();
  if (n < 2 || n > 6) throw DimensionError("profile supports 2 to 6 qubits");
  EntanglementProfile p;
  p.state = ns.name;
  p.genuine = true;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> keep;
    for (int q = 0; q < n; ++q)
      if (mask & (1u << (n - 1 - q))) keep.push_back(q);
    auto rho = reduced_density(s, std::span<const int>(keep));
    double pu = purity(rho);
    std::string key = qubit_set_label(keep);
    p.purity[key] = pu;
    p.max_purity = std::max(p.max_purity, pu);
    if (pu > 1 - 1e-6) p.genuine = false;
    if (keep.size() == 2) p.concurrence[key] = wootters_concurrence(rho);
    if (keep.size() == 3 && n == 4) {
      int traced = 0;
      while (std::find(keep.begin(), keep.end(), traced) != keep.end()) ++traced;
      p.mixed_tangle_bound[std::to_string(traced + 1)] = three_tangle_spectral_bound(rho);
    }
  }
  return p;
}

}  // namespace quadent
