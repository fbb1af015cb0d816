#include "quadent/pure_state.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace quadent {

namespace {

double norm2(std::span<const Complex> v) {
  double s = 0;
  for (const auto& a : v) s += std::norm(a);
  return s;
}

int log2_exact(std::size_t d) {
  int k = 0;
  while ((std::size_t{1} << k) < d) ++k;
  if ((std::size_t{1} << k) != d) throw DimensionError("dimension " + std::to_string(d) + " is not a power of two");
  return k;
}

std::uint64_t bit_of(int q, int n) { return std::uint64_t{1} << (n - 1 - q); }

}  // namespace

std::string basis_label(std::uint64_t index, int num_qubits) {
  std::string s(num_qubits, '0');
  for (int q = 0; q < num_qubits; ++q)
    if (index & bit_of(q, num_qubits)) s[q] = '1';
  return s;
}

std::uint64_t parse_label(std::string_view bits) {
  if (bits.size() > static_cast<std::size_t>(kMaxQubits)) throw CapacityError("label longer than qubit cap");
  std::uint64_t idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error("bad ket label '" + std::string(bits) + "'");
    idx = (idx << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return idx;
}

void check_targets(int num_qubits, std::span<const int> targets) {
  std::vector<bool> seen(num_qubits, false);
  for (int t : targets) {
    if (t < 0 || t >= num_qubits) throw DimensionError("target qubit " + std::to_string(t) + " out of range");
    if (seen[t]) throw DimensionError("duplicate target qubit " + std::to_string(t));
    seen[t] = true;
  }
}

PureState::PureState(int num_qubits, std::vector<Complex> amps) : n_(num_qubits), amps_(std::move(amps)) {
  if (n_ < 0) throw DimensionError("negative qubit count");
  if (n_ > kMaxQubits) throw CapacityError("state exceeds " + std::to_string(kMaxQubits) + " qubits");
  if (amps_.size() != (std::size_t{1} << n_))
    throw DimensionError("amplitude count " + std::to_string(amps_.size()) + " != 2^" + std::to_string(n_));
  if (std::abs(norm2(amps_) - 1.0) > kNormTol) throw ConstraintError("state is not normalized");
}

PureState PureState::normalized(int num_qubits, std::vector<Complex> amps) {
  double nrm = std::sqrt(norm2(amps));
  if (nrm < 1e-300) throw ConstraintError("cannot normalize the zero vector");
  for (auto& a : amps) a /= nrm;
  return PureState(num_qubits, std::move(amps));
}

PureState PureState::basis(int num_qubits, std::uint64_t index) {
  if (num_qubits > kMaxQubits) throw CapacityError("state exceeds qubit cap");
  std::vector<Complex> a(std::size_t{1} << num_qubits);
  a.at(index) = 1.0;
  return PureState(num_qubits, std::move(a));
}

PureState PureState::from_label(std::string_view bits) {
  return basis(static_cast<int>(bits.size()), parse_label(bits));
}

PureState PureState::from_kets(const std::vector<std::pair<std::string, Complex>>& kets) {
  if (kets.empty()) throw ConstraintError("empty ket list");
  int n = static_cast<int>(kets.front().first.size());
  if (n > kMaxQubits) throw CapacityError("state exceeds qubit cap");
  std::vector<Complex> a(std::size_t{1} << n);
  for (const auto& [label, c] : kets) {
    if (static_cast<int>(label.size()) != n) throw DimensionError("ket labels of mixed length");
    a[parse_label(label)] += c;
  }
  return normalized(n, std::move(a));
}

Complex PureState::amplitude(std::string_view label) const {
  if (static_cast<int>(label.size()) != n_) throw DimensionError("label length mismatch");
  return amps_[parse_label(label)];
}

std::string PureState::to_string(int precision) const {
  std::ostringstream os;
  os << std::setprecision(precision);
  bool first = true;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    Complex a = amps_[i];
    if (std::abs(a) < 1e-12) continue;
    if (!first) os << " + ";
    first = false;
    if (std::abs(a.imag()) < 1e-12)
      os << a.real();
    else if (std::abs(a.real()) < 1e-12)
      os << a.imag() << "i";
    else
      os << "(" << a.real() << (a.imag() < 0 ? "-" : "+") << std::abs(a.imag()) << "i)";
    os << "|" << basis_label(i, n_) << ">";
  }
  return first ? "0" : os.str();
}

LocalUnitary::LocalUnitary(int num_qubits, std::vector<Complex> row_major) : k_(num_qubits) {
  std::size_t d = std::size_t{1} << k_;
  if (row_major.size() != d * d) throw DimensionError("unitary entry count mismatch");
  m_.resize(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m_(r, c) = row_major[r * d + c];
  if (!(m_.adjoint() * m_).isIdentity(kNormTol)) throw ConstraintError("matrix is not unitary");
}

LocalUnitary::LocalUnitary(const Eigen::MatrixXcd& m) : k_(0), m_(m) {
  if (m.rows() != m.cols()) throw DimensionError("unitary must be square");
  k_ = log2_exact(static_cast<std::size_t>(m.rows()));
  if (!(m_.adjoint() * m_).isIdentity(kNormTol)) throw ConstraintError("matrix is not unitary");
}

LocalUnitary LocalUnitary::identity(int num_qubits) {
  auto d = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
  return LocalUnitary(Eigen::MatrixXcd::Identity(d, d));
}

LocalUnitary LocalUnitary::adjoint() const { return LocalUnitary(Eigen::MatrixXcd(m_.adjoint())); }

LocalUnitary LocalUnitary::operator*(const LocalUnitary& rhs) const {
  if (rhs.k_ != k_) throw DimensionError("composing unitaries of different size");
  return LocalUnitary(Eigen::MatrixXcd(m_ * rhs.m_));
}

LocalUnitary LocalUnitary::kron(const LocalUnitary& rhs) const {
  Eigen::Index a = m_.rows(), b = rhs.m_.rows();
  Eigen::MatrixXcd out(a * b, a * b);
  for (Eigen::Index i = 0; i < a; ++i)
    for (Eigen::Index j = 0; j < a; ++j) out.block(i * b, j * b, b, b) = m_(i, j) * rhs.m_;
  return LocalUnitary(out);
}

bool LocalUnitary::equivalent_up_to_phase(const LocalUnitary& other, double tol) const {
  if (other.k_ != k_) return false;
  Complex tr = (m_.adjoint() * other.m_).trace();
  return std::abs(std::abs(tr) - static_cast<double>(dim())) < tol * static_cast<double>(dim());
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m) : k_(0), m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionError("density matrix must be square");
  k_ = log2_exact(static_cast<std::size_t>(m_.rows()));
  if (m_.size() == 0 || (m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kNormTol)
    throw ConstraintError("density matrix is not Hermitian");
  if (std::abs(m_.trace() - Complex(1.0)) > kNormTol) throw ConstraintError("density matrix trace != 1");
  if (eigenvalues().minCoeff() < -kTol) throw ConstraintError("density matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::projector(const PureState& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s.amplitude(i);
  return DensityMatrix(v * v.adjoint());
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

PureState tensor(const PureState& a, const PureState& b) {
  int n = a.num_qubits() + b.num_qubits();
  if (n > kMaxQubits) throw CapacityError("tensor product exceeds " + std::to_string(kMaxQubits) + " qubits");
  std::vector<Complex> out(a.dim() * b.dim());
  auto aa = a.amplitudes();
  auto bb = b.amplitudes();
  for (std::size_t i = 0; i < aa.size(); ++i)
    for (std::size_t j = 0; j < bb.size(); ++j) out[i * bb.size() + j] = aa[i] * bb[j];
  return PureState(n, std::move(out));
}

PureState apply_local(const PureState& state, const LocalUnitary& u, std::span<const int> targets) {
  int n = state.num_qubits();
  check_targets(n, targets);
  int k = static_cast<int>(targets.size());
  if (u.num_qubits() != k) throw DimensionError("unitary acts on " + std::to_string(u.num_qubits()) + " qubits, " +
                                                std::to_string(k) + " targets given");
  std::vector<std::uint64_t> tbits(k);
  std::uint64_t tmask = 0;
  for (int i = 0; i < k; ++i) {
    tbits[i] = bit_of(targets[i], n);
    tmask |= tbits[i];
  }
  std::size_t d = std::size_t{1} << k;
  std::vector<std::uint64_t> offs(d, 0);
  for (std::size_t l = 0; l < d; ++l)
    for (int i = 0; i < k; ++i)
      if (l & (std::size_t{1} << (k - 1 - i))) offs[l] |= tbits[i];

  auto in = state.amplitudes();
  std::vector<Complex> out(in.size());
  const auto& m = u.matrix();
  std::vector<Complex> local(d);
  for (std::uint64_t base = 0; base < in.size(); ++base) {
    if (base & tmask) continue;
    for (std::size_t l = 0; l < d; ++l) local[l] = in[base | offs[l]];
    for (std::size_t r = 0; r < d; ++r) {
      Complex acc = 0;
      for (std::size_t c = 0; c < d; ++c) acc += m(r, c) * local[c];
      out[base | offs[r]] = acc;
    }
  }
  return PureState(n, std::move(out));
}

PureState apply_local(const PureState& state, const LocalUnitary& u, std::initializer_list<int> targets) {
  return apply_local(state, u, std::span<const int>(targets.begin(), targets.size()));
}

PureState permute_qubits(const PureState& state, std::span<const int> perm) {
  int n = state.num_qubits();
  if (static_cast<int>(perm.size()) != n) throw DimensionError("permutation size mismatch");
  std::vector<bool> hit(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p]) throw DimensionError("permutation is not a bijection");
    hit[p] = true;
  }
  auto in = state.amplitudes();
  std::vector<Complex> out(in.size());
  for (std::uint64_t i = 0; i < in.size(); ++i) {
    std::uint64_t j = 0;
    for (int q = 0; q < n; ++q)
      if (i & bit_of(q, n)) j |= bit_of(perm[q], n);
    out[j] = in[i];
  }
  return PureState(n, std::move(out));
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.num_qubits() != b.num_qubits()) throw DimensionError("inner product of states with different sizes");
  Complex s = 0;
  auto x = a.amplitudes();
  auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double fidelity_phase_invariant(const PureState& a, const PureState& b) {
  return std::min(1.0, std::norm(inner(a, b)));
}

DensityMatrix reduced_density(const PureState& state, std::span<const int> keep) {
  int n = state.num_qubits();
  if (keep.empty()) throw DimensionError("reduced_density needs at least one kept qubit");
  check_targets(n, keep);
  int k = static_cast<int>(keep.size());
  std::vector<int> rest;
  for (int q = 0; q < n; ++q)
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) rest.push_back(q);
  auto d = static_cast<Eigen::Index>(std::size_t{1} << k);
  auto e = static_cast<Eigen::Index>(std::size_t{1} << rest.size());
  // reshape into d x e with kept qubits as row index
  Eigen::MatrixXcd psi(d, e);
  auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    std::uint64_t r = 0, c = 0;
    for (int q : keep) r = (r << 1) | ((i & bit_of(q, n)) ? 1 : 0);
    for (int q : rest) c = (c << 1) | ((i & bit_of(q, n)) ? 1 : 0);
    psi(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = amps[i];
  }
  Eigen::MatrixXcd rho = psi * psi.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho));
}

DensityMatrix reduced_density(const PureState& state, std::initializer_list<int> keep) {
  return reduced_density(state, std::span<const int>(keep.begin(), keep.size()));
}

double purity(const DensityMatrix& rho) { return (rho.matrix() * rho.matrix()).trace().real(); }

std::vector<Complex> contract(std::span<const Complex> amps, int n, std::span<const Complex> bra,
                              std::span<const int> targets) {
  check_targets(n, targets);
  int k = static_cast<int>(targets.size());
  if (bra.size() != (std::size_t{1} << k)) throw DimensionError("bra size does not match target count");
  std::vector<int> rest;
  for (int q = 0; q < n; ++q)
    if (std::find(targets.begin(), targets.end(), q) == targets.end()) rest.push_back(q);
  std::vector<Complex> out(std::size_t{1} << rest.size());
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (amps[i] == Complex(0)) continue;
    std::uint64_t r = 0, c = 0;
    for (int q : targets) r = (r << 1) | ((i & bit_of(q, n)) ? 1 : 0);
    for (int q : rest) c = (c << 1) | ((i & bit_of(q, n)) ? 1 : 0);
    out[c] += std::conj(bra[r]) * amps[i];
  }
  return out;
}

std::vector<Complex> contract(const PureState& state, const PureState& bra, std::span<const int> targets) {
  return contract(state.amplitudes(), state.num_qubits(), bra.amplitudes(), targets);
}

}  // namespace quadent
