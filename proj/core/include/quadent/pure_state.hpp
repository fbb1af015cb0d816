#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace quadent {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 12;
inline constexpr double kTol = 1e-10;      // assertions, orthogonality, feasibility
inline constexpr double kNormTol = 1e-12;  // normalization / unitarity checks

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionError : Error {
  using Error::Error;
};
struct CapacityError : Error {
  using Error::Error;
};
struct UnknownNameError : Error {
  using Error::Error;
};
struct ConstraintError : Error {
  using Error::Error;
};

// Normalized amplitude vector. Qubit 0 is the leftmost symbol of a ket label,
// i.e. the most significant bit of the basis index.
// A 0-qubit state is a unit scalar; it appears as the residual of a measurement
// that consumes every qubit.
class PureState {
 public:
  PureState(int num_qubits, std::vector<Complex> amps);

  // Rescales to unit norm. Throws on the zero vector.
  static PureState normalized(int num_qubits, std::vector<Complex> amps);
  static PureState basis(int num_qubits, std::uint64_t index);
  static PureState from_label(std::string_view bits);
  // Ket list such as {{"0000", 1}, {"1111", -1}}; renormalized.
  static PureState from_kets(const std::vector<std::pair<std::string, Complex>>& kets);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex amplitude(std::uint64_t index) const { return amps_.at(index); }
  Complex amplitude(std::string_view label) const;

  std::string to_string(int precision = 6) const;

  bool operator==(const PureState&) const = default;

 private:
  int n_;
  std::vector<Complex> amps_;
};

std::string basis_label(std::uint64_t index, int num_qubits);
std::uint64_t parse_label(std::string_view bits);

class LocalUnitary {
 public:
  LocalUnitary(int num_qubits, std::vector<Complex> row_major);
  explicit LocalUnitary(const Eigen::MatrixXcd& m);

  static LocalUnitary identity(int num_qubits);

  int num_qubits() const { return k_; }
  std::size_t dim() const { return std::size_t{1} << k_; }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  LocalUnitary adjoint() const;
  // (*this) * rhs, i.e. rhs acts first.
  LocalUnitary operator*(const LocalUnitary& rhs) const;
  // Kronecker product, this on the leading qubits.
  LocalUnitary kron(const LocalUnitary& rhs) const;

  // True if the two operators agree up to a global phase.
  bool equivalent_up_to_phase(const LocalUnitary& other, double tol = kTol) const;

 private:
  int k_;
  Eigen::MatrixXcd m_;
};

class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd m);

  static DensityMatrix projector(const PureState& s);

  int num_qubits() const { return k_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  Eigen::VectorXd eigenvalues() const;

 private:
  int k_;
  Eigen::MatrixXcd m_;
};

PureState tensor(const PureState& a, const PureState& b);
PureState apply_local(const PureState& state, const LocalUnitary& u, std::span<const int> targets);
PureState apply_local(const PureState& state, const LocalUnitary& u, std::initializer_list<int> targets);
// perm[i] is the new position of qubit i.
PureState permute_qubits(const PureState& state, std::span<const int> perm);
Complex inner(const PureState& a, const PureState& b);
double fidelity_phase_invariant(const PureState& a, const PureState& b);
DensityMatrix reduced_density(const PureState& state, std::span<const int> keep);
DensityMatrix reduced_density(const PureState& state, std::initializer_list<int> keep);
double purity(const DensityMatrix& rho);

// Raw helpers shared by the engines. `targets` are positions in `state`; the
// bra is contracted against them in order and the untouched qubits keep their
// relative order in the (unnormalized) result.
std::vector<Complex> contract(const PureState& state, const PureState& bra, std::span<const int> targets);
std::vector<Complex> contract(std::span<const Complex> amps, int num_qubits, std::span<const Complex> bra,
                              std::span<const int> targets);

void check_targets(int num_qubits, std::span<const int> targets);

}  // namespace quadent
