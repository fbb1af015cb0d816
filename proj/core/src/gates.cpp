#include "quadent/gates.hpp"

namespace quadent::gates {

namespace {
const Complex I1{0, 1};
}

LocalUnitary pauli(int code) {
  switch (code) {
    case 0:
      return LocalUnitary(1, {1, 0, 0, 1});
    case 1:
      return LocalUnitary(1, {0, 1, 1, 0});
    case 2:
      return LocalUnitary(1, {0, 1, -1, 0});
    case 3:
      return LocalUnitary(1, {1, 0, 0, -1});
  }
  throw Error("Pauli code out of range: " + std::to_string(code));
}

LocalUnitary sigma2() { return LocalUnitary(1, {0, -I1, I1, 0}); }

LocalUnitary hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  return LocalUnitary(1, {r, r, r, -r});
}

LocalUnitary pauli_string(const std::vector<int>& codes) {
  return pauli_string(codes, std::vector<bool>(codes.size(), false));
}

LocalUnitary pauli_string(const std::vector<int>& codes, const std::vector<bool>& plain_sigma2) {
  if (codes.empty()) return LocalUnitary::identity(0);
  auto slot = [&](std::size_t i) { return (codes[i] == 2 && plain_sigma2.at(i)) ? sigma2() : pauli(codes[i]); };
  LocalUnitary u = slot(0);
  for (std::size_t i = 1; i < codes.size(); ++i) u = u.kron(slot(i));
  return u;
}

LocalUnitary cz(int k, int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= k || b >= k) throw DimensionError("bad controlled-phase placement");
  auto d = static_cast<Eigen::Index>(std::size_t{1} << k);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
  std::uint64_t ma = std::uint64_t{1} << (k - 1 - a);
  std::uint64_t mb = std::uint64_t{1} << (k - 1 - b);
  for (Eigen::Index i = 0; i < d; ++i)
    if ((i & ma) && (i & mb)) m(i, i) = -1;
  return LocalUnitary(m);
}

LocalUnitary phase_flip(int k, std::uint64_t x) {
  auto d = static_cast<Eigen::Index>(std::size_t{1} << k);
  if (static_cast<Eigen::Index>(x) >= d) throw DimensionError("phase flip label out of range");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
  m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = -1;
  return LocalUnitary(m);
}

std::string pauli_name(int code) {
  static const char* names[] = {"I", "σ1", "iσ2", "σ3"};
  if (code < 0 || code > 3) throw Error("Pauli code out of range");
  return names[code];
}

std::string pauli_word(const std::vector<int>& codes) {
  std::string s;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) s += "⊗";
    s += pauli_name(codes[i]);
  }
  return s;
}

}  // namespace quadent::gates
