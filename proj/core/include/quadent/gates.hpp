#pragma once

#include <string>
#include <vector>

#include "quadent/pure_state.hpp"

namespace quadent::gates {

// Pauli codes used throughout: 0 = I, 1 = sigma1, 2 = i*sigma2, 3 = sigma3.
enum class Pauli : int { I = 0, X = 1, iY = 2, Z = 3 };

LocalUnitary pauli(int code);
LocalUnitary sigma2();  // plain sigma2, without the factor i
LocalUnitary hadamard();
LocalUnitary pauli_string(const std::vector<int>& codes);
// Pauli word with sigma2 in place of i*sigma2 on the flagged slots.
LocalUnitary pauli_string(const std::vector<int>& codes, const std::vector<bool>& plain_sigma2);

// Controlled phase on qubits (a, b) of a k-qubit register.
LocalUnitary cz(int k, int a, int b);
// I - 2|x><x| on k qubits.
LocalUnitary phase_flip(int k, std::uint64_t x);

std::string pauli_name(int code);
std::string pauli_word(const std::vector<int>& codes);

}  // namespace quadent::gates
