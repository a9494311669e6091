#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace quack {

enum class Pauli : std::uint8_t { I, X, Y, Z };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);  // throws Error on anything outside {I,X,Y,Z}

/// One weighted Pauli string. `letters[q]` acts on qubit q.
struct PauliTerm {
  double coefficient = 0.0;
  std::vector<Pauli> letters;

  int n_qubits() const { return static_cast<int>(letters.size()); }
};

/// Weighted sum of Pauli strings on a fixed qubit count.
struct Hamiltonian {
  int n_qubits = 0;
  std::vector<PauliTerm> terms;

  /// Throws unless all terms match n_qubits, coefficients are finite and the
  /// term list is non-empty.
  void validate() const;
};

/// Transverse-field Ising Hamiltonian with periodic boundary:
///   H = -sum_i Z_i Z_{i+1 mod n} - h sum_i X_i
/// ZZ terms first (i = 0..n-1), then X terms. Exact-zero coefficients are
/// pruned. For n = 2 the periodic sum emits the Z0 Z1 pair twice.
Hamiltonian ising_hamiltonian(int n_qubits, double h);

/// Parses the Pauli-sum text format: one "<coefficient> <letters>" term per
/// line, '#' starts a comment, blank lines ignored. Column k of the letters
/// string is qubit k. Throws ParseError with a 1-based line number.
Hamiltonian parse_hamiltonian(std::string_view text);

Hamiltonian load_hamiltonian_file(const std::string& path);

/// Canonical serialization: one term per line, coefficients with 17
/// significant digits.
std::string format_hamiltonian(const Hamiltonian& h);

/// Minimum eigenvalue by dense diagonalization. Capped at 14 qubits.
double exact_ground_energy(const Hamiltonian& h);

}  // namespace quack
