#pragma once

#include <complex>
#include <span>
#include <vector>

#include "quack/pauli.hpp"

namespace quack {

/// Dense statevector. Basis-state index bit q is qubit q (qubit 0 = least
/// significant bit), so `amplitudes[5]` is the coefficient of |...101>.
struct StateVector {
  int n_qubits = 0;
  std::vector<std::complex<double>> amplitudes;

  static StateVector zero_state(int n_qubits);
  std::size_t dim() const { return amplitudes.size(); }
  double norm() const;
};

// In-place single- and two-qubit gates, exp(-i theta P / 2) convention.
void apply_rx(StateVector& s, int qubit, double theta);
void apply_ry(StateVector& s, int qubit, double theta);
void apply_rz(StateVector& s, int qubit, double theta);
void apply_cx(StateVector& s, int control, int target);
void apply_cy(StateVector& s, int control, int target);
void apply_cz(StateVector& s, int qubit_a, int qubit_b);

/// In-place single-qubit Pauli (used for derivative-state insertion).
void apply_pauli(StateVector& s, Pauli p, int qubit);

/// out += coefficient * P * in for one weighted Pauli string.
void accumulate_pauli_term(const StateVector& in, const PauliTerm& term, StateVector& out);

/// H|psi> as a fresh state (not normalized).
StateVector apply_hamiltonian(const StateVector& s, const Hamiltonian& h);

/// <psi|P|psi> for a bare Pauli string (no coefficient); real part returned,
/// the O(1e-16) imaginary residue is discarded.
double pauli_string_expectation(const StateVector& s, std::span<const Pauli> letters);

/// <psi|H|psi> = sum_j h_j <psi|P_j|psi>.
double expectation(const StateVector& s, const Hamiltonian& h);

}  // namespace quack
