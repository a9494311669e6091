#include "quack/state.hpp"

#include <bit>
#include <cmath>

#include "quack/errors.hpp"

namespace quack {

namespace {

using Cplx = std::complex<double>;

void check_qubit(const StateVector& s, int qubit) {
  if (qubit < 0 || qubit >= s.n_qubits)
    throw DimensionError("qubit index " + std::to_string(qubit) + " out of range for " +
                         std::to_string(s.n_qubits) + " qubits");
}

/// Visits every (i0, i1) amplitude pair split by `qubit`.
template <typename F>
void for_each_pair(StateVector& s, int qubit, F&& body) {
  const std::size_t mask = std::size_t{1} << qubit;
  const std::size_t dim = s.dim();
  for (std::size_t base = 0; base < dim; base += 2 * mask) {
    for (std::size_t low = 0; low < mask; ++low) {
      const std::size_t i0 = base | low;
      body(s.amplitudes[i0], s.amplitudes[i0 | mask]);
    }
  }
}

struct TermMasks {
  std::size_t flip = 0;   // X and Y qubits
  std::size_t phase = 0;  // Y and Z qubits
  Cplx y_factor = 1.0;    // i^(#Y)
};

TermMasks term_masks(std::span<const Pauli> letters) {
  TermMasks m;
  int n_y = 0;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    switch (letters[q]) {
      case Pauli::I: break;
      case Pauli::X: m.flip |= std::size_t{1} << q; break;
      case Pauli::Y:
        m.flip |= std::size_t{1} << q;
        m.phase |= std::size_t{1} << q;
        ++n_y;
        break;
      case Pauli::Z: m.phase |= std::size_t{1} << q; break;
    }
  }
  constexpr Cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  m.y_factor = i_pow[n_y & 3];
  return m;
}

}  // namespace

StateVector StateVector::zero_state(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) throw InvalidSizeError("qubit count out of range");
  StateVector s;
  s.n_qubits = n_qubits;
  s.amplitudes.assign(std::size_t{1} << n_qubits, Cplx{0.0, 0.0});
  s.amplitudes[0] = 1.0;
  return s;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Cplx& a : amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

void apply_rx(StateVector& s, int qubit, double theta) {
  check_qubit(s, qubit);
  const double c = std::cos(theta / 2), sn = std::sin(theta / 2);
  const Cplx mis{0.0, -sn};
  for_each_pair(s, qubit, [&](Cplx& a0, Cplx& a1) {
    const Cplx t0 = a0, t1 = a1;
    a0 = c * t0 + mis * t1;
    a1 = mis * t0 + c * t1;
  });
}

void apply_ry(StateVector& s, int qubit, double theta) {
  check_qubit(s, qubit);
  const double c = std::cos(theta / 2), sn = std::sin(theta / 2);
  for_each_pair(s, qubit, [&](Cplx& a0, Cplx& a1) {
    const Cplx t0 = a0, t1 = a1;
    a0 = c * t0 - sn * t1;
    a1 = sn * t0 + c * t1;
  });
}

void apply_rz(StateVector& s, int qubit, double theta) {
  check_qubit(s, qubit);
  const Cplx e0 = std::polar(1.0, -theta / 2), e1 = std::polar(1.0, theta / 2);
  for_each_pair(s, qubit, [&](Cplx& a0, Cplx& a1) {
    a0 *= e0;
    a1 *= e1;
  });
}

void apply_cx(StateVector& s, int control, int target) {
  check_qubit(s, control);
  check_qubit(s, target);
  if (control == target) throw DimensionError("CX control equals target");
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  for (std::size_t i = 0; i < s.dim(); ++i)
    if ((i & cmask) && !(i & tmask)) std::swap(s.amplitudes[i], s.amplitudes[i | tmask]);
}

void apply_cy(StateVector& s, int control, int target) {
  check_qubit(s, control);
  check_qubit(s, target);
  if (control == target) throw DimensionError("CY control equals target");
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  const Cplx mi{0.0, -1.0}, pi{0.0, 1.0};
  for (std::size_t i = 0; i < s.dim(); ++i)
    if ((i & cmask) && !(i & tmask)) {
      const Cplx a0 = s.amplitudes[i], a1 = s.amplitudes[i | tmask];
      s.amplitudes[i] = mi * a1;
      s.amplitudes[i | tmask] = pi * a0;
    }
}

void apply_cz(StateVector& s, int qubit_a, int qubit_b) {
  check_qubit(s, qubit_a);
  check_qubit(s, qubit_b);
  if (qubit_a == qubit_b) throw DimensionError("CZ qubits coincide");
  const std::size_t both = (std::size_t{1} << qubit_a) | (std::size_t{1} << qubit_b);
  for (std::size_t i = 0; i < s.dim(); ++i)
    if ((i & both) == both) s.amplitudes[i] = -s.amplitudes[i];
}

void apply_pauli(StateVector& s, Pauli p, int qubit) {
  check_qubit(s, qubit);
  switch (p) {
    case Pauli::I: return;
    case Pauli::X:
      for_each_pair(s, qubit, [](Cplx& a0, Cplx& a1) { std::swap(a0, a1); });
      return;
    case Pauli::Y:
      for_each_pair(s, qubit, [](Cplx& a0, Cplx& a1) {
        const Cplx t0 = a0;
        a0 = Cplx{0.0, -1.0} * a1;
        a1 = Cplx{0.0, 1.0} * t0;
      });
      return;
    case Pauli::Z:
      for_each_pair(s, qubit, [](Cplx&, Cplx& a1) { a1 = -a1; });
      return;
  }
}

void accumulate_pauli_term(const StateVector& in, const PauliTerm& term, StateVector& out) {
  if (term.n_qubits() != in.n_qubits || out.n_qubits != in.n_qubits)
    throw DimensionError("Pauli term / state qubit mismatch");
  const TermMasks m = term_masks(term.letters);
  for (std::size_t j = 0; j < in.dim(); ++j) {
    const double sign = (std::popcount(j & m.phase) & 1) ? -1.0 : 1.0;
    out.amplitudes[j ^ m.flip] += term.coefficient * m.y_factor * sign * in.amplitudes[j];
  }
}

StateVector apply_hamiltonian(const StateVector& s, const Hamiltonian& h) {
  if (h.n_qubits != s.n_qubits) throw DimensionError("Hamiltonian / state qubit mismatch");
  StateVector out;
  out.n_qubits = s.n_qubits;
  out.amplitudes.assign(s.dim(), Cplx{0.0, 0.0});
  for (const PauliTerm& t : h.terms) accumulate_pauli_term(s, t, out);
  return out;
}

double pauli_string_expectation(const StateVector& s, std::span<const Pauli> letters) {
  if (static_cast<int>(letters.size()) != s.n_qubits)
    throw DimensionError("Pauli string / state qubit mismatch");
  const TermMasks m = term_masks(letters);
  Cplx acc{0.0, 0.0};
  for (std::size_t j = 0; j < s.dim(); ++j) {
    const double sign = (std::popcount(j & m.phase) & 1) ? -1.0 : 1.0;
    acc += std::conj(s.amplitudes[j ^ m.flip]) * (m.y_factor * sign * s.amplitudes[j]);
  }
  return acc.real();
}

double expectation(const StateVector& s, const Hamiltonian& h) {
  if (h.n_qubits != s.n_qubits) throw DimensionError("Hamiltonian / state qubit mismatch");
  double sum = 0.0;
  for (const PauliTerm& t : h.terms)
    sum += t.coefficient * pauli_string_expectation(s, t.letters);
  return sum;
}

}  // namespace quack
