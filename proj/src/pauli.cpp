#include "quack/pauli.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "quack/errors.hpp"

namespace quack {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  throw Error("corrupt Pauli value");
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw Error(std::string("not a Pauli letter: '") + c + "'");
  }
}

void Hamiltonian::validate() const {
  if (n_qubits < 1) throw InvalidSizeError("Hamiltonian needs at least one qubit");
  if (terms.empty()) throw InvalidSizeError("Hamiltonian term list is empty");
  for (const PauliTerm& t : terms) {
    if (t.n_qubits() != n_qubits)
      throw DimensionError("Pauli term width " + std::to_string(t.n_qubits()) +
                           " does not match n_qubits = " + std::to_string(n_qubits));
    if (!std::isfinite(t.coefficient)) throw NumericalError("non-finite term coefficient");
  }
}

Hamiltonian ising_hamiltonian(int n_qubits, double h) {
  if (n_qubits < 2) throw InvalidSizeError("Ising model needs n >= 2 qubits");
  Hamiltonian out;
  out.n_qubits = n_qubits;
  for (int i = 0; i < n_qubits; ++i) {
    PauliTerm t;
    t.coefficient = -1.0;
    t.letters.assign(n_qubits, Pauli::I);
    t.letters[i] = Pauli::Z;
    t.letters[(i + 1) % n_qubits] = Pauli::Z;
    out.terms.push_back(std::move(t));
  }
  if (h != 0.0) {
    for (int i = 0; i < n_qubits; ++i) {
      PauliTerm t;
      t.coefficient = -h;
      t.letters.assign(n_qubits, Pauli::I);
      t.letters[i] = Pauli::X;
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

Hamiltonian parse_hamiltonian(std::string_view text) {
  Hamiltonian out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string coeff_str, letters, extra;
    if (!(fields >> coeff_str)) continue;  // blank / comment-only line
    if (!(fields >> letters)) throw ParseError("missing Pauli letters", line_no);
    if (fields >> extra) throw ParseError("trailing content after Pauli letters", line_no);

    PauliTerm term;
    std::size_t used = 0;
    try {
      term.coefficient = std::stod(coeff_str, &used);
    } catch (const std::exception&) {
      throw ParseError("bad coefficient '" + coeff_str + "'", line_no);
    }
    if (used != coeff_str.size()) throw ParseError("bad coefficient '" + coeff_str + "'", line_no);
    if (!std::isfinite(term.coefficient)) throw ParseError("non-finite coefficient", line_no);

    term.letters.reserve(letters.size());
    for (char c : letters) {
      try {
        term.letters.push_back(pauli_from_char(c));
      } catch (const Error&) {
        throw ParseError(std::string("bad Pauli letter '") + c + "'", line_no);
      }
    }
    if (out.terms.empty()) {
      out.n_qubits = term.n_qubits();
    } else if (term.n_qubits() != out.n_qubits) {
      throw ParseError("term width " + std::to_string(term.n_qubits()) +
                           " differs from earlier width " + std::to_string(out.n_qubits),
                       line_no);
    }
    out.terms.push_back(std::move(term));
  }
  if (out.terms.empty()) throw ParseError("no terms found", line_no == 0 ? 1 : line_no);
  return out;
}

Hamiltonian load_hamiltonian_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open Hamiltonian file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hamiltonian(buf.str());
}

std::string format_hamiltonian(const Hamiltonian& h) {
  h.validate();
  std::string out;
  char num[64];
  for (const PauliTerm& t : h.terms) {
    std::snprintf(num, sizeof(num), "%.17g", t.coefficient);
    out += num;
    out += ' ';
    for (Pauli p : t.letters) out += pauli_char(p);
    out += '\n';
  }
  return out;
}

double exact_ground_energy(const Hamiltonian& h) {
  h.validate();
  if (h.n_qubits > 14)
    throw CapacityError("dense diagonalization capped at 14 qubits, got " +
                        std::to_string(h.n_qubits));
  const std::size_t dim = std::size_t{1} << h.n_qubits;
  using Cplx = std::complex<double>;
  Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(dim, dim);
  // Column j of each Pauli string has the single entry factor(j) at row j^flip.
  for (const PauliTerm& t : h.terms) {
    std::size_t flip = 0, phase = 0;
    int n_y = 0;
    for (int q = 0; q < t.n_qubits(); ++q) {
      switch (t.letters[q]) {
        case Pauli::I: break;
        case Pauli::X: flip |= std::size_t{1} << q; break;
        case Pauli::Y:
          flip |= std::size_t{1} << q;
          phase |= std::size_t{1} << q;
          ++n_y;
          break;
        case Pauli::Z: phase |= std::size_t{1} << q; break;
      }
    }
    const Cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Cplx y_factor = i_pow[n_y & 3];
    for (std::size_t j = 0; j < dim; ++j) {
      const double sign = (std::popcount(j & phase) & 1) ? -1.0 : 1.0;
      dense(j ^ flip, j) += t.coefficient * y_factor * sign;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("dense eigensolver failed");
  return solver.eigenvalues()(0);
}

}  // namespace quack
