// Copyright 2026 The qfa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFA_SIMULATOR_HPP
#define QFA_SIMULATOR_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "qfa/circuit.hpp"

namespace qfa {

struct StateVector {
  int nq = 0;
  std::vector<std::complex<double>> amps;
};

/// Simulator qubit cap: QFA_QUBIT_LIMIT env var, default 24.
int simulator_qubit_limit();

/// Exact gate-by-gate statevector simulation from a computational basis input.
/// Deterministic; the output permutation is interpretive and NOT applied here.
/// Throws LimitError above the qubit cap.
StateVector simulate(const Circuit& c, uint64_t basis_input);

struct UnitaryMatrix {
  int nq = 0;
  std::vector<std::complex<double>> m;  // row-major, dim = 2^nq
  std::complex<double>& at(size_t row, size_t col) { return m[row * dim() + col]; }
  const std::complex<double>& at(size_t row, size_t col) const { return m[row * dim() + col]; }
  size_t dim() const { return size_t(1) << nq; }
};

/// Columns are simulations of basis states; output permutation and global
/// phase included when apply_permutation is set. Limited to 10 qubits.
UnitaryMatrix unitary_of(const Circuit& c, bool apply_permutation = true);

struct EquivResult {
  bool equal = false;
  double max_deviation = 0.0;
};

/// Phase-aligned max-entry comparison of two circuits' unitaries.
EquivResult assert_equiv(const Circuit& c1, const Circuit& c2, double tol = 1e-9,
                         bool up_to_global_phase = true);

/// Index of the single basis state with |amplitude| within tol of 1.
/// Throws DomainError when the state is not a pure basis state.
uint64_t dominant_basis_state(const StateVector& s, double tol = 1e-9);

/// Reads a register's residue out of a basis index, honoring the circuit's
/// output permutation.
BigInt read_register(uint64_t basis_index, const Circuit& c, const std::string& reg_name);

/// Writes a residue into a basis index at the register's physical wires
/// (inputs precede the circuit, so no permutation applies).
uint64_t write_register(uint64_t basis_index, const Circuit& c, const std::string& reg_name,
                        const BigInt& value);

}  // namespace qfa

#endif  // QFA_SIMULATOR_HPP
