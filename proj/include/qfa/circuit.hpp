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

#ifndef QFA_CIRCUIT_HPP
#define QFA_CIRCUIT_HPP

#include <boost/container/small_vector.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qfa/dyadic.hpp"
#include "qfa/numfmt.hpp"

namespace qfa {

enum class GateKind { H, X, SX, SXDG, P, RZ, CX, CP, SWAP, MCX, MCP, GMS };

std::string_view gate_kind_name(GateKind k);

/// Symmetric coupling matrix of a global Molmer-Sorensen pulse.
/// Angles are dyadic multiples of pi; zero diagonal. xx_basis selects
/// exp(-i/2 sum chi_ij X_i X_j) versus the ZZ picture.
struct GmsCoupling {
  int nq = 0;
  bool xx_basis = true;
  std::vector<Dyadic> chi;  // upper triangle, row-major: (0,1),(0,2),...,(1,2),...

  static GmsCoupling zeros(int nq, bool xx_basis);
  const Dyadic& at(int i, int j) const;
  Dyadic& at(int i, int j);
  bool is_uniform() const;
};

/// One gate. Qubits are global wire indices.
/// MCX/MCP store [controls..., target]; CP is symmetric but stores [a, b].
/// Angles are exact dyadic multiples of pi until lowering.
struct Gate {
  GateKind kind;
  boost::container::small_vector<uint32_t, 4> qubits;
  Dyadic angle;                             // P, RZ, CP, MCP
  std::shared_ptr<const GmsCoupling> gms;   // GMS only

  int num_controls() const;
  uint32_t target() const { return qubits.back(); }
  Gate adjoint() const;
};

Gate make_gate(GateKind kind, std::initializer_list<uint32_t> qubits, Dyadic angle = Dyadic());

struct Register {
  enum class Role { Data, Target, Ancilla, Scratch, Carry, Control };

  std::string name;
  uint32_t offset = 0;
  uint32_t size = 0;
  Role role = Role::Data;
  std::optional<QFormat> format;
};

/// Gate-level circuit over named qubit registers.
///
/// output_permutation maps logical qubit -> physical wire and is interpretive:
/// register values are read through it after simulation (identity when empty).
/// global_phase is an exact multiple of pi accumulated by lowering steps.
class Circuit {
 public:
  /// Returns a copy: later registrations reallocate the internal table.
  Register add_register(const std::string& name, uint32_t size,
                        Register::Role role = Register::Role::Data,
                        std::optional<QFormat> format = std::nullopt);

  uint32_t qubit_count() const { return qubit_count_; }
  const std::vector<Register>& registers() const { return registers_; }
  const Register& reg(const std::string& name) const;  // throws DomainError
  const Register* find_reg(const std::string& name) const;

  const std::vector<Gate>& gates() const { return gates_; }
  void append(Gate g);
  void append_all(const std::vector<Gate>& gs);

  // gate helpers
  void h(uint32_t q) { append(make_gate(GateKind::H, {q})); }
  void x(uint32_t q) { append(make_gate(GateKind::X, {q})); }
  void sx(uint32_t q) { append(make_gate(GateKind::SX, {q})); }
  void p(uint32_t q, Dyadic angle) { append(make_gate(GateKind::P, {q}, std::move(angle))); }
  void rz(uint32_t q, Dyadic angle) { append(make_gate(GateKind::RZ, {q}, std::move(angle))); }
  void cx(uint32_t c, uint32_t t) { append(make_gate(GateKind::CX, {c, t})); }
  void cp(uint32_t a, uint32_t b, Dyadic angle) {
    append(make_gate(GateKind::CP, {a, b}, std::move(angle)));
  }
  void swap(uint32_t a, uint32_t b) { append(make_gate(GateKind::SWAP, {a, b})); }
  void mcx(const std::vector<uint32_t>& controls, uint32_t t);
  void mcp(const std::vector<uint32_t>& controls, uint32_t t, Dyadic angle);
  void gms(const std::vector<uint32_t>& qubits, std::shared_ptr<const GmsCoupling> chi);

  const Dyadic& global_phase() const { return global_phase_; }
  void add_global_phase(const Dyadic& pi_units) { global_phase_ = (global_phase_ + pi_units).mod_two(); }

  /// logical -> physical wire; empty means identity.
  const std::vector<uint32_t>& output_permutation() const { return output_permutation_; }
  void set_output_permutation(std::vector<uint32_t> perm);
  uint32_t physical_wire(uint32_t logical) const {
    return output_permutation_.empty() ? logical : output_permutation_[logical];
  }

  /// Greedy ASAP layering: each gate runs at 1 + max depth of its qubits.
  int depth() const;

  std::map<GateKind, long> gate_counts() const;
  long count(GateKind k) const;

  /// Reversed adjoint. Requires an identity output permutation.
  Circuit inverse() const;

  /// Lowers to the {CX, RZ, SX} basis, tracking the global phase exactly.
  Circuit transpiled() const;

  /// Concatenation. Requires identical registers and an identity output
  /// permutation on *this; the result takes `next`'s permutation.
  Circuit compose(const Circuit& next) const;

 private:
  uint32_t qubit_count_ = 0;
  std::vector<Register> registers_;
  std::vector<Gate> gates_;
  std::vector<uint32_t> output_permutation_;
  Dyadic global_phase_;
};

}  // namespace qfa

#endif  // QFA_CIRCUIT_HPP
