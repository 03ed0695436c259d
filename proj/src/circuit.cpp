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

#include "qfa/circuit.hpp"

#include <algorithm>
#include <set>

#include "qfa/errors.hpp"

namespace qfa {

std::string_view gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::SX: return "sx";
    case GateKind::SXDG: return "sxdg";
    case GateKind::P: return "p";
    case GateKind::RZ: return "rz";
    case GateKind::CX: return "cx";
    case GateKind::CP: return "cp";
    case GateKind::SWAP: return "swap";
    case GateKind::MCX: return "mcx";
    case GateKind::MCP: return "mcp";
    case GateKind::GMS: return "gms";
  }
  return "?";
}

GmsCoupling GmsCoupling::zeros(int nq, bool xx_basis) {
  GmsCoupling g;
  g.nq = nq;
  g.xx_basis = xx_basis;
  g.chi.assign(static_cast<size_t>(nq) * (nq - 1) / 2, Dyadic());
  return g;
}

namespace {
size_t tri_index(int nq, int i, int j) {
  if (i > j) std::swap(i, j);
  // row i, column j>i in the upper triangle
  return static_cast<size_t>(i) * nq - static_cast<size_t>(i) * (i + 1) / 2 + (j - i - 1);
}
}  // namespace

const Dyadic& GmsCoupling::at(int i, int j) const { return chi[tri_index(nq, i, j)]; }
Dyadic& GmsCoupling::at(int i, int j) { return chi[tri_index(nq, i, j)]; }

bool GmsCoupling::is_uniform() const {
  for (const auto& c : chi)
    if (!(c == chi.front())) return false;
  return true;
}

int Gate::num_controls() const {
  switch (kind) {
    case GateKind::CX:
    case GateKind::CP:
      return 1;
    case GateKind::MCX:
    case GateKind::MCP:
      return static_cast<int>(qubits.size()) - 1;
    default:
      return 0;
  }
}

Gate Gate::adjoint() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::P:
    case GateKind::RZ:
    case GateKind::CP:
    case GateKind::MCP:
      g.angle = -angle;  // exact; reduction happens at lowering/emission
      break;
    case GateKind::SX:
      g.kind = GateKind::SXDG;
      break;
    case GateKind::SXDG:
      g.kind = GateKind::SX;
      break;
    case GateKind::GMS: {
      auto neg = std::make_shared<GmsCoupling>(*gms);
      for (auto& c : neg->chi) c = -c;
      g.gms = std::move(neg);
      break;
    }
    default:
      break;  // H, X, CX, SWAP, MCX are self-adjoint
  }
  return g;
}

Gate make_gate(GateKind kind, std::initializer_list<uint32_t> qubits, Dyadic angle) {
  Gate g;
  g.kind = kind;
  g.qubits.assign(qubits.begin(), qubits.end());
  g.angle = std::move(angle);
  return g;
}

Register Circuit::add_register(const std::string& name, uint32_t size, Register::Role role,
                               std::optional<QFormat> format) {
  if (find_reg(name)) throw DomainError("Circuit: duplicate register '" + name + "'");
  if (size == 0) throw DomainError("Circuit: register '" + name + "' has size 0");
  Register r;
  r.name = name;
  r.offset = qubit_count_;
  r.size = size;
  r.role = role;
  r.format = std::move(format);
  qubit_count_ += size;
  registers_.push_back(std::move(r));
  return registers_.back();
}

const Register& Circuit::reg(const std::string& name) const {
  if (const Register* r = find_reg(name)) return *r;
  throw DomainError("Circuit: no register '" + name + "'");
}

const Register* Circuit::find_reg(const std::string& name) const {
  for (const auto& r : registers_)
    if (r.name == name) return &r;
  return nullptr;
}

void Circuit::append(Gate g) {
  std::set<uint32_t> seen;
  for (uint32_t q : g.qubits) {
    if (q >= qubit_count_)
      throw DomainError("Circuit: gate qubit " + std::to_string(q) + " out of range");
    if (!seen.insert(q).second)
      throw DomainError("Circuit: duplicate qubit in gate " +
                        std::string(gate_kind_name(g.kind)));
  }
  gates_.push_back(std::move(g));
}

void Circuit::append_all(const std::vector<Gate>& gs) {
  for (const auto& g : gs) append(g);
}

void Circuit::mcx(const std::vector<uint32_t>& controls, uint32_t t) {
  if (controls.empty()) {
    x(t);
    return;
  }
  if (controls.size() == 1) {
    cx(controls[0], t);
    return;
  }
  Gate g;
  g.kind = GateKind::MCX;
  g.qubits.assign(controls.begin(), controls.end());
  g.qubits.push_back(t);
  append(std::move(g));
}

void Circuit::mcp(const std::vector<uint32_t>& controls, uint32_t t, Dyadic angle) {
  if (controls.empty()) {
    p(t, std::move(angle));
    return;
  }
  if (controls.size() == 1) {
    cp(controls[0], t, std::move(angle));
    return;
  }
  Gate g;
  g.kind = GateKind::MCP;
  g.qubits.assign(controls.begin(), controls.end());
  g.qubits.push_back(t);
  g.angle = std::move(angle);
  append(std::move(g));
}

void Circuit::gms(const std::vector<uint32_t>& qubits, std::shared_ptr<const GmsCoupling> chi) {
  if (!chi || static_cast<size_t>(chi->nq) != qubits.size())
    throw DomainError("Circuit: GMS coupling size mismatch");
  Gate g;
  g.kind = GateKind::GMS;
  g.qubits.assign(qubits.begin(), qubits.end());
  g.gms = std::move(chi);
  append(std::move(g));
}

void Circuit::set_output_permutation(std::vector<uint32_t> perm) {
  if (!perm.empty()) {
    if (perm.size() != qubit_count_)
      throw DomainError("Circuit: permutation size mismatch");
    std::vector<bool> seen(qubit_count_, false);
    for (uint32_t p : perm) {
      if (p >= qubit_count_ || seen[p]) throw DomainError("Circuit: invalid permutation");
      seen[p] = true;
    }
  }
  output_permutation_ = std::move(perm);
}

int Circuit::depth() const {
  std::vector<int> d(qubit_count_, 0);
  int result = 0;
  for (const auto& g : gates_) {
    int layer = 0;
    for (uint32_t q : g.qubits) layer = std::max(layer, d[q]);
    ++layer;
    for (uint32_t q : g.qubits) d[q] = layer;
    result = std::max(result, layer);
  }
  return result;
}

std::map<GateKind, long> Circuit::gate_counts() const {
  std::map<GateKind, long> counts;
  for (const auto& g : gates_) ++counts[g.kind];
  return counts;
}

long Circuit::count(GateKind k) const {
  long c = 0;
  for (const auto& g : gates_)
    if (g.kind == k) ++c;
  return c;
}

Circuit Circuit::inverse() const {
  if (!output_permutation_.empty())
    throw DomainError("Circuit::inverse: nontrivial output permutation unsupported");
  Circuit inv = *this;
  inv.gates_.clear();
  inv.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) inv.gates_.push_back(it->adjoint());
  inv.global_phase_ = (-global_phase_).mod_two();
  return inv;
}

Circuit Circuit::compose(const Circuit& next) const {
  if (qubit_count_ != next.qubit_count_ || registers_.size() != next.registers_.size())
    throw DomainError("Circuit::compose: register mismatch");
  for (size_t i = 0; i < registers_.size(); ++i) {
    const auto& a = registers_[i];
    const auto& b = next.registers_[i];
    if (a.name != b.name || a.offset != b.offset || a.size != b.size)
      throw DomainError("Circuit::compose: register mismatch at '" + a.name + "'");
  }
  if (!output_permutation_.empty())
    throw DomainError("Circuit::compose: left side carries an output permutation");
  Circuit out = *this;
  out.gates_.insert(out.gates_.end(), next.gates_.begin(), next.gates_.end());
  out.global_phase_ = (global_phase_ + next.global_phase_).mod_two();
  out.output_permutation_ = next.output_permutation_;
  return out;
}

}  // namespace qfa
