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

#include "qfa/gms.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "qfa/errors.hpp"

namespace qfa {

GmsParams cp_sequence_to_gms(const CPSequence& seq) {
  GmsParams p;
  p.omega.assign(seq.nq, Dyadic());
  p.chi = GmsCoupling::zeros(seq.nq, /*xx_basis=*/false);
  for (const auto& e : seq.entries) {
    if (e.a == e.b || e.a >= static_cast<uint32_t>(seq.nq) ||
        e.b >= static_cast<uint32_t>(seq.nq))
      throw DomainError("cp_sequence_to_gms: bad qubit pair");
    Dyadic half = e.phi.shifted(-1);
    p.omega[e.a] += half;
    p.omega[e.b] += half;
    p.chi.at(e.a, e.b) -= half;
    // CP(phi)|xy> = e^{i phi/2 x} e^{i phi/2 y} e^{i phi/4 z_x z_y} e^{-i phi/4}|xy>,
    // so each gate contributes -phi/4 to the global phase.
    p.global_phase -= e.phi.shifted(-2);
  }
  return p;
}

Circuit gms_params_circuit(const GmsParams& params, bool xx_picture) {
  int nq = params.chi.nq;
  Circuit c;
  c.add_register("q", static_cast<uint32_t>(nq));
  for (int i = 0; i < nq; ++i) {
    Dyadic w = params.omega[i].mod_two();
    if (!w.is_zero()) c.p(static_cast<uint32_t>(i), w);
  }
  std::vector<uint32_t> wires(nq);
  for (int i = 0; i < nq; ++i) wires[i] = static_cast<uint32_t>(i);
  auto chi = std::make_shared<GmsCoupling>(params.chi);
  if (xx_picture) {
    chi->xx_basis = true;
    for (uint32_t q : wires) c.h(q);
    c.gms(wires, chi);
    for (uint32_t q : wires) c.h(q);
  } else {
    chi->xx_basis = false;
    c.gms(wires, chi);
  }
  c.add_global_phase(params.global_phase);
  return c;
}

Circuit ascending_cp_uniform_gms(const CPSequence& seq) {
  Circuit c;
  c.add_register("q", static_cast<uint32_t>(seq.nq));
  if (seq.entries.empty()) return c;
  uint32_t ctrl = seq.entries.front().a;
  std::map<uint32_t, Dyadic> by_target;  // accumulates repeated pairs
  for (const auto& e : seq.entries) {
    if (e.a != ctrl)
      throw DomainError("ascending_cp_uniform_gms: entries do not share one control qubit");
    if (e.b == ctrl) throw DomainError("ascending_cp_uniform_gms: control equals target");
    by_target[e.b] += e.phi;
  }
  Dyadic half_sum;
  for (const auto& [t, phi] : by_target) half_sum += phi.shifted(-1);

  for (const auto& [t, phi] : by_target) c.cx(ctrl, t);  // fan-out
  if (!half_sum.mod_two().is_zero()) c.p(ctrl, half_sum.mod_two());
  for (const auto& [t, phi] : by_target) {
    Dyadic a = (-phi.shifted(-1)).mod_two();
    if (!a.is_zero()) c.p(t, a);
  }
  for (const auto& [t, phi] : by_target) c.cx(ctrl, t);  // fan-out back
  for (const auto& [t, phi] : by_target) {
    Dyadic a = phi.shifted(-1).mod_two();
    if (!a.is_zero()) c.p(t, a);
  }
  return c;
}

namespace {

/// Run detector for ascending CP sequences and CX fan-outs: consecutive gates
/// of one kind whose qubit pairs keep a nonempty common intersection.
struct RunScanner {
  GmsCost cost;
  GateKind run_kind = GateKind::H;  // sentinel: no active run
  bool active = false;
  std::vector<uint32_t> common;

  void flush() {
    if (!active) return;
    if (run_kind == GateKind::CP) {
      cost.nonuniform_gms += 1;
      cost.uniform_gms += 4;  // two fan-outs, two pulses each
    } else {  // CX fan-out
      cost.nonuniform_gms += 1;
      cost.uniform_gms += 2;
    }
    active = false;
    common.clear();
  }

  void feed_pair(GateKind kind, uint32_t a, uint32_t b) {
    if (active && kind == run_kind) {
      std::vector<uint32_t> next;
      for (uint32_t q : common)
        if (q == a || q == b) next.push_back(q);
      if (!next.empty()) {
        common = std::move(next);
        return;
      }
    }
    flush();
    active = true;
    run_kind = kind;
    common = {a, b};
  }
};

}  // namespace

GmsCost gms_cost(const Circuit& c) {
  RunScanner scan;
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::CP:
        scan.feed_pair(GateKind::CP, g.qubits[0], g.qubits[1]);
        break;
      case GateKind::CX:
        scan.feed_pair(GateKind::CX, g.qubits[0], g.qubits[1]);
        break;
      case GateKind::MCX:
        scan.flush();
        ++scan.cost.mcx_blackbox;
        break;
      case GateKind::MCP:
        // naive multi-controlled phases are opaque like the MCX black boxes
        scan.flush();
        ++scan.cost.mcx_blackbox;
        break;
      case GateKind::GMS:
        scan.flush();
        ++scan.cost.nonuniform_gms;
        scan.cost.uniform_gms += g.gms->is_uniform() ? 1 : 4;
        break;
      case GateKind::SWAP:
        scan.flush();
        break;
      default:
        // Diagonal-commuting single-qubit gates ride along inside ascending
        // CP runs; a fan-out, however, is a contiguous CX block, so anything
        // else terminates it.
        if (scan.active && scan.run_kind == GateKind::CX) scan.flush();
        break;
    }
  }
  scan.flush();
  return scan.cost;
}

}  // namespace qfa
