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

#include <algorithm>
#include <vector>

#include "qfa/circuit.hpp"
#include "qfa/errors.hpp"

namespace qfa {

namespace {

// Lowering rules into {CX, RZ, SX}, with RZ(t) = diag(e^{-it/2}, e^{it/2}):
//   P(t)  = e^{it/2} RZ(t)
//   H     = e^{i pi/4} RZ(pi/2) SX RZ(pi/2)
//   X     = SX SX
//   SXdg  = e^{i pi/2} RZ(pi) SX RZ(pi)
//   CP(t) = CX RZ(-t/2)_b CX RZ(t/2)_b RZ(t/2)_a, phase t/4
// Angles are in units of pi throughout and reduced mod 2 on emission.
class Transpiler {
 public:
  explicit Transpiler(const Circuit& in) : in_(in) {
    for (const auto& r : in.registers())
      out_.add_register(r.name, r.size, r.role, r.format);
    out_.set_output_permutation(in.output_permutation());
    out_.add_global_phase(in.global_phase());
    for (const auto& r : in.registers())
      if (r.role == Register::Role::Scratch)
        for (uint32_t i = 0; i < r.size; ++i) scratch_.push_back(r.offset + i);
  }

  Circuit run() {
    for (const auto& g : in_.gates()) lower(g);
    return std::move(out_);
  }

 private:
  void phase(const Dyadic& pi_units) { out_.add_global_phase(pi_units); }

  void rz(uint32_t q, const Dyadic& t) {
    // RZ is 4pi-periodic: RZ(t) = (-1)^k RZ(t mod 2pi) with k = (t - t mod 2pi)/2pi.
    Dyadic r = t.mod_two();
    Dyadic dropped = t - r;
    if (!dropped.is_zero()) phase(dropped.shifted(-1));
    if (!r.is_zero()) out_.rz(q, r);
  }
  void sx(uint32_t q) { out_.sx(q); }
  void cx(uint32_t c, uint32_t t) { out_.cx(c, t); }

  void p(uint32_t q, const Dyadic& t) {
    rz(q, t);
    phase(t.shifted(-1));
  }

  void h(uint32_t q) {
    rz(q, Dyadic(1, -1));
    sx(q);
    rz(q, Dyadic(1, -1));
    phase(Dyadic(1, -2));
  }

  void x(uint32_t q) {
    sx(q);
    sx(q);
  }

  void sxdg(uint32_t q) {
    rz(q, Dyadic(1));
    sx(q);
    rz(q, Dyadic(1));
    phase(Dyadic(1, -1));
  }

  void cp(uint32_t a, uint32_t b, const Dyadic& t) {
    if (t.mod_two().is_zero()) return;
    Dyadic half = t.shifted(-1);
    cx(a, b);
    rz(b, -half);
    cx(a, b);
    rz(b, half);
    rz(a, half);
    phase(t.shifted(-2));
  }

  void swap_(uint32_t a, uint32_t b) {
    cx(a, b);
    cx(b, a);
    cx(a, b);
  }

  void ccx(uint32_t a, uint32_t b, uint32_t t) {
    const Dyadic T(1, -2);
    h(t);
    cx(b, t);
    p(t, -T);
    cx(a, t);
    p(t, T);
    cx(b, t);
    p(t, -T);
    cx(a, t);
    p(b, T);
    p(t, T);
    h(t);
    cx(a, b);
    p(a, T);
    p(b, -T);
    cx(a, b);
  }

  std::vector<uint32_t> free_scratch(const Gate& g) const {
    std::vector<uint32_t> free;
    for (uint32_t s : scratch_)
      if (std::find(g.qubits.begin(), g.qubits.end(), s) == g.qubits.end()) free.push_back(s);
    return free;
  }

  // Toffoli ladder: one clean helper per level. Helpers are returned to |0>
  // inside this decomposition, so a shared scratch bank is safe to reuse.
  void mcx_ladder(const std::vector<uint32_t>& ctrls, uint32_t t,
                  const std::vector<uint32_t>& helpers) {
    size_t c = ctrls.size();
    std::vector<Gate> compute;
    uint32_t carry = ctrls[0];
    // chain: h[0] = c0 & c1, h[i] = h[i-1] & c_{i+1}
    for (size_t i = 0; i + 2 < c; ++i) {
      uint32_t h = helpers[i];
      Gate g = make_gate(GateKind::MCX, {});
      g.qubits = {carry, ctrls[i + 1], h};
      compute.push_back(g);
      carry = h;
    }
    for (const auto& g : compute) ccx(g.qubits[0], g.qubits[1], g.qubits[2]);
    ccx(carry, ctrls[c - 1], t);
    for (auto it = compute.rbegin(); it != compute.rend(); ++it)
      ccx(it->qubits[0], it->qubits[1], it->qubits[2]);
  }

  // Ancilla-free multi-controlled phase; exact, exponential in control count.
  void mcp_noanc(const Dyadic& t, const std::vector<uint32_t>& ctrls, uint32_t target) {
    if (t.mod_two().is_zero()) return;
    if (ctrls.empty()) {
      p(target, t);
      return;
    }
    if (ctrls.size() == 1) {
      cp(ctrls[0], target, t);
      return;
    }
    Dyadic half = t.shifted(-1);
    uint32_t b = ctrls.back();
    std::vector<uint32_t> rest(ctrls.begin(), ctrls.end() - 1);
    cp(b, target, half);
    mcx_noanc(rest, b);
    cp(b, target, -half);
    mcx_noanc(rest, b);
    mcp_noanc(half, rest, target);
  }

  void mcx_noanc(const std::vector<uint32_t>& ctrls, uint32_t target) {
    if (ctrls.empty()) {
      x(target);
      return;
    }
    if (ctrls.size() == 1) {
      cx(ctrls[0], target);
      return;
    }
    if (ctrls.size() == 2) {
      ccx(ctrls[0], ctrls[1], target);
      return;
    }
    h(target);
    mcp_noanc(Dyadic(1), ctrls, target);
    h(target);
  }

  void mcx(const Gate& g) {
    std::vector<uint32_t> ctrls(g.qubits.begin(), g.qubits.end() - 1);
    uint32_t t = g.target();
    if (ctrls.size() == 2) {
      ccx(ctrls[0], ctrls[1], t);
      return;
    }
    auto helpers = free_scratch(g);
    if (helpers.size() < ctrls.size() - 2)
      throw LimitError("transpile: MCX with " + std::to_string(ctrls.size()) +
                       " controls needs " + std::to_string(ctrls.size() - 2) +
                       " scratch ancillas, " + std::to_string(helpers.size()) + " available");
    mcx_ladder(ctrls, t, helpers);
  }

  void mcp(const Gate& g) {
    if (g.angle.mod_two().is_zero()) return;
    std::vector<uint32_t> ctrls(g.qubits.begin(), g.qubits.end() - 1);
    uint32_t t = g.target();
    auto helpers = free_scratch(g);
    if (helpers.size() >= ctrls.size() - 1) {
      uint32_t and_bit = helpers.back();
      helpers.pop_back();
      Gate and_gate = make_gate(GateKind::MCX, {});
      and_gate.qubits.assign(ctrls.begin(), ctrls.end());
      and_gate.qubits.push_back(and_bit);
      if (ctrls.size() == 2)
        ccx(ctrls[0], ctrls[1], and_bit);
      else
        mcx_ladder(ctrls, and_bit, helpers);
      cp(and_bit, t, g.angle);
      if (ctrls.size() == 2)
        ccx(ctrls[0], ctrls[1], and_bit);
      else
        mcx_ladder(ctrls, and_bit, helpers);
    } else {
      mcp_noanc(g.angle, ctrls, t);
    }
  }

  void gms(const Gate& g) {
    const auto& chi = *g.gms;
    for (int i = 0; i < chi.nq; ++i) {
      for (int j = i + 1; j < chi.nq; ++j) {
        const Dyadic& theta = chi.at(i, j);  // rz() handles reduction exactly
        if (theta.is_zero()) continue;
        uint32_t qi = g.qubits[i];
        uint32_t qj = g.qubits[j];
        if (chi.xx_basis) {
          h(qi);
          h(qj);
        }
        cx(qi, qj);
        rz(qj, theta);
        cx(qi, qj);
        if (chi.xx_basis) {
          h(qi);
          h(qj);
        }
      }
    }
  }

  void lower(const Gate& g) {
    switch (g.kind) {
      case GateKind::H: h(g.qubits[0]); break;
      case GateKind::X: x(g.qubits[0]); break;
      case GateKind::SX: sx(g.qubits[0]); break;
      case GateKind::SXDG: sxdg(g.qubits[0]); break;
      case GateKind::P: p(g.qubits[0], g.angle); break;
      case GateKind::RZ: rz(g.qubits[0], g.angle); break;
      case GateKind::CX: cx(g.qubits[0], g.qubits[1]); break;
      case GateKind::CP: cp(g.qubits[0], g.qubits[1], g.angle); break;
      case GateKind::SWAP: swap_(g.qubits[0], g.qubits[1]); break;
      case GateKind::MCX: mcx(g); break;
      case GateKind::MCP: mcp(g); break;
      case GateKind::GMS: gms(g); break;
    }
  }

  const Circuit& in_;
  Circuit out_;
  std::vector<uint32_t> scratch_;
};

}  // namespace

Circuit Circuit::transpiled() const { return Transpiler(*this).run(); }

}  // namespace qfa
