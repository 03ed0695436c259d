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

#include "qfa/encoder.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qfa/errors.hpp"

namespace qfa {

UgStrategy ug_strategy_parse(std::string_view name) {
  if (name == "naive") return UgStrategy::NaiveMcp;
  if (name == "ancilla") return UgStrategy::AncillaControlled;
  throw ParseError("unknown encoder strategy '" + std::string(name) + "' (want naive|ancilla)");
}

MonomialOrdering monomial_ordering_parse(std::string_view name) {
  if (name == "given") return MonomialOrdering::AsGiven;
  if (name == "heuristic") return MonomialOrdering::Heuristic;
  if (name == "reversed") return MonomialOrdering::ReversedHeuristic;
  throw ParseError("unknown ordering '" + std::string(name) +
                   "' (want given|heuristic|reversed)");
}

void EncoderConfig::validate() const {
  if (ancilla_pool < 0) throw DomainError("EncoderConfig: ancilla_pool must be >= 0");
  if (ug_strategy == UgStrategy::AncillaControlled && ancilla_pool < 1)
    throw DomainError("EncoderConfig: ancilla-controlled strategy requires ancilla_pool >= 1");
  if (prune_epsilon.is_negative()) throw DomainError("EncoderConfig: prune_epsilon must be >= 0");
}

namespace {

// QFT core without the trailing SWAP layer: for l = m-1 .. 0, an H on wire l
// followed by CP(pi/2^(l-k)) against every wire k < l.
void emit_qft_core(std::vector<Gate>& out, const std::vector<uint32_t>& wires) {
  int m = static_cast<int>(wires.size());
  for (int l = m - 1; l >= 0; --l) {
    out.push_back(make_gate(GateKind::H, {wires[l]}));
    for (int k = l - 1; k >= 0; --k)
      out.push_back(make_gate(GateKind::CP, {wires[l], wires[k]}, Dyadic(1, k - l)));
  }
}

void emit_swap_layer(std::vector<Gate>& out, const std::vector<uint32_t>& wires) {
  int m = static_cast<int>(wires.size());
  for (int i = 0; i < m / 2; ++i)
    out.push_back(make_gate(GateKind::SWAP, {wires[i], wires[m - 1 - i]}));
}

std::vector<Gate> adjoint_reversed(const std::vector<Gate>& gates) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) out.push_back(it->adjoint());
  return out;
}

}  // namespace

Circuit qft_circuit(int m, bool swapless) {
  if (m < 1) throw DomainError("qft_circuit: m must be >= 1");
  Circuit c;
  c.add_register("q", static_cast<uint32_t>(m));
  std::vector<uint32_t> wires(m);
  std::iota(wires.begin(), wires.end(), 0u);
  std::vector<Gate> gates;
  emit_qft_core(gates, wires);
  if (swapless) {
    std::vector<uint32_t> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = static_cast<uint32_t>(m - 1 - i);
    c.set_output_permutation(std::move(perm));
  } else {
    emit_swap_layer(gates, wires);
  }
  c.append_all(gates);
  return c;
}

std::vector<Gate> u_g_gates(const Dyadic& y, const std::vector<uint32_t>& wire_of_logical,
                            const std::vector<uint32_t>& controls, bool reversed_wiring,
                            const Dyadic& prune_epsilon) {
  int m = static_cast<int>(wire_of_logical.size());
  std::vector<Gate> out;
  for (int slot = 0; slot < m; ++slot) {
    int logical = reversed_wiring ? m - 1 - slot : slot;
    // P(2 pi y 2^i / 2^m) = (pi units) y * 2^(i+1-m), reduced mod 2.
    Dyadic angle = y.shifted(logical + 1 - m).mod_two();
    if (angle.is_zero()) continue;
    if (!prune_epsilon.is_zero()) {
      Dyadic mag = angle.is_negative() ? -angle : angle;
      if (mag < prune_epsilon) continue;
    }
    uint32_t wire = wire_of_logical[logical];
    Gate g;
    if (controls.empty()) {
      g = make_gate(GateKind::P, {wire}, angle);
    } else if (controls.size() == 1) {
      g = make_gate(GateKind::CP, {controls[0], wire}, angle);
    } else {
      g.kind = GateKind::MCP;
      g.qubits.assign(controls.begin(), controls.end());
      g.qubits.push_back(wire);
      g.angle = angle;
    }
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

struct EmitContext {
  const EncoderConfig* cfg = nullptr;
  std::map<std::string, uint32_t> reg_offset;  // domain register -> wire offset
  std::vector<uint32_t> target_wires;          // wire of logical bit i
  std::vector<uint32_t> ancilla_wires;
  size_t ancilla_counter = 0;

  uint32_t wire_of(const VarId& v) const { return reg_offset.at(v.reg) + v.bit; }

  std::vector<uint32_t> control_wires(const Monomial& mono) const {
    std::vector<uint32_t> ws;
    ws.reserve(mono.vars.size());
    for (const auto& v : mono.vars) ws.push_back(wire_of(v));
    return ws;
  }
};

/// Emits one monomial's gates through `sink`. The ancilla rotation state in
/// ctx advances exactly as during real emission, so the ordering pass and the
/// final emission see identical schedules.
template <typename Sink>
void for_each_monomial_gate(const Monomial& mono, EmitContext& ctx, Sink&& sink) {
  const EncoderConfig& cfg = *ctx.cfg;
  bool use_ancilla = cfg.ug_strategy == UgStrategy::AncillaControlled && mono.degree() >= 2;
  std::vector<uint32_t> controls = ctx.control_wires(mono);
  if (!use_ancilla) {
    for (auto& g :
         u_g_gates(mono.coeff, ctx.target_wires, controls, cfg.swapless_qft, cfg.prune_epsilon))
      sink(g);
    return;
  }
  std::vector<Gate> uncontrolled =
      u_g_gates(mono.coeff, ctx.target_wires, {}, cfg.swapless_qft, cfg.prune_epsilon);
  if (uncontrolled.empty()) return;  // all phases wrapped to zero; skip entirely
  uint32_t anc = ctx.ancilla_wires[ctx.ancilla_counter % ctx.ancilla_wires.size()];
  ++ctx.ancilla_counter;
  Gate compute;
  compute.kind = GateKind::MCX;
  compute.qubits.assign(controls.begin(), controls.end());
  compute.qubits.push_back(anc);
  sink(compute);
  for (auto& g : uncontrolled) {
    Gate cp = make_gate(GateKind::CP, {anc, g.qubits[0]}, g.angle);
    sink(cp);
  }
  sink(compute);
}

struct Layout {
  Circuit circuit;
  EmitContext ctx;
  int max_degree = 0;
};

Layout make_layout(const SBPolynomial& p, const std::vector<DomainSpec>& domain, int m,
                   const EncoderConfig& cfg) {
  cfg.validate();
  if (m < 1) throw DomainError("encode_sbp: target size must be >= 1");
  if (!p.is_integer())
    throw DomainError("encode_sbp: polynomial has non-integer coefficients: " + p.str());

  Layout lay;
  lay.ctx.cfg = &cfg;
  for (const auto& d : domain) {
    if (d.name == "t" || d.name == "anc" || d.name == "scr")
      throw DomainError("encode_sbp: register name '" + d.name + "' is reserved");
    Register r = lay.circuit.add_register(d.name, static_cast<uint32_t>(d.size),
                                          Register::Role::Data, d.format);
    lay.ctx.reg_offset[d.name] = r.offset;
  }
  for (const auto& v : p.variables()) {
    auto it = lay.ctx.reg_offset.find(v.reg);
    if (it == lay.ctx.reg_offset.end())
      throw DomainError("encode_sbp: polynomial references unknown register '" + v.reg + "'");
    if (v.bit < 0 || v.bit >= static_cast<int>(lay.circuit.reg(v.reg).size))
      throw DomainError("encode_sbp: variable " + v.str() + " out of register range");
  }
  Register target = lay.circuit.add_register("t", static_cast<uint32_t>(m), Register::Role::Target);
  lay.ctx.target_wires.resize(m);
  for (int i = 0; i < m; ++i) {
    int slot = cfg.swapless_qft ? m - 1 - i : i;
    lay.ctx.target_wires[i] = target.offset + static_cast<uint32_t>(slot);
  }
  lay.max_degree = p.degree();
  if (cfg.ug_strategy == UgStrategy::AncillaControlled && lay.max_degree >= 2) {
    Register anc = lay.circuit.add_register("anc", static_cast<uint32_t>(cfg.ancilla_pool),
                                            Register::Role::Ancilla);
    for (uint32_t i = 0; i < anc.size; ++i) lay.ctx.ancilla_wires.push_back(anc.offset + i);
    if (lay.max_degree >= 3)
      lay.circuit.add_register("scr", static_cast<uint32_t>(lay.max_degree - 2),
                               Register::Role::Scratch);
  } else if (cfg.ug_strategy == UgStrategy::NaiveMcp && cfg.ancilla_pool > 0) {
    // A declared pool still provides transpile-time scratch for deep MCP gates.
    lay.circuit.add_register("scr", static_cast<uint32_t>(cfg.ancilla_pool),
                             Register::Role::Scratch);
  }
  return lay;
}

class DepthTracker {
 public:
  explicit DepthTracker(uint32_t wires) : depth_(wires, 0) {}

  void schedule(const Gate& g) {
    int layer = 0;
    for (uint32_t q : g.qubits) layer = std::max(layer, depth_[q]);
    ++layer;
    for (uint32_t q : g.qubits) depth_[q] = layer;
  }

  int wire_depth(uint32_t q) const { return depth_[q]; }

 private:
  std::vector<int> depth_;
};

std::vector<Monomial> greedy_order(const SBPolynomial& p, Layout& lay, bool reversed) {
  std::vector<Monomial> remaining = p.monomials();
  std::vector<Monomial> ordered;
  ordered.reserve(remaining.size());
  DepthTracker tracker(lay.circuit.qubit_count());
  // The initial H / QFT layer touches the target before any monomial.
  for (uint32_t w : lay.ctx.target_wires)
    tracker.schedule(make_gate(GateKind::H, {w}));
  while (!remaining.empty()) {
    size_t best = 0;
    int best_cost = 0;
    for (size_t i = 0; i < remaining.size(); ++i) {
      int cost = 0;
      for (const auto& v : remaining[i].vars)
        cost = std::max(cost, tracker.wire_depth(lay.ctx.wire_of(v)));
      if (i == 0 || (reversed ? cost > best_cost : cost < best_cost)) {
        best = i;
        best_cost = cost;
      }
    }
    Monomial chosen = remaining[best];
    remaining.erase(remaining.begin() + static_cast<long>(best));
    for_each_monomial_gate(chosen, lay.ctx, [&](const Gate& g) { tracker.schedule(g); });
    ordered.push_back(std::move(chosen));
  }
  return ordered;
}

std::vector<Monomial> ordered_monomials(const SBPolynomial& p, Layout& lay,
                                        const EncoderConfig& cfg) {
  switch (cfg.ordering) {
    case MonomialOrdering::AsGiven:
      return p.monomials();
    case MonomialOrdering::Explicit: {
      const auto& order = cfg.explicit_order;
      if (order.size() != p.monomials().size())
        throw DomainError("encode_sbp: explicit order size mismatch");
      std::vector<bool> seen(order.size(), false);
      std::vector<Monomial> out;
      for (size_t idx : order) {
        if (idx >= order.size() || seen[idx])
          throw DomainError("encode_sbp: explicit order is not a permutation");
        seen[idx] = true;
        out.push_back(p.monomials()[idx]);
      }
      return out;
    }
    case MonomialOrdering::Heuristic:
      return greedy_order(p, lay, false);
    case MonomialOrdering::ReversedHeuristic:
      return greedy_order(p, lay, true);
  }
  throw DomainError("encode_sbp: bad ordering");
}

Circuit encode_impl(const SBPolynomial& p, const std::vector<DomainSpec>& domain, int m,
                    const EncoderConfig& cfg, bool in_place) {
  if (in_place)
    for (const auto& v : p.variables())
      if (v.reg == "t")
        throw DomainError("encode_sbp_inplace: polynomial references the target register t");
  Layout lay = make_layout(p, domain, m, cfg);

  std::vector<Monomial> order = ordered_monomials(p, lay, cfg);
  lay.ctx.ancilla_counter = 0;  // ordering consumed the rotation; restart for emission

  const Register& target = lay.circuit.reg("t");
  std::vector<uint32_t> natural(target.size);
  std::iota(natural.begin(), natural.end(), target.offset);

  std::vector<Gate> prologue, epilogue;
  std::vector<Gate> core;
  emit_qft_core(core, natural);
  if (in_place) {
    if (!cfg.swapless_qft) {
      prologue = core;
      emit_swap_layer(prologue, natural);
      emit_swap_layer(epilogue, natural);
      auto adj = adjoint_reversed(core);
      epilogue.insert(epilogue.end(), adj.begin(), adj.end());
    } else {
      prologue = core;
      epilogue = adjoint_reversed(core);
    }
  } else {
    for (uint32_t w : natural) prologue.push_back(make_gate(GateKind::H, {w}));
    if (!cfg.swapless_qft) emit_swap_layer(epilogue, natural);
    auto adj = adjoint_reversed(core);
    epilogue.insert(epilogue.end(), adj.begin(), adj.end());
  }

  lay.circuit.append_all(prologue);
  for (const auto& mono : order)
    for_each_monomial_gate(mono, lay.ctx, [&](const Gate& g) { lay.circuit.append(g); });
  lay.circuit.append_all(epilogue);
  return std::move(lay.circuit);
}

}  // namespace

std::vector<Monomial> order_monomials(const SBPolynomial& p, const std::vector<DomainSpec>& domain,
                                      int m, const EncoderConfig& cfg) {
  Layout lay = make_layout(p, domain, m, cfg);
  return ordered_monomials(p, lay, cfg);
}

Circuit encode_sbp(const SBPolynomial& p, const std::vector<DomainSpec>& domain, int m,
                   const EncoderConfig& cfg) {
  return encode_impl(p, domain, m, cfg, false);
}

Circuit encode_sbp_inplace(const SBPolynomial& p, const std::vector<DomainSpec>& domain, int m,
                           const EncoderConfig& cfg) {
  return encode_impl(p, domain, m, cfg, true);
}

}  // namespace qfa
