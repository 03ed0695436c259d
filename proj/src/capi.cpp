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

#include "qfa/qfa.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "qfa/arith.hpp"
#include "qfa/baseline.hpp"
#include "qfa/bench.hpp"
#include "qfa/errors.hpp"
#include "qfa/gms.hpp"
#include "qfa/qasm.hpp"
#include "qfa/simulator.hpp"

using namespace qfa;

struct qfa_circuit {
  Circuit c;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
qfa_status guarded(Fn&& fn) {
  try {
    fn();
    return QFA_OK;
  } catch (const LimitError& e) {
    g_last_error = e.what();
    return QFA_ERROR_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QFA_ERROR_DOMAIN;
  } catch (...) {
    g_last_error = "unknown error";
    return QFA_ERROR_INTERNAL;
  }
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string::npos) {
      if (start < text.size()) parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

Circuit builtin_by_name(const std::string& name) {
  auto suffix_int = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    return std::stoi(name.substr(prefix.size()));
  };
  if (auto n = suffix_int("qft-ns-")) return qft_circuit(*n, true);
  if (auto n = suffix_int("qft-")) return qft_circuit(*n, false);
  if (auto n = suffix_int("cuccaro-ctl-")) return cuccaro_adder(*n, AdderMode::Controlled);
  if (auto n = suffix_int("cuccaro-")) return cuccaro_adder(*n);
  if (auto n = suffix_int("empty-")) {
    Circuit c;
    c.add_register("t", static_cast<uint32_t>(*n), Register::Role::Target);
    return c;
  }
  if (name.rfind("ripple-mul-", 0) == 0) {
    std::string dims = name.substr(11);
    auto x = dims.find('x');
    if (x == std::string::npos) throw DomainError("builtin: bad name '" + name + "'");
    return ripple_multiplier(std::stoi(dims.substr(0, x)), std::stoi(dims.substr(x + 1)));
  }
  if (name.rfind("mul-const-", 0) == 0) {
    std::string rest = name.substr(10);
    auto dash = rest.find('-');
    if (dash == std::string::npos) throw DomainError("builtin: bad name '" + name + "'");
    return inplace_mul_const(bigint_from_decimal(rest.substr(0, dash)),
                             std::stoi(rest.substr(dash + 1)));
  }
  throw DomainError("builtin: unknown circuit '" + name +
                    "' (want qft-N, qft-ns-N, cuccaro-N, cuccaro-ctl-N, ripple-mul-N1xN2, "
                    "mul-const-A-N, empty-N)");
}

/// Decoded value of the circuit's target register after simulating the basis
/// input described by "name=value,..." assignments.
std::string simulate_decoded(const Circuit& c, const std::string& assignments) {
  uint64_t input = 0;
  if (!assignments.empty()) {
    for (const auto& part : split_csv(assignments)) {
      auto eq = part.find('=');
      if (eq == std::string::npos)
        throw DomainError("simulate: bad assignment '" + part + "' (want name=value)");
      std::string name = part.substr(0, eq);
      std::string value = part.substr(eq + 1);
      const Register& r = c.reg(name);
      BigInt residue;
      if (r.format) {
        auto d = Dyadic::parse_decimal(value);
        if (!d) throw DomainError("simulate: value '" + value + "' is not a dyadic decimal");
        residue = encode_value(*d, *r.format).value;
      } else {
        residue = BigInt(value);
      }
      input = write_register(input, c, name, residue);
    }
  }
  StateVector s = simulate(c, input);
  uint64_t out = dominant_basis_state(s);
  const Register* target = nullptr;
  for (const auto& r : c.registers())
    if (r.role == Register::Role::Target) target = &r;
  if (!target) throw DomainError("simulate: circuit has no target register");
  BigInt raw = read_register(out, c, target->name);
  if (!target->format) return raw.str();
  return decode_value(Residue{raw, static_cast<int>(target->size)}, *target->format)
      .decimal_str();
}

}  // namespace

extern "C" {

const char* qfa_version(void) { return "0.1.0"; }

const char* qfa_last_error(void) { return g_last_error.c_str(); }

void qfa_string_free(char* s) { std::free(s); }

void qfa_circuit_free(qfa_circuit* c) { delete c; }

qfa_status qfa_synth_arith(const char* op, const char* fmt_x, const char* fmt_y,
                           const char* fmt_out, const char* strategy, int ancilla_pool,
                           int swapless, const char* ordering, int transpile,
                           qfa_circuit** out) {
  return guarded([&] {
    if (!op || !fmt_x || !fmt_y || !out) throw DomainError("qfa_synth_arith: null argument");
    ArithSpec spec;
    spec.op = arith_op_parse(op);
    spec.x = QFormat::parse(fmt_x);
    spec.y = QFormat::parse(fmt_y);
    spec.out = fmt_out ? QFormat::parse(fmt_out) : default_target_format(spec.op, spec.x, spec.y);
    spec.enc.ug_strategy = strategy ? ug_strategy_parse(strategy) : UgStrategy::AncillaControlled;
    spec.enc.ancilla_pool = ancilla_pool;
    if (spec.enc.ug_strategy == UgStrategy::NaiveMcp && ancilla_pool < 0)
      spec.enc.ancilla_pool = 0;
    spec.enc.swapless_qft = swapless != 0;
    spec.enc.ordering =
        ordering ? monomial_ordering_parse(ordering) : MonomialOrdering::Heuristic;
    Circuit c = build_arith(spec);
    if (transpile) c = c.transpiled();
    *out = new qfa_circuit{std::move(c)};
  });
}

qfa_status qfa_builtin_circuit(const char* name, qfa_circuit** out) {
  return guarded([&] {
    if (!name || !out) throw DomainError("qfa_builtin_circuit: null argument");
    *out = new qfa_circuit{builtin_by_name(name)};
  });
}

qfa_status qfa_circuit_transpile(const qfa_circuit* c, qfa_circuit** out) {
  return guarded([&] {
    if (!c || !out) throw DomainError("qfa_circuit_transpile: null argument");
    *out = new qfa_circuit{c->c.transpiled()};
  });
}

int qfa_circuit_qubit_count(const qfa_circuit* c) {
  return c ? static_cast<int>(c->c.qubit_count()) : -1;
}

int qfa_circuit_depth(const qfa_circuit* c) { return c ? c->c.depth() : -1; }

long qfa_circuit_gate_count(const qfa_circuit* c, const char* kind) {
  if (!c) return -1;
  if (!kind) return static_cast<long>(c->c.gates().size());
  for (GateKind k :
       {GateKind::H, GateKind::X, GateKind::SX, GateKind::SXDG, GateKind::P, GateKind::RZ,
        GateKind::CX, GateKind::CP, GateKind::SWAP, GateKind::MCX, GateKind::MCP, GateKind::GMS})
    if (gate_kind_name(k) == std::string_view(kind)) return c->c.count(k);
  return -1;
}

qfa_status qfa_circuit_to_qasm(const qfa_circuit* c, char** qasm_out) {
  return guarded([&] {
    if (!c || !qasm_out) throw DomainError("qfa_circuit_to_qasm: null argument");
    *qasm_out = dup_string(emit_qasm(c->c));
  });
}

qfa_status qfa_circuit_from_qasm(const char* text, qfa_circuit** out) {
  return guarded([&] {
    if (!text || !out) throw DomainError("qfa_circuit_from_qasm: null argument");
    *out = new qfa_circuit{parse_qasm(text)};
  });
}

qfa_status qfa_circuit_simulate(const qfa_circuit* c, const char* assignments,
                                char** decoded_out) {
  return guarded([&] {
    if (!c || !decoded_out) throw DomainError("qfa_circuit_simulate: null argument");
    *decoded_out = dup_string(simulate_decoded(c->c, assignments ? assignments : ""));
  });
}

qfa_status qfa_circuit_gms_cost(const qfa_circuit* c, long* uniform, long* nonuniform,
                                long* mcx_blackbox) {
  return guarded([&] {
    if (!c) throw DomainError("qfa_circuit_gms_cost: null argument");
    GmsCost cost = gms_cost(c->c);
    if (uniform) *uniform = cost.uniform_gms;
    if (nonuniform) *nonuniform = cost.nonuniform_gms;
    if (mcx_blackbox) *mcx_blackbox = cost.mcx_blackbox;
  });
}

qfa_status qfa_bench_fig6(const char* sizes, int with_timing, char** csv_out) {
  return guarded([&] {
    if (!sizes || !csv_out) throw DomainError("qfa_bench_fig6: null argument");
    std::vector<int> ns;
    for (const auto& s : split_csv(sizes)) ns.push_back(std::stoi(s));
    if (ns.empty()) throw DomainError("qfa_bench_fig6: no sizes given");
    *csv_out = dup_string(bench_csv(bench_fig6(ns, with_timing != 0)));
  });
}

}  // extern "C"
