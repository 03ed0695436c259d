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

#include "qfa/simulator.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "qfa/errors.hpp"

namespace qfa {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;

cplx phase_of(const Dyadic& pi_units) {
  double t = pi_units.mod_two().to_double() * kPi;
  return {std::cos(t), std::sin(t)};
}

void apply_single(std::vector<cplx>& amps, uint32_t q, cplx m00, cplx m01, cplx m10, cplx m11) {
  const uint64_t bit = uint64_t(1) << q;
  const uint64_t n = amps.size();
  for (uint64_t base = 0; base < n; base += 2 * bit) {
    for (uint64_t i = base; i < base + bit; ++i) {
      cplx a = amps[i];
      cplx b = amps[i | bit];
      amps[i] = m00 * a + m01 * b;
      amps[i | bit] = m10 * a + m11 * b;
    }
  }
}

void apply_phase_masked(std::vector<cplx>& amps, uint64_t mask, cplx phase) {
  const uint64_t n = amps.size();
  for (uint64_t i = 0; i < n; ++i)
    if ((i & mask) == mask) amps[i] *= phase;
}

void apply_flip(std::vector<cplx>& amps, uint64_t ctrl_mask, uint64_t target_bit) {
  const uint64_t n = amps.size();
  for (uint64_t i = 0; i < n; ++i)
    if ((i & ctrl_mask) == ctrl_mask && !(i & target_bit)) std::swap(amps[i], amps[i | target_bit]);
}

void apply_gms(std::vector<cplx>& amps, const Gate& g) {
  const auto& chi = *g.gms;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (chi.xx_basis)
    for (uint32_t q : g.qubits)
      apply_single(amps, q, inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2);
  // diagonal of exp(-i/2 sum chi_ij Z_i Z_j)
  const uint64_t n = amps.size();
  std::vector<double> angles;  // chi in radians
  std::vector<std::pair<uint64_t, uint64_t>> bits;
  for (int i = 0; i < chi.nq; ++i)
    for (int j = i + 1; j < chi.nq; ++j) {
      const Dyadic& c = chi.at(i, j);
      if (c.is_zero()) continue;
      angles.push_back(c.to_double() * kPi);
      bits.emplace_back(uint64_t(1) << g.qubits[i], uint64_t(1) << g.qubits[j]);
    }
  for (uint64_t s = 0; s < n; ++s) {
    double t = 0.0;
    for (size_t k = 0; k < angles.size(); ++k) {
      double zz = ((s & bits[k].first) ? -1.0 : 1.0) * ((s & bits[k].second) ? -1.0 : 1.0);
      t += -0.5 * angles[k] * zz;
    }
    amps[s] *= cplx{std::cos(t), std::sin(t)};
  }
  if (chi.xx_basis)
    for (uint32_t q : g.qubits)
      apply_single(amps, q, inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2);
}

uint64_t qubit_mask(const Gate& g, size_t from, size_t to) {
  uint64_t m = 0;
  for (size_t i = from; i < to; ++i) m |= uint64_t(1) << g.qubits[i];
  return m;
}

void apply_gate(std::vector<cplx>& amps, const Gate& g) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::H:
      apply_single(amps, g.qubits[0], inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2);
      break;
    case GateKind::X:
      apply_flip(amps, 0, uint64_t(1) << g.qubits[0]);
      break;
    case GateKind::SX: {
      cplx a{0.5, 0.5}, b{0.5, -0.5};
      apply_single(amps, g.qubits[0], a, b, b, a);
      break;
    }
    case GateKind::SXDG: {
      cplx a{0.5, -0.5}, b{0.5, 0.5};
      apply_single(amps, g.qubits[0], a, b, b, a);
      break;
    }
    case GateKind::P:
      apply_phase_masked(amps, uint64_t(1) << g.qubits[0], phase_of(g.angle));
      break;
    case GateKind::RZ: {
      Dyadic half = g.angle.shifted(-1);
      apply_single(amps, g.qubits[0], phase_of(-half), 0, 0, phase_of(half));
      break;
    }
    case GateKind::CX:
      apply_flip(amps, uint64_t(1) << g.qubits[0], uint64_t(1) << g.qubits[1]);
      break;
    case GateKind::CP:
      apply_phase_masked(amps, qubit_mask(g, 0, 2), phase_of(g.angle));
      break;
    case GateKind::SWAP: {
      const uint64_t a = uint64_t(1) << g.qubits[0];
      const uint64_t b = uint64_t(1) << g.qubits[1];
      const uint64_t n = amps.size();
      for (uint64_t i = 0; i < n; ++i)
        if ((i & a) && !(i & b)) std::swap(amps[i], amps[(i ^ a) | b]);
      break;
    }
    case GateKind::MCX:
      apply_flip(amps, qubit_mask(g, 0, g.qubits.size() - 1),
                 uint64_t(1) << g.qubits.back());
      break;
    case GateKind::MCP:
      apply_phase_masked(amps, qubit_mask(g, 0, g.qubits.size()), phase_of(g.angle));
      break;
    case GateKind::GMS:
      apply_gms(amps, g);
      break;
  }
}

}  // namespace

int simulator_qubit_limit() {
  if (const char* env = std::getenv("QFA_QUBIT_LIMIT")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 24;
}

StateVector simulate(const Circuit& c, uint64_t basis_input) {
  int limit = simulator_qubit_limit();
  if (static_cast<int>(c.qubit_count()) > limit)
    throw LimitError("simulate: circuit has " + std::to_string(c.qubit_count()) +
                     " qubits, limit is " + std::to_string(limit));
  StateVector s;
  s.nq = static_cast<int>(c.qubit_count());
  s.amps.assign(uint64_t(1) << s.nq, cplx{});
  s.amps[basis_input] = 1.0;
  for (const auto& g : c.gates()) apply_gate(s.amps, g);
  if (!c.global_phase().is_zero()) {
    cplx ph = phase_of(c.global_phase());
    for (auto& a : s.amps) a *= ph;
  }
  return s;
}

UnitaryMatrix unitary_of(const Circuit& c, bool apply_permutation) {
  if (c.qubit_count() > 10)
    throw LimitError("unitary_of: limited to 10 qubits, circuit has " +
                     std::to_string(c.qubit_count()));
  UnitaryMatrix u;
  u.nq = static_cast<int>(c.qubit_count());
  size_t dim = u.dim();
  u.m.assign(dim * dim, cplx{});
  for (size_t col = 0; col < dim; ++col) {
    StateVector s = simulate(c, col);
    for (size_t row = 0; row < dim; ++row) {
      size_t out_row = row;
      if (apply_permutation && !c.output_permutation().empty()) {
        out_row = 0;
        for (int l = 0; l < u.nq; ++l)
          if (row & (uint64_t(1) << c.output_permutation()[l])) out_row |= uint64_t(1) << l;
      }
      u.at(out_row, col) += s.amps[row];
    }
  }
  return u;
}

EquivResult assert_equiv(const Circuit& c1, const Circuit& c2, double tol,
                         bool up_to_global_phase) {
  if (c1.qubit_count() != c2.qubit_count())
    throw DomainError("assert_equiv: qubit count mismatch");
  UnitaryMatrix u1 = unitary_of(c1);
  UnitaryMatrix u2 = unitary_of(c2);
  cplx align = 1.0;
  if (up_to_global_phase) {
    size_t best = 0;
    double best_mag = 0.0;
    for (size_t i = 0; i < u1.m.size(); ++i) {
      double mag = std::abs(u1.m[i]);
      if (mag > best_mag) {
        best_mag = mag;
        best = i;
      }
    }
    if (best_mag > 1e-12) {
      align = u2.m[best] / u1.m[best];
      double mag = std::abs(align);
      if (mag > 1e-12) align /= mag;
    }
  }
  EquivResult r;
  for (size_t i = 0; i < u1.m.size(); ++i)
    r.max_deviation = std::max(r.max_deviation, std::abs(u2.m[i] - align * u1.m[i]));
  r.equal = r.max_deviation <= tol;
  return r;
}

uint64_t dominant_basis_state(const StateVector& s, double tol) {
  for (size_t i = 0; i < s.amps.size(); ++i)
    if (std::abs(std::abs(s.amps[i]) - 1.0) <= tol) return i;
  throw DomainError("dominant_basis_state: state is not a computational basis state");
}

BigInt read_register(uint64_t basis_index, const Circuit& c, const std::string& reg_name) {
  const Register& r = c.reg(reg_name);
  BigInt v = 0;
  for (uint32_t j = 0; j < r.size; ++j) {
    uint32_t wire = c.physical_wire(r.offset + j);
    if (basis_index & (uint64_t(1) << wire)) v |= BigInt(1) << j;
  }
  return v;
}

uint64_t write_register(uint64_t basis_index, const Circuit& c, const std::string& reg_name,
                        const BigInt& value) {
  const Register& r = c.reg(reg_name);
  if (value < 0 || value >= (BigInt(1) << r.size))
    throw DomainError("write_register: value out of range for '" + reg_name + "'");
  for (uint32_t j = 0; j < r.size; ++j) {
    uint64_t bit = uint64_t(1) << (r.offset + j);
    if (((value >> j) & 1) != 0)
      basis_index |= bit;
    else
      basis_index &= ~bit;
  }
  return basis_index;
}

}  // namespace qfa
