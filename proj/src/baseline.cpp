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

#include "qfa/baseline.hpp"

#include <numeric>

#include "qfa/errors.hpp"

namespace qfa {

std::vector<int> classical_add(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size())
    throw DomainError("classical_add: length mismatch (" + std::to_string(x.size()) + " vs " +
                      std::to_string(y.size()) + ")");
  std::vector<int> s(x.size() + 1, 0);
  int carry = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    int t = x[i] + y[i] + carry;
    s[i] = t & 1;
    carry = t >> 1;
  }
  s[x.size()] = carry;
  return s;
}

namespace {

std::vector<int> negate_bits(std::vector<int> v) {
  for (auto& b : v) b ^= 1;
  return v;
}

std::vector<int> shift_left(const std::vector<int>& v, size_t k, size_t width) {
  std::vector<int> out(width, 0);
  for (size_t i = 0; i < v.size() && i + k < width; ++i) out[i + k] = v[i];
  return out;
}

// s +/- addend over a fixed width, subtraction via a - b = not(not(a) + b).
std::vector<int> add_mod(const std::vector<int>& s, const std::vector<int>& addend) {
  std::vector<int> sum = classical_add(s, addend);
  sum.resize(s.size());  // mod 2^width
  return sum;
}

std::vector<int> sub_mod(const std::vector<int>& s, const std::vector<int>& addend) {
  return negate_bits(add_mod(negate_bits(s), addend));
}

}  // namespace

std::vector<int> classical_mul(const std::vector<int>& x, const std::vector<int>& y) {
  size_t n1 = x.size(), n2 = y.size();
  size_t width = n1 + n2 + 1;
  std::vector<int> s(width, 0);
  s = add_mod(s, shift_left(x, n2, width));
  s = sub_mod(s, shift_left(x, 0, width));
  for (size_t i = 0; i < n2; ++i) {
    if (y[i])
      s = add_mod(s, shift_left(x, i, width));
    else
      s = sub_mod(s, shift_left(x, i, width));
  }
  if (s[0] != 0) throw DomainError("classical_mul: pre-shift sum is odd");
  s.erase(s.begin());  // the final right shift
  return s;
}

namespace {

struct RippleEmitter {
  Circuit& c;
  std::vector<uint32_t> x_wires;     // addend register
  std::vector<uint32_t> s_wires;     // accumulator
  std::vector<uint32_t> bank_wires;  // clean zero-extension of the addend
  uint32_t carry = 0;

  // Cuccaro primitives. MAJ leaves the running carry on the addend wire;
  // UMA restores it and writes the sum bit.
  void maj(uint32_t cw, uint32_t s, uint32_t a) {
    c.cx(a, s);
    c.cx(a, cw);
    c.append(make_gate(GateKind::MCX, {cw, s, a}));
  }
  void uma(uint32_t cw, uint32_t s, uint32_t a) {
    c.append(make_gate(GateKind::MCX, {cw, s, a}));
    c.cx(a, cw);
    c.cx(cw, s);
  }
  // Reduced forms for addend wires known to be |0>.
  void maj_zero(uint32_t cw, uint32_t s, uint32_t bank) {
    c.append(make_gate(GateKind::MCX, {cw, s, bank}));
  }
  void uma_zero(uint32_t cw, uint32_t s, uint32_t bank) {
    c.append(make_gate(GateKind::MCX, {cw, s, bank}));
    c.cx(cw, s);
  }

  // s[shift..] += x, carries rippling through the bank into the top of s.
  void add_shifted(size_t shift) {
    size_t width = s_wires.size();
    size_t n1 = x_wires.size();
    auto addend_wire = [&](size_t j) {
      return j - shift < n1 ? x_wires[j - shift] : bank_wires[j - shift - n1];
    };
    auto is_bank = [&](size_t j) { return j - shift >= n1; };
    uint32_t cw = carry;
    for (size_t j = shift; j < width; ++j) {
      if (is_bank(j))
        maj_zero(cw, s_wires[j], addend_wire(j));
      else
        maj(cw, s_wires[j], addend_wire(j));
      cw = addend_wire(j);
    }
    for (size_t j = width; j-- > shift;) {
      cw = j == shift ? carry : addend_wire(j - 1);
      if (is_bank(j))
        uma_zero(cw, s_wires[j], addend_wire(j));
      else
        uma(cw, s_wires[j], addend_wire(j));
    }
  }

  // Bitwise negation of the accumulator; conditioned on ctl == 0 when given.
  void negate_s(std::optional<uint32_t> ctl) {
    for (uint32_t w : s_wires) {
      c.x(w);
      if (ctl) c.cx(*ctl, w);
    }
  }

  void sub_shifted(size_t shift) {
    negate_s(std::nullopt);
    add_shifted(shift);
    negate_s(std::nullopt);
  }

  // Adds for y_bit = 1, subtracts for y_bit = 0.
  void conditional_stage(size_t shift, uint32_t y_bit) {
    negate_s(y_bit);
    add_shifted(shift);
    negate_s(y_bit);
  }
};

}  // namespace

Circuit cuccaro_adder(int n, AdderMode mode) {
  if (n < 1) throw DomainError("cuccaro_adder: n must be >= 1");
  Circuit c;
  std::optional<Register> ctl;
  if (mode == AdderMode::Controlled)
    ctl = c.add_register("ctl", 1, Register::Role::Control);
  QFormat xf{n, false, 0};
  QFormat yf{n + 1, false, 0};
  Register xr = c.add_register("x", static_cast<uint32_t>(n), Register::Role::Data, xf);
  Register yr = c.add_register("t", static_cast<uint32_t>(n + 1), Register::Role::Target, yf);
  Register cr = c.add_register("c", 1, Register::Role::Carry);

  RippleEmitter em{c, {}, {}, {}, 0};
  for (int i = 0; i < n; ++i) em.x_wires.push_back(xr.offset + i);
  for (int i = 0; i <= n; ++i) em.s_wires.push_back(yr.offset + i);
  em.carry = cr.offset;

  auto negate = [&] {
    if (mode == AdderMode::Subtract)
      em.negate_s(std::nullopt);
    else if (mode == AdderMode::Controlled)
      em.negate_s(ctl->offset);
  };

  negate();
  uint32_t cw = em.carry;
  for (int i = 0; i < n; ++i) {
    em.maj(cw, em.s_wires[i], em.x_wires[i]);
    cw = em.x_wires[i];
  }
  c.cx(em.x_wires[n - 1], em.s_wires[n]);  // carry out
  for (int i = n; i-- > 0;) {
    cw = i == 0 ? em.carry : em.x_wires[i - 1];
    em.uma(cw, em.s_wires[i], em.x_wires[i]);
  }
  negate();
  return c;
}

Circuit ripple_multiplier(int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw DomainError("ripple_multiplier: sizes must be >= 1");
  int width = n1 + n2 + 1;
  Circuit c;
  QFormat xf{n1, false, 0};
  QFormat yf{n2, false, 0};
  QFormat tf{width, false, 0};
  Register xr = c.add_register("x", static_cast<uint32_t>(n1), Register::Role::Data, xf);
  Register yr = c.add_register("y", static_cast<uint32_t>(n2), Register::Role::Data, yf);
  Register sr = c.add_register("t", static_cast<uint32_t>(width), Register::Role::Target, tf);
  Register zr = c.add_register("z", static_cast<uint32_t>(n2 + 1), Register::Role::Ancilla);
  Register cr = c.add_register("c", 1, Register::Role::Carry);

  RippleEmitter em{c, {}, {}, {}, 0};
  for (int i = 0; i < n1; ++i) em.x_wires.push_back(xr.offset + i);
  for (int i = 0; i < width; ++i) em.s_wires.push_back(sr.offset + i);
  for (uint32_t i = 0; i < zr.size; ++i) em.bank_wires.push_back(zr.offset + i);
  em.carry = cr.offset;

  em.add_shifted(static_cast<size_t>(n2));  // s += x << n2
  em.sub_shifted(0);                        // s -= x
  for (int i = 0; i < n2; ++i) em.conditional_stage(static_cast<size_t>(i), yr.offset + i);

  // Logical right shift by one: the product reads from s[1..]; bit 0 is
  // guaranteed zero (the pre-shift sum 2xy is even).
  std::vector<uint32_t> perm(c.qubit_count());
  std::iota(perm.begin(), perm.end(), 0u);
  for (int j = 0; j < width; ++j)
    perm[sr.offset + j] = sr.offset + static_cast<uint32_t>((j + 1) % width);
  c.set_output_permutation(std::move(perm));
  return c;
}

}  // namespace qfa
