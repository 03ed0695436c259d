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

#include "qfa/arith.hpp"

#include <algorithm>
#include <numeric>

#include "qfa/errors.hpp"

namespace qfa {

QFormat default_target_format(ArithOp op, const QFormat& x, const QFormat& y) {
  QFormat out;
  out.is_signed = x.is_signed || y.is_signed;
  if (op == ArithOp::Mul) {
    out.n = x.n + y.n + (out.is_signed ? 1 : 0);
    out.k = x.k + y.k;
  } else {
    out.n = std::max(x.n, y.n) + 1;
    out.k = std::min(x.k, y.k);
  }
  return out;
}

namespace {

void check_integral(const SBPolynomial& p, int k0) {
  for (const auto& m : p.monomials())
    if (!m.coeff.is_integer())
      throw DomainError("shifted polynomial is not integral: monomial '" +
                        SBPolynomial::from_monomials({m}).str() +
                        "' with target exponent k0=" + std::to_string(k0));
}

Circuit with_target_format(const Circuit& c, const QFormat& fmt) {
  Circuit out;
  for (const auto& r : c.registers())
    out.add_register(r.name, r.size, r.role,
                     r.name == "t" ? std::optional<QFormat>(fmt) : r.format);
  out.append_all(c.gates());
  out.set_output_permutation(c.output_permutation());
  out.add_global_phase(c.global_phase());
  return out;
}

}  // namespace

Circuit build_arith(const ArithSpec& spec) {
  validate_target_exponent(spec.op, spec.x.k, spec.y.k, spec.out.k);
  SBPolynomial px = omega_for("x", spec.x, spec.out.n, spec.out.is_signed);
  SBPolynomial py = omega_for("y", spec.y, spec.out.n, spec.out.is_signed);
  SBPolynomial p;
  switch (spec.op) {
    case ArithOp::Add: p = px + py; break;
    case ArithOp::Sub: p = px - py; break;
    case ArithOp::Mul: p = px * py; break;
  }
  p = p.scaled(Dyadic(BigInt(1), -spec.out.k));
  check_integral(p, spec.out.k);
  std::vector<DomainSpec> domain = {{"x", spec.x.qubit_count(), spec.x},
                                    {"y", spec.y.qubit_count(), spec.y}};
  // brand the target with its format so measurement decoding is self-contained
  return with_target_format(encode_sbp(p, domain, spec.out.qubit_count(), spec.enc), spec.out);
}

Circuit build_poly_eval(const std::vector<OperandTerm>& terms,
                        const std::vector<std::pair<std::string, QFormat>>& operands,
                        const QFormat& out, const EncoderConfig& cfg) {
  std::map<std::string, SBPolynomial> omega;
  std::vector<DomainSpec> domain;
  for (const auto& [name, fmt] : operands) {
    omega[name] = omega_for(name, fmt, out.n, out.is_signed);
    domain.push_back({name, fmt.qubit_count(), fmt});
  }
  SBPolynomial p;
  for (const auto& term : terms) {
    SBPolynomial t = SBPolynomial::constant(term.coeff);
    for (const auto& name : term.names) {
      auto it = omega.find(name);
      if (it == omega.end())
        throw DomainError("build_poly_eval: unknown operand '" + name + "'");
      t = t * it->second;
    }
    p = p + t;
  }
  p = p.scaled(Dyadic(BigInt(1), -out.k));
  check_integral(p, out.k);
  return with_target_format(encode_sbp(p, domain, out.qubit_count(), cfg), out);
}

Circuit inplace_add(const QFormat& target, const QFormat& source, int sign,
                    const EncoderConfig& cfg) {
  if (sign != 1 && sign != -1) throw DomainError("inplace_add: sign must be +1 or -1");
  validate_target_exponent(ArithOp::Add, source.k, target.k, target.k);
  SBPolynomial p = omega_for("x", source, target.n, target.is_signed);
  if (sign < 0) p = p.scaled(Dyadic(-1));
  p = p.scaled(Dyadic(BigInt(1), -target.k));
  check_integral(p, target.k);
  std::vector<DomainSpec> domain = {{"x", source.qubit_count(), source}};
  return with_target_format(encode_sbp_inplace(p, domain, target.qubit_count(), cfg), target);
}

Circuit inplace_mul_const(const BigInt& a, int n) {
  if (n < 1) throw DomainError("inplace_mul_const: n must be >= 1");
  if ((a & 1) == 0)
    throw DomainError("inplace_mul_const: " + a.str() +
                      " is even, hence not invertible in Z/2^" + std::to_string(n) +
                      "Z; only odd multipliers have in-place circuits");
  Circuit c;
  c.add_register("t", static_cast<uint32_t>(n), Register::Role::Target);
  // Modified QFT: the regular ladder with every CP(phi) replaced by CP(a phi).
  // The l = k diagonal stays a plain H since x_k pi and a x_k pi agree for odd a.
  std::vector<Gate> mod_core, core;
  std::vector<uint32_t> wires(n);
  std::iota(wires.begin(), wires.end(), 0u);
  for (int l = n - 1; l >= 0; --l) {
    mod_core.push_back(make_gate(GateKind::H, {wires[l]}));
    core.push_back(make_gate(GateKind::H, {wires[l]}));
    for (int k = l - 1; k >= 0; --k) {
      Dyadic phi(1, k - l);
      mod_core.push_back(
          make_gate(GateKind::CP, {wires[l], wires[k]}, (Dyadic(a, 0) * phi).mod_two()));
      core.push_back(make_gate(GateKind::CP, {wires[l], wires[k]}, phi));
    }
  }
  c.append_all(mod_core);
  // Inverse QFT; the two swap layers cancel between the stages.
  for (auto it = core.rbegin(); it != core.rend(); ++it) c.append(it->adjoint());
  return c;
}

std::pair<Circuit, QFormat> semi_inplace_mul_const(const BigInt& a, const QFormat& fmt) {
  if (a <= 0)
    throw DomainError("semi_inplace_mul_const: multiplier must be positive, got " + a.str());
  BigInt b = a;
  int k = 0;
  while ((b & 1) == 0) {
    b >>= 1;
    ++k;
  }
  QFormat out = fmt;
  out.k += k;
  if (b == 1) {
    Circuit c;
    c.add_register("t", static_cast<uint32_t>(fmt.qubit_count()), Register::Role::Target, out);
    return {std::move(c), out};
  }
  return {with_target_format(inplace_mul_const(b, fmt.qubit_count()), out), out};
}

}  // namespace qfa
