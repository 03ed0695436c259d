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

#include "qfa/numfmt.hpp"

#include <algorithm>

#include "qfa/errors.hpp"

namespace qfa {

std::string QFormat::str() const {
  return std::string(is_signed ? "s" : "u") + std::to_string(n) + "e" + std::to_string(k);
}

QFormat QFormat::parse(std::string_view text) {
  auto fail = [&] { throw ParseError("QFormat::parse: bad format '" + std::string(text) + "'"); };
  if (text.size() < 4) fail();
  QFormat fmt;
  if (text[0] == 's')
    fmt.is_signed = true;
  else if (text[0] == 'u')
    fmt.is_signed = false;
  else
    fail();
  auto e = text.find('e', 1);
  if (e == std::string_view::npos || e == 1 || e + 1 >= text.size()) fail();
  try {
    fmt.n = std::stoi(std::string(text.substr(1, e - 1)));
    fmt.k = std::stoi(std::string(text.substr(e + 1)));
  } catch (const std::exception&) {
    fail();
  }
  if (fmt.n < 1) throw DomainError("QFormat: mantissa size must be >= 1");
  return fmt;
}

Residue encode_signed(const BigInt& x, int n) {
  BigInt lo = -(BigInt(1) << n);
  BigInt hi = (BigInt(1) << n) - 1;
  if (x < lo || x > hi)
    throw DomainError("encode_signed: " + x.str() + " outside [" + lo.str() + ", " + hi.str() +
                      "] for n=" + std::to_string(n));
  BigInt mod = BigInt(1) << (n + 1);
  return Residue{x >= 0 ? x : mod + x, n + 1};
}

BigInt decode_signed(const Residue& y, int n) {
  if (y.modulus_bits != n + 1)
    throw DomainError("decode_signed: residue has " + std::to_string(y.modulus_bits) +
                      " modulus bits, expected " + std::to_string(n + 1));
  BigInt half = BigInt(1) << n;
  if (y.value < half) return y.value;
  return y.value - (BigInt(1) << (n + 1));
}

Residue encode_value(const Dyadic& x, const QFormat& fmt) {
  Dyadic mant = x.shifted(-fmt.k);
  if (!mant.is_integer())
    throw DomainError("encode_value: " + x.decimal_str() + " has a fractional mantissa in format " +
                      fmt.str());
  BigInt m = mant.to_integer();
  if (fmt.is_signed) return encode_signed(m, fmt.n);
  if (m < 0 || m >= (BigInt(1) << fmt.n))
    throw DomainError("encode_value: mantissa " + m.str() + " outside [0, 2^" +
                      std::to_string(fmt.n) + ") for format " + fmt.str());
  return Residue{m, fmt.n};
}

Dyadic decode_value(const Residue& y, const QFormat& fmt) {
  if (y.modulus_bits != fmt.qubit_count())
    throw DomainError("decode_value: residue has " + std::to_string(y.modulus_bits) +
                      " modulus bits, format " + fmt.str() + " expects " +
                      std::to_string(fmt.qubit_count()));
  BigInt mant = fmt.is_signed ? decode_signed(y, fmt.n) : y.value;
  return Dyadic(mant, 0).shifted(fmt.k);
}

SBPolynomial omega_unsigned(const std::string& reg, int n) {
  if (n < 1) throw DomainError("omega_unsigned: n must be >= 1");
  std::vector<Monomial> monos;
  for (int i = 0; i < n; ++i) monos.push_back({Dyadic(BigInt(1), i), {{reg, i}}});
  return SBPolynomial::from_monomials(std::move(monos));
}

SBPolynomial omega_ie(const std::string& reg, int n, int m, int k) {
  if (n < 1) throw DomainError("omega_ie: n must be >= 1");
  if (m < n)
    throw DomainError("omega_ie: m=" + std::to_string(m) + " < n=" + std::to_string(n));
  std::vector<Monomial> monos;
  for (int i = 0; i <= n; ++i) monos.push_back({Dyadic(BigInt(1), i), {{reg, i}}});
  BigInt ext = (BigInt(1) << (m + 1)) - (BigInt(1) << (n + 1));
  monos.push_back({Dyadic(ext, 0), {{reg, n}}});
  auto p = SBPolynomial::from_monomials(std::move(monos));
  return k == 0 ? p : p.scaled(Dyadic(BigInt(1), k));
}

SBPolynomial omega_for(const std::string& reg, const QFormat& fmt, int target_n,
                       bool target_signed) {
  if (!fmt.is_signed) {
    auto p = omega_unsigned(reg, fmt.n);
    return fmt.k == 0 ? p : p.scaled(Dyadic(BigInt(1), fmt.k));
  }
  // A signed operand wraps mod 2^(m+1) where m+1 is the target qubit count.
  int ie_m = target_signed ? target_n : target_n - 1;
  if (ie_m < fmt.n)
    throw DomainError("omega_for: signed operand " + fmt.str() +
                      " does not fit a target of " + std::to_string(ie_m + 1) + " qubits");
  return omega_ie(reg, fmt.n, ie_m, fmt.k);
}

ArithOp arith_op_parse(std::string_view name) {
  if (name == "add") return ArithOp::Add;
  if (name == "sub") return ArithOp::Sub;
  if (name == "mul") return ArithOp::Mul;
  throw ParseError("unknown arithmetic op '" + std::string(name) + "' (want add|sub|mul)");
}

std::string_view arith_op_name(ArithOp op) {
  switch (op) {
    case ArithOp::Add: return "add";
    case ArithOp::Sub: return "sub";
    case ArithOp::Mul: return "mul";
  }
  return "?";
}

void validate_target_exponent(ArithOp op, int k1, int k2, int k0) {
  if (op == ArithOp::Mul) {
    if (k0 > k1 + k2)
      throw DomainError("shape error: multiplication requires k0 <= k1 + k2 (" +
                        std::to_string(k0) + " > " + std::to_string(k1 + k2) + ")");
    return;
  }
  int bound = std::min(k1, k2);
  if (k0 > bound)
    throw DomainError("shape error: addition/subtraction requires k0 <= min(k1, k2) (" +
                      std::to_string(k0) + " > " + std::to_string(bound) + ")");
}

}  // namespace qfa
