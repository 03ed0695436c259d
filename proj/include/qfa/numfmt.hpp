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

#ifndef QFA_NUMFMT_HPP
#define QFA_NUMFMT_HPP

#include <string>
#include <string_view>

#include "qfa/dyadic.hpp"
#include "qfa/sbpoly.hpp"

namespace qfa {

/// Register number format: value = mantissa * 2^k.
///
/// Unsigned formats hold n qubits for a mantissa in [0, 2^n).
/// Signed formats hold n+1 qubits; the mantissa lives in [-2^n, 2^n - 1]
/// and is stored as a residue mod 2^(n+1) (two's-complement-style wrap).
/// The exponent k is a classical compile-time integer, never a register.
struct QFormat {
  int n = 1;
  bool is_signed = false;
  int k = 0;

  int qubit_count() const { return is_signed ? n + 1 : n; }
  BigInt modulus() const { return BigInt(1) << qubit_count(); }

  /// Textual form "u4e0", "s3e-2" (CLI flags, CSV headers).
  std::string str() const;
  static QFormat parse(std::string_view text);  // throws ParseError

  bool operator==(const QFormat&) const = default;
};

/// Contents of a register: a value in [0, 2^modulus_bits).
struct Residue {
  BigInt value;
  int modulus_bits = 0;
};

/// [x]_n: maps x in [-2^n, 2^n - 1] to x mod 2^(n+1). Throws DomainError outside range.
Residue encode_signed(const BigInt& x, int n);

/// Inverse of encode_signed. Throws DomainError on modulus mismatch.
BigInt decode_signed(const Residue& y, int n);

/// [x]_n^k = [2^-k x]_n; plain mod 2^n for unsigned formats.
/// Throws DomainError if the mantissa 2^-k x is fractional or out of range.
Residue encode_value(const Dyadic& x, const QFormat& fmt);

/// Inverse of encode_value; round-trips on the representable domain.
Dyadic decode_value(const Residue& y, const QFormat& fmt);

/// Binary expansion polynomial: sum_{i<n} 2^i reg[i].
SBPolynomial omega_unsigned(const std::string& reg, int n);

/// Image-extension polynomial converting a width-n signed encoding to width m,
/// scaled by 2^k:  2^k * [ (2^(m+1) - 2^(n+1)) reg[n] + sum_{i<=n} 2^i reg[i] ].
/// Requires m >= n.
SBPolynomial omega_ie(const std::string& reg, int n, int m, int k = 0);

/// Encoding polynomial for a whole operand: omega_unsigned or omega_ie as the
/// format dictates, scaled by 2^fmt.k. target_n is the target mantissa size.
SBPolynomial omega_for(const std::string& reg, const QFormat& fmt, int target_n,
                       bool target_signed);

enum class ArithOp { Add, Sub, Mul };

ArithOp arith_op_parse(std::string_view name);  // throws ParseError
std::string_view arith_op_name(ArithOp op);

/// Exponent shape rules: add/sub require k0 <= min(k1,k2); mul k0 <= k1+k2.
/// Throws DomainError naming the violated bound.
void validate_target_exponent(ArithOp op, int k1, int k2, int k0);

}  // namespace qfa

#endif  // QFA_NUMFMT_HPP
