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

#ifndef QFA_ARITH_HPP
#define QFA_ARITH_HPP

#include <utility>
#include <vector>

#include "qfa/circuit.hpp"
#include "qfa/encoder.hpp"
#include "qfa/numfmt.hpp"

namespace qfa {

struct ArithSpec {
  ArithOp op = ArithOp::Add;
  QFormat x;
  QFormat y;
  QFormat out;
  EncoderConfig enc;
};

/// Sensible overflow-free target: add/sub n0 = max(n1,n2)+1; mul n0 = n1+n2
/// (+1 when signed); k0 = min(k1,k2) resp. k1+k2.
QFormat default_target_format(ArithOp op, const QFormat& x, const QFormat& y);

/// Out-of-place arithmetic |x>|y>|0> -> |x>|y>|x o y>, registers "x","y","t".
/// Validates the exponent shape rule and the integrality of the shifted
/// polynomial.
Circuit build_arith(const ArithSpec& spec);

/// One term of a polynomial over named operand values (not bits); names may
/// repeat for powers, e.g. x^2 + y = {1,{"x","x"}}, {1,{"y"}}.
struct OperandTerm {
  Dyadic coeff;
  std::vector<std::string> names;
};

/// |x>|y>...|0> -> |x>|y>...|p(x,y,..) mod 2^m> with format decoding.
Circuit build_poly_eval(const std::vector<OperandTerm>& terms,
                        const std::vector<std::pair<std::string, QFormat>>& operands,
                        const QFormat& out, const EncoderConfig& cfg);

/// In-place |x>|y> -> |x>|(y + sign * x)> respecting both formats.
/// Registers "x" (source) and "t" (target).
Circuit inplace_add(const QFormat& target, const QFormat& source, int sign,
                    const EncoderConfig& cfg);

/// Ancilla-free in-place constant multiplication |x> -> |a x mod 2^n> on
/// register "t". The multiplier must be odd (invertibility in Z/2^nZ);
/// even multipliers are rejected.
Circuit inplace_mul_const(const BigInt& a, int n);

/// Factors a = b 2^k with b odd, multiplies in-place by b and moves the 2^k
/// into the returned format's exponent. a = 4 yields an empty circuit.
std::pair<Circuit, QFormat> semi_inplace_mul_const(const BigInt& a, const QFormat& fmt);

}  // namespace qfa

#endif  // QFA_ARITH_HPP
