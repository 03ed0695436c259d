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

#include <doctest.h>

#include "qfa/errors.hpp"
#include "qfa/simulator.hpp"

using namespace qfa;

namespace {

/// Runs an out-of-place arithmetic circuit on residues and returns the target
/// residue, checking that the operand registers survive unchanged.
BigInt run_arith(const Circuit& c, const BigInt& x, const BigInt& y) {
  uint64_t in = write_register(write_register(0, c, "x", x), c, "y", y);
  StateVector s = simulate(c, in);
  uint64_t out = dominant_basis_state(s, 1e-9);
  CHECK(read_register(out, c, "x") == x);
  CHECK(read_register(out, c, "y") == y);
  if (c.find_reg("anc")) CHECK(read_register(out, c, "anc") == 0);
  return read_register(out, c, "t");
}

BigInt apply_op(ArithOp op, const BigInt& a, const BigInt& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
  }
  return 0;
}

BigInt wrap(const BigInt& v, int bits) {
  BigInt mod = BigInt(1) << bits;
  BigInt r = v % mod;
  if (r < 0) r += mod;
  return r;
}

EncoderConfig quick_cfg() {
  EncoderConfig cfg;
  cfg.ancilla_pool = 1;
  return cfg;
}

}  // namespace

TEST_CASE("signed multiplication worked example") {
  // 3-bit signed factors -3 and 2: residues 13 and 2, product residue 10, -6
  ArithSpec spec{ArithOp::Mul, QFormat{3, true, 0}, QFormat{3, true, 0}, QFormat{3, true, 0},
                 quick_cfg()};
  Circuit c = build_arith(spec);
  BigInt r = run_arith(c, encode_signed(-3, 3).value, encode_signed(2, 3).value);
  CHECK(r == 10);
  CHECK(decode_signed(Residue{r, 4}, 3) == -6);
}

TEST_CASE("unsigned basics") {
  ArithSpec add{ArithOp::Add, QFormat{3, false, 0}, QFormat{3, false, 0}, QFormat{3, false, 0},
                quick_cfg()};
  CHECK(run_arith(build_arith(add), 3, 2) == 5);
  ArithSpec mul = add;
  mul.op = ArithOp::Mul;
  CHECK(run_arith(build_arith(mul), 3, 3) == 1);  // 9 mod 8 wraps
}

TEST_CASE("unsigned ops agree with modular integer arithmetic, exhaustive") {
  for (int n1 = 1; n1 <= 2; ++n1) {
    for (int n2 = 1; n2 <= 2; ++n2) {
      for (int m : {1, 2, 4}) {
        for (ArithOp op : {ArithOp::Add, ArithOp::Sub, ArithOp::Mul}) {
          ArithSpec spec{op, QFormat{n1, false, 0}, QFormat{n2, false, 0}, QFormat{m, false, 0},
                         quick_cfg()};
          Circuit c = build_arith(spec);
          for (BigInt x = 0; x < (BigInt(1) << n1); ++x)
            for (BigInt y = 0; y < (BigInt(1) << n2); ++y)
              CHECK(run_arith(c, x, y) == wrap(apply_op(op, x, y), m));
        }
      }
    }
  }
}

TEST_CASE("signed ops with flexible register sizes decode correctly") {
  for (int n : {1, 2}) {
    for (int n0 : {n, n + 1, 2 * n + 1}) {
      for (ArithOp op : {ArithOp::Add, ArithOp::Sub, ArithOp::Mul}) {
        ArithSpec spec{op, QFormat{n, true, 0}, QFormat{n, true, 0}, QFormat{n0, true, 0},
                       quick_cfg()};
        Circuit c = build_arith(spec);
        for (BigInt x = -(BigInt(1) << n); x < (BigInt(1) << n); ++x) {
          for (BigInt y = -(BigInt(1) << n); y < (BigInt(1) << n); ++y) {
            BigInt expect = apply_op(op, x, y);
            BigInt target = run_arith(c, encode_signed(x, n).value, encode_signed(y, n).value);
            if (expect >= -(BigInt(1) << n0) && expect <= (BigInt(1) << n0) - 1) {
              CHECK(decode_signed(Residue{target, n0 + 1}, n0) == expect);
            } else {
              CHECK(target == wrap(expect, n0 + 1));  // modular wrap beyond range
            }
          }
        }
      }
    }
  }
}

TEST_CASE("floating point formats multiply and add exactly") {
  // 1.5 * -0.75 = -1.125 in formats s3e-1 x s3e-2 -> s6e-3
  ArithSpec mul{ArithOp::Mul, QFormat{3, true, -1}, QFormat{3, true, -2}, QFormat{6, true, -3},
                quick_cfg()};
  Circuit c = build_arith(mul);
  BigInt rx = encode_value(Dyadic(BigInt(3), -1), mul.x).value;
  BigInt ry = encode_value(Dyadic(BigInt(-3), -2), mul.y).value;
  BigInt rt = run_arith(c, rx, ry);
  CHECK(decode_value(Residue{rt, 7}, mul.out) == Dyadic(BigInt(-9), -3));

  // 1.5 + -0.75 = 0.75 in s4e-2
  ArithSpec add{ArithOp::Add, QFormat{3, true, -1}, QFormat{3, true, -2}, QFormat{4, true, -2},
                quick_cfg()};
  Circuit ca = build_arith(add);
  rx = encode_value(Dyadic(BigInt(3), -1), add.x).value;
  ry = encode_value(Dyadic(BigInt(-3), -2), add.y).value;
  rt = run_arith(ca, rx, ry);
  CHECK(decode_value(Residue{rt, 5}, add.out) == Dyadic(BigInt(3), -2));
}

TEST_CASE("floating point sweep within representable range") {
  // mixed exponents: aligning the mantissas needs a wider target than the
  // equal-exponent default, so the add target is chosen explicitly
  QFormat fx{2, true, -1}, fy{2, true, 1};
  struct OpCase {
    ArithOp op;
    QFormat out;
  };
  for (const auto& [op, out] : {OpCase{ArithOp::Add, QFormat{6, true, -1}},
                                OpCase{ArithOp::Mul, QFormat{5, true, 0}}}) {
    ArithSpec spec{op, fx, fy, out, quick_cfg()};
    Circuit c = build_arith(spec);
    for (BigInt mx = -4; mx <= 3; ++mx) {
      for (BigInt my = -4; my <= 3; ++my) {
        Dyadic x = Dyadic(mx, 0).shifted(fx.k);
        Dyadic y = Dyadic(my, 0).shifted(fy.k);
        Dyadic expect = op == ArithOp::Add ? x + y : x * y;
        BigInt rt = run_arith(c, encode_value(x, fx).value, encode_value(y, fy).value);
        Dyadic mant = expect.shifted(-out.k);
        if (mant >= Dyadic(-(BigInt(1) << out.n), 0) &&
            mant <= Dyadic((BigInt(1) << out.n) - 1, 0)) {
          CHECK(decode_value(Residue{rt, out.qubit_count()}, out) == expect);
        } else {
          CHECK(rt == wrap(mant.to_integer(), out.n + 1));
        }
      }
    }
  }
}

TEST_CASE("shape rule violations are rejected") {
  ArithSpec bad{ArithOp::Add, QFormat{2, true, 0}, QFormat{2, true, -1}, QFormat{4, true, 0},
                quick_cfg()};
  CHECK_THROWS_AS(build_arith(bad), DomainError);
  ArithSpec bad_mul{ArithOp::Mul, QFormat{2, true, -1}, QFormat{2, true, -2}, QFormat{6, true, 0},
                    quick_cfg()};
  CHECK_THROWS_AS(build_arith(bad_mul), DomainError);
  // signed operand too wide for the target
  ArithSpec narrow{ArithOp::Add, QFormat{3, true, 0}, QFormat{1, true, 0}, QFormat{2, true, 0},
                   quick_cfg()};
  CHECK_THROWS_AS(build_arith(narrow), DomainError);
}

TEST_CASE("default target formats") {
  CHECK(default_target_format(ArithOp::Add, QFormat{3, false, 0}, QFormat{2, false, 0}) ==
        QFormat{4, false, 0});
  CHECK(default_target_format(ArithOp::Add, QFormat{3, true, 0}, QFormat{2, false, 0}) ==
        QFormat{4, true, 0});
  CHECK(default_target_format(ArithOp::Mul, QFormat{3, false, 0}, QFormat{2, false, 0}) ==
        QFormat{5, false, 0});
  CHECK(default_target_format(ArithOp::Mul, QFormat{3, true, -1}, QFormat{2, true, 1}) ==
        QFormat{6, true, 0});
}

TEST_CASE("polynomial evaluation circuits") {
  SUBCASE("x^2 + y") {
    std::vector<OperandTerm> terms{{Dyadic(1), {"x", "x"}}, {Dyadic(1), {"y"}}};
    Circuit c = build_poly_eval(terms, {{"x", QFormat{2, false, 0}}, {"y", QFormat{2, false, 0}}},
                                QFormat{4, false, 0}, quick_cfg());
    for (BigInt x = 0; x < 4; ++x)
      for (BigInt y = 0; y < 4; ++y) CHECK(run_arith(c, x, y) == wrap(x * x + y, 4));
  }
  SUBCASE("identity copies the value") {
    std::vector<OperandTerm> terms{{Dyadic(1), {"x"}}};
    Circuit c = build_poly_eval(terms, {{"x", QFormat{3, false, 0}}}, QFormat{3, false, 0},
                                quick_cfg());
    for (BigInt x = 0; x < 8; ++x) {
      uint64_t in = write_register(0, c, "x", x);
      uint64_t out = dominant_basis_state(simulate(c, in));
      CHECK(read_register(out, c, "t") == x);
    }
  }
  SUBCASE("fractional coefficients without shift are rejected") {
    std::vector<OperandTerm> terms{{Dyadic(BigInt(1), -1), {"x"}}};
    CHECK_THROWS_WITH_AS(
        (void)build_poly_eval(terms, {{"x", QFormat{2, false, 0}}}, QFormat{3, false, 0},
                              quick_cfg()),
        doctest::Contains("not integral"), DomainError);
  }
  SUBCASE("signed cubic") {
    std::vector<OperandTerm> terms{{Dyadic(1), {"x", "x", "x"}}, {Dyadic(-2), {"x"}}};
    QFormat fx{2, true, 0};
    QFormat out{6, true, 0};
    Circuit c = build_poly_eval(terms, {{"x", fx}}, out, quick_cfg());
    for (BigInt x = -4; x <= 3; ++x) {
      uint64_t in = write_register(0, c, "x", encode_signed(x, 2).value);
      uint64_t o = dominant_basis_state(simulate(c, in));
      CHECK(decode_signed(Residue{read_register(o, c, "t"), 7}, 6) == x * x * x - 2 * x);
    }
  }
}

TEST_CASE("in-place addition and subtraction") {
  EncoderConfig cfg = quick_cfg();
  SUBCASE("plain unsigned") {
    Circuit c = inplace_add(QFormat{3, false, 0}, QFormat{3, false, 0}, +1, cfg);
    for (BigInt x = 0; x < 8; ++x) {
      for (BigInt y = 0; y < 8; ++y) {
        uint64_t in = write_register(write_register(0, c, "x", x), c, "t", y);
        uint64_t out = dominant_basis_state(simulate(c, in));
        CHECK(read_register(out, c, "t") == wrap(x + y, 3));
        CHECK(read_register(out, c, "x") == x);
      }
    }
  }
  SUBCASE("worked values") {
    Circuit c = inplace_add(QFormat{3, false, 0}, QFormat{3, false, 0}, +1, cfg);
    uint64_t in = write_register(write_register(0, c, "x", 5), c, "t", 6);
    CHECK(read_register(dominant_basis_state(simulate(c, in)), c, "t") == 3);
    Circuit s = inplace_add(QFormat{3, false, 0}, QFormat{3, false, 0}, -1, cfg);
    in = write_register(write_register(0, s, "x", 2), s, "t", 1);
    CHECK(read_register(dominant_basis_state(simulate(s, in)), s, "t") == 7);
  }
  SUBCASE("exponent difference scales the source") {
    // t (k=-1) += x (k=0): mantissa arithmetic t += 2x
    Circuit c = inplace_add(QFormat{4, false, -1}, QFormat{2, false, 0}, +1, cfg);
    uint64_t in = write_register(write_register(0, c, "x", 3), c, "t", 1);
    CHECK(read_register(dominant_basis_state(simulate(c, in)), c, "t") == 7);
  }
  SUBCASE("signed source extends its image") {
    Circuit c = inplace_add(QFormat{3, true, 0}, QFormat{2, true, 0}, +1, cfg);
    for (BigInt x = -4; x <= 3; ++x) {
      for (BigInt y = -4; y <= 3; ++y) {
        uint64_t in = write_register(write_register(0, c, "x", encode_signed(x, 2).value), c,
                                     "t", encode_signed(y, 3).value);
        uint64_t out = dominant_basis_state(simulate(c, in));
        CHECK(decode_signed(Residue{read_register(out, c, "t"), 4}, 3) == x + y);
      }
    }
  }
  SUBCASE("exponent rule violation") {
    CHECK_THROWS_AS(inplace_add(QFormat{3, false, 0}, QFormat{3, false, -1}, +1, cfg),
                    DomainError);
  }
}

TEST_CASE("in-place constant multiplication") {
  SUBCASE("worked value: 3 * 7 mod 16") {
    Circuit c = inplace_mul_const(3, 4);
    uint64_t in = write_register(0, c, "t", 7);
    CHECK(read_register(dominant_basis_state(simulate(c, in)), c, "t") == 5);  // 21 mod 16
  }
  SUBCASE("every odd multiplier is the right permutation") {
    for (int n = 1; n <= 4; ++n) {
      for (BigInt a = 1; a < (BigInt(1) << n); a += 2) {
        Circuit c = inplace_mul_const(a, n);
        for (BigInt x = 0; x < (BigInt(1) << n); ++x) {
          uint64_t in = write_register(0, c, "t", x);
          uint64_t out = dominant_basis_state(simulate(c, in));
          CHECK(read_register(out, c, "t") == wrap(a * x, n));
        }
      }
    }
  }
  SUBCASE("a=1 is the identity up to global phase") {
    Circuit c = inplace_mul_const(1, 3);
    Circuit empty;
    empty.add_register("t", 3, Register::Role::Target);
    CHECK(assert_equiv(c, empty, 1e-9, true).equal);
  }
  SUBCASE("inverse multiplier undoes the map") {
    // 3 * 11 = 33 = 1 mod 16
    Circuit c = inplace_mul_const(3, 4).compose(inplace_mul_const(11, 4));
    Circuit empty;
    empty.add_register("t", 4, Register::Role::Target);
    CHECK(assert_equiv(c, empty, 1e-9, true).equal);
  }
  SUBCASE("even multipliers are rejected") {
    CHECK_THROWS_WITH_AS((void)inplace_mul_const(2, 3), doctest::Contains("not invertible"),
                         DomainError);
  }
}

TEST_CASE("semi-in-place constant multiplication") {
  SUBCASE("a=6 on a 4-bit register: mantissa 3x, exponent +1") {
    QFormat fmt{4, false, 0};
    auto [c, out_fmt] = semi_inplace_mul_const(6, fmt);
    CHECK(out_fmt.k == 1);
    // value 7: mantissa overflow, uninformative wrap to 10
    uint64_t in = write_register(0, c, "t", 7);
    BigInt r = read_register(dominant_basis_state(simulate(c, in)), c, "t");
    CHECK(decode_value(Residue{r, 4}, out_fmt) == Dyadic(10));
    // value 3: no mantissa overflow, exact 18
    in = write_register(0, c, "t", 3);
    r = read_register(dominant_basis_state(simulate(c, in)), c, "t");
    CHECK(decode_value(Residue{r, 4}, out_fmt) == Dyadic(18));
  }
  SUBCASE("powers of two shift without gates") {
    auto [c, fmt] = semi_inplace_mul_const(4, QFormat{3, true, -1});
    CHECK(c.gates().empty());
    CHECK(fmt.k == 1);
  }
  SUBCASE("nonpositive multipliers are rejected") {
    CHECK_THROWS_AS(semi_inplace_mul_const(0, QFormat{3, false, 0}), DomainError);
    CHECK_THROWS_AS(semi_inplace_mul_const(-6, QFormat{3, false, 0}), DomainError);
  }
}
