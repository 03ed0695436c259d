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

#include "qfa/qasm.hpp"

#include <doctest.h>

#include "qfa/arith.hpp"
#include "qfa/baseline.hpp"
#include "qfa/encoder.hpp"
#include "qfa/errors.hpp"
#include "qfa/simulator.hpp"

using namespace qfa;

TEST_CASE("single gate fixtures") {
  Circuit c;
  c.add_register("q", 2);
  c.cx(0, 1);
  CHECK(emit_qasm(c) ==
        "OPENQASM 2.0;\n"
        "include \"qelib1.inc\";\n"
        "qreg q[2];\n"
        "cx q[0],q[1];\n");

  Circuit r;
  r.add_register("q", 1);
  r.rz(0, Dyadic(BigInt(3), -2));
  CHECK(emit_qasm(r) ==
        "OPENQASM 2.0;\n"
        "include \"qelib1.inc\";\n"
        "qreg q[1];\n"
        "rz(3*pi/4) q[0];\n");
}

TEST_CASE("angle spellings") {
  Circuit c;
  c.add_register("q", 2);
  c.rz(0, Dyadic(1));
  c.rz(0, Dyadic(BigInt(-1), -1));
  c.cp(0, 1, Dyadic(BigInt(-5), -3));
  std::string text = emit_qasm(c);
  CHECK(text.find("rz(pi) q[0];") != std::string::npos);
  CHECK(text.find("rz(-pi/2) q[0];") != std::string::npos);
  CHECK(text.find("cp(-5*pi/8) q[0],q[1];") != std::string::npos);
}

TEST_CASE("emit-parse-emit is a fixed point") {
  std::vector<Circuit> circuits;
  circuits.push_back(qft_circuit(4, false).transpiled());
  circuits.push_back(qft_circuit(3, true).transpiled());   // permutation metadata
  circuits.push_back(ripple_multiplier(2, 2));             // formats, roles, ccx
  {
    ArithSpec spec{ArithOp::Mul, QFormat{2, true, 0}, QFormat{2, true, 0}, QFormat{4, true, 0},
                   EncoderConfig{}};
    circuits.push_back(build_arith(spec).transpiled());    // global phase metadata
  }
  for (const auto& c : circuits) {
    std::string once = emit_qasm(c);
    Circuit parsed = parse_qasm(once);
    CHECK(emit_qasm(parsed) == once);
    // the reloaded circuit is the same operator
    if (c.qubit_count() <= 8) CHECK(assert_equiv(c, parsed, 1e-12, false).equal);
    REQUIRE(parsed.registers().size() == c.registers().size());
    for (size_t i = 0; i < c.registers().size(); ++i) {
      CHECK(parsed.registers()[i].name == c.registers()[i].name);
      CHECK(parsed.registers()[i].role == c.registers()[i].role);
      CHECK(parsed.registers()[i].format == c.registers()[i].format);
    }
  }
}

TEST_CASE("untranspiled gate kinds are rejected") {
  Circuit c;
  c.add_register("q", 1);
  c.p(0, Dyadic(BigInt(1), -1));
  CHECK_THROWS_WITH_AS((void)emit_qasm(c), doctest::Contains("unsupported gate kind"),
                       DomainError);
  Circuit m;
  m.add_register("q", 4);
  m.mcp({0, 1, 2}, 3, Dyadic(1));
  CHECK_THROWS_AS((void)emit_qasm(m), DomainError);
  Circuit big;
  big.add_register("q", 5);
  big.mcx({0, 1, 2, 3}, 4);
  CHECK_THROWS_AS((void)emit_qasm(big), DomainError);
}

TEST_CASE("gms gates serialize as annotated decompositions") {
  Circuit c;
  c.add_register("q", 3);
  auto chi = GmsCoupling::zeros(3, false);
  chi.at(0, 2) = Dyadic(BigInt(1), -1);
  c.gms({0, 1, 2}, std::make_shared<GmsCoupling>(chi));
  std::string text = emit_qasm(c);
  CHECK(text.find("// qfa: gms zz begin") != std::string::npos);
  CHECK(text.find("// qfa: gms end") != std::string::npos);
  Circuit parsed = parse_qasm(text);  // loads as the decomposed gates
  CHECK(assert_equiv(c, parsed, 1e-12, false).equal);
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS((void)parse_qasm(""), ParseError);
  CHECK_THROWS_AS((void)parse_qasm("qreg q[1];\n"), ParseError);  // header first
  CHECK_THROWS_AS((void)parse_qasm("OPENQASM 3.0;\n"), ParseError);
  CHECK_THROWS_AS((void)parse_qasm("OPENQASM 2.0;\nqreg q[1];\nh q[0]\n"), ParseError);
  CHECK_THROWS_AS((void)parse_qasm("OPENQASM 2.0;\nqreg q[1];\nfoo q[0];\n"), ParseError);
  CHECK_THROWS_AS((void)parse_qasm("OPENQASM 2.0;\nqreg q[1];\nh q[3];\n"), ParseError);
}
