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

#include <doctest.h>

#include <algorithm>
#include <complex>

#include "qfa/errors.hpp"
#include "qfa/simulator.hpp"

using namespace qfa;

namespace {

SBPolynomial P(const char* text) { return SBPolynomial::parse(text); }

BigInt wrap(const Dyadic& v, int m) {
  BigInt mod = BigInt(1) << m;
  BigInt r = v.to_integer() % mod;
  if (r < 0) r += mod;
  return r;
}

std::map<VarId, bool> domain_bits(const Circuit& c, const std::vector<DomainSpec>& domain,
                                  uint64_t input) {
  std::map<VarId, bool> assign;
  for (const auto& d : domain) {
    const Register& r = c.reg(d.name);
    for (uint32_t i = 0; i < r.size; ++i)
      assign[{d.name, static_cast<int>(i)}] = (input >> (r.offset + i)) & 1;
  }
  return assign;
}

uint64_t total_domain_bits(const std::vector<DomainSpec>& domain) {
  uint64_t n = 0;
  for (const auto& d : domain) n += d.size;
  return n;
}

/// The central encoder oracle: on every basis input the target register must
/// hold p(x) mod 2^m with unit amplitude, domain bits unchanged and all
/// ancillas back to |0>. Returns the per-input output phases for the config
/// invariance check.
std::vector<std::complex<double>> check_encoder(const SBPolynomial& p,
                                                const std::vector<DomainSpec>& domain, int m,
                                                const EncoderConfig& cfg) {
  Circuit c = encode_sbp(p, domain, m, cfg);
  uint64_t dbits = total_domain_bits(domain);
  std::vector<std::complex<double>> phases;
  for (uint64_t x = 0; x < (uint64_t(1) << dbits); ++x) {
    StateVector s = simulate(c, x);
    uint64_t out = dominant_basis_state(s, 1e-9);
    for (const auto& d : domain) {
      INFO("domain register ", d.name, " input ", x);
      CHECK(read_register(out, c, d.name) == read_register(x, c, d.name));
    }
    BigInt expect = wrap(p.eval(domain_bits(c, domain, x)), m);
    INFO("input ", x, " target");
    CHECK(read_register(out, c, "t") == expect);
    if (c.find_reg("anc")) CHECK(read_register(out, c, "anc") == 0);
    if (c.find_reg("scr")) CHECK(read_register(out, c, "scr") == 0);
    phases.push_back(s.amps[out]);
  }
  return phases;
}

std::vector<EncoderConfig> config_matrix() {
  std::vector<EncoderConfig> cfgs;
  for (bool swapless : {false, true}) {
    for (auto ordering : {MonomialOrdering::AsGiven, MonomialOrdering::Heuristic}) {
      EncoderConfig naive;
      naive.ug_strategy = UgStrategy::NaiveMcp;
      naive.ancilla_pool = 0;
      naive.swapless_qft = swapless;
      naive.ordering = ordering;
      cfgs.push_back(naive);
      for (int pool : {1, 2}) {
        EncoderConfig anc;
        anc.ug_strategy = UgStrategy::AncillaControlled;
        anc.ancilla_pool = pool;
        anc.swapless_qft = swapless;
        anc.ordering = ordering;
        cfgs.push_back(anc);
      }
    }
  }
  return cfgs;
}

}  // namespace

TEST_CASE("qft circuit shapes") {
  Circuit q1 = qft_circuit(1);
  REQUIRE(q1.gates().size() == 1);
  CHECK(q1.gates()[0].kind == GateKind::H);

  Circuit q4 = qft_circuit(4, true);
  auto counts = q4.gate_counts();
  CHECK(counts[GateKind::H] == 4);
  CHECK(counts[GateKind::CP] == 6);
  CHECK(counts.count(GateKind::SWAP) == 0);
  CHECK(q4.output_permutation() == std::vector<uint32_t>{3, 2, 1, 0});
}

TEST_CASE("phase ladder gates") {
  SUBCASE("uncontrolled ladder for y=1, m=3") {
    auto gates = u_g_gates(Dyadic(1), {0, 1, 2}, {});
    REQUIRE(gates.size() == 3);
    CHECK(gates[0].kind == GateKind::P);
    CHECK(gates[0].qubits[0] == 0);
    CHECK(gates[0].angle == Dyadic(BigInt(1), -2));  // pi/4
    CHECK(gates[1].angle == Dyadic(BigInt(1), -1));  // pi/2
    CHECK(gates[2].angle == Dyadic(1));              // pi
  }
  SUBCASE("full wrap produces no gates") {
    CHECK(u_g_gates(Dyadic(8), {0, 1, 2}, {}).empty());
    CHECK(u_g_gates(Dyadic(-8), {0, 1, 2}, {1}).empty());
  }
  SUBCASE("controls attach") {
    auto gates = u_g_gates(Dyadic(3), {1, 2, 3}, {0});
    REQUIRE(!gates.empty());
    for (const auto& g : gates) CHECK(g.kind == GateKind::CP);
    auto mc = u_g_gates(Dyadic(3), {2, 3, 4}, {0, 1});
    for (const auto& g : mc) CHECK(g.kind == GateKind::MCP);
  }
  SUBCASE("the ladder is additive") {
    for (long long y1 : {0LL, 1LL, 3LL, 7LL, -2LL}) {
      for (long long y2 : {1LL, 5LL, 13LL}) {
        Circuit lhs, rhs;
        lhs.add_register("q", 4);
        rhs.add_register("q", 4);
        lhs.append_all(u_g_gates(Dyadic(y1), {0, 1, 2, 3}, {}));
        lhs.append_all(u_g_gates(Dyadic(y2), {0, 1, 2, 3}, {}));
        rhs.append_all(u_g_gates(Dyadic(y1 + y2), {0, 1, 2, 3}, {}));
        CHECK(assert_equiv(lhs, rhs, 1e-10, false).equal);
      }
    }
  }
}

TEST_CASE("monomial ordering") {
  SBPolynomial p = P("x[0] + 2*x[1]*x[2] + 3*x[0]*x[1]");
  std::vector<DomainSpec> domain{{"x", 3, std::nullopt}};
  EncoderConfig cfg;
  cfg.ug_strategy = UgStrategy::AncillaControlled;
  cfg.ancilla_pool = 2;

  SUBCASE("greedy order lets independent terms overlap") {
    cfg.ordering = MonomialOrdering::Heuristic;
    auto order = order_monomials(p, domain, 3, cfg);
    REQUIRE(order.size() == 3);
    // x0 first (all costs tie, canonical order breaks it), then the term on
    // untouched wires x1 x2, then the blocked one
    CHECK(order[0].vars == std::vector<VarId>{{"x", 0}});
    CHECK(order[1].vars == (std::vector<VarId>{{"x", 1}, {"x", 2}}));
    CHECK(order[2].vars == (std::vector<VarId>{{"x", 0}, {"x", 1}}));
  }
  SUBCASE("as-given keeps the canonical order") {
    cfg.ordering = MonomialOrdering::AsGiven;
    auto order = order_monomials(p, domain, 3, cfg);
    CHECK(order[0].vars == std::vector<VarId>{{"x", 0}});
    CHECK(order[1].vars == (std::vector<VarId>{{"x", 0}, {"x", 1}}));
    CHECK(order[2].vars == (std::vector<VarId>{{"x", 1}, {"x", 2}}));
  }
  SUBCASE("single monomial") {
    cfg.ordering = MonomialOrdering::Heuristic;
    auto order = order_monomials(P("5*x[0]*x[2]"), domain, 3, cfg);
    REQUIRE(order.size() == 1);
    CHECK(order[0].coeff == Dyadic(5));
  }
  SUBCASE("heuristic is no deeper than canonical order") {
    cfg.ordering = MonomialOrdering::Heuristic;
    Circuit heuristic = encode_sbp(p, domain, 3, cfg);
    cfg.ordering = MonomialOrdering::AsGiven;
    Circuit given = encode_sbp(p, domain, 3, cfg);
    CHECK(heuristic.depth() <= given.depth());
  }
}

TEST_CASE("naive encoder gate structure and hand-layered depth") {
  // Omega = x0 + 2 x1 x2 + 3 x0 x1 on 3 domain + 3 target wires, plain QFT,
  // monomials in the order x0, 2 x1 x2, 3 x0 x1 (explicit permutation of the
  // canonical list). Expected gate list, with (pi-unit) angles reduced:
  //   H t0, H t1, H t2
  //   CP(1/4) x0-t0, CP(1/2) x0-t1, CP(1) x0-t2
  //   MCP(1/2) {x1,x2}-t0, MCP(1) {x1,x2}-t1          (2*2^2/8 wraps to 0)
  //   MCP(3/4) {x0,x1}-t0, MCP(-1/2) {x0,x1}-t1, MCP(1) {x0,x1}-t2
  //   SWAP t0-t2
  //   H t0, CP(-1/2) t1-t0, H t1, CP(-1/4) t2-t0, CP(-1/2) t2-t1, H t2
  // ASAP layers by hand (wires x0..x2 = 0..2, t0..t2 = 3..5):
  //   H:1,1,1 | CP:2,3,4 | MCP:3,4 | MCP:5,6,7 | SWAP:8 | H:9, CP:10, H:11,
  //   CP:11, CP:12, H:13  ->  depth 13
  SBPolynomial p = P("x[0] + 2*x[1]*x[2] + 3*x[0]*x[1]");
  EncoderConfig cfg;
  cfg.ug_strategy = UgStrategy::NaiveMcp;
  cfg.ancilla_pool = 0;
  cfg.swapless_qft = false;
  cfg.ordering = MonomialOrdering::Explicit;
  cfg.explicit_order = {0, 2, 1};
  Circuit c = encode_sbp(p, {{"x", 3, std::nullopt}}, 3, cfg);

  auto counts = c.gate_counts();
  CHECK(counts[GateKind::H] == 6);
  CHECK(counts[GateKind::CP] == 6);
  CHECK(counts[GateKind::MCP] == 5);
  CHECK(counts[GateKind::SWAP] == 1);
  REQUIRE(c.gates().size() == 18);

  const auto& g = c.gates();
  CHECK(g[3].kind == GateKind::CP);
  CHECK(g[3].angle == Dyadic(BigInt(1), -2));
  CHECK(g[6].kind == GateKind::MCP);
  CHECK(g[6].angle == Dyadic(BigInt(1), -1));
  CHECK(g[7].angle == Dyadic(1));
  CHECK(g[8].angle == Dyadic(BigInt(3), -2));
  CHECK(g[9].angle == Dyadic(BigInt(-1), -1));
  CHECK(g[10].angle == Dyadic(1));
  CHECK(g[11].kind == GateKind::SWAP);

  CHECK(c.depth() == 13);
}

TEST_CASE("encoder functional correctness across configurations") {
  struct Case {
    const char* poly;
    std::vector<DomainSpec> domain;
    int m;
  };
  std::vector<Case> cases = {
      {"x[0] + 2*x[1]*x[2] + 3*x[0]*x[1]", {{"x", 3, std::nullopt}}, 3},
      {"9", {{"x", 1, std::nullopt}}, 3},
      {"4*x[0]*x[2] - 3*x[1]", {{"x", 3, std::nullopt}}, 4},
      {"x[0] + 2*x[1] - y[0]", {{"x", 2, std::nullopt}, {"y", 1, std::nullopt}}, 3},
      {"3*x[0]*x[1]*x[2]", {{"x", 3, std::nullopt}}, 3},
      {"x[0]*y[0] + 2*x[0]*y[1] + 2*x[1]*y[0] + 4*x[1]*y[1]",
       {{"x", 2, std::nullopt}, {"y", 2, std::nullopt}},
       4},
  };
  for (const auto& tc : cases) {
    SBPolynomial p = P(tc.poly);
    std::vector<std::vector<std::complex<double>>> all_phases;
    for (const auto& cfg : config_matrix()) {
      INFO("poly ", tc.poly, " strategy ",
           cfg.ug_strategy == UgStrategy::NaiveMcp ? "naive" : "ancilla", " pool ",
           cfg.ancilla_pool, " swapless ", cfg.swapless_qft);
      all_phases.push_back(check_encoder(p, tc.domain, tc.m, cfg));
    }
    // configuration invariance: outputs agree up to one global phase per config
    for (size_t i = 1; i < all_phases.size(); ++i) {
      std::complex<double> ratio = all_phases[i][0] / all_phases[0][0];
      for (size_t x = 1; x < all_phases[i].size(); ++x) {
        std::complex<double> r = all_phases[i][x] / all_phases[0][x];
        CHECK(std::abs(r - ratio) < 1e-9);
      }
    }
  }
}

TEST_CASE("constant polynomial encodes its residue") {
  EncoderConfig cfg;
  Circuit c = encode_sbp(P("9"), {{"x", 1, std::nullopt}}, 3, cfg);
  StateVector s = simulate(c, 0);
  CHECK(read_register(dominant_basis_state(s), c, "t") == 1);  // 9 mod 8
}

TEST_CASE("every monomial permutation has the same basis behavior") {
  SBPolynomial p = P("x[0] + 2*x[1]*x[2] + 3*x[0]*x[1]");
  std::vector<DomainSpec> domain{{"x", 3, std::nullopt}};
  std::vector<size_t> perm{0, 1, 2};
  do {
    EncoderConfig cfg;
    cfg.ordering = MonomialOrdering::Explicit;
    cfg.explicit_order = perm;
    check_encoder(p, domain, 3, cfg);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("in-place encoding accumulates onto the target") {
  std::vector<DomainSpec> domain{{"x", 3, std::nullopt}};
  SBPolynomial us = P("x[0] + 2*x[1] + 4*x[2]");
  for (const auto& cfg : config_matrix()) {
    Circuit c = encode_sbp_inplace(us, domain, 3, cfg);
    for (uint64_t x = 0; x < 8; ++x) {
      for (uint64_t y = 0; y < 8; ++y) {
        uint64_t in = write_register(x, c, "t", y);
        StateVector s = simulate(c, in);
        uint64_t out = dominant_basis_state(s, 1e-9);
        CHECK(read_register(out, c, "t") == (x + y) % 8);
        CHECK(read_register(out, c, "x") == x);
      }
    }
  }
}

TEST_CASE("in-place worked values") {
  std::vector<DomainSpec> domain{{"x", 3, std::nullopt}};
  EncoderConfig cfg;
  SBPolynomial us = P("x[0] + 2*x[1] + 4*x[2]");

  Circuit add = encode_sbp_inplace(us, domain, 3, cfg);
  uint64_t in = write_register(write_register(0, add, "x", 5), add, "t", 6);
  CHECK(read_register(dominant_basis_state(simulate(add, in)), add, "t") == 3);  // (5+6) mod 8

  Circuit sub = encode_sbp_inplace(us.scaled(Dyadic(-1)), domain, 3, cfg);
  in = write_register(write_register(0, sub, "x", 2), sub, "t", 1);
  CHECK(read_register(dominant_basis_state(simulate(sub, in)), sub, "t") == 7);  // (1-2) mod 8

  // zero polynomial: the QFT pair cancels to the identity
  Circuit idc = encode_sbp_inplace(SBPolynomial(), domain, 3, cfg);
  Circuit empty;
  for (const auto& r : idc.registers()) empty.add_register(r.name, r.size, r.role, r.format);
  CHECK(assert_equiv(idc, empty, 1e-9).equal);
}

TEST_CASE("encoder additivity") {
  // encoding p, then accumulating q in place, equals encoding p+q
  SBPolynomial p = P("x[0] + 2*x[1]");
  SBPolynomial q = P("3*x[0]*x[1]");
  std::vector<DomainSpec> domain{{"x", 2, std::nullopt}};
  EncoderConfig cfg;
  Circuit first = encode_sbp(p, domain, 3, cfg);
  Circuit second = encode_sbp_inplace(q, domain, 3, cfg);
  Circuit total = encode_sbp(p + q, domain, 3, cfg);
  for (uint64_t x = 0; x < 4; ++x) {
    uint64_t mid = dominant_basis_state(simulate(first, x));
    uint64_t in2 = write_register(write_register(0, second, "x", read_register(mid, first, "x")),
                                  second, "t", read_register(mid, first, "t"));
    uint64_t stepped = dominant_basis_state(simulate(second, in2));
    uint64_t direct = dominant_basis_state(simulate(total, x));
    CHECK(read_register(stepped, second, "t") == read_register(direct, total, "t"));
  }
}

TEST_CASE("encoder validation") {
  EncoderConfig cfg;
  std::vector<DomainSpec> domain{{"x", 2, std::nullopt}};
  CHECK_THROWS_AS(encode_sbp(P("1/2*x[0]"), domain, 3, cfg), DomainError);
  CHECK_THROWS_AS(encode_sbp(P("z[0]"), domain, 3, cfg), DomainError);
  CHECK_THROWS_AS(encode_sbp(P("x[5]"), domain, 3, cfg), DomainError);
  CHECK_THROWS_AS(encode_sbp_inplace(P("t[0]"), domain, 3, cfg), DomainError);

  EncoderConfig bad;
  bad.ug_strategy = UgStrategy::AncillaControlled;
  bad.ancilla_pool = 0;
  CHECK_THROWS_AS(encode_sbp(P("x[0]*x[1]"), domain, 3, bad), DomainError);

  EncoderConfig expl;
  expl.ordering = MonomialOrdering::Explicit;
  expl.explicit_order = {0, 0};
  CHECK_THROWS_AS(encode_sbp(P("x[0] + x[1]"), domain, 3, expl), DomainError);
}

TEST_CASE("angle pruning threshold drops small rotations") {
  SBPolynomial p = P("x[0]");
  std::vector<DomainSpec> domain{{"x", 1, std::nullopt}};
  EncoderConfig cfg;
  cfg.ug_strategy = UgStrategy::NaiveMcp;
  cfg.ancilla_pool = 0;
  Circuit plain = encode_sbp(p, domain, 6, cfg);
  cfg.prune_epsilon = Dyadic(BigInt(1), -4);  // drop |angle| < pi/16
  Circuit pruned = encode_sbp(p, domain, 6, cfg);
  CHECK(pruned.count(GateKind::CP) < plain.count(GateKind::CP));
}

TEST_CASE("in-place accumulation of higher-degree terms") {
  // t += 4 x0 x2 - 3 x1 exercises the ancilla compute/uncompute inside the
  // QFT sandwich under every configuration
  SBPolynomial p = P("4*x[0]*x[2] - 3*x[1]");
  std::vector<DomainSpec> domain{{"x", 3, std::nullopt}};
  for (const auto& cfg : config_matrix()) {
    Circuit c = encode_sbp_inplace(p, domain, 4, cfg);
    for (uint64_t x = 0; x < 8; ++x) {
      std::map<VarId, bool> bits;
      for (int i = 0; i < 3; ++i) bits[{"x", i}] = (x >> i) & 1;
      BigInt val = wrap(p.eval(bits), 4);
      for (uint64_t y : {uint64_t(0), uint64_t(5), uint64_t(15)}) {
        uint64_t in = write_register(write_register(0, c, "x", x), c, "t", y);
        uint64_t out = dominant_basis_state(simulate(c, in), 1e-9);
        CHECK(read_register(out, c, "t") == (val + y) % 16);
        if (c.find_reg("anc")) CHECK(read_register(out, c, "anc") == 0);
      }
    }
  }
}
