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

#ifndef QFA_ENCODER_HPP
#define QFA_ENCODER_HPP

#include <string>
#include <vector>

#include "qfa/circuit.hpp"
#include "qfa/sbpoly.hpp"

namespace qfa {

enum class UgStrategy { NaiveMcp, AncillaControlled };
enum class MonomialOrdering { AsGiven, Heuristic, ReversedHeuristic, Explicit };

UgStrategy ug_strategy_parse(std::string_view name);
MonomialOrdering monomial_ordering_parse(std::string_view name);

struct EncoderConfig {
  UgStrategy ug_strategy = UgStrategy::AncillaControlled;
  int ancilla_pool = 1;
  bool swapless_qft = true;
  MonomialOrdering ordering = MonomialOrdering::Heuristic;
  std::vector<size_t> explicit_order;  // Explicit mode: permutation of monomial indices
  Dyadic prune_epsilon;                // drop |angle| < eps (pi units); 0 disables

  void validate() const;  // throws DomainError
};

/// Standard QFT on m qubits (little-endian: qubit i has weight 2^i).
/// swapless drops the final SWAP layer and sets the output permutation to
/// bit reversal instead.
Circuit qft_circuit(int m, bool swapless = false);

/// Phase ladder encoding y into the Fourier basis of an m-qubit register:
/// a P(2 pi y 2^i / 2^m) on the wire holding logical bit i, with the given
/// controls attached. Angles are reduced mod 2 pi and zero-angle gates are
/// dropped. wire_of_logical[i] names the wire of logical bit i; emission
/// walks physical slots, descending logical order when reversed_wiring.
std::vector<Gate> u_g_gates(const Dyadic& y, const std::vector<uint32_t>& wire_of_logical,
                            const std::vector<uint32_t>& controls, bool reversed_wiring = false,
                            const Dyadic& prune_epsilon = Dyadic());

struct DomainSpec {
  std::string name;
  int size = 0;
  std::optional<QFormat> format;
};

/// Monomial emission order for the encoder.
///
/// Heuristic mode is the greedy schedule: at each step pick the monomial with
/// the smallest cost C = max depth over the wires of its variables, measured
/// against the ASAP layering of the gates scheduled so far; ties fall back to
/// the canonical (graded-lex) order. ReversedHeuristic picks the largest cost.
std::vector<Monomial> order_monomials(const SBPolynomial& p, const std::vector<DomainSpec>& domain,
                                      int m, const EncoderConfig& cfg);

/// U_sbp(p): |x>|0> -> |x>|p(x) mod 2^m>. Registers laid out as the given
/// domain registers, then target "t" (m qubits), then ancilla pool "anc" and
/// scratch "scr" as the configuration requires. p must have integer
/// coefficients and may not reference the reserved register names.
Circuit encode_sbp(const SBPolynomial& p, const std::vector<DomainSpec>& domain, int m,
                   const EncoderConfig& cfg);

/// In-place variant: |x>|y> -> |x>|(y + p(x)) mod 2^m>.
Circuit encode_sbp_inplace(const SBPolynomial& p, const std::vector<DomainSpec>& domain, int m,
                           const EncoderConfig& cfg);

}  // namespace qfa

#endif  // QFA_ENCODER_HPP
