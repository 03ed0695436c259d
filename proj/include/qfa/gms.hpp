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

#ifndef QFA_GMS_HPP
#define QFA_GMS_HPP

#include <vector>

#include "qfa/circuit.hpp"

namespace qfa {

/// One controlled-phase gate of a sequence; phi in units of pi.
struct CPEntry {
  uint32_t a = 0;
  uint32_t b = 0;
  Dyadic phi;
};

struct CPSequence {
  int nq = 0;
  std::vector<CPEntry> entries;
};

struct GmsParams {
  Dyadic global_phase;         // Omega, pi units
  std::vector<Dyadic> omega;   // per-qubit P angles, pi units
  GmsCoupling chi;             // ZZ picture coupling
};

/// Resynthesis of an arbitrary CP sequence into one non-uniform GMS pulse:
///   prod CP(phi_k) = e^{i Omega} prod P_i(omega_i) GMS_zz(chi)
/// with omega_i = sum phi_k / 2 over gates touching i, chi_ij = -sum phi_k / 2
/// over gates on the pair, Omega = sum phi_k / 4.
GmsParams cp_sequence_to_gms(const CPSequence& seq);

/// Circuit form of the parameters, either in the ZZ picture or conjugated by
/// H layers into the XX picture; unitary-equal to the CP product.
Circuit gms_params_circuit(const GmsParams& params, bool xx_picture);

/// Uniform-GMS realization of an ascending CP sequence (all entries sharing
/// one control): fan-out CX block, phase layer, fan-out block, trailing phase
/// layer. Costs 4 uniform GMS pulses (2 per fan-out). Throws on non-ascending
/// input.
Circuit ascending_cp_uniform_gms(const CPSequence& seq);

struct GmsCost {
  long uniform_gms = 0;
  long nonuniform_gms = 0;
  long mcx_blackbox = 0;
};

/// Counts entangling work in encoder-style circuits: each ascending CP run
/// (a U_G application or a QFT qubit stage) is 1 non-uniform or 4 uniform GMS
/// pulses; CX fan-out runs cost 2 uniform pulses; multi-controlled X gates
/// are opaque units. Single-qubit gates and SWAPs are not counted.
GmsCost gms_cost(const Circuit& c);

}  // namespace qfa

#endif  // QFA_GMS_HPP
