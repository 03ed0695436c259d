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

#ifndef QFA_BASELINE_HPP
#define QFA_BASELINE_HPP

#include <vector>

#include "qfa/circuit.hpp"

namespace qfa {

/// Full-adder chain; returns n+1 sum bits (little-endian). Inputs must have
/// equal length.
std::vector<int> classical_add(const std::vector<int>& x, const std::vector<int>& y);

/// Shift-and-add multiplication via the conditional negation identity
/// a - b = not(not(a) + b): an add branch for set multiplier bits and a
/// subtract branch for clear ones, followed by a final right shift.
std::vector<int> classical_mul(const std::vector<int>& x, const std::vector<int>& y);

enum class AdderMode { Plain, Controlled, Subtract };

/// MAJ/UMA carry-ripple adder: |x>|y> -> |x>|x+y> with the carry-out in
/// y's top bit. Registers: x (n), y (n+1), c (1 carry ancilla, restored),
/// plus "ctl" in Controlled mode, which adds for control=1 and subtracts
/// (conditional bitwise negation) for control=0.
Circuit cuccaro_adder(int n, AdderMode mode = AdderMode::Plain);

/// Carry-ripple multiplier |x>|y>|0> -> |x>|y>|x*y>: two unconditional
/// +/- stages and n2 controlled add/sub stages over wired shifts, with the
/// final right shift realized by the output permutation. Registers:
/// x (n1), y (n2), s (n1+n2+1 target), z (zero-extension bank, restored),
/// c (carry, restored).
Circuit ripple_multiplier(int n1, int n2);

}  // namespace qfa

#endif  // QFA_BASELINE_HPP
