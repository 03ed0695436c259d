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

#ifndef QFA_QASM_HPP
#define QFA_QASM_HPP

#include <string>
#include <string_view>

#include "qfa/circuit.hpp"

namespace qfa {

/// OpenQASM 2.0 text for circuits over {h, x, sx, sxdg, rz, cx, cp, swap, ccx}.
/// Byte-deterministic for equal circuits; angles print as exact rational
/// multiples of pi. Register formats, roles, global phase and the output
/// permutation ride along in "// qfa:" comments so emitted files reload
/// losslessly. Throws DomainError for unsupported gate kinds (transpile
/// first).
std::string emit_qasm(const Circuit& c);

/// Parses files produced by emit_qasm (not arbitrary external QASM).
Circuit parse_qasm(std::string_view text);

}  // namespace qfa

#endif  // QFA_QASM_HPP
