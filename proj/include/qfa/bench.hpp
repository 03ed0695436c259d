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

#ifndef QFA_BENCH_HPP
#define QFA_BENCH_HPP

#include <string>
#include <vector>

namespace qfa {

struct BenchRow {
  std::string method;  // sbp-naive | sbp-ancilla-1 | sbp-ancilla-n | ripple
  std::string op;      // add | mul
  int n1 = 0;
  int n2 = 0;
  int m = 0;
  int ancillas = 0;
  int depth = 0;       // transpiled {CX, RZ, SX} depth
  long cx_count = 0;
  long rz_count = 0;
  long sx_count = 0;
  long gms_uniform = 0;
  long gms_nonuniform = 0;
  long build_millis = 0;  // 0 unless timing was requested, for determinism
};

/// Depth/gate-count comparison rows: {sbp-naive, sbp-ancilla-1, sbp-ancilla-n,
/// ripple} x {add, mul} per size. Construction and transpilation only, no
/// simulation. Rows come back sorted by (method, op, n).
std::vector<BenchRow> bench_fig6(const std::vector<int>& sizes, bool with_timing = false);

/// Fixed-header CSV; identical inputs produce identical bytes.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace qfa

#endif  // QFA_BENCH_HPP
