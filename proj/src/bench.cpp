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

#include "qfa/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "qfa/arith.hpp"
#include "qfa/baseline.hpp"
#include "qfa/errors.hpp"
#include "qfa/gms.hpp"

namespace qfa {

namespace {

EncoderConfig bench_config(UgStrategy strategy, int pool) {
  EncoderConfig cfg;
  cfg.ug_strategy = strategy;
  cfg.ancilla_pool = pool;
  cfg.swapless_qft = true;
  cfg.ordering = MonomialOrdering::Heuristic;
  return cfg;
}

BenchRow measure(std::string method, std::string op, int n1, int n2, int m, int ancillas,
                 const Circuit& c, bool with_timing,
                 std::chrono::steady_clock::time_point start) {
  Circuit t = c.transpiled();
  auto stop = std::chrono::steady_clock::now();
  BenchRow row;
  row.method = std::move(method);
  row.op = std::move(op);
  row.n1 = n1;
  row.n2 = n2;
  row.m = m;
  row.ancillas = ancillas;
  row.depth = t.depth();
  row.cx_count = t.count(GateKind::CX);
  row.rz_count = t.count(GateKind::RZ);
  row.sx_count = t.count(GateKind::SX);
  GmsCost gms = gms_cost(c);
  row.gms_uniform = gms.uniform_gms;
  row.gms_nonuniform = gms.nonuniform_gms;
  if (with_timing)
    row.build_millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return row;
}

}  // namespace

std::vector<BenchRow> bench_fig6(const std::vector<int>& sizes, bool with_timing) {
  std::vector<BenchRow> rows;
  for (int n : sizes) {
    if (n < 1) throw DomainError("bench_fig6: sizes must be >= 1");
    QFormat fmt{n, false, 0};
    for (ArithOp op : {ArithOp::Add, ArithOp::Mul}) {
      QFormat out = default_target_format(op, fmt, fmt);
      struct MethodSpec {
        const char* name;
        UgStrategy strategy;
        int pool;
      };
      const MethodSpec methods[] = {
          {"sbp-naive", UgStrategy::NaiveMcp, 0},
          {"sbp-ancilla-1", UgStrategy::AncillaControlled, 1},
          {"sbp-ancilla-n", UgStrategy::AncillaControlled, n},
      };
      for (const auto& ms : methods) {
        auto start = std::chrono::steady_clock::now();
        ArithSpec spec{op, fmt, fmt, out, bench_config(ms.strategy, ms.pool)};
        Circuit c = build_arith(spec);
        rows.push_back(measure(ms.name, std::string(arith_op_name(op)), n, n, out.n, ms.pool, c,
                               with_timing, start));
      }
      {
        auto start = std::chrono::steady_clock::now();
        Circuit c = op == ArithOp::Add ? cuccaro_adder(n) : ripple_multiplier(n, n);
        int m = op == ArithOp::Add ? n + 1 : 2 * n + 1;
        int ancillas = op == ArithOp::Add ? 1 : n + 2;  // carry (+ zero bank for mul)
        rows.push_back(measure("ripple", std::string(arith_op_name(op)), n, n, m, ancillas, c,
                               with_timing, start));
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.method, a.op, a.n1) < std::tie(b.method, b.op, b.n1);
  });
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "method,op,n1,n2,m,ancillas,depth,cx_count,rz_count,sx_count,gms_uniform,"
         "gms_nonuniform,build_millis\n";
  for (const auto& r : rows) {
    out << r.method << ',' << r.op << ',' << r.n1 << ',' << r.n2 << ',' << r.m << ','
        << r.ancillas << ',' << r.depth << ',' << r.cx_count << ',' << r.rz_count << ','
        << r.sx_count << ',' << r.gms_uniform << ',' << r.gms_nonuniform << ','
        << r.build_millis << '\n';
  }
  return out.str();
}

}  // namespace qfa
