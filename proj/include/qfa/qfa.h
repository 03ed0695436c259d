/* Copyright 2026 The qfa Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the qfa quantum arithmetic compiler.
 *
 * All functions return QFA_OK on success; on failure qfa_last_error() holds
 * a description for the calling thread. Objects returned through out
 * parameters are owned by the caller and released with the matching _free.
 * Strings returned through char** are released with qfa_string_free.
 */

#ifndef QFA_QFA_H
#define QFA_QFA_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qfa_circuit qfa_circuit;

typedef enum qfa_status {
  QFA_OK = 0,
  QFA_ERROR_INTERNAL = 1,
  QFA_ERROR_DOMAIN = 3,
  QFA_ERROR_LIMIT = 4
} qfa_status;

const char* qfa_version(void);

/* Thread-local message for the most recent failure. */
const char* qfa_last_error(void);

void qfa_string_free(char* s);
void qfa_circuit_free(qfa_circuit* c);

/* Synthesizes an out-of-place arithmetic circuit.
 *   op:        "add" | "sub" | "mul"
 *   fmt_*:     register formats like "u4e0" or "s3e-2"; fmt_out may be NULL
 *              for the default overflow-free target
 *   strategy:  "naive" | "ancilla"
 *   ordering:  "given" | "heuristic" | "reversed"
 *   transpile: nonzero lowers to the {CX, RZ, SX} basis
 */
qfa_status qfa_synth_arith(const char* op, const char* fmt_x, const char* fmt_y,
                           const char* fmt_out, const char* strategy, int ancilla_pool,
                           int swapless, const char* ordering, int transpile,
                           qfa_circuit** out);

/* Named builtin circuits: "qft-N", "qft-ns-N" (swapless), "cuccaro-N",
 * "cuccaro-ctl-N", "ripple-mul-N1xN2", "mul-const-A-N", "empty-N". */
qfa_status qfa_builtin_circuit(const char* name, qfa_circuit** out);

qfa_status qfa_circuit_transpile(const qfa_circuit* c, qfa_circuit** out);

int qfa_circuit_qubit_count(const qfa_circuit* c);
int qfa_circuit_depth(const qfa_circuit* c);

/* Count of one gate kind ("cx", "rz", ...), or of all gates when kind is
 * NULL. Returns -1 for an unknown kind name. */
long qfa_circuit_gate_count(const qfa_circuit* c, const char* kind);

qfa_status qfa_circuit_to_qasm(const qfa_circuit* c, char** qasm_out);
qfa_status qfa_circuit_from_qasm(const char* text, qfa_circuit** out);

/* Simulates from a computational basis input given as comma-separated
 * register assignments ("x=7,y=-3"); unassigned registers start at 0.
 * Values are decoded through each register's number format. The decoded
 * target-register value is returned as a decimal string. */
qfa_status qfa_circuit_simulate(const qfa_circuit* c, const char* assignments,
                                char** decoded_out);

/* Entangling-work estimate for encoder-style circuits. */
qfa_status qfa_circuit_gms_cost(const qfa_circuit* c, long* uniform, long* nonuniform,
                                long* mcx_blackbox);

/* Runs the fig6 benchmark suite over comma-separated sizes and returns CSV.
 * with_timing enables the build_millis column (breaking byte determinism). */
qfa_status qfa_bench_fig6(const char* sizes, int with_timing, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* QFA_QFA_H */
