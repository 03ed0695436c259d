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

// Command-line front end. Talks to the compiler exclusively through the
// C API in qfa/qfa.h.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "qfa/qfa.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct CircuitDeleter {
  void operator()(qfa_circuit* c) const { qfa_circuit_free(c); }
};
using CircuitPtr = std::unique_ptr<qfa_circuit, CircuitDeleter>;

struct StringDeleter {
  void operator()(char* s) const { qfa_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void die(const std::string& context) {
  std::cerr << "qfa: " << context << ": " << qfa_last_error() << "\n";
  std::exit(kExitDomain);
}

void write_output(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "qfa: cannot open '" << path << "' for writing\n";
    std::exit(kExitDomain);
  }
  out << text;
}

std::string read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "qfa: cannot open '" << path << "'\n";
    std::exit(kExitDomain);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qfa - quantum arithmetic circuit compiler"};
  app.require_subcommand(1);

  // synth
  auto* synth = app.add_subcommand("synth", "Synthesize an arithmetic circuit to QASM");
  std::string op = "add", fmt_x, fmt_y, fmt_out, strategy = "ancilla", ordering = "heuristic";
  std::string synth_out;
  int ancillas = 1;
  bool swapless = true, do_transpile = true;
  synth->add_option("--op", op, "add|sub|mul")->required();
  synth->add_option("--fmt-x", fmt_x, "x format, e.g. u4e0 or s3e-2")->required();
  synth->add_option("--fmt-y", fmt_y, "y format")->required();
  synth->add_option("--fmt-out", fmt_out, "target format (default: overflow-free)");
  synth->add_option("--strategy", strategy, "naive|ancilla (default ancilla)");
  synth->add_option("--ancillas", ancillas, "ancilla pool size (default 1)");
  synth->add_option("--ordering", ordering, "given|heuristic|reversed (default heuristic)");
  synth->add_flag("--swapless,!--no-swapless", swapless, "swapless QFT (default on)");
  synth->add_flag("--transpile,!--no-transpile", do_transpile,
                  "lower to {CX,RZ,SX} before writing (default on)");
  synth->add_option("--out", synth_out, "output file (default stdout)");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Simulate a QASM file on a basis input");
  std::string sim_qasm, sim_input;
  sim->add_option("--qasm", sim_qasm, "QASM file produced by synth/export-qasm")->required();
  sim->add_option("--input", sim_input, "register assignments, e.g. x=7,y=3");

  // bench
  auto* bench = app.add_subcommand("bench", "Depth/gate-count benchmark suite");
  std::string suite = "fig6", sizes = "4,8,16,32", csv_out;
  bool with_timing = false;
  bench->add_option("--suite", suite, "benchmark suite (fig6)");
  bench->add_option("--sizes", sizes, "comma-separated bit widths (default 4,8,16,32)");
  bench->add_option("--csv", csv_out, "output CSV file (default stdout)");
  bench->add_flag("--timing", with_timing, "fill build_millis (breaks byte determinism)");

  // export-qasm
  auto* exp = app.add_subcommand("export-qasm", "Dump a named builtin circuit");
  std::string builtin_name, exp_out;
  bool exp_transpile = false;
  exp->add_option("--name", builtin_name,
                  "qft-N | qft-ns-N | cuccaro-N | cuccaro-ctl-N | ripple-mul-N1xN2 | "
                  "mul-const-A-N | empty-N")
      ->required();
  exp->add_flag("--transpile", exp_transpile, "lower to {CX,RZ,SX} first");
  exp->add_option("--out", exp_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (synth->parsed()) {
    qfa_circuit* raw = nullptr;
    if (qfa_synth_arith(op.c_str(), fmt_x.c_str(), fmt_y.c_str(),
                        fmt_out.empty() ? nullptr : fmt_out.c_str(), strategy.c_str(), ancillas,
                        swapless ? 1 : 0, ordering.c_str(), do_transpile ? 1 : 0,
                        &raw) != QFA_OK)
      die("synth");
    CircuitPtr c(raw);
    char* qasm = nullptr;
    if (qfa_circuit_to_qasm(c.get(), &qasm) != QFA_OK) die("synth");
    StringPtr text(qasm);
    write_output(synth_out, text.get());
    return 0;
  }

  if (sim->parsed()) {
    std::string text = read_input(sim_qasm);
    qfa_circuit* raw = nullptr;
    if (qfa_circuit_from_qasm(text.c_str(), &raw) != QFA_OK) die("simulate");
    CircuitPtr c(raw);
    char* decoded = nullptr;
    if (qfa_circuit_simulate(c.get(), sim_input.c_str(), &decoded) != QFA_OK) die("simulate");
    StringPtr value(decoded);
    std::cout << value.get() << "\n";
    return 0;
  }

  if (bench->parsed()) {
    if (suite != "fig6") {
      std::cerr << "qfa: bench: unknown suite '" << suite << "' (only fig6)\n";
      return kExitDomain;
    }
    char* csv = nullptr;
    if (qfa_bench_fig6(sizes.c_str(), with_timing ? 1 : 0, &csv) != QFA_OK) die("bench");
    StringPtr text(csv);
    write_output(csv_out, text.get());
    return 0;
  }

  if (exp->parsed()) {
    qfa_circuit* raw = nullptr;
    if (qfa_builtin_circuit(builtin_name.c_str(), &raw) != QFA_OK) die("export-qasm");
    CircuitPtr c(raw);
    if (exp_transpile) {
      qfa_circuit* lowered = nullptr;
      if (qfa_circuit_transpile(c.get(), &lowered) != QFA_OK) die("export-qasm");
      c.reset(lowered);
    }
    char* qasm = nullptr;
    if (qfa_circuit_to_qasm(c.get(), &qasm) != QFA_OK) die("export-qasm");
    StringPtr text(qasm);
    write_output(exp_out, text.get());
    return 0;
  }

  return kExitUsage;
}
