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

#include <map>
#include <sstream>
#include <vector>

#include "qfa/errors.hpp"

namespace qfa {

namespace {

std::string angle_str(const Dyadic& a) {
  if (a.is_zero()) return "0";
  std::string s = a.is_negative() ? "-" : "";
  Dyadic mag = a.is_negative() ? -a : a;
  const BigInt& num = mag.numerator();
  if (num == 1)
    s += "pi";
  else
    s += num.str() + "*pi";
  if (mag.exp2() < 0) s += "/" + (BigInt(1) << -mag.exp2()).str();
  return s;
}

Dyadic parse_angle(std::string_view text) {
  if (text == "0") return Dyadic();
  bool neg = false;
  if (!text.empty() && text.front() == '-') {
    neg = true;
    text.remove_prefix(1);
  }
  BigInt num = 1;
  auto star = text.find("*pi");
  if (star != std::string_view::npos) {
    num = bigint_from_decimal(text.substr(0, star));
    text.remove_prefix(star + 3);
  } else if (text.substr(0, 2) == "pi") {
    text.remove_prefix(2);
  } else {
    throw ParseError("parse_qasm: bad angle");
  }
  long e = 0;
  if (!text.empty()) {
    if (text.front() != '/') throw ParseError("parse_qasm: bad angle");
    BigInt den = bigint_from_decimal(text.substr(1));
    while ((den & 1) == 0) {
      den >>= 1;
      ++e;
    }
    if (den != 1) throw ParseError("parse_qasm: angle denominator not a power of two");
  }
  Dyadic d(num, -e);
  return neg ? -d : d;
}

std::string_view role_name(Register::Role r) {
  switch (r) {
    case Register::Role::Data: return "data";
    case Register::Role::Target: return "target";
    case Register::Role::Ancilla: return "ancilla";
    case Register::Role::Scratch: return "scratch";
    case Register::Role::Carry: return "carry";
    case Register::Role::Control: return "control";
  }
  return "?";
}

Register::Role parse_role(std::string_view s) {
  if (s == "data") return Register::Role::Data;
  if (s == "target") return Register::Role::Target;
  if (s == "ancilla") return Register::Role::Ancilla;
  if (s == "scratch") return Register::Role::Scratch;
  if (s == "carry") return Register::Role::Carry;
  if (s == "control") return Register::Role::Control;
  throw ParseError("parse_qasm: unknown register role '" + std::string(s) + "'");
}

struct WireRef {
  const Register* reg;
  uint32_t index;
};

WireRef locate(const Circuit& c, uint32_t wire) {
  for (const auto& r : c.registers())
    if (wire >= r.offset && wire < r.offset + r.size) return {&r, wire - r.offset};
  throw DomainError("emit_qasm: wire outside all registers");
}

std::string wire_str(const Circuit& c, uint32_t wire) {
  WireRef w = locate(c, wire);
  return w.reg->name + "[" + std::to_string(w.index) + "]";
}

}  // namespace

std::string emit_qasm(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  for (const auto& r : c.registers()) {
    if (r.format) out << "// qfa: format " << r.name << " " << r.format->str() << "\n";
    if (r.role != Register::Role::Data)
      out << "// qfa: role " << r.name << " " << role_name(r.role) << "\n";
  }
  if (!c.global_phase().is_zero()) out << "// qfa: phase " << c.global_phase().str() << "\n";
  if (!c.output_permutation().empty()) {
    out << "// qfa: perm";
    for (size_t i = 0; i < c.output_permutation().size(); ++i)
      out << (i ? "," : " ") << c.output_permutation()[i];
    out << "\n";
  }
  for (const auto& r : c.registers()) out << "qreg " << r.name << "[" << r.size << "];\n";
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::H:
      case GateKind::X:
      case GateKind::SX:
      case GateKind::SXDG:
        out << gate_kind_name(g.kind) << " " << wire_str(c, g.qubits[0]) << ";\n";
        break;
      case GateKind::P:
        throw DomainError("emit_qasm: unsupported gate kind 'p' (transpile first)");
      case GateKind::RZ:
        out << "rz(" << angle_str(g.angle) << ") " << wire_str(c, g.qubits[0]) << ";\n";
        break;
      case GateKind::CX:
      case GateKind::SWAP:
        out << gate_kind_name(g.kind) << " " << wire_str(c, g.qubits[0]) << ","
            << wire_str(c, g.qubits[1]) << ";\n";
        break;
      case GateKind::CP:
        out << "cp(" << angle_str(g.angle) << ") " << wire_str(c, g.qubits[0]) << ","
            << wire_str(c, g.qubits[1]) << ";\n";
        break;
      case GateKind::MCX:
        if (g.qubits.size() != 3)
          throw DomainError("emit_qasm: unsupported gate kind 'mcx' with " +
                            std::to_string(g.qubits.size() - 1) + " controls (transpile first)");
        out << "ccx " << wire_str(c, g.qubits[0]) << "," << wire_str(c, g.qubits[1]) << ","
            << wire_str(c, g.qubits[2]) << ";\n";
        break;
      case GateKind::MCP:
        throw DomainError("emit_qasm: unsupported gate kind 'mcp' (transpile first)");
      case GateKind::GMS:
        // decomposed fan-out form, annotated so the structure stays visible
        out << "// qfa: gms" << (g.gms->xx_basis ? " xx" : " zz") << " begin\n";
        for (int i = 0; i < g.gms->nq; ++i) {
          for (int j = i + 1; j < g.gms->nq; ++j) {
            const Dyadic& theta = g.gms->at(i, j);
            if (theta.is_zero()) continue;
            std::string qi = wire_str(c, g.qubits[i]);
            std::string qj = wire_str(c, g.qubits[j]);
            if (g.gms->xx_basis) out << "h " << qi << ";\nh " << qj << ";\n";
            out << "cx " << qi << "," << qj << ";\n";
            out << "rz(" << angle_str(theta) << ") " << qj << ";\n";
            out << "cx " << qi << "," << qj << ";\n";
            if (g.gms->xx_basis) out << "h " << qi << ";\nh " << qj << ";\n";
          }
        }
        out << "// qfa: gms end\n";
        break;
    }
  }
  return out.str();
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (start <= s.size()) {
    size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      break;
    }
    parts.emplace_back(s.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  Circuit c;
  std::map<std::string, QFormat> pending_formats;
  std::map<std::string, Register::Role> pending_roles;
  Dyadic phase;
  std::vector<uint32_t> perm;
  bool saw_header = false;

  auto wire_of = [&](std::string_view ref) -> uint32_t {
    auto lb = ref.find('[');
    auto rb = ref.find(']');
    if (lb == std::string_view::npos || rb == std::string_view::npos || rb < lb)
      throw ParseError("parse_qasm: bad qubit reference '" + std::string(ref) + "'");
    std::string name(trim(ref.substr(0, lb)));
    uint32_t idx = static_cast<uint32_t>(std::stoul(std::string(ref.substr(lb + 1, rb - lb - 1))));
    const Register& r = c.reg(name);
    if (idx >= r.size) throw ParseError("parse_qasm: qubit index out of range in '" +
                                        std::string(ref) + "'");
    return r.offset + idx;
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.starts_with("// qfa: ")) {
      std::string_view meta = line.substr(8);
      if (meta.starts_with("format ")) {
        auto parts = split(meta.substr(7), ' ');
        if (parts.size() != 2) throw ParseError("parse_qasm: bad format comment");
        pending_formats[parts[0]] = QFormat::parse(parts[1]);
      } else if (meta.starts_with("role ")) {
        auto parts = split(meta.substr(5), ' ');
        if (parts.size() != 2) throw ParseError("parse_qasm: bad role comment");
        pending_roles[parts[0]] = parse_role(parts[1]);
      } else if (meta.starts_with("phase ")) {
        auto d = Dyadic::parse(trim(meta.substr(6)));
        if (!d) throw ParseError("parse_qasm: bad phase comment");
        phase = *d;
      } else if (meta.starts_with("perm ")) {
        for (const auto& p : split(meta.substr(5), ','))
          perm.push_back(static_cast<uint32_t>(std::stoul(p)));
      } else if (meta.starts_with("gms")) {
        continue;  // annotation only; the decomposed gates follow
      } else {
        throw ParseError("parse_qasm: unknown metadata '" + std::string(meta) + "'");
      }
      continue;
    }
    if (line.starts_with("//")) continue;
    if (line.starts_with("OPENQASM")) {
      if (line != "OPENQASM 2.0;") throw ParseError("parse_qasm: unsupported QASM version");
      saw_header = true;
      continue;
    }
    if (line.starts_with("include")) continue;
    if (!saw_header) throw ParseError("parse_qasm: missing OPENQASM header");
    if (!line.ends_with(";")) throw ParseError("parse_qasm: missing ';' in '" + raw + "'");
    line.remove_suffix(1);
    if (line.starts_with("qreg ")) {
      std::string_view decl = trim(line.substr(5));
      auto lb = decl.find('[');
      auto rb = decl.find(']');
      if (lb == std::string_view::npos || rb == std::string_view::npos)
        throw ParseError("parse_qasm: bad qreg '" + raw + "'");
      std::string name(trim(decl.substr(0, lb)));
      uint32_t size = static_cast<uint32_t>(std::stoul(std::string(decl.substr(lb + 1, rb - lb - 1))));
      Register::Role role = Register::Role::Data;
      if (auto it = pending_roles.find(name); it != pending_roles.end()) role = it->second;
      std::optional<QFormat> fmt;
      if (auto it = pending_formats.find(name); it != pending_formats.end()) fmt = it->second;
      c.add_register(name, size, role, fmt);
      continue;
    }
    // gate line: name[(angle)] args
    std::string_view rest = line;
    auto sp = rest.find(' ');
    if (sp == std::string_view::npos) throw ParseError("parse_qasm: bad gate line '" + raw + "'");
    std::string_view head = rest.substr(0, sp);
    std::string_view args = trim(rest.substr(sp + 1));
    Dyadic angle;
    std::string name(head);
    if (auto lp = head.find('('); lp != std::string_view::npos) {
      auto rp = head.rfind(')');
      if (rp == std::string_view::npos || rp < lp)
        throw ParseError("parse_qasm: bad gate parameters in '" + raw + "'");
      angle = parse_angle(head.substr(lp + 1, rp - lp - 1));
      name = std::string(head.substr(0, lp));
    }
    std::vector<uint32_t> qs;
    for (const auto& a : split(args, ',')) qs.push_back(wire_of(trim(a)));
    if (name == "h" && qs.size() == 1) c.h(qs[0]);
    else if (name == "x" && qs.size() == 1) c.x(qs[0]);
    else if (name == "sx" && qs.size() == 1) c.sx(qs[0]);
    else if (name == "sxdg" && qs.size() == 1) c.append(make_gate(GateKind::SXDG, {qs[0]}));
    else if (name == "rz" && qs.size() == 1) c.rz(qs[0], angle);
    else if (name == "cx" && qs.size() == 2) c.cx(qs[0], qs[1]);
    else if (name == "cp" && qs.size() == 2) c.cp(qs[0], qs[1], angle);
    else if (name == "swap" && qs.size() == 2) c.swap(qs[0], qs[1]);
    else if (name == "ccx" && qs.size() == 3)
      c.append(make_gate(GateKind::MCX, {qs[0], qs[1], qs[2]}));
    else
      throw ParseError("parse_qasm: unsupported gate '" + name + "' in '" + raw + "'");
  }
  if (!saw_header) throw ParseError("parse_qasm: missing OPENQASM header");
  c.add_global_phase(phase);
  if (!perm.empty()) c.set_output_permutation(std::move(perm));
  return c;
}

}  // namespace qfa
