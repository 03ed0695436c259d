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

#include "qfa/sbpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qfa/errors.hpp"

namespace qfa {

bool monomial_vars_less(const std::vector<VarId>& a, const std::vector<VarId>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

void sort_dedupe_vars(std::vector<VarId>& vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
}

}  // namespace

SBPolynomial SBPolynomial::constant(Dyadic c) {
  SBPolynomial p;
  if (!c.is_zero()) p.monos_.push_back({std::move(c), {}});
  return p;
}

SBPolynomial SBPolynomial::var(VarId v) {
  SBPolynomial p;
  p.monos_.push_back({Dyadic(1), {std::move(v)}});
  return p;
}

SBPolynomial SBPolynomial::from_monomials(std::vector<Monomial> monos) {
  for (auto& m : monos) sort_dedupe_vars(m.vars);
  std::sort(monos.begin(), monos.end(),
            [](const Monomial& a, const Monomial& b) { return monomial_vars_less(a.vars, b.vars); });
  SBPolynomial p;
  for (auto& m : monos) {
    if (!p.monos_.empty() && p.monos_.back().vars == m.vars) {
      p.monos_.back().coeff += m.coeff;
    } else {
      p.monos_.push_back(std::move(m));
    }
  }
  std::erase_if(p.monos_, [](const Monomial& m) { return m.coeff.is_zero(); });
  return p;
}

SBPolynomial SBPolynomial::operator+(const SBPolynomial& o) const {
  std::vector<Monomial> all = monos_;
  all.insert(all.end(), o.monos_.begin(), o.monos_.end());
  return from_monomials(std::move(all));
}

SBPolynomial SBPolynomial::operator-(const SBPolynomial& o) const {
  return *this + o.scaled(Dyadic(-1));
}

SBPolynomial SBPolynomial::operator*(const SBPolynomial& o) const {
  std::vector<Monomial> prod;
  prod.reserve(monos_.size() * o.monos_.size());
  for (const auto& a : monos_) {
    for (const auto& b : o.monos_) {
      Monomial m;
      m.coeff = a.coeff * b.coeff;
      m.vars = a.vars;
      m.vars.insert(m.vars.end(), b.vars.begin(), b.vars.end());
      prod.push_back(std::move(m));
    }
  }
  return from_monomials(std::move(prod));
}

SBPolynomial SBPolynomial::scaled(const Dyadic& c) const {
  if (c.is_zero()) return SBPolynomial();
  SBPolynomial p = *this;
  for (auto& m : p.monos_) m.coeff *= c;
  return p;
}

Dyadic SBPolynomial::eval(const std::map<VarId, bool>& assign) const {
  Dyadic sum;
  for (const auto& m : monos_) {
    bool all_one = true;
    for (const auto& v : m.vars) {
      auto it = assign.find(v);
      if (it == assign.end())
        throw DomainError("SBPolynomial::eval: missing assignment for " + v.str());
      if (!it->second) {
        all_one = false;
        break;
      }
    }
    if (all_one) sum += m.coeff;
  }
  return sum;
}

bool SBPolynomial::is_integer() const {
  return std::all_of(monos_.begin(), monos_.end(),
                     [](const Monomial& m) { return m.coeff.is_integer(); });
}

int SBPolynomial::degree() const {
  int d = 0;
  for (const auto& m : monos_) d = std::max(d, m.degree());
  return d;
}

std::vector<VarId> SBPolynomial::variables() const {
  std::vector<VarId> vars;
  for (const auto& m : monos_) vars.insert(vars.end(), m.vars.begin(), m.vars.end());
  sort_dedupe_vars(vars);
  return vars;
}

bool SBPolynomial::operator==(const SBPolynomial& o) const {
  if (monos_.size() != o.monos_.size()) return false;
  for (size_t i = 0; i < monos_.size(); ++i) {
    if (monos_[i].vars != o.monos_[i].vars || !(monos_[i].coeff == o.monos_[i].coeff))
      return false;
  }
  return true;
}

std::string SBPolynomial::str() const {
  if (monos_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& m : monos_) {
    Dyadic c = m.coeff;
    if (first) {
      if (c.is_negative()) out << "-";
    } else {
      out << (c.is_negative() ? " - " : " + ");
    }
    first = false;
    Dyadic mag = c.is_negative() ? -c : c;
    if (m.vars.empty()) {
      out << mag.str();
    } else {
      bool need_star = false;
      if (!mag.is_one()) {
        out << mag.str();
        need_star = true;
      }
      for (const auto& v : m.vars) {
        if (need_star) out << "*";
        out << v.str();
        need_star = true;
      }
    }
  }
  return out.str();
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("SBPolynomial::parse: " + msg + " at offset " + std::to_string(pos));
  }

  std::string number() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected number");
    return std::string(text.substr(start, pos - start));
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected identifier");
    return std::string(text.substr(start, pos - start));
  }

  Monomial term(bool negative) {
    Monomial m;
    m.coeff = Dyadic(negative ? -1 : 1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = number();
      std::string lit = num;
      if (consume('/')) lit += "/" + number();
      auto d = Dyadic::parse(lit);
      if (!d) fail("bad coefficient '" + lit + "'");
      m.coeff *= *d;
      have_coeff = true;
    }
    while (true) {
      if (have_coeff || !m.vars.empty()) {
        if (!consume('*')) break;
      } else if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') {
        fail("expected term");
      }
      std::string reg = identifier();
      if (!consume('[')) fail("expected '['");
      int bit = std::stoi(number());
      if (!consume(']')) fail("expected ']'");
      m.vars.push_back({std::move(reg), bit});
      have_coeff = true;
    }
    return m;
  }
};

}  // namespace

SBPolynomial SBPolynomial::parse(std::string_view text) {
  Parser p{text};
  if (p.eof()) throw ParseError("SBPolynomial::parse: empty input");
  std::vector<Monomial> monos;
  bool negative = p.consume('-');
  monos.push_back(p.term(negative));
  while (!p.eof()) {
    if (p.consume('+'))
      negative = false;
    else if (p.consume('-'))
      negative = true;
    else
      p.fail("expected '+' or '-'");
    monos.push_back(p.term(negative));
  }
  return from_monomials(std::move(monos));
}

}  // namespace qfa
