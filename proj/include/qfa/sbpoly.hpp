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

#ifndef QFA_SBPOLY_HPP
#define QFA_SBPOLY_HPP

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qfa/dyadic.hpp"

namespace qfa {

/// One boolean variable: bit `bit` of register `reg`.
struct VarId {
  std::string reg;
  int bit = 0;

  auto operator<=>(const VarId&) const = default;
  std::string str() const { return reg + "[" + std::to_string(bit) + "]"; }
};

/// coeff * product of distinct boolean variables. Empty vars = constant term.
struct Monomial {
  Dyadic coeff;
  std::vector<VarId> vars;  // sorted ascending, duplicate-free

  int degree() const { return static_cast<int>(vars.size()); }
};

/// Graded-lexicographic order on variable sets: by degree, then by vars.
bool monomial_vars_less(const std::vector<VarId>& a, const std::vector<VarId>& b);

/// Multilinear polynomial over boolean variables with exact dyadic coefficients.
///
/// Canonical invariants, maintained by every operation:
///   - no two monomials share the same variable set (merged on construction)
///   - zero-coefficient monomials are removed
///   - variables within a monomial are sorted and duplicate-free (x*x == x)
///   - monomials are sorted graded-lexicographically
class SBPolynomial {
 public:
  SBPolynomial() = default;
  static SBPolynomial constant(Dyadic c);
  static SBPolynomial var(VarId v);
  static SBPolynomial from_monomials(std::vector<Monomial> monos);

  const std::vector<Monomial>& monomials() const { return monos_; }
  bool is_zero() const { return monos_.empty(); }

  SBPolynomial operator+(const SBPolynomial& o) const;
  SBPolynomial operator-(const SBPolynomial& o) const;
  SBPolynomial operator*(const SBPolynomial& o) const;
  SBPolynomial scaled(const Dyadic& c) const;

  /// Exact evaluation. Throws DomainError naming the first missing variable.
  Dyadic eval(const std::map<VarId, bool>& assign) const;

  /// True iff every coefficient is an integer.
  bool is_integer() const;

  /// Max degree over monomials; 0 for the zero polynomial.
  int degree() const;

  /// Sorted list of all distinct variables.
  std::vector<VarId> variables() const;

  /// Debug form, e.g. "4*x[0]*x[2] - 3*y[1]"; parse/print round-trips.
  std::string str() const;
  static SBPolynomial parse(std::string_view text);  // throws ParseError

  bool operator==(const SBPolynomial& o) const;

 private:
  std::vector<Monomial> monos_;
};

}  // namespace qfa

#endif  // QFA_SBPOLY_HPP
