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

#ifndef QFA_DYADIC_HPP
#define QFA_DYADIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace qfa {

using BigInt = boost::multiprecision::cpp_int;

/// Strict base-10 integer parsing (cpp_int's own string constructor would
/// honor 0x/0 prefixes). Throws std::invalid_argument on malformed input.
BigInt bigint_from_decimal(std::string_view text);

/// Exact dyadic rational: value = numerator * 2^exp2.
///
/// Canonical form: numerator is odd, or numerator == 0 with exp2 == 0.
/// All arithmetic is exact; there is no rounding anywhere in this class.
/// Phase angles are carried around as Dyadic multiples of pi and only
/// become floating point inside the simulator and the QASM emitter.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long n) : num_(n) { normalize(); }  // NOLINT(google-explicit-constructor)
  Dyadic(BigInt num, long exp2) : num_(std::move(num)), exp2_(exp2) { normalize(); }

  static Dyadic from_int(BigInt n) { return Dyadic(std::move(n), 0); }
  /// num/den with den a power of two; returns nullopt otherwise.
  static std::optional<Dyadic> from_ratio(const BigInt& num, const BigInt& den);
  /// Parses "3", "-3/4", "1/2". Fraction denominators must be powers of two.
  static std::optional<Dyadic> parse(std::string_view text);
  /// Parses a finite decimal such as "-0.75"; fails if not a dyadic.
  static std::optional<Dyadic> parse_decimal(std::string_view text);

  const BigInt& numerator() const { return num_; }
  long exp2() const { return exp2_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return exp2_ >= 0; }
  bool is_one() const { return num_ == 1 && exp2_ == 0; }

  /// Exact integer value; requires is_integer().
  BigInt to_integer() const;

  Dyadic operator-() const;
  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator*(const Dyadic& o) const;
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
  Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

  /// value * 2^k
  Dyadic shifted(long k) const;

  bool operator==(const Dyadic& o) const { return num_ == o.num_ && exp2_ == o.exp2_; }
  std::strong_ordering operator<=>(const Dyadic& o) const;

  /// Reduces the value modulo 2 into the half-open interval (-1, 1].
  /// Used for angles in units of pi, where adding 2*pi is a no-op.
  Dyadic mod_two() const;

  /// floor(value) as an exact integer.
  BigInt floor() const;

  double to_double() const;

  /// "0", "3", "-3/4" (denominator always a power of two).
  std::string str() const;
  /// Exact decimal expansion, e.g. "-0.75", "1.5", "20".
  std::string decimal_str() const;

 private:
  void normalize();

  BigInt num_ = 0;
  long exp2_ = 0;
};

inline Dyadic operator*(long long a, const Dyadic& d) { return Dyadic(a) * d; }

}  // namespace qfa

#endif  // QFA_DYADIC_HPP
