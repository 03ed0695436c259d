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

#include "qfa/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace qfa {

// cpp_int's string constructor honors 0x/0 prefixes; force base 10.
BigInt bigint_from_decimal(std::string_view text) {
  bool neg = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    neg = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  BigInt v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad digit in integer literal");
    v = v * 10 + (c - '0');
  }
  return neg ? BigInt(-v) : v;
}

namespace {

bool is_power_of_two(const BigInt& v) {
  if (v <= 0) return false;
  BigInt t = v;
  while ((t & 1) == 0) t >>= 1;
  return t == 1;
}

long twos_valuation(const BigInt& v) {
  // v != 0
  long k = 0;
  BigInt t = v < 0 ? BigInt(-v) : v;
  while ((t & 1) == 0) {
    t >>= 1;
    ++k;
  }
  return k;
}

}  // namespace

void Dyadic::normalize() {
  if (num_ == 0) {
    exp2_ = 0;
    return;
  }
  long k = twos_valuation(num_);
  if (k > 0) {
    num_ >>= k;
    exp2_ += k;
  }
}

std::optional<Dyadic> Dyadic::from_ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) return std::nullopt;
  BigInt d = den < 0 ? BigInt(-den) : den;
  BigInt n = den < 0 ? BigInt(-num) : num;
  if (!is_power_of_two(d)) {
    // Allow a denominator with an odd factor only when it divides the numerator exactly.
    if (n % d != 0) return std::nullopt;
    return Dyadic(n / d, 0);
  }
  return Dyadic(std::move(n), -twos_valuation(d));
}

std::optional<Dyadic> Dyadic::parse(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Dyadic(bigint_from_decimal(text), 0);
    }
    BigInt n = bigint_from_decimal(text.substr(0, slash));
    BigInt d = bigint_from_decimal(text.substr(slash + 1));
    return from_ratio(n, d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<Dyadic> Dyadic::parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool neg = false;
  if (text.front() == '+' || text.front() == '-') {
    neg = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;
  auto dot = text.find('.');
  std::string digits;
  size_t frac_digits = 0;
  if (dot == std::string_view::npos) {
    digits = std::string(text);
  } else {
    digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
    frac_digits = text.size() - dot - 1;
    if (frac_digits == 0) return std::nullopt;
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    return std::nullopt;
  BigInt n = bigint_from_decimal(digits);
  if (neg) n = -n;
  // value = n / 10^frac = n / (2^frac * 5^frac); dyadic iff 5^frac divides n.
  BigInt five = 1;
  for (size_t i = 0; i < frac_digits; ++i) five *= 5;
  if (n % five != 0) return std::nullopt;
  return Dyadic(n / five, -static_cast<long>(frac_digits));
}

BigInt Dyadic::to_integer() const {
  if (!is_integer()) throw std::domain_error("Dyadic::to_integer: value is fractional");
  return num_ << exp2_;
}

Dyadic Dyadic::operator-() const {
  Dyadic r;
  r.num_ = -num_;
  r.exp2_ = exp2_;
  return r;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long e = std::min(exp2_, o.exp2_);
  BigInt a = num_ << (exp2_ - e);
  BigInt b = o.num_ << (o.exp2_ - e);
  return Dyadic(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
  if (is_zero() || o.is_zero()) return Dyadic();
  Dyadic r;
  r.num_ = num_ * o.num_;
  r.exp2_ = exp2_ + o.exp2_;
  return r;  // odd * odd stays odd; already canonical
}

Dyadic Dyadic::shifted(long k) const {
  if (is_zero()) return *this;
  Dyadic r = *this;
  r.exp2_ += k;
  return r;
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
  Dyadic d = *this - o;
  if (d.num_ < 0) return std::strong_ordering::less;
  if (d.num_ > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Dyadic Dyadic::mod_two() const {
  if (is_zero()) return Dyadic();
  if (exp2_ >= 1) return Dyadic();  // even integer
  if (exp2_ == 0) return Dyadic(1, 0);  // odd integer -> 1
  // Fractional: reduce numerator mod 2^(1-exp2), then shift into (-1, 1].
  long shift = 1 - exp2_;
  BigInt mod = BigInt(1) << shift;
  BigInt r = num_ % mod;
  if (r < 0) r += mod;
  if (r > (mod >> 1)) r -= mod;
  return Dyadic(r, exp2_);
}

BigInt Dyadic::floor() const {
  if (exp2_ >= 0) return num_ << exp2_;
  BigInt q = num_ >> (-exp2_);  // arithmetic shift floors for negatives
  return q;
}

double Dyadic::to_double() const {
  return std::ldexp(num_.convert_to<double>(), static_cast<int>(exp2_));
}

std::string Dyadic::str() const {
  if (is_integer()) return to_integer().str();
  BigInt den = BigInt(1) << (-exp2_);
  return num_.str() + "/" + den.str();
}

std::string Dyadic::decimal_str() const {
  if (is_integer()) return to_integer().str();
  // num / 2^k == num * 5^k / 10^k
  long k = -exp2_;
  BigInt scaled = num_ < 0 ? BigInt(-num_) : num_;
  for (long i = 0; i < k; ++i) scaled *= 5;
  std::string digits = scaled.str();
  if (static_cast<long>(digits.size()) <= k)
    digits.insert(0, static_cast<size_t>(k) - digits.size() + 1, '0');
  digits.insert(digits.size() - static_cast<size_t>(k), ".");
  if (num_ < 0) digits.insert(0, "-");
  return digits;
}

}  // namespace qfa
