// Copyright 2026 The unitshapes Authors
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

// Arbitrary-precision scalars: GMP integers, a thin RAII handle over an MPFR
// float with explicit precision, and a midpoint-radius ball built on it.

#ifndef UNITSHAPES_NUMERIC_HPP_
#define UNITSHAPES_NUMERIC_HPP_

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace unitshapes {

using BigInt = mpz_class;

BigInt pow(const BigInt& base, unsigned long exponent);
BigInt parse_bigint(const std::string& text);  // accepts "123" and "5^200"
long to_long(const BigInt& value);              // throws if out of range
BigInt floor_mod(const BigInt& a, const BigInt& m);  // result in [0, |m|)
// The x in [0, prod m_i) with x == r_i (mod m_i); moduli pairwise coprime.
BigInt crt(const std::vector<BigInt>& residues, const std::vector<BigInt>& moduli);

// Working precision. Residual checks are made at 2^-(bits - guard).
struct Precision {
  static constexpr int kGuardBits = 20;
  static constexpr int kMinBits = 64;
  static constexpr int kDefaultBits = 256;

  int bits = kDefaultBits;

  explicit Precision(int b = kDefaultBits);
  Precision doubled() const { return Precision(2 * bits); }
  int tolerance_exponent() const { return -(bits - kGuardBits); }
};

class Real {
 public:
  explicit Real(mpfr_prec_t bits = Precision::kDefaultBits);
  Real(int value, mpfr_prec_t bits) : Real(static_cast<long>(value), bits) {}
  Real(long value, mpfr_prec_t bits);
  Real(double value, mpfr_prec_t bits);
  Real(const BigInt& value, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_string(const std::string& text, mpfr_prec_t bits);
  static Real pow2(long exponent, mpfr_prec_t bits);
  static Real pi(mpfr_prec_t bits);

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  long exponent2() const;  // e with 2^(e-1) <= |x| < 2^e; LONG_MIN for 0

  // Scientific notation with the given number of significant digits,
  // round-to-nearest-even.
  std::string to_string(int significant_digits) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator-(const Real& a);
  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

 private:
  mpfr_t value_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(const Real& a, const BigInt& b);
Real operator-(const Real& a, const BigInt& b);
Real operator*(const Real& a, long b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real sinh(const Real& x);
Real asinh(const Real& x);
Real acosh(const Real& x);
Real half(const Real& x);  // exact
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
BigInt round_to_bigint(const Real& x);  // nearest, ties to even
BigInt floor_to_bigint(const Real& x);
BigInt ceil_to_bigint(const Real& x);

// Directed-rounding helpers used by the enclosure bookkeeping.
Real add_up(const Real& a, const Real& b);
Real mul_up(const Real& a, const Real& b);
Real mul_down(const Real& a, const Real& b);
Real div_up(const Real& a, const Real& b);
Real div_down(const Real& a, const Real& b);
Real sub_down(const Real& a, const Real& b);

// Upper bound on the rounding error of one correctly rounded operation whose
// result is x.
Real rounding_slack(const Real& x);

// Closed enclosure [mid - rad, mid + rad] with rad >= 0 rounded upward.
struct Ball {
  Real mid;
  Real rad;

  Ball() = default;
  Ball(Real m, Real r) : mid(std::move(m)), rad(std::move(r)) {}
  static Ball exact(const BigInt& value, mpfr_prec_t bits);
  static Ball point(const Real& value);

  mpfr_prec_t precision() const { return mid.precision(); }
  Real lower() const;
  Real upper() const;
  bool contains(const Real& x) const;
  bool contains_zero() const;
  // rad / |mid|, or +inf when mid is zero.
  Real relative_radius() const;
};

Ball operator+(const Ball& a, const Ball& b);
Ball operator-(const Ball& a, const Ball& b);
Ball operator*(const Ball& a, const Ball& b);
Ball operator+(const Ball& a, const BigInt& b);
Ball operator-(const Ball& a);
Ball abs(const Ball& x);
Ball log(const Ball& x);  // requires the ball to exclude zero

}  // namespace unitshapes

#endif  // UNITSHAPES_NUMERIC_HPP_
