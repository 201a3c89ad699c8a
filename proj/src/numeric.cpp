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

#include "unitshapes/numeric.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>

#include "unitshapes/error.hpp"

namespace unitshapes {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::DegenerateBase: return "DegenerateBase";
    case ErrorKind::SingularBasis: return "SingularBasis";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NotInPlane: return "NotInPlane";
    case ErrorKind::DegenerateBasis: return "DegenerateBasis";
    case ErrorKind::NotCertified: return "NotCertified";
    case ErrorKind::NotInUpperHalfPlane: return "NotInUpperHalfPlane";
    case ErrorKind::CertificateFailed: return "CertificateFailed";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::NotInS: return "NotInS";
    case ErrorKind::EmptyCloud: return "EmptyCloud";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt parse_bigint(const std::string& text) {
  auto parse_plain = [&](const std::string& s) {
    BigInt v;
    if (s.empty() || v.set_str(s, 10) != 0) {
      fail(ErrorKind::Parse, "not an integer: '" + text + "'");
    }
    return v;
  };
  const auto caret = text.find('^');
  if (caret == std::string::npos) return parse_plain(text);
  const BigInt base = parse_plain(text.substr(0, caret));
  const BigInt exponent = parse_plain(text.substr(caret + 1));
  if (exponent < 0 || !exponent.fits_ulong_p()) {
    fail(ErrorKind::Parse, "bad exponent in '" + text + "'");
  }
  return pow(base, exponent.get_ui());
}

long to_long(const BigInt& value) {
  require(value.fits_slong_p(), ErrorKind::PreconditionViolated,
          "integer does not fit in a machine word: " + value.get_str());
  return value.get_si();
}

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt crt(const std::vector<BigInt>& residues, const std::vector<BigInt>& moduli) {
  require(residues.size() == moduli.size(), ErrorKind::PreconditionViolated,
          "crt needs one residue per modulus");
  BigInt x = 0, m = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    require(moduli[i] >= 1, ErrorKind::PreconditionViolated, "crt modulus must be positive");
    BigInt inv;
    const BigInt mi = floor_mod(m, moduli[i]);
    require(mpz_invert(inv.get_mpz_t(), mi.get_mpz_t(), moduli[i].get_mpz_t()) != 0 ||
                moduli[i] == 1,
            ErrorKind::NotCoprime, "crt moduli are not pairwise coprime");
    // x + m t == r_i (mod m_i)
    const BigInt t = floor_mod((residues[i] - x) * inv, moduli[i]);
    x += m * t;
    m *= moduli[i];
  }
  return floor_mod(x, m);
}

Precision::Precision(int b) : bits(b) {
  require(b >= kMinBits, ErrorKind::PreconditionViolated,
          "precision must be at least 64 bits");
}

// ---------------------------------------------------------------- Real

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(double value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const BigInt& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Leave the moved-from object valid with a tiny allocation.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::from_string(const std::string& text, mpfr_prec_t bits) {
  Real r(bits);
  if (mpfr_set_str(r.value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    fail(ErrorKind::Parse, "not a real number: '" + text + "'");
  }
  return r;
}

Real Real::pow2(long exponent, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_ui_2exp(r.value_, 1, exponent, MPFR_RNDN);
  return r;
}

Real Real::pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

long Real::exponent2() const {
  if (mpfr_zero_p(value_)) return LONG_MIN;
  return mpfr_get_exp(value_);
}

std::string Real::to_string(int significant_digits) const {
  char* buffer = nullptr;
  const int digits = std::max(significant_digits, 1);
  mpfr_asprintf(&buffer, "%.*RNe", digits - 1, value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

namespace {

mpfr_prec_t joint(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Real& Real::operator+=(const Real& o) {
  *this = *this + o;
  return *this;
}
Real& Real::operator-=(const Real& o) {
  *this = *this - o;
  return *this;
}
Real& Real::operator*=(const Real& o) {
  *this = *this * o;
  return *this;
}
Real& Real::operator/=(const Real& o) {
  *this = *this / o;
  return *this;
}

Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real operator+(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator+(const Real& a, const BigInt& b) {
  Real r(a.precision());
  mpfr_add_z(r.get(), a.get(), b.get_mpz_t(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const BigInt& b) {
  Real r(a.precision());
  mpfr_sub_z(r.get(), a.get(), b.get_mpz_t(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r(a.precision());
  mpfr_mul_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

#define UNITSHAPES_UNARY(name, fn)              \
  Real name(const Real& x) {                    \
    Real r(x.precision());                      \
    fn(r.get(), x.get(), MPFR_RNDN);            \
    return r;                                   \
  }
UNITSHAPES_UNARY(abs, mpfr_abs)
UNITSHAPES_UNARY(sqrt, mpfr_sqrt)
UNITSHAPES_UNARY(log, mpfr_log)
UNITSHAPES_UNARY(exp, mpfr_exp)
UNITSHAPES_UNARY(sinh, mpfr_sinh)
UNITSHAPES_UNARY(asinh, mpfr_asinh)
UNITSHAPES_UNARY(acosh, mpfr_acosh)
#undef UNITSHAPES_UNARY

Real half(const Real& x) {
  Real r(x.precision());
  mpfr_div_2ui(r.get(), x.get(), 1, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

BigInt round_to_bigint(const Real& x) {
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), x.get(), MPFR_RNDN);
  return out;
}
BigInt floor_to_bigint(const Real& x) {
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), x.get(), MPFR_RNDD);
  return out;
}
BigInt ceil_to_bigint(const Real& x) {
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), x.get(), MPFR_RNDU);
  return out;
}

Real add_up(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}
Real mul_up(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}
Real mul_down(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDD);
  return r;
}

Real div_up(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}
Real div_down(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDD);
  return r;
}
Real sub_down(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDD);
  return r;
}

Real rounding_slack(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  mpfr_mul_2si(r.get(), r.get(), 1 - static_cast<long>(x.precision()), MPFR_RNDU);
  return r;
}

// ---------------------------------------------------------------- Ball

Ball Ball::exact(const BigInt& value, mpfr_prec_t bits) {
  Real m(bits);
  const int inexact = mpfr_set_z(m.get(), value.get_mpz_t(), MPFR_RNDN);
  Real r = inexact == 0 ? Real(bits) : rounding_slack(m);
  return {std::move(m), std::move(r)};
}

Ball Ball::point(const Real& value) { return {value, Real(value.precision())}; }

Real Ball::lower() const { return sub_down(mid, rad); }
Real Ball::upper() const { return add_up(mid, rad); }

bool Ball::contains(const Real& x) const { return lower() <= x && x <= upper(); }
bool Ball::contains_zero() const { return abs(mid) <= rad; }

Real Ball::relative_radius() const {
  Real r(precision());
  if (mid.is_zero()) {
    mpfr_set_inf(r.get(), 1);
    return r;
  }
  return div_up(rad, abs(mid));
}

Ball operator+(const Ball& a, const Ball& b) {
  Real m = a.mid + b.mid;
  Real r = add_up(add_up(a.rad, b.rad), rounding_slack(m));
  return {std::move(m), std::move(r)};
}

Ball operator-(const Ball& a) { return {-a.mid, a.rad}; }

Ball operator-(const Ball& a, const Ball& b) { return a + (-b); }

Ball operator*(const Ball& a, const Ball& b) {
  Real m = a.mid * b.mid;
  Real r = add_up(mul_up(abs(a.mid), b.rad), mul_up(abs(b.mid), a.rad));
  r = add_up(r, mul_up(a.rad, b.rad));
  r = add_up(r, rounding_slack(m));
  return {std::move(m), std::move(r)};
}

Ball operator+(const Ball& a, const BigInt& b) {
  return a + Ball::exact(b, a.precision());
}

Ball abs(const Ball& x) { return {abs(x.mid), x.rad}; }

Ball log(const Ball& x) {
  const Real lo = x.lower();
  require(lo > 0L, ErrorKind::PrecisionExhausted,
          "logarithm of an enclosure that reaches zero or below");
  Real m = log(x.mid);
  // |log(y) - log(mid)| <= rad / (mid - rad) for y in the ball.
  Real r = add_up(div_up(x.rad, lo), rounding_slack(m));
  return {std::move(m), std::move(r)};
}

}  // namespace unitshapes
