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

#include "unitshapes/param_forge.hpp"

#include <algorithm>
#include <map>

#include "unitshapes/error.hpp"

namespace unitshapes {

namespace {

BigInt cdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt powmod(const BigInt& base, const BigInt& e, const BigInt& m) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Trial division; the moduli here are small powers of 2 times 7.
std::map<BigInt, unsigned long> factor(BigInt n) {
  std::map<BigInt, unsigned long> out;
  for (BigInt p = 2; p * p <= n; ++p) {
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

BigInt carmichael(const BigInt& n) {
  BigInt l = 1;
  for (const auto& [p, k] : factor(n)) {
    BigInt part;
    if (p == 2) {
      part = k <= 2 ? BigInt(k) : pow(BigInt(2), k - 2);
    } else {
      part = pow(p, k - 1) * (p - 1);
    }
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), part.get_mpz_t());
  }
  return l;
}

// Least x >= 0 with (a x + b) mod m <= w, for 0 <= a, b, w < m. A solution
// x has y = floor((a x + b) / m) >= 1 unless b <= w, and for fixed y one
// exists iff [m y - b, m y - b + w] holds a multiple of a, which is again a
// problem of this shape with (a, m) replaced by (m mod a, a).
std::optional<BigInt> first_mod_hit(const BigInt& a, const BigInt& b, const BigInt& m,
                                    const BigInt& w) {
  if (b <= w) return BigInt(0);
  if (a == 0) return std::nullopt;
  BigInt y = 1;
  if (w < a - 1) {
    const BigInt mb = m + w - b;
    const auto sub = first_mod_hit(BigInt(m % a), BigInt(mb % a), a, w);
    if (!sub) return std::nullopt;
    y += *sub;
  }
  return cdiv(m * y - b, a);
}

Real frac(const Real& x) {
  Real out(static_cast<mpfr_prec_t>(x.precision()));
  mpfr_frac(out.get(), x.get(), MPFR_RNDN);
  if (out.sign() < 0) out = out + BigInt(1);
  return out;
}

}  // namespace

OrderParams crt_params(const CrtSpec& spec, Precision prec) {
  require(spec.n >= 1, ErrorKind::InvalidParams, "CRT depth must be >= 1");
  require(spec.min_a1 >= 1 && spec.min_gap >= 1, ErrorKind::InvalidParams,
          "CRT thresholds must be positive");
  const auto n = static_cast<unsigned long>(spec.n);
  const std::vector<BigInt> moduli = {pow(BigInt(2), n), pow(BigInt(3), n), pow(BigInt(5), n)};
  const BigInt m = moduli[0] * moduli[1] * moduli[2];
  const BigInt r1 = crt({0, 1, 1}, moduli);
  const BigInt r2 = crt({1, 0, 1}, moduli);

  // OrderParams needs a1 >= 3 whatever the caller's threshold.
  auto at_least = [&m](const BigInt& r, const BigInt& lo) -> BigInt {
    return r + m * std::max<BigInt>(0, cdiv(lo - r, m));
  };
  const BigInt a1 = at_least(r1, std::max<BigInt>(spec.min_a1, 3));
  BigInt a2 = at_least(r2, a1 + spec.min_gap);
  for (int attempt = 0; attempt <= spec.max_retries; ++attempt, a2 += m) {
    OrderParams params(a1, a2);
    if (certify_fundamental_units(params, prec).certified) return params;
  }
  fail(ErrorKind::CertificateFailed, "no certified CRT representative at depth " +
                                         std::to_string(spec.n) + " after " +
                                         std::to_string(spec.max_retries) + " retries");
}

BigInt mult_order(const BigInt& base, const BigInt& modulus) {
  require(modulus >= 1, ErrorKind::PreconditionViolated, "modulus must be positive");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), base.get_mpz_t(), modulus.get_mpz_t());
  require(g == 1, ErrorKind::NotCoprime,
          base.get_str() + " is not a unit modulo " + modulus.get_str());
  if (modulus == 1) return 1;
  const BigInt b = floor_mod(base, modulus);
  BigInt order = carmichael(modulus);
  for (const auto& [p, k] : factor(order)) {
    for (unsigned long i = 0; i < k; ++i) {
      const BigInt smaller = order / p;
      if (powmod(b, smaller, modulus) != 1) break;
      order = smaller;
    }
  }
  return order;
}

ResidueSet s_set(int c) {
  require(c >= 3, ErrorKind::PreconditionViolated, "S_c needs c >= 3");
  require(c <= 40, ErrorKind::PreconditionViolated, "S_c is enumerated; c <= 40");
  const long m = 7L << c;
  ResidueSet out{c, {}};
  long x = 1;
  do {
    out.elements.push_back(x);
    x = x * 5 % m;
  } while (x != 1);
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::vector<long> s_set_closed_form(int c) {
  require(c >= 3, ErrorKind::PreconditionViolated, "S_c needs c >= 3");
  std::vector<long> out;
  for (long k = 0; k < (1L << (c - 3)); ++k)
    for (long j : {1, 5, 9, 13, 25, 45}) out.push_back(56 * k + j);
  return out;
}

std::optional<LinearHit> first_linear_hit(const Real& a, const Real& b, const Real& t,
                                          const Real& tol, const BigInt& budget,
                                          const BigInt& p_min) {
  require(a > 0L && b > 0L, ErrorKind::PreconditionViolated, "need a, b > 0");
  require(tol > 0L && tol * 2L < b, ErrorKind::PreconditionViolated, "need 0 < 2 tol < b");
  const auto bits = static_cast<int>(std::max(a.precision(), b.precision()));
  const Real alpha = a / b;
  const Real beta = (tol - t) / b;  // p a - q b - t = b (p alpha + beta - q) - tol
  const Real width = tol * 2L / b;

  // q = floor(p alpha + beta) must be >= 0.
  BigInt p0 = std::max<BigInt>(p_min, 0);
  if (beta.sign() < 0) p0 = std::max(p0, ceil_to_bigint(-beta / alpha));

  const int k = bits - 16;
  const Real scale = Real::pow2(k, bits);
  const BigInt s = pow(BigInt(2), static_cast<unsigned long>(k));
  const BigInt fa = floor_to_bigint(frac(alpha) * scale);
  const BigInt fw = floor_to_bigint(width * scale);

  // The fixed-point rotation can disagree with the exact one only within a
  // few ulps of the window edge; every candidate is rechecked at full
  // precision and the scan resumes past a false positive.
  for (int attempt = 0; attempt < 64 && p0 <= budget; ++attempt) {
    const BigInt fb = floor_to_bigint(frac(alpha * Real(p0, bits) + beta) * scale);
    const auto x = first_mod_hit(fa, floor_mod(fb, s), s, fw);
    if (!x) return std::nullopt;
    const BigInt p = p0 + *x;
    if (p > budget) return std::nullopt;
    const BigInt q = floor_to_bigint(alpha * Real(p, bits) + beta);
    Real err = a * Real(p, bits) - b * Real(q, bits) - t;
    if (q >= 0 && abs(err) <= tol) return LinearHit{p, q, std::move(err)};
    p0 = p + 1;
  }
  return std::nullopt;
}

DiagonalStep approx_diagonal(const Real& t, int c, const BigInt& d, const BigInt& r,
                             const Real& tol, const BigInt& budget, Precision prec) {
  require(c >= 4, ErrorKind::PreconditionViolated, "diagonal moves need c >= 4");
  require(tol > 0L, ErrorKind::PreconditionViolated, "tol must be positive");
  const int bits = prec.bits;
  const BigInt m = 7 * pow(BigInt(2), static_cast<unsigned long>(c - 4));
  DiagonalStep out;
  out.s1 = mult_order(3, m);
  out.s2 = mult_order(5, m);
  const Real a = Real(out.s1, bits) * log(Real(3L, bits));
  const Real b = Real(out.s2, bits) * log(Real(5L, bits));
  const Real tt = t * Real(1L, bits);
  const auto hit = first_linear_hit(a, b, tt, tol, budget);
  require(hit.has_value(), ErrorKind::BudgetExhausted,
          "no diagonal step within budget " + budget.get_str());
  out.p = hit->p;
  out.q = hit->q;
  out.d_n = d + out.s1 * out.p;
  out.r_n = r + out.s2 * out.q;
  out.error = hit->error;
  return out;
}

HorosphericalStep approx_horospherical(long f, int c, const Real& tol, const BigInt& budget,
                                       Precision prec) {
  require(c >= 3, ErrorKind::PreconditionViolated, "horospherical moves need c >= 3");
  require(tol > 0L && tol < 1L, ErrorKind::PreconditionViolated, "need 0 < tol < 1");
  const int bits = prec.bits;
  const ResidueSet sc = s_set(c);
  require(std::binary_search(sc.elements.begin(), sc.elements.end(), f), ErrorKind::NotInS,
          std::to_string(f) + " is not a power of 5 modulo 7*2^" + std::to_string(c));
  const BigInt m = BigInt(7L << c);
  HorosphericalStep out;
  out.s1 = mult_order(3, m);
  out.s2 = mult_order(5, m);
  BigInt x = 5 % m;
  for (out.r_f = 1; x != f % m; ++out.r_f) x = x * 5 % m;

  // log ratio = q s2 log 5 - p s1 log 3 - (log m - r_f log 5).
  const Real log5 = log(Real(5L, bits));
  const Real a = Real(out.s2, bits) * log5;
  const Real b = Real(out.s1, bits) * log(Real(3L, bits));
  const Real t = log(Real(m, bits)) - Real(out.r_f, bits) * log5;
  Real delta(bits);
  mpfr_log1p(delta.get(), (tol * Real(1L, bits)).get(), MPFR_RNDD);
  const auto hit = first_linear_hit(a, b, t, delta, budget);
  require(hit.has_value(), ErrorKind::BudgetExhausted,
          "no horospherical step within budget " + budget.get_str());
  out.q = hit->p;
  out.p = hit->q;
  out.d_n = out.s1 * out.p;
  out.r_n = out.r_f + out.s2 * out.q;
  out.ratio = exp(hit->error);
  return out;
}

}  // namespace unitshapes
