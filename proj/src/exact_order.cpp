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

#include "unitshapes/exact_order.hpp"

#include <algorithm>
#include <utility>

#include "unitshapes/error.hpp"

namespace unitshapes {

bool CongruenceSystem::holds(const BigInt& m, const BigInt& n) const {
  return std::all_of(rows.begin(), rows.end(), [&](const CongruenceRow& r) {
    return floor_mod(r.u * m + r.v * n, r.modulus) == 0;
  });
}

OrderElement OrderElement::unit(UnitSelector u, const OrderParams& params) {
  if (u == UnitSelector::Identity) return constant(1);
  return {-unit_shift(u, params), 1, 0};
}

OrderElement OrderElement::unit_inverse(UnitSelector u, const OrderParams& params) {
  // The inverse of X - k is the product of the other two factors of f.
  switch (u) {
    case UnitSelector::Identity: return constant(1);
    case UnitSelector::B1: return {params.middle_coefficient(), -params.trace(), 1};
    case UnitSelector::B2: return {0, -params.a2(), 1};
    case UnitSelector::B3: return {0, -params.a1(), 1};
  }
  return constant(1);
}

std::string OrderElement::to_string() const {
  return c0.get_str() + " + " + c1.get_str() + "*X + " + c2.get_str() + "*X^2";
}

OrderElement reduce_mod(const OrderElement& e, const BigInt& m) {
  require(m >= 1, ErrorKind::PreconditionViolated, "modulus must be positive");
  return {floor_mod(e.c0, m), floor_mod(e.c1, m), floor_mod(e.c2, m)};
}

OrderElement mul_mod(const OrderElement& x, const OrderElement& y, const OrderParams& params,
                     const Modulus& modulus) {
  const std::array<const BigInt*, 3> a = {&x.c0, &x.c1, &x.c2};
  const std::array<const BigInt*, 3> b = {&y.c0, &y.c1, &y.c2};
  std::array<BigInt, 5> p;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p[i + j] += *a[i] * *b[j];
  // X^3 = s X^2 - q X + 1.
  const BigInt s = params.trace(), q = params.middle_coefficient();
  for (int k = 4; k >= 3; --k) {
    const BigInt c = p[k];
    p[k] = 0;
    p[k - 1] += s * c;
    p[k - 2] -= q * c;
    p[k - 3] += c;
  }
  OrderElement out{std::move(p[0]), std::move(p[1]), std::move(p[2])};
  return modulus ? reduce_mod(out, *modulus) : out;
}

OrderElement pow_mod(const OrderElement& x, const BigInt& exponent, const OrderParams& params,
                     const Modulus& modulus) {
  require(exponent >= 0, ErrorKind::PreconditionViolated, "negative exponent");
  OrderElement result = OrderElement::constant(1);
  if (modulus) result = reduce_mod(result, *modulus);
  OrderElement base = modulus ? reduce_mod(x, *modulus) : x;
  BigInt e = exponent;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mul_mod(result, base, params, modulus);
    e >>= 1;
    if (e > 0) base = mul_mod(base, base, params, modulus);
  }
  return result;
}

OrderElement unit_monomial(const OrderParams& params, const BigInt& m, const BigInt& n,
                           const Modulus& modulus) {
  auto power = [&](UnitSelector u, const BigInt& e) {
    const OrderElement b =
        e >= 0 ? OrderElement::unit(u, params) : OrderElement::unit_inverse(u, params);
    return pow_mod(b, abs(e), params, modulus);
  };
  return mul_mod(power(UnitSelector::B1, m), power(UnitSelector::B2, n), params, modulus);
}

bool is_integer_mod(const OrderElement& e, long p, int k) {
  require(p >= 2 && k >= 0, ErrorKind::PreconditionViolated, "need p >= 2, k >= 0");
  const BigInt pk = pow(BigInt(p), static_cast<unsigned long>(k));
  return floor_mod(e.c1, pk) == 0 && floor_mod(e.c2, pk) == 0;
}

IntMatrix multiplication_matrix(const OrderElement& e, const OrderParams& params) {
  IntMatrix m(3, 3);
  OrderElement basis = OrderElement::constant(1);
  const OrderElement x = OrderElement::unit(UnitSelector::B1, params);
  for (std::size_t col = 0; col < 3; ++col) {
    const OrderElement image = mul_mod(e, basis, params);
    m(0, col) = image.c0;
    m(1, col) = image.c1;
    m(2, col) = image.c2;
    basis = mul_mod(basis, x, params);
  }
  return m;
}

BigInt PrimeLocalData::period(int k) const {
  require(k >= 0, ErrorKind::PreconditionViolated, "negative depth");
  if (k == 0) return 1;
  return BigInt(l) * pow(BigInt(p), static_cast<unsigned long>(std::max(k - j, 0)));
}

namespace {

int valuation(const BigInt& x, long p, int cap) {
  if (x == 0) return cap;
  int v = 0;
  BigInt y = x;
  while (v < cap && mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

bool is_prime(long p) { return p >= 2 && mpz_probab_prime_p(BigInt(p).get_mpz_t(), 30) > 0; }

}  // namespace

PrimeLocalData local_orders(const OrderParams& params, long p, UnitSelector base) {
  require(is_prime(p), ErrorKind::PreconditionViolated, std::to_string(p) + " is not prime");
  require(p <= 1000, ErrorKind::PreconditionViolated, "prime too large for the order scan");
  require(base != UnitSelector::Identity, ErrorKind::DegenerateBase, "identity base");

  // (O/pO)^x has fewer than p^3 elements, so the orbit of base returns to
  // Z + pO within p^3 steps or base is not a unit mod p.
  const BigInt pb(p);
  const OrderElement b = OrderElement::unit(base, params);
  OrderElement e = reduce_mod(OrderElement::constant(1), pb);
  const long limit = p * p * p;
  long l = 0;
  for (long m = 1; m <= limit; ++m) {
    e = mul_mod(e, b, params, pb);
    if (e.c1 == 0 && e.c2 == 0) {
      require(e.c0 != 0, ErrorKind::DegenerateBase, "base is nilpotent mod p");
      l = m;
      break;
    }
  }
  require(l > 0, ErrorKind::DegenerateBase, "base is not a unit mod " + std::to_string(p));

  // Bracket j by doubling the depth, then read it off as a valuation.
  for (int depth = 2; depth <= 1024; depth *= 2) {
    const BigInt pk = pow(pb, static_cast<unsigned long>(depth));
    const OrderElement bl = pow_mod(b, BigInt(l), params, pk);
    if (!is_integer_mod(bl, p, depth)) {
      const int j = std::min(valuation(bl.c1, p, depth), valuation(bl.c2, p, depth));
      return PrimeLocalData{p, base, l, j};
    }
  }
  fail(ErrorKind::DegenerateBase, "base^l is integral to depth 1024");
}

SuborderParams::SuborderParams(std::array<long, 3> primes, std::array<int, 3> exponents,
                               OrderParams base)
    : primes_(primes), exponents_(exponents), base_(std::move(base)) {
  for (long p : primes_) {
    require(is_prime(p), ErrorKind::InvalidParams, std::to_string(p) + " is not prime");
  }
  require(primes_[0] != primes_[1] && primes_[0] != primes_[2] && primes_[1] != primes_[2],
          ErrorKind::InvalidParams, "primes must be distinct");
  for (int e : exponents_) require(e >= 0, ErrorKind::InvalidParams, "negative exponent");

  const BigInt& a1 = base_.a1();
  const BigInt& a2 = base_.a2();
  // (a1 residue, a2 residue) demanded for each prime.
  const std::array<std::pair<int, int>, 3> residues = {{{0, 1}, {1, 0}, {1, 1}}};
  for (std::size_t i = 0; i < 3; ++i) {
    const BigInt q = pow(BigInt(primes_[i]), static_cast<unsigned long>(exponents_[i]));
    const bool ok = floor_mod(a1 - residues[i].first, q) == 0 &&
                    floor_mod(a2 - residues[i].second, q) == 0;
    require(ok, ErrorKind::InvalidParams,
            "a1=" + a1.get_str() + ", a2=" + a2.get_str() + " violate the congruences mod " +
                std::to_string(primes_[i]) + "^" + std::to_string(exponents_[i]));
  }
}

BigInt SuborderParams::conductor() const {
  BigInt m = 1;
  for (std::size_t i = 0; i < 3; ++i)
    m *= pow(BigInt(primes_[i]), static_cast<unsigned long>(exponents_[i]));
  return m;
}

LocalDataTriple suborder_local_data(const SuborderParams& sp) {
  LocalDataTriple out;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = local_orders(sp.base_order(), sp.primes()[i], SuborderParams::kBases[i]);
  }
  return out;
}

OrderParams congruent_params(const std::array<long, 3>& primes, int depth,
                             const BigInt& min_a1, const BigInt& min_gap) {
  require(depth >= 0, ErrorKind::PreconditionViolated, "negative depth");
  std::vector<BigInt> moduli;
  for (long p : primes) moduli.push_back(pow(BigInt(p), static_cast<unsigned long>(depth)));
  const BigInt m = moduli[0] * moduli[1] * moduli[2];
  BigInt a1 = crt({0, 1, 1}, moduli);
  BigInt a2 = crt({1, 0, 1}, moduli);
  const BigInt lo1 = std::max<BigInt>(min_a1, 3);
  if (a1 < lo1) a1 += m * ((lo1 - a1 + m - 1) / m);
  const BigInt lo2 = a1 + std::max<BigInt>(min_gap, 1);
  if (a2 < lo2) a2 += m * ((lo2 - a2 + m - 1) / m);
  return OrderParams(std::move(a1), std::move(a2));
}

LocalDataTriple canonical_local_data(const std::array<long, 3>& primes) {
  return suborder_local_data(SuborderParams(primes, {2, 2, 2}, congruent_params(primes, 2)));
}

CongruenceSystem exponent_congruences(const SuborderParams& sp, const LocalDataTriple& data) {
  for (std::size_t i = 0; i < 3; ++i) {
    require(data[i].p == sp.primes()[i], ErrorKind::PreconditionViolated,
            "local data does not match the suborder primes");
  }
  return exponent_congruences(sp.exponents(), data);
}

CongruenceSystem exponent_congruences(const std::array<int, 3>& exponents,
                                      const LocalDataTriple& data) {
  const std::array<std::pair<long, long>, 3> forms = {{{1, 1}, {1, -2}, {2, -1}}};
  CongruenceSystem sys;
  for (std::size_t i = 0; i < 3; ++i) {
    sys.rows.push_back({forms[i].first, forms[i].second, data[i].period(exponents[i])});
  }
  return sys;
}

}  // namespace unitshapes
