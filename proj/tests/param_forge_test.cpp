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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "unitshapes/error.hpp"
#include "unitshapes/param_forge.hpp"

using namespace unitshapes;

namespace {

constexpr int kBits = 256;
const Precision kPrec(kBits);

BigInt powmod(long base, const BigInt& e, const BigInt& m) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), BigInt(base).get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt ipow(long base, const BigInt& e) { return pow(BigInt(base), e.get_ui()); }

// Least p in [0, budget] with |p a - q b - t| <= tol for some q >= 0, by
// trying every p. a, b, t, tol in long double.
struct ScanHit {
  long p = -1, q = -1;
};
ScanHit scan_linear(long double a, long double b, long double t, long double tol, long budget) {
  for (long p = 0; p <= budget; ++p) {
    const long q = static_cast<long>(std::floor((p * a - t + tol) / b));
    if (q < 0) continue;
    if (std::fabs(p * a - q * b - t) <= tol) return {p, q};
  }
  return {};
}

// Shape of the lattice spanned by the columns of a 2x2 integer matrix, read
// as points x + iy.
ShapePoint shape_of_columns(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                            Precision prec) {
  auto r = [&](const BigInt& v) { return Real(v, prec.bits); };
  return reduce_shape({Complex(r(a), r(c)), Complex(r(b), r(d))}, prec);
}

}  // namespace

TEST_CASE("crt_params: small depths") {
  CrtSpec spec;
  spec.n = 1;
  spec.min_a1 = 1;
  spec.min_gap = 1;
  const OrderParams p1 = crt_params(spec, kPrec);
  CHECK(p1.a1() == 16);
  CHECK(p1.a2() == 21);

  spec = CrtSpec{};
  spec.n = 2;
  const OrderParams p2 = crt_params(spec, kPrec);
  CHECK(p2.a1() == 676);
  CHECK(p2.a2() == 801);

  spec.n = 10;
  const OrderParams p10 = crt_params(spec, kPrec);
  CHECK(p10.a1() == BigInt("54781787109376"));
  CHECK(p10.a2() == BigInt("116720000000001"));
  CHECK(p10.a2() < 2 * pow(BigInt(30), 10));
}

TEST_CASE("crt_params: congruences hold for every depth up to 12") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CrtSpec spec;
    spec.n = n;
    const OrderParams p = crt_params(spec, Precision(kBits + 32 * n));
    const auto un = static_cast<unsigned long>(n);
    const BigInt m2 = pow(BigInt(2), un), m3 = pow(BigInt(3), un), m5 = pow(BigInt(5), un);
    CHECK(floor_mod(p.a1(), m2) == 0);
    CHECK(floor_mod(p.a2() - 1, m2) == 0);
    CHECK(floor_mod(p.a1() - 1, m3) == 0);
    CHECK(floor_mod(p.a2(), m3) == 0);
    CHECK(floor_mod(p.a1() - 1, m5) == 0);
    CHECK(floor_mod(p.a2() - 1, m5) == 0);
    CHECK(p.a1() >= 5);
    CHECK(p.a2() >= p.a1() + 2);
    CHECK(p.a1() < pow(BigInt(30), un) + 5);
  }
}

TEST_CASE("crt_params rejects bad specs") {
  CrtSpec spec;
  spec.n = 0;
  CHECK_THROWS_AS(crt_params(spec), Error);
  spec.n = 3;
  spec.min_gap = 0;
  CHECK_THROWS_AS(crt_params(spec), Error);
}

TEST_CASE("multiplicative orders") {
  for (int c = 3; c <= 20; ++c) {
    CAPTURE(c);
    CHECK(mult_order(5, pow(BigInt(2), static_cast<unsigned long>(c))) ==
          pow(BigInt(2), static_cast<unsigned long>(c - 2)));
  }
  CHECK(mult_order(5, 7) == 6);
  CHECK(mult_order(3, 7) == 6);
  CHECK(mult_order(3, 56) == 6);
  CHECK(mult_order(1, 1000) == 1);
  CHECK(mult_order(17, 1) == 1);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> pick(2, 3000);
  for (int i = 0; i < 200; ++i) {
    const long m = pick(rng), b = pick(rng);
    if (std::gcd(m, b) != 1) continue;
    long x = b % m, s = 1;
    while (x != 1 % m) {
      x = x * b % m;
      ++s;
    }
    CHECK(mult_order(b, m) == s);
  }

  try {
    mult_order(6, 9);
    FAIL("expected NotCoprime");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCoprime);
  }
}

TEST_CASE("residue sets S_c") {
  CHECK(s_set(3).elements == std::vector<long>{1, 5, 9, 13, 25, 45});
  CHECK(s_set(4).elements == std::vector<long>{1, 5, 9, 13, 25, 45, 57, 61, 65, 69, 81, 101});
  for (int c = 3; c <= 12; ++c) {
    CAPTURE(c);
    const ResidueSet s = s_set(c);
    CHECK(s.elements == s_set_closed_form(c));
    CHECK(s.elements.size() == (6UL << (c - 3)));
    CHECK(s.elements.front() == 1);
    CHECK(s.elements.back() == (7L << c) - 11);
    for (std::size_t i = 6; i < s.elements.size(); ++i) {
      CHECK(s.elements[i] - s.elements[i - 6] == 56);
    }
  }
  CHECK_THROWS_AS(s_set(2), Error);
}

TEST_CASE("first_linear_hit matches a direct scan") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.3, 3.0), tt(-2.0, 8.0), lt(-5.0, -1.5);
  for (int i = 0; i < 300; ++i) {
    const double a = u(rng), b = u(rng), t = tt(rng), tol = std::pow(10.0, lt(rng));
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(t);
    CAPTURE(tol);
    if (2 * tol >= b) continue;
    const ScanHit want = scan_linear(a, b, t, tol, 20000);
    const auto got = first_linear_hit(Real(a, kBits), Real(b, kBits), Real(t, kBits),
                                      Real(tol, kBits), BigInt(20000));
    if (want.p < 0) {
      CHECK_FALSE(got.has_value());
      continue;
    }
    REQUIRE(got.has_value());
    CHECK(got->p == want.p);
    CHECK(got->q == want.q);
    CHECK(abs(got->error) <= Real(tol, kBits));
  }
}

TEST_CASE("first_linear_hit respects p_min and the budget") {
  const Real a(std::sqrt(2.0), kBits), b(1L, kBits), t(0.5, kBits), tol(1e-3, kBits);
  const auto first = first_linear_hit(a, b, t, tol, BigInt(100000));
  REQUIRE(first.has_value());
  const auto second = first_linear_hit(a, b, t, tol, BigInt(100000), first->p + 1);
  REQUIRE(second.has_value());
  CHECK(second->p > first->p);
  const ScanHit want = scan_linear(std::sqrt(2.0L), 1.0L, 0.5L, 1e-3L, 100000);
  CHECK(first->p == want.p);
  CHECK_FALSE(first_linear_hit(a, b, t, tol, first->p - 1).has_value());
}

TEST_CASE("approx_diagonal: trivial targets") {
  const Real tol(1e-3, kBits);
  const DiagonalStep zero = approx_diagonal(Real(0L, kBits), 4, 2, 1, tol, 1000, kPrec);
  CHECK(zero.s1 == 6);
  CHECK(zero.s2 == 6);
  CHECK(zero.p == 0);
  CHECK(zero.q == 0);
  CHECK(zero.d_n == 2);
  CHECK(zero.r_n == 1);

  const Real t = log(Real(3L, kBits)) * 6L;
  const DiagonalStep one = approx_diagonal(t, 4, 2, 1, tol, 1000, kPrec);
  CHECK(one.p == 1);
  CHECK(one.q == 0);
  CHECK(one.d_n == 8);
}

TEST_CASE("approx_diagonal(t = 1, c = 4) against the exhaustive scan") {
  // mpmath scan at 256 bits: tol 1e-k -> least (p, q).
  const std::array<std::array<long, 2>, 4> frozen = {{{6, 4}, {132, 90}, {2035, 1389}, {75061, 51237}}};
  const long double a = 6 * std::log(3.0L), b = 6 * std::log(5.0L);
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    const Real tol = Real(1L, kBits) / Real(std::pow(10L, k), kBits);
    const DiagonalStep s = approx_diagonal(Real(1L, kBits), 4, 2, 1, tol, 1000000, kPrec);
    CHECK(s.p == frozen[k - 1][0]);
    CHECK(s.q == frozen[k - 1][1]);
    CHECK(abs(s.error) <= tol);
    if (k <= 3) {
      const ScanHit scan = scan_linear(a, b, 1.0L, std::pow(10.0L, -k), 1000000);
      CHECK(s.p == scan.p);
      CHECK(s.q == scan.q);
    }
  }
  CHECK_THROWS_AS(approx_diagonal(Real(1L, kBits), 4, 2, 1, Real(1e-4, kBits), 1000, kPrec), Error);
  CHECK_THROWS_AS(approx_diagonal(Real(1L, kBits), 3, 2, 1, Real(1e-2, kBits), 1000, kPrec), Error);
}

TEST_CASE("approx_diagonal preserves the exponent congruences") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> cc(4, 9), dd(2, 12);
  std::uniform_real_distribution<double> tt(-3.0, 3.0);
  for (int i = 0; i < 60; ++i) {
    const int c = cc(rng), d = dd(rng), r = dd(rng);
    const double t = tt(rng);
    CAPTURE(c);
    CAPTURE(t);
    const DiagonalStep s = approx_diagonal(Real(t, kBits), c, d, r, Real(1e-2, kBits), 1000000, kPrec);
    const BigInt m = 7 * pow(BigInt(2), static_cast<unsigned long>(c - 4));
    CHECK(powmod(3, s.d_n, m) == powmod(3, d, m));
    CHECK(powmod(5, s.r_n, m) == powmod(5, r, m));
    CHECK(s.d_n - d == s.s1 * s.p);
    CHECK(s.r_n - r == s.s2 * s.q);
  }
}

TEST_CASE("diagonal steps converge to the translated shape") {
  // Lambda at c = 4, d = 2, r = 1 is {(y, z) : y == z mod 7}; after the step
  // it is diag(3^(d_n - 2), 5^(r_n - 1)) of the same congruence lattice.
  const Real t(1L, kBits);
  const Real e = exp(t);
  const Complex target =
      reduce_shape({Complex(e * 7L, Real(0L, kBits)), Complex(e, Real(1L, kBits))}, kPrec).tau;
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    const Real tol = Real(1L, kBits) / Real(std::pow(10L, k), kBits);
    const DiagonalStep s = approx_diagonal(t, 4, 2, 1, tol, 1000000, kPrec);
    const BigInt x = ipow(3, s.d_n - 2), y = ipow(5, s.r_n - 1);
    const auto bits = static_cast<int>(2 * std::max(mpz_sizeinbase(x.get_mpz_t(), 2),
                                                    mpz_sizeinbase(y.get_mpz_t(), 2))) + kBits;
    const Precision p((bits + 63) / 64 * 64);
    const ShapePoint got = shape_of_columns(7 * x, x, 0, y, p);
    CHECK(hyperbolic_distance(got.tau, target) <=
          tol * 10L);
  }
}

TEST_CASE("approx_horospherical") {
  const Real tol(1e-2, kBits);
  // mpmath scan: (f, c) -> (r_f, q, p).
  struct Case {
    long f;
    int c;
    long r_f, q, p;
  };
  for (const Case& k : {Case{1, 3, 6, 110, 162}, Case{45, 3, 5, 46, 68}, Case{13, 4, 3, 714, 1046},
                        Case{45, 5, 23, 905, 1327}}) {
    CAPTURE(k.f);
    CAPTURE(k.c);
    const HorosphericalStep s = approx_horospherical(k.f, k.c, tol, 1000000, kPrec);
    CHECK(s.r_f == k.r_f);
    CHECK(s.q == k.q);
    CHECK(s.p == k.p);
    CHECK(abs(s.ratio - 1L) <= tol);

    const BigInt m(7L << k.c);
    CHECK(powmod(5, s.r_f, m) == k.f);
    CHECK(powmod(5, s.r_n, m) == k.f);
    CHECK(powmod(3, s.d_n, m) == 1);
  }
  CHECK(approx_horospherical(1, 3, tol, 1000000, kPrec).r_f == mult_order(5, 56));

  try {
    approx_horospherical(3, 3, tol, 1000, kPrec);
    FAIL("expected NotInS");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInS);
  }
}

TEST_CASE("horospherical lattices approach f / M + i") {
  // Lambda = {(3^d y, 5^r z) : y == f z mod M} has tau = f/M + i 5^r / (M 3^d).
  const long f = 45;
  const int c = 3;
  const BigInt m(7L << c);
  const Complex limit = reduce_shape({Complex(Real(m, kBits), Real(0L, kBits)),
                                      Complex(Real(f, kBits), Real(m, kBits))},
                                     kPrec)
                            .tau;
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    const Real tol = Real(1L, kBits) / Real(std::pow(10L, k), kBits);
    const HorosphericalStep s = approx_horospherical(f, c, tol, 100000000, kPrec);
    const BigInt x = ipow(3, s.d_n), y = ipow(5, s.r_n);
    const auto bits = static_cast<int>(2 * std::max(mpz_sizeinbase(x.get_mpz_t(), 2),
                                                    mpz_sizeinbase(y.get_mpz_t(), 2))) + kBits;
    const Precision p((bits + 63) / 64 * 64);
    const ShapePoint got = shape_of_columns(x * m, x * f, 0, y, p);
    const Real dist =
        hyperbolic_distance(got.tau, limit);
    CHECK(dist <= tol * 2L);
  }
}

TEST_CASE("exponent boxes") {
  ExponentBox box;
  box.c = {0, 1};
  box.d = {2, 4};
  box.r = {1, 2};
  REQUIRE(box.size() == 12);
  std::set<std::array<int, 3>> seen;
  std::array<int, 3> prev{-1, -1, -1};
  for (std::size_t i = 0; i < box.size(); ++i) {
    const auto t = box.at(i);
    CHECK(t > prev);
    prev = t;
    seen.insert(t);
  }
  CHECK(seen.size() == 12);
  CHECK(box.at(0) == std::array<int, 3>{0, 2, 1});
  CHECK(box.at(11) == std::array<int, 3>{1, 4, 2});
  box.r = {3, 2};
  CHECK(box.size() == 0);
}

TEST_CASE("suborder_cloud is independent of the thread count") {
  CrtSpec spec;
  spec.n = 5;
  ExponentBox box;
  box.c = box.d = box.r = {1, 5};
  const auto serial = suborder_cloud(spec, box, kPrec, 1);
  const auto threaded = suborder_cloud(spec, box, kPrec, 4);
  REQUIRE(serial.size() == 125);
  REQUIRE(threaded.size() == 125);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CAPTURE(i);
    CHECK(serial[i].cdr == box.at(i));
    CHECK(serial[i].cdr == threaded[i].cdr);
    CHECK(serial[i].shape.tau.re == threaded[i].shape.tau.re);
    CHECK(serial[i].shape.tau.im == threaded[i].shape.tau.im);
    CHECK(serial[i].shape.boundary_flag == threaded[i].shape.boundary_flag);
  }

  box.r = {1, 6};
  CHECK_THROWS_AS(suborder_cloud(spec, box, kPrec, 1), Error);
}

TEST_CASE("approx_target: cloud hits") {
  const TargetHit a = approx_target(Complex::from_doubles(0.0, 1.0, kBits), Real(0.2, kBits),
                                    TargetSearch{}, kPrec);
  CHECK(a.stage == "cloud");
  CHECK(a.point.n == 10);
  CHECK(a.point.cdr == std::array<int, 3>{9, 10, 3});
  CHECK(a.distance.to_double() == doctest::Approx(0.023582).epsilon(1e-4));
  CHECK(a.point.shape.tau.re.to_double() == doctest::Approx(-0.023583).epsilon(1e-4));

  const TargetHit b = approx_target(Complex::from_doubles(0.25, 1.5, kBits), Real(0.3, kBits),
                                    TargetSearch{}, kPrec);
  CHECK(b.point.cdr == std::array<int, 3>{8, 6, 7});
  CHECK(b.distance.to_double() == doctest::Approx(0.034220).epsilon(1e-4));
  CHECK(b.distance <= Real(0.3, kBits));
}

TEST_CASE("approx_target: unreachable eps reports the best point") {
  TargetSearch search;
  try {
    approx_target(Complex::from_doubles(0.0, 1.0, kBits), Real(1e-3, kBits), search, kPrec);
    FAIL("expected TargetNotReached");
  } catch (const TargetNotReached& e) {
    CHECK(e.kind() == ErrorKind::BudgetExhausted);
    CHECK(e.best().distance > Real(1e-3, kBits));
    CHECK(e.best().distance <= Real(0.023583, kBits));
  }
  CHECK_THROWS_AS(approx_target(Complex::from_doubles(0.7, 1.0, kBits), Real(0.1, kBits), search, kPrec),
                  Error);
  CHECK_THROWS_AS(approx_target(Complex::from_doubles(0.0, 1.0, kBits), Real(0L, kBits), search, kPrec),
                  Error);
}
