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

#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "unitshapes/error.hpp"
#include "unitshapes/lattice_lab.hpp"

using namespace unitshapes;

namespace {

IntMatrix random_unimodular(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix w = IntMatrix::identity(2);
  for (int step = 0; step < 6; ++step) {
    const std::size_t i = step % 2;
    w.add_row_multiple(i, 1 - i, d(rng) / 3);
  }
  if (d(rng) < 0) w.swap_cols(0, 1);
  return w;
}

// Brute-force oracle: count solutions modulo the lcm of the moduli and check
// membership of every residue pair against the lattice.
struct BruteForce {
  long period = 1;
  long solutions = 0;
  bool agrees = true;
};

BruteForce brute(const CongruenceSystem& sys, const IntLattice2& lat) {
  BruteForce out;
  for (const auto& row : sys.rows) out.period = std::lcm(out.period, to_long(row.modulus));
  for (long m = 0; m < out.period; ++m)
    for (long n = 0; n < out.period; ++n) {
      const bool sol = sys.holds(m, n);
      out.solutions += sol;
      out.agrees = out.agrees && sol == lat.contains(m, n);
    }
  return out;
}

const LocalDataTriple& data235() {
  static const LocalDataTriple d = canonical_local_data({2, 3, 5});
  return d;
}

}  // namespace

TEST_CASE("hnf basics") {
  CHECK(hnf(IntMatrix::identity(2)).hnf() == IntMatrix::identity(2));
  const IntLattice2 l = hnf(IntMatrix{{2, 1}, {0, 1}});
  CHECK(l.hnf() == IntMatrix{{2, 1}, {0, 1}});
  CHECK(l.index() == 2);
  // Lattice points of a 5x5 box: (m, n) in L iff m == n mod 2.
  for (long m = -2; m <= 2; ++m)
    for (long n = -2; n <= 2; ++n) CHECK(l.contains(m, n) == ((m - n) % 2 == 0));
  CHECK_THROWS_AS(hnf(IntMatrix{{1, 2}, {2, 4}}), Error);
}

TEST_CASE("hnf is invariant under unimodular change of basis") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int i = 0; i < 300; ++i) {
    const IntMatrix b{{d(rng), d(rng)}, {d(rng), d(rng)}};
    if (b.determinant() == 0) continue;
    const IntMatrix w = random_unimodular(rng, 10);
    REQUIRE(abs(w.determinant()) == 1);
    CHECK(hnf(b) == hnf(b * w));
    CHECK(hnf(b).index() == abs(b.determinant()));
  }
}

TEST_CASE("snf of the displayed 3x2 matrix") {
  const IntMatrix m{{1, 1}, {2, -1}, {1, -2}};
  const SNFResult s = snf_3x2(m);
  CHECK(s.d1() == 1);
  CHECK(s.d2() == 3);
  CHECK(s.D == IntMatrix{{1, 0}, {0, 3}, {0, 0}});
  CHECK(s.U * m * s.V == s.D);
  CHECK(abs(s.U.determinant()) == 1);
  CHECK(abs(s.V.determinant()) == 1);
}

TEST_CASE("snf trivial and degenerate inputs") {
  const SNFResult s = snf_3x2(IntMatrix{{1, 0}, {0, 1}, {0, 0}});
  CHECK(s.D == IntMatrix{{1, 0}, {0, 1}, {0, 0}});
  CHECK_THROWS_AS(snf_3x2(IntMatrix{{1, 2}, {2, 4}, {3, 6}}), Error);
  CHECK_THROWS_AS(snf_3x2(IntMatrix(3, 2)), Error);
}

TEST_CASE("snf of random rank-2 matrices") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> d(-20, 20);
  int done = 0;
  while (done < 100) {
    const IntMatrix m{{d(rng), d(rng)}, {d(rng), d(rng)}, {d(rng), d(rng)}};
    bool rank2 = false;
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
      rank2 = rank2 || m(i, 0) * m(j, 1) - m(i, 1) * m(j, 0) != 0;
    }
    if (!rank2) continue;
    ++done;
    const SNFResult s = snf_3x2(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(abs(s.U.determinant()) == 1);
    CHECK(abs(s.V.determinant()) == 1);
    CHECK(s.d1() > 0);
    CHECK(mpz_divisible_p(s.d2().get_mpz_t(), s.d1().get_mpz_t()));
    CHECK(s.D(0, 1) == 0);
    CHECK(s.D(1, 0) == 0);
    CHECK(s.D(2, 0) == 0);
    CHECK(s.D(2, 1) == 0);
  }
}

TEST_CASE("solve_congruences examples") {
  CHECK(solve_congruences({}).hnf() == IntMatrix::identity(2));
  CHECK(solve_congruences({{{1, 0, 5}}}).hnf() == IntMatrix{{5, 0}, {0, 1}});

  const CongruenceSystem sys{{{1, 1, 7}, {1, -2, 8}, {2, -1, 24}}};
  const IntLattice2 l = solve_congruences(sys);
  // Brute force over [0,168)^2 finds 21 solutions, so the index is 168^2/21.
  CHECK(l.index() == 1344);
  const BruteForce bf = brute(sys, l);
  CHECK(bf.solutions == 21);
  CHECK(bf.agrees);
}

TEST_CASE("solve_congruences against brute force on random systems") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> coef(-40, 40), nrows(1, 3), mod(1, 400);
  int done = 0;
  while (done < 60) {
    CongruenceSystem sys;
    std::vector<oracle::Row> rows;
    long product = 1;
    const long k = nrows(rng);
    for (long i = 0; i < k; ++i) {
      const oracle::Row r{coef(rng), coef(rng), mod(rng)};
      product *= r.m;
      rows.push_back(r);
      sys.rows.push_back({r.u, r.v, r.m});
    }
    if (product > 100000) continue;
    ++done;
    const IntLattice2 l = solve_congruences(sys);
    const oracle::Hnf h = oracle::brute_hnf(rows);
    CHECK(l.hnf() == IntMatrix{{h.h11, h.h12}, {0, h.h22}});
    CHECK(l.index() == h.index());
  }
}

TEST_CASE("local data used by the lattice sweeps") {
  const LocalDataTriple& d = data235();
  CHECK(d[0].l == 7);
  CHECK(d[1].l == 8);
  CHECK(d[2].l == 24);
  for (const auto& x : d) CHECK(x.j == 1);
}

TEST_CASE("exponent lattices shrink as exponents grow") {
  for (int c = 1; c <= 5; ++c)
    for (int d = 1; d <= 5; ++d)
      for (int r = 1; r <= 5; ++r) {
        const IntLattice2 l = unit_exponent_lattice({c, d, r}, data235());
        CHECK(l.contains(unit_exponent_lattice({c + 1, d, r}, data235())));
        CHECK(l.contains(unit_exponent_lattice({c, d + 1, r}, data235())));
        CHECK(l.contains(unit_exponent_lattice({c, d, r + 1}, data235())));
      }
}

TEST_CASE("lambda lattices") {
  // (4, 2, 2): y == 5 z (mod 7), then scaled by diag(1, 5).
  const IntLattice2 inner = solve_congruences({{{1, -5, 7}}});
  CHECK(lambda_lattice(4, 2, 2) ==
        IntLattice2::from_generators(IntMatrix{{1, 0}, {0, 5}} * inner.basis()));

  // (5, 3, 3): 3y - 25z == 0 (mod 14) has 14 solutions mod 14.
  const IntLattice2 l = lambda_lattice(5, 3, 3);
  CHECK(l.index() == 3 * 25 * 14);
  for (long y = -14; y < 28; ++y)
    for (long z = -14; z < 28; ++z) {
      CHECK(l.contains(3 * y, 25 * z) == ((3 * y - 25 * z) % 14 == 0));
    }
  CHECK_THROWS_AS(lambda_lattice(3, 2, 2), Error);
}

TEST_CASE("factorization identity over the full exponent box") {
  int checked = 0;
  for (int c = 4; c <= 8; ++c)
    for (int d = 2; d <= 6; ++d)
      for (int r = 2; r <= 6; ++r) {
        CHECK(verify_factorization(c, d, r, unit_exponent_lattice({c, d, r}, data235())));
        ++checked;
      }
  CHECK(checked == 125);
}

TEST_CASE("mutated factorization matrices are rejected") {
  const IntLattice2 l = unit_exponent_lattice({4, 2, 2}, data235());
  const IntMatrix g = factorization_matrix();
  CHECK(g == IntMatrix{{-8, 16}, {-16, 8}});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (long delta : {-1, 1}) {
        IntMatrix m = g;
        m(i, j) += delta;
        CHECK_FALSE(verify_factorization(4, 2, 2, l, m));
      }
}

TEST_CASE("positive units: diag(1,2) L' = L") {
  const IntMatrix d12{{1, 0}, {0, 2}};
  for (int c = 1; c <= 6; ++c)
    for (int d = 1; d <= 6; ++d)
      for (int r = 1; r <= 6; ++r) {
        const IntLattice2 l = unit_exponent_lattice({c, d, r}, data235());
        const IntLattice2 lp = positive_unit_lattice({c, d, r}, data235());
        CHECK(l.contains(lp.transformed(d12)));
        CHECK(lp.transformed(d12) == l);
      }
}
