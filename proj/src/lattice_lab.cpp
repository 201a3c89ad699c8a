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

#include "unitshapes/lattice_lab.hpp"

#include <optional>
#include <utility>

#include "unitshapes/error.hpp"

namespace unitshapes {

namespace {

// Unimodular column operation on columns (piv, j) of `a` that leaves
// gcd(a(row, piv), a(row, j)) in column piv and 0 in column j. The same
// operation is applied to `track` when given.
void merge_columns(IntMatrix& a, std::size_t row, std::size_t piv, std::size_t j,
                   IntMatrix* track = nullptr) {
  const BigInt x = a(row, piv), y = a(row, j);
  if (y == 0) return;
  BigInt g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  const BigInt yg = y / g, xg = x / g;
  // (col_piv, col_j) <- (col_piv, col_j) (s -y/g; t x/g), determinant 1.
  auto apply = [&](IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const BigInt p = m(i, piv), q = m(i, j);
      m(i, piv) = s * p + t * q;
      m(i, j) = xg * q - yg * p;
    }
  };
  apply(a);
  if (track) apply(*track);
}

IntMatrix hnf_of_generators(const IntMatrix& gens) {
  require(gens.rows() == 2 && gens.cols() >= 2, ErrorKind::PreconditionViolated,
          "need a 2 x k generator matrix with k >= 2");
  IntMatrix a = gens;
  const std::size_t last = a.cols() - 1;
  for (std::size_t j = 0; j < last; ++j) merge_columns(a, 1, last, j);
  for (std::size_t j = 1; j < last; ++j) merge_columns(a, 0, 0, j);
  require(a(1, last) != 0 && a(0, 0) != 0, ErrorKind::SingularBasis,
          "generators do not span a rank-2 lattice: " + gens.to_string());
  BigInt h11 = abs(a(0, 0));
  BigInt h12 = a(0, last), h22 = a(1, last);
  if (h22 < 0) {
    h22 = -h22;
    h12 = -h12;
  }
  h12 = floor_mod(h12, h11);
  IntMatrix h(2, 2);
  h(0, 0) = std::move(h11);
  h(0, 1) = std::move(h12);
  h(1, 1) = std::move(h22);
  return h;
}

// Kernel of (s, t) -> s r1 + t r2 (mod m) as a 2 x 2 generator matrix.
IntMatrix kernel_mod(const BigInt& r1, const BigInt& r2, const BigInt& m) {
  IntMatrix a(1, 3);
  a(0, 0) = r1;
  a(0, 1) = r2;
  a(0, 2) = m;
  IntMatrix w = IntMatrix::identity(3);
  merge_columns(a, 0, 2, 0, &w);
  merge_columns(a, 0, 2, 1, &w);
  IntMatrix k(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) k(i, j) = w(i, j);
  return k;
}

BigInt tdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

IntMatrix diag2(const BigInt& a, const BigInt& b) {
  IntMatrix d(2, 2);
  d(0, 0) = a;
  d(1, 1) = b;
  return d;
}

CongruenceSystem with_forms(const CongruenceSystem& sys,
                            const std::array<std::pair<long, long>, 3>& forms) {
  CongruenceSystem out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.rows.push_back({forms[i].first, forms[i].second, sys.rows[i].modulus});
  }
  return out;
}

}  // namespace

IntLattice2 IntLattice2::from_generators(const IntMatrix& generators) {
  IntMatrix h = hnf_of_generators(generators);
  IntMatrix b = generators.cols() == 2 ? generators : h;
  return IntLattice2(std::move(b), std::move(h));
}

BigInt IntLattice2::index() const { return hnf_(0, 0) * hnf_(1, 1); }

bool IntLattice2::contains(const BigInt& m, const BigInt& n) const {
  if (!mpz_divisible_p(n.get_mpz_t(), hnf_(1, 1).get_mpz_t())) return false;
  const BigInt y = n / hnf_(1, 1);
  const BigInt rest = m - hnf_(0, 1) * y;
  return mpz_divisible_p(rest.get_mpz_t(), hnf_(0, 0).get_mpz_t()) != 0;
}

bool IntLattice2::contains(const IntLattice2& sub) const {
  const IntMatrix& h = sub.hnf();
  return contains(h(0, 0), h(1, 0)) && contains(h(0, 1), h(1, 1));
}

IntLattice2 IntLattice2::transformed(const IntMatrix& t) const {
  return from_generators(t * basis_);
}

IntLattice2 hnf(const IntMatrix& basis) {
  require(basis.rows() == 2 && basis.cols() == 2, ErrorKind::PreconditionViolated,
          "hnf expects a 2 x 2 basis");
  require(basis.determinant() != 0, ErrorKind::SingularBasis,
          "singular basis " + basis.to_string());
  return IntLattice2::from_generators(basis);
}

SNFResult snf_3x2(const IntMatrix& mat) {
  require(mat.rows() == 3 && mat.cols() == 2, ErrorKind::PreconditionViolated,
          "snf_3x2 expects a 3 x 2 matrix");
  IntMatrix a = mat;
  IntMatrix u = IntMatrix::identity(3);
  IntMatrix v = IntMatrix::identity(2);
  for (std::size_t t = 0; t < 2; ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < 3; ++i)
        for (std::size_t j = t; j < 2; ++j)
          if (a(i, j) != 0 && (!best || abs(a(i, j)) < abs(a(best->first, best->second))))
            best = {i, j};
      require(best.has_value(), ErrorKind::RankDeficient, "rank < 2: " + mat.to_string());
      a.swap_rows(t, best->first);
      u.swap_rows(t, best->first);
      a.swap_cols(t, best->second);
      v.swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < 3; ++i) {
        const BigInt q = tdiv(a(i, t), a(t, t));
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        clean = clean && a(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < 2; ++j) {
        const BigInt q = tdiv(a(t, j), a(t, t));
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        clean = clean && a(t, j) == 0;
      }
      if (!clean) continue;

      // The pivot must divide the rest, or its gcd with an entry is smaller.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < 3 && !bad_row; ++i)
        for (std::size_t j = t + 1; j < 2; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) bad_row = i;
      if (!bad_row) break;
      a.add_row_multiple(t, *bad_row, 1);
      u.add_row_multiple(t, *bad_row, 1);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return SNFResult{std::move(u), std::move(a), std::move(v)};
}

IntLattice2 solve_congruences(const CongruenceSystem& sys) {
  IntMatrix basis = IntMatrix::identity(2);
  for (const CongruenceRow& row : sys.rows) {
    require(row.modulus >= 1, ErrorKind::PreconditionViolated, "modulus must be positive");
    if (row.modulus == 1) continue;
    const BigInt r1 = floor_mod(row.u * basis(0, 0) + row.v * basis(1, 0), row.modulus);
    const BigInt r2 = floor_mod(row.u * basis(0, 1) + row.v * basis(1, 1), row.modulus);
    basis = hnf_of_generators(basis * kernel_mod(r1, r2, row.modulus));
  }
  return IntLattice2::from_generators(basis);
}

IntLattice2 unit_exponent_lattice(const std::array<int, 3>& exponents,
                                  const LocalDataTriple& data) {
  return solve_congruences(exponent_congruences(exponents, data));
}

IntLattice2 positive_unit_lattice(const std::array<int, 3>& exponents,
                                  const LocalDataTriple& data) {
  // Substitute n -> 2n in m + n, m - 2n, 2m - n.
  const auto sys = with_forms(exponent_congruences(exponents, data), {{{1, 2}, {1, -4}, {2, -2}}});
  return solve_congruences(sys);
}

IntLattice2 positive_unit_lattice(const SuborderParams& sp, const LocalDataTriple& data) {
  const auto sys = with_forms(exponent_congruences(sp, data), {{{1, 2}, {1, -4}, {2, -2}}});
  return solve_congruences(sys);
}

IntLattice2 lambda_lattice(int c, int d, int r) {
  require(c >= 4 && d >= 2 && r >= 2, ErrorKind::PreconditionViolated,
          "lambda_lattice needs c >= 4, d >= 2, r >= 2");
  const BigInt s3 = pow(BigInt(3), static_cast<unsigned long>(d - 2));
  const BigInt s5 = pow(BigInt(5), static_cast<unsigned long>(r - 1));
  const BigInt m = 7 * pow(BigInt(2), static_cast<unsigned long>(c - 4));
  const IntLattice2 inner = solve_congruences({{{s3, -s5, m}}});
  return IntLattice2::from_generators(diag2(s3, s5) * inner.hnf());
}

IntMatrix factorization_matrix() {
  const IntMatrix g = IntMatrix{{1, 1}, {0, -1}} * IntMatrix{{3, 0}, {0, 1}} *
                      IntMatrix{{-1, 1}, {2, -1}};
  return diag2(8, 8) * g;
}

bool verify_factorization(int c, int d, int r, const IntLattice2& l) {
  return verify_factorization(c, d, r, l, factorization_matrix());
}

bool verify_factorization(int c, int d, int r, const IntLattice2& l, const IntMatrix& g) {
  require(g.rows() == 2 && g.cols() == 2, ErrorKind::PreconditionViolated, "g must be 2 x 2");
  if (g.determinant() == 0) return false;
  return lambda_lattice(c, d, r).transformed(g) == l;
}

}  // namespace unitshapes
