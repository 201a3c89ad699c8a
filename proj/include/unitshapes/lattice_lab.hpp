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

// Rank-2 integer lattices in Hermite normal form, kernels of congruence
// systems, the 3x2 Smith normal form, and the exponent lattices L, Lambda and
// L' of the (2, 3, 5) suborders.

#ifndef UNITSHAPES_LATTICE_LAB_HPP_
#define UNITSHAPES_LATTICE_LAB_HPP_

#include <array>

#include "unitshapes/congruence.hpp"
#include "unitshapes/exact_order.hpp"
#include "unitshapes/int_matrix.hpp"

namespace unitshapes {

// Full-rank sublattice of Z^2. Columns of the basis are generators; the HNF
// is upper triangular (h11 h12; 0 h22) with h11, h22 > 0 and 0 <= h12 < h11.
class IntLattice2 {
 public:
  // Accepts any 2 x k generator matrix of rank 2.
  static IntLattice2 from_generators(const IntMatrix& generators);

  const IntMatrix& basis() const { return basis_; }
  const IntMatrix& hnf() const { return hnf_; }
  BigInt index() const;  // [Z^2 : L] = h11 h22

  bool contains(const BigInt& m, const BigInt& n) const;
  bool contains(const IntLattice2& sub) const;

  // T * L for an integer 2 x 2 matrix T with det != 0.
  IntLattice2 transformed(const IntMatrix& t) const;

  friend bool operator==(const IntLattice2& a, const IntLattice2& b) { return a.hnf_ == b.hnf_; }

 private:
  IntLattice2(IntMatrix basis, IntMatrix hnf) : basis_(std::move(basis)), hnf_(std::move(hnf)) {}
  IntMatrix basis_;
  IntMatrix hnf_;
};

// Throws SingularBasis for det == 0.
IntLattice2 hnf(const IntMatrix& basis);

// U * M * V = D, i.e. M = U^-1 D V^-1, with D = diag(d1, d2) padded by a zero
// row and d1 | d2.
struct SNFResult {
  IntMatrix U;  // 3 x 3 unimodular
  IntMatrix D;  // 3 x 2
  IntMatrix V;  // 2 x 2 unimodular
  BigInt d1() const { return D(0, 0); }
  BigInt d2() const { return D(1, 1); }
};

// Throws RankDeficient unless rank(M) == 2.
SNFResult snf_3x2(const IntMatrix& mat);

IntLattice2 solve_congruences(const CongruenceSystem& sys);

// Exponent lattice of the suborder: (m, n) with b1^m b2^n in Z + p1^c p2^d p3^r O.
IntLattice2 unit_exponent_lattice(const std::array<int, 3>& exponents, const LocalDataTriple& data);
// L' = {(m, n) : b1^m b2^(2n) in the suborder}, which indexes the totally
// positive units since b1 >> 0 and b2 has mixed signs.
IntLattice2 positive_unit_lattice(const std::array<int, 3>& exponents, const LocalDataTriple& data);
IntLattice2 positive_unit_lattice(const SuborderParams& sp, const LocalDataTriple& data);

// diag(3^(d-2), 5^(r-1)) {(y, z) : 3^(d-2) y - 5^(r-1) z == 0 mod 7 2^(c-4)};
// requires c >= 4, d >= 2, r >= 2.
IntLattice2 lambda_lattice(int c, int d, int r);

// 8 (1 1; 0 -1)(3 0; 0 1)(-1 1; 2 -1).
IntMatrix factorization_matrix();

// hnf(g Lambda_{c,d,r}) == hnf(L); g defaults to factorization_matrix().
bool verify_factorization(int c, int d, int r, const IntLattice2& l);
bool verify_factorization(int c, int d, int r, const IntLattice2& l, const IntMatrix& g);

}  // namespace unitshapes

#endif  // UNITSHAPES_LATTICE_LAB_HPP_
