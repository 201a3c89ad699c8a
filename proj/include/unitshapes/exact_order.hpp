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

// Exact arithmetic in O = Z[X]/(f) and O/(m), the local multiplicative data
// of the units b1 = X, b2 = X - a1 at a prime, and the exponent congruences
// cutting out the unit lattice of a suborder Z + p1^c p2^d p3^r O.

#ifndef UNITSHAPES_EXACT_ORDER_HPP_
#define UNITSHAPES_EXACT_ORDER_HPP_

#include <array>
#include <optional>
#include <string>

#include "unitshapes/congruence.hpp"
#include "unitshapes/cubic_core.hpp"
#include "unitshapes/int_matrix.hpp"

namespace unitshapes {

// c0 + c1 X + c2 X^2.
struct OrderElement {
  BigInt c0, c1, c2;

  static OrderElement constant(const BigInt& k) { return {k, 0, 0}; }
  static OrderElement unit(UnitSelector u, const OrderParams& params);
  static OrderElement unit_inverse(UnitSelector u, const OrderParams& params);

  std::string to_string() const;
  friend bool operator==(const OrderElement&, const OrderElement&) = default;
};

// No value means reduce modulo f only.
using Modulus = std::optional<BigInt>;

// Coefficients reduced into [0, m).
OrderElement reduce_mod(const OrderElement& e, const BigInt& m);
OrderElement mul_mod(const OrderElement& x, const OrderElement& y, const OrderParams& params,
                     const Modulus& modulus = std::nullopt);
OrderElement pow_mod(const OrderElement& x, const BigInt& exponent, const OrderParams& params,
                     const Modulus& modulus = std::nullopt);

// b1^m b2^n (negative exponents allowed), optionally reduced mod `modulus`.
OrderElement unit_monomial(const OrderParams& params, const BigInt& m, const BigInt& n,
                           const Modulus& modulus = std::nullopt);

// e in Z + p^k O, i.e. c1 == c2 == 0 (mod p^k).
bool is_integer_mod(const OrderElement& e, long p, int k);

// Columns are the images of 1, X, X^2.
IntMatrix multiplication_matrix(const OrderElement& e, const OrderParams& params);

struct PrimeLocalData {
  long p = 0;
  UnitSelector base = UnitSelector::B1;
  long l = 0;  // least m >= 1 with base^m in Z + pO
  int j = 0;   // largest k with base^l in Z + p^k O

  // Least period of m -> [base^m in Z + p^k O]: 1 for k = 0, otherwise
  // l p^max(k - j, 0).
  BigInt period(int k) const;
};

PrimeLocalData local_orders(const OrderParams& params, long p, UnitSelector base);

class SuborderParams {
 public:
  // Checks the congruences a1 == 0 == a2 - 1 (mod p1^c),
  // a1 - 1 == 0 == a2 (mod p2^d), a1 - 1 == 0 == a2 - 1 (mod p3^r).
  SuborderParams(std::array<long, 3> primes, std::array<int, 3> exponents, OrderParams base);

  const std::array<long, 3>& primes() const { return primes_; }
  const std::array<int, 3>& exponents() const { return exponents_; }
  const OrderParams& base_order() const { return base_; }
  // p1^c p2^d p3^r: the suborder is Z + conductor() O.
  BigInt conductor() const;

  // Which unit governs each prime: b1 for p1 and p2, b2 for p3.
  static constexpr std::array<UnitSelector, 3> kBases = {UnitSelector::B1, UnitSelector::B1,
                                                         UnitSelector::B2};

 private:
  std::array<long, 3> primes_;
  std::array<int, 3> exponents_;
  OrderParams base_;
};

using LocalDataTriple = std::array<PrimeLocalData, 3>;

LocalDataTriple suborder_local_data(const SuborderParams& sp);

// Smallest (a1, a2) meeting the suborder congruences for all three primes at
// the given depth, with a1 >= min_a1 and a2 - a1 >= min_gap.
OrderParams congruent_params(const std::array<long, 3>& primes, int depth,
                             const BigInt& min_a1 = 3, const BigInt& min_gap = 1);

// Local data at depth 2, where (l, j) no longer depends on the parameters.
LocalDataTriple canonical_local_data(const std::array<long, 3>& primes);

// Rows (m + n, M1), (m - 2n, M2), (2m - n, M3), M_i = period of the i-th
// prime at its exponent.
CongruenceSystem exponent_congruences(const SuborderParams& sp, const LocalDataTriple& data);
CongruenceSystem exponent_congruences(const std::array<int, 3>& exponents,
                                      const LocalDataTriple& data);

}  // namespace unitshapes

#endif  // UNITSHAPES_EXACT_ORDER_HPP_
