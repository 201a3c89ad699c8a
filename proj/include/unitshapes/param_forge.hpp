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

// Parameter construction: CRT-congruent orders, multiplicative orders, the
// residue sets S_c, and Diophantine searches that move suborder shapes along
// diagonal and horospherical directions.

#ifndef UNITSHAPES_PARAM_FORGE_HPP_
#define UNITSHAPES_PARAM_FORGE_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "unitshapes/cubic_core.hpp"
#include "unitshapes/error.hpp"
#include "unitshapes/numeric.hpp"
#include "unitshapes/shape_space.hpp"

namespace unitshapes {

// a1 == 0 == a2 - 1 (mod 2^n), a1 - 1 == 0 == a2 (mod 3^n),
// a1 - 1 == 0 == a2 - 1 (mod 5^n).
struct CrtSpec {
  int n = 10;
  // Calibrated by the certificate sweep: every n in [1, 10] certifies with
  // the smallest representatives above these thresholds.
  BigInt min_a1 = 5;
  BigInt min_gap = 2;
  int max_retries = 32;
};

// Smallest a1 >= min_a1 in its class, then the smallest a2 >= a1 + min_gap;
// on an inconclusive certificate a2 moves to its next representative. Throws
// CertificateFailed once max_retries representatives have been tried.
OrderParams crt_params(const CrtSpec& spec, Precision prec = Precision());

// Least s >= 1 with base^s == 1 (mod modulus). NotCoprime otherwise.
BigInt mult_order(const BigInt& base, const BigInt& modulus);

struct ResidueSet {
  int c = 0;
  std::vector<long> elements;  // sorted {5^k mod 7 2^c}
};

// By iterating powers of 5. Requires c >= 3.
ResidueSet s_set(int c);
// {56 k + j : j in {1, 5, 9, 13, 25, 45}, 0 <= k < 2^(c-3)}.
std::vector<long> s_set_closed_form(int c);

// Least p in [p_min, budget] with some integer q >= 0 such that
// |p a - q b - t| <= tol; q is then unique when 2 tol < b. Found by a
// Euclid-style descent on the fixed-point rotation p -> p a/b mod 1, so the
// cost is logarithmic in the budget. nullopt if no such p exists.
struct LinearHit {
  BigInt p;
  BigInt q;
  Real error;  // p a - q b - t
};
std::optional<LinearHit> first_linear_hit(const Real& a, const Real& b, const Real& t,
                                          const Real& tol, const BigInt& budget,
                                          const BigInt& p_min = 0);

struct DiagonalStep {
  BigInt s1, s2;  // orders of 3 and 5 mod 7 2^(c-4)
  BigInt p, q;
  BigInt d_n, r_n;  // d + s1 p, r + s2 q
  Real error;       // p s1 log 3 - q s2 log 5 - t
};

// Least p (then q) with |p s1 log 3 - q s2 log 5 - t| <= tol and p <= budget.
// Requires c >= 4 and tol > 0; BudgetExhausted otherwise.
DiagonalStep approx_diagonal(const Real& t, int c, const BigInt& d, const BigInt& r,
                             const Real& tol, const BigInt& budget, Precision prec = Precision());

struct HorosphericalStep {
  BigInt s1, s2;  // orders of 3 and 5 mod 7 2^c
  BigInt r_f;     // least r >= 1 with 5^r == f (mod 7 2^c)
  BigInt p, q;
  BigInt d_n, r_n;  // s1 p, r_f + s2 q
  Real ratio;       // 5^r_n / (7 2^c 3^d_n)
};

// Least q (then p) with |ratio - 1| <= tol, q <= budget. NotInS unless
// f is in S_c; BudgetExhausted when no q within budget works.
HorosphericalStep approx_horospherical(long f, int c, const Real& tol, const BigInt& budget,
                                       Precision prec = Precision());

// One shape of the suborder Z + 2^c 3^d 5^r O of the CRT order at depth n.
struct SuborderShape {
  int n = 0;
  OrderParams params;
  std::array<int, 3> cdr{};
  ShapePoint shape;
};

// Precision needed to reduce a sublattice of the given index without losing
// more than the requested bits in the reduction.
Precision sublattice_precision(const BigInt& index, Precision prec);

struct ExponentBox {
  std::array<int, 2> c{1, 10}, d{1, 10}, r{1, 10};  // inclusive ranges
  std::size_t size() const;
  std::array<int, 3> at(std::size_t i) const;  // lexicographic in (c, d, r)
};

// Shapes for every (c, d, r) in the box at CRT depth spec.n, in box order;
// exponents must not exceed spec.n. Parallel over tuples with jobs threads,
// output independent of jobs.
std::vector<SuborderShape> suborder_cloud(const CrtSpec& spec, const ExponentBox& box,
                                          Precision prec, int jobs = 1);

struct TargetHit {
  SuborderShape point;
  Real distance;      // hyperbolic distance from the target to point.shape.tau
  std::string stage;  // "cloud", "diagonal" or "horospherical"
  long evaluations = 0;
};

// Carries the best point found when the search gives up.
class TargetNotReached : public Error {
 public:
  TargetNotReached(TargetHit best, const std::string& what)
      : Error(ErrorKind::BudgetExhausted, what), best_(std::move(best)) {}
  const TargetHit& best() const { return best_; }

 private:
  TargetHit best_;
};

struct TargetSearch {
  int base_depth = 10;  // cloud depth; the cloud box is [1, base_depth]^3
  long budget = 2000;   // exact suborder-shape evaluations, cloud included
  int jobs = 1;
};

// Suborder whose shape is within hyperbolic distance eps of tau (which must
// lie in the fundamental domain). Stages: nearest point of the depth-10
// cloud; diagonal moves (d, r) -> (d + s1 p, r + s2 q) at fixed c from the
// best cloud points; horospherical placement tau ~ f / (7 2^(c-4)) + i h in
// the coordinates where L = g Lambda is triangular. Candidates are ordered
// by (distance, n, c, d, r), so the result does not depend on jobs.
TargetHit approx_target(const Complex& tau, const Real& eps, const TargetSearch& search,
                        Precision prec = Precision());

}  // namespace unitshapes

#endif  // UNITSHAPES_PARAM_FORGE_HPP_
