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

// Real-analytic side of the order family O = Z[X]/(X(X-a1)(X-a2) - 1):
// certified root enclosures, log embeddings of the units alpha, alpha - a1,
// alpha - a2, the regulator of the subgroup they generate, and the
// regulator/discriminant certificate that they are fundamental.

#ifndef UNITSHAPES_CUBIC_CORE_HPP_
#define UNITSHAPES_CUBIC_CORE_HPP_

#include <array>

#include "unitshapes/numeric.hpp"

namespace unitshapes {

// f(X) = X^3 - (a1 + a2) X^2 + a1 a2 X - 1.
class OrderParams {
 public:
  // Requires 3 <= a1 < a2.
  OrderParams(BigInt a1, BigInt a2);
  // Diagnostic escape hatch: only 2 <= a1 < a2, which is what the root
  // brackets need. Certificates may legitimately fail for these.
  static OrderParams unchecked(BigInt a1, BigInt a2);

  const BigInt& a1() const { return a1_; }
  const BigInt& a2() const { return a2_; }
  BigInt trace() const { return a1_ + a2_; }
  BigInt middle_coefficient() const { return a1_ * a2_; }

  friend bool operator==(const OrderParams& x, const OrderParams& y) {
    return x.a1_ == y.a1_ && x.a2_ == y.a2_;
  }

 private:
  struct NoCheck {};
  OrderParams(BigInt a1, BigInt a2, NoCheck);
  BigInt a1_;
  BigInt a2_;
};

// The three units b1 = X, b2 = X - a1, b3 = X - a2 (b1 b2 b3 = 1), plus the
// constant 1 for diagnostics.
enum class UnitSelector { Identity, B1, B2, B3 };

std::string_view to_string(UnitSelector u);
// The integer k with u = X - k (0 for B1); Identity has no shift.
BigInt unit_shift(UnitSelector u, const OrderParams& params);

// One real root stored as anchor + offset with an exact integer anchor, so
// that differences root - a_k stay accurate even when a2 ~ 5^200.
struct RootEnclosure {
  BigInt anchor;
  Ball offset;

  Ball value() const;                       // anchor + offset
  Ball minus(const BigInt& shift) const;    // root - shift
  Real lower() const;                       // as reals; lossy for huge anchors
  Real upper() const;
};

// Roots alpha < alpha1 < alpha2 with 0 < alpha < 1, a1 - 1 < alpha1 < a1 and
// a2 < alpha2 < a2 + 1.
struct RootTriple {
  OrderParams params;
  std::array<RootEnclosure, 3> roots;
  int bits;  // precision actually used, after any escalation

  const RootEnclosure& alpha() const { return roots[0]; }
  const RootEnclosure& alpha1() const { return roots[1]; }
  const RootEnclosure& alpha2() const { return roots[2]; }
};

// psi(x) = (log|sigma_1 x|, log|sigma_2 x|, log|sigma_3 x|), ordered like the
// roots.
struct LogEmbedding {
  std::array<Ball, 3> coords;
  Ball sum() const;
};

struct RegulatorReport {
  Real y1, y2, y3;         // log a1, log a2, log(a2 - a1)
  Ball r_theta;            // regulator of <alpha, alpha - a1>
  BigInt disc;             // exact discriminant of Z[alpha]
  Ball log_disc_quarter;   // log(disc / 4)
  Real index_bound;        // 16 R / log^2(disc/4) at the midpoints
  Real index_bound_upper;  // same with R inflated and the log deflated
  bool certified = false;  // index_bound_upper < 2
  int bits = 0;

  // y1 y2 + y2 y3 + y3 y1, the leading-order value of r_theta.
  Real asymptotic_regulator() const;
};

// All of the above in one pass; shape_space reuses the embeddings.
struct UnitData {
  RootTriple roots;
  LogEmbedding psi_b1;
  LogEmbedding psi_b2;
  RegulatorReport report;
};

// Throws PrecisionExhausted if the sign-change certificate fails at both the
// requested and the doubled precision.
RootTriple isolate_roots(const OrderParams& params, Precision prec);

// 18pqr - 4p^3 r + p^2 q^2 - 4q^3 - 27r^2 for (p, q, r) = (-(a1+a2), a1 a2, -1).
BigInt discriminant_exact(const OrderParams& params);

LogEmbedding log_embedding(const RootTriple& roots, UnitSelector u, Precision prec);

UnitData analyze_units(const OrderParams& params, Precision prec);
RegulatorReport regulator_theta(const OrderParams& params, Precision prec);

// certified == false means the certificate is inconclusive, not that the
// units fail to be fundamental.
RegulatorReport certify_fundamental_units(const OrderParams& params, Precision prec);

}  // namespace unitshapes

#endif  // UNITSHAPES_CUBIC_CORE_HPP_
