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

#include "unitshapes/cubic_core.hpp"

#include <optional>
#include <utility>

#include "unitshapes/error.hpp"

namespace unitshapes {

OrderParams::OrderParams(BigInt a1, BigInt a2, NoCheck)
    : a1_(std::move(a1)), a2_(std::move(a2)) {
  require(a1_ >= 2 && a1_ < a2_, ErrorKind::InvalidParams,
          "need 2 <= a1 < a2, got a1=" + a1_.get_str() + " a2=" + a2_.get_str());
}

OrderParams::OrderParams(BigInt a1, BigInt a2)
    : OrderParams(std::move(a1), std::move(a2), NoCheck{}) {
  require(a1_ >= 3, ErrorKind::InvalidParams, "need a1 >= 3, got " + a1_.get_str());
}

OrderParams OrderParams::unchecked(BigInt a1, BigInt a2) {
  return OrderParams(std::move(a1), std::move(a2), NoCheck{});
}

std::string_view to_string(UnitSelector u) {
  switch (u) {
    case UnitSelector::Identity: return "1";
    case UnitSelector::B1: return "b1";
    case UnitSelector::B2: return "b2";
    case UnitSelector::B3: return "b3";
  }
  return "?";
}

BigInt unit_shift(UnitSelector u, const OrderParams& params) {
  switch (u) {
    case UnitSelector::B1: return 0;
    case UnitSelector::B2: return params.a1();
    case UnitSelector::B3: return params.a2();
    case UnitSelector::Identity: break;
  }
  fail(ErrorKind::PreconditionViolated, "the identity has no shift");
}

Ball RootEnclosure::value() const { return offset + anchor; }

Ball RootEnclosure::minus(const BigInt& shift) const {
  return offset + BigInt(anchor - shift);
}

Real RootEnclosure::lower() const { return value().lower(); }
Real RootEnclosure::upper() const { return value().upper(); }

Ball LogEmbedding::sum() const { return coords[0] + coords[1] + coords[2]; }

Real RegulatorReport::asymptotic_regulator() const {
  return y1 * y2 + y2 * y3 + y3 * y1;
}

namespace {

// f(anchor + d) written as a product of the three shifted factors, each of
// which is small or exact near its own root.
struct ShiftedCubic {
  BigInt s0, s1, s2;  // anchor, anchor - a1, anchor - a2

  ShiftedCubic(const OrderParams& p, const BigInt& anchor)
      : s0(anchor), s1(anchor - p.a1()), s2(anchor - p.a2()) {}

  Real value(const Real& d) const {
    return (d + s0) * (d + s1) * (d + s2) - Real(1L, d.precision());
  }
  Real derivative(const Real& d) const {
    const Real x0 = d + s0, x1 = d + s1, x2 = d + s2;
    return x1 * x2 + x0 * x2 + x0 * x1;
  }
};

std::optional<RootEnclosure> isolate_one(const OrderParams& params, const BigInt& anchor,
                                         long lo_offset, long hi_offset, int bits) {
  const ShiftedCubic g(params, anchor);
  Real lo(lo_offset, bits), hi(hi_offset, bits);
  const int sign_lo = g.value(lo).sign();
  const int sign_hi = g.value(hi).sign();
  require(sign_lo * sign_hi < 0, ErrorKind::PrecisionExhausted,
          "root bracket has no sign change");
  const Real outer_lo = lo, outer_hi = hi;

  const Real coarse(1e-3, bits);
  while (hi - lo > coarse) {
    const Real mid = half(lo + hi);
    const int s = g.value(mid).sign();
    if (s == 0) {
      lo = mid;
      hi = mid;
      break;
    }
    (s == sign_lo ? lo : hi) = mid;
  }

  // Safeguarded Newton inside the bracket.
  Real m = half(lo + hi);
  const Real stop = Real::pow2(-(bits - 2), bits);
  for (int it = 0; it < 4 * bits; ++it) {
    const Real gm = g.value(m);
    if (gm.is_zero()) break;
    (gm.sign() == sign_lo ? lo : hi) = m;
    const Real dm = g.derivative(m);
    Real next = dm.is_zero() ? m : m - gm / dm;
    if (!(next > lo && next < hi)) next = half(lo + hi);
    const Real step = abs(next - m);
    m = next;
    if (step <= mul_up(abs(m), stop)) break;
  }

  // Enclosure radius from the residual and a lower bound on |f'| over the
  // bracket, then a sign-change check that does not trust that bound.
  const Real d_lo = g.derivative(lo), d_hi = g.derivative(hi);
  if (d_lo.sign() * d_hi.sign() <= 0) return std::nullopt;
  Real dmin = min(abs(d_lo), abs(d_hi));
  // f' is a quadratic in x with vertex at (a1 + a2) / 3.
  Real vertex(BigInt(params.trace()), bits);
  vertex /= Real(3L, bits);
  vertex = vertex - anchor;
  if (vertex > lo && vertex < hi) {
    const Real dv = g.derivative(vertex);
    if (dv.sign() != d_lo.sign()) return std::nullopt;
    dmin = min(dmin, abs(dv));
  }
  Real residual = add_up(abs(g.value(m)), Real::pow2(-(bits - Precision::kGuardBits), bits));
  Real r = div_up(residual * 2L, dmin);
  r = max(r, mul_up(abs(m), Real::pow2(-(bits - 4), bits)));

  const Real left = sub_down(m, r), right = add_up(m, r);
  if (!(left > outer_lo && right < outer_hi)) return std::nullopt;
  if (g.value(left).sign() != sign_lo || g.value(right).sign() != sign_hi) {
    return std::nullopt;
  }
  return RootEnclosure{anchor, Ball(m, r)};
}

std::optional<RootTriple> isolate_at(const OrderParams& params, int bits) {
  // Brackets: alpha in (0, 1), alpha1 in (a1 - 1, a1), alpha2 in (a2, a2 + 1).
  auto r0 = isolate_one(params, BigInt(0), 0, 1, bits);
  auto r1 = isolate_one(params, params.a1(), -1, 0, bits);
  auto r2 = isolate_one(params, params.a2(), 0, 1, bits);
  if (!r0 || !r1 || !r2) return std::nullopt;
  return RootTriple{params, {std::move(*r0), std::move(*r1), std::move(*r2)}, bits};
}

}  // namespace

RootTriple isolate_roots(const OrderParams& params, Precision prec) {
  for (Precision p : {prec, prec.doubled()}) {
    if (auto roots = isolate_at(params, p.bits)) return std::move(*roots);
  }
  fail(ErrorKind::PrecisionExhausted,
       "root certificate failed at " + std::to_string(prec.doubled().bits) + " bits");
}

BigInt discriminant_exact(const OrderParams& params) {
  const BigInt p = -params.trace();
  const BigInt q = params.middle_coefficient();
  const BigInt r = -1;
  return 18 * p * q * r - 4 * p * p * p * r + p * p * q * q - 4 * q * q * q - 27 * r * r;
}

LogEmbedding log_embedding(const RootTriple& roots, UnitSelector u, Precision prec) {
  const int bits = std::max(prec.bits, roots.bits);
  LogEmbedding out;
  if (u == UnitSelector::Identity) {
    for (auto& c : out.coords) c = Ball::point(Real(0, bits));
    return out;
  }
  const BigInt shift = unit_shift(u, roots.params);
  for (std::size_t i = 0; i < 3; ++i) {
    out.coords[i] = log(abs(roots.roots[i].minus(shift)));
  }
  // Units have norm 1, so the coordinates must sum to zero.
  const Ball s = out.sum();
  const Real slack = add_up(s.rad, Real::pow2(prec.tolerance_exponent(), bits));
  require(abs(s.mid) <= slack, ErrorKind::PrecisionExhausted,
          "log embedding of " + std::string(to_string(u)) + " is off the trace-zero plane");
  return out;
}

UnitData analyze_units(const OrderParams& params, Precision prec) {
  RootTriple roots = isolate_roots(params, prec);
  const Precision used(roots.bits);
  const int bits = used.bits;
  LogEmbedding b1 = log_embedding(roots, UnitSelector::B1, used);
  LogEmbedding b2 = log_embedding(roots, UnitSelector::B2, used);

  RegulatorReport rep;
  rep.bits = bits;
  rep.y1 = log(Real(params.a1(), bits));
  rep.y2 = log(Real(params.a2(), bits));
  rep.y3 = log(Real(BigInt(params.a2() - params.a1()), bits));

  // Any 2x2 minor of the 3x2 matrix [psi(b1) psi(b2)] equals the regulator up
  // to sign, because both columns are orthogonal to (1, 1, 1).
  std::optional<Ball> best;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    Ball minor = abs(b1.coords[i] * b2.coords[j] - b1.coords[j] * b2.coords[i]);
    if (best) {
      const Real gap = abs(minor.mid - best->mid);
      const Real slack = add_up(add_up(minor.rad, best->rad),
                                mul_up(minor.mid, Real::pow2(used.tolerance_exponent(), bits)));
      require(gap <= slack, ErrorKind::PrecisionExhausted, "regulator minors disagree");
      if (minor.relative_radius() < best->relative_radius()) best = std::move(minor);
    } else {
      best = std::move(minor);
    }
  }
  rep.r_theta = std::move(*best);

  rep.disc = discriminant_exact(params);
  const Ball quarter = Ball::exact(rep.disc, bits) * Ball::point(Real(0.25, bits));
  rep.log_disc_quarter = log(quarter);

  const Real ld = rep.log_disc_quarter.mid;
  rep.index_bound = rep.r_theta.mid * 16L / (ld * ld);
  const Real ld_low = rep.log_disc_quarter.lower();
  require(ld_low > 0L, ErrorKind::PrecisionExhausted, "log(disc/4) is not positive");
  rep.index_bound_upper = div_up(mul_up(rep.r_theta.upper(), Real(16L, bits)),
                                 mul_down(ld_low, ld_low));
  rep.certified = rep.index_bound_upper < 2L;
  return UnitData{std::move(roots), std::move(b1), std::move(b2), std::move(rep)};
}

RegulatorReport regulator_theta(const OrderParams& params, Precision prec) {
  return analyze_units(params, prec).report;
}

RegulatorReport certify_fundamental_units(const OrderParams& params, Precision prec) {
  return regulator_theta(params, prec);
}

}  // namespace unitshapes
