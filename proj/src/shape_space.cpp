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

#include "unitshapes/shape_space.hpp"

#include <cmath>

#include "unitshapes/error.hpp"

namespace unitshapes {

Complex Complex::from_doubles(double r, double i, int bits) {
  return {Real(r, bits), Real(i, bits)};
}

Real Complex::norm() const { return re * re + im * im; }
Real Complex::abs() const { return sqrt(norm()); }

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
Complex operator/(const Complex& a, const Complex& b) {
  const Real d = b.norm();
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Frame Frame::standard(int bits) {
  const Real s2 = sqrt(Real(2L, bits)), s6 = sqrt(Real(6L, bits));
  const Real zero(0, bits), one(1, bits);
  return Frame{{one / s2, -one / s2, zero}, {one / s6, one / s6, Real(-2L, bits) / s6}};
}

Frame Frame::rotated(const Real& theta) {
  const int bits = static_cast<int>(theta.precision());
  Real s(bits), c(bits);
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  const Frame f = standard(bits);
  Frame out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.u1[i] = f.u1[i] * c + f.u2[i] * s;
    out.u2[i] = f.u2[i] * c - f.u1[i] * s;
  }
  return out;
}

Complex a_coords(const std::array<Real, 3>& v, const Frame& frame, Precision prec) {
  const Real sum = v[0] + v[1] + v[2];
  Real scale = max(max(abs(v[0]), abs(v[1])), max(abs(v[2]), Real(1L, prec.bits)));
  require(abs(sum) <= scale * Real::pow2(prec.tolerance_exponent(), prec.bits),
          ErrorKind::NotInPlane, "coordinates sum to " + sum.to_string(6));
  Real x = v[0] * frame.u1[0] + v[1] * frame.u1[1] + v[2] * frame.u1[2];
  Real y = v[0] * frame.u2[0] + v[1] * frame.u2[1] + v[2] * frame.u2[2];
  return {std::move(x), std::move(y)};
}

Complex a_coords(const LogEmbedding& v, Precision prec) {
  const Ball s = v.sum();
  require(abs(s.mid) <= add_up(s.rad, Real::pow2(prec.tolerance_exponent(), prec.bits)),
          ErrorKind::NotInPlane, "log embedding sums to " + s.mid.to_string(6));
  // The ball sum is the authoritative plane test; midpoints can sit one radius
  // off the plane, so they are projected directly.
  const Frame f = Frame::standard(prec.bits);
  const Real& v0 = v.coords[0].mid;
  const Real& v1 = v.coords[1].mid;
  const Real& v2 = v.coords[2].mid;
  Real x = v0 * f.u1[0] + v1 * f.u1[1];
  Real y = v0 * f.u2[0] + v1 * f.u2[1] + v2 * f.u2[2];
  return {std::move(x), std::move(y)};
}

Real covolume(const PlaneBasis& b) { return abs(b.w1.re * b.w2.im - b.w1.im * b.w2.re); }

Real shape_tolerance(Precision prec) { return Real::pow2(-(prec.bits / 2), prec.bits); }

namespace {

IntMatrix mat2(long a, long b, long c, long d) { return IntMatrix{{a, b}, {c, d}}; }

}  // namespace

ShapePoint reduce_shape(const PlaneBasis& b, Precision prec) {
  const int bits = prec.bits;
  const Real tol = shape_tolerance(prec);
  const Real covol = covolume(b);
  const Real n1 = b.w1.norm(), n2 = b.w2.norm();
  require(!n1.is_zero() && !n2.is_zero() && covol > sqrt(n1 * n2) * Real::pow2(-(bits / 2), bits),
          ErrorKind::DegenerateBasis, "plane basis is (numerically) dependent");

  ShapePoint out;
  out.reducer = IntMatrix::identity(2);
  Complex tau = b.w2 / b.w1;
  if (tau.im < 0L) {
    tau = b.w1 / b.w2;
    out.reducer = mat2(0, 1, 1, 0);
  }

  const double skew = std::log2((max(n1, n2) / covol).to_double());
  const long budget = 10 * (1 + static_cast<long>(std::ceil(std::fabs(skew))));
  const Real one(1L, bits), half_one(0.5, bits);
  bool settled = false;
  for (long step = 0; step < budget; ++step) {
    const BigInt k = round_to_bigint(tau.re);
    if (k != 0) {
      tau.re = tau.re - k;
      IntMatrix t = IntMatrix::identity(2);
      t(0, 1) = -k;
      out.reducer = out.reducer * t;
    }
    if (tau.norm() < one - tol) {
      tau = Complex(Real(0, bits), Real(0, bits)) - Complex(one, Real(0, bits)) / tau;
      out.reducer = out.reducer * mat2(0, -1, 1, 0);
      continue;
    }
    settled = true;
    break;
  }
  require(settled, ErrorKind::PrecisionExhausted,
          "fundamental-domain reduction did not settle in " + std::to_string(budget) + " steps");

  // Canonical boundary representatives: Re = +1/2 on the vertical sides and
  // Re >= 0 on the unit arc.
  if (tau.re < tol - half_one) {
    tau.re = tau.re + BigInt(1);
    out.reducer = out.reducer * mat2(1, 1, 0, 1);
    out.boundary_flag = true;
  } else if (abs(tau.re - half_one) <= tol) {
    out.boundary_flag = true;
  }
  if (abs(tau.norm() - one) <= tol) {
    out.boundary_flag = true;
    if (tau.re.sign() < 0) {
      tau = -(Complex(one, Real(0, bits)) / tau);
      out.reducer = out.reducer * mat2(0, -1, 1, 0);
    }
  }
  out.tau = std::move(tau);
  return out;
}

OrderEmbedding embed_order(const OrderParams& params, Precision prec) {
  UnitData units = analyze_units(params, prec);
  const Precision used(units.roots.bits);
  PlaneBasis basis{a_coords(units.psi_b1, used), a_coords(units.psi_b2, used)};
  return OrderEmbedding{params, std::move(units), std::move(basis)};
}

ShapePoint shape_of_lattice(const OrderEmbedding& emb, const IntLattice2& l, Precision prec) {
  const IntMatrix& t = l.hnf();
  const int bits = std::max(prec.bits, emb.units.roots.bits);
  auto r = [bits](const BigInt& v) { return Real(v, bits); };
  const Complex& w1 = emb.basis.w1;
  const Complex& w2 = emb.basis.w2;
  PlaneBasis b{w1 * r(t(0, 0)) + w2 * r(t(1, 0)), w1 * r(t(0, 1)) + w2 * r(t(1, 1))};
  return reduce_shape(b, Precision(bits));
}

ShapePoint shape_of_order(const OrderParams& params, Precision prec) {
  const OrderEmbedding emb = embed_order(params, prec);
  require(emb.certified(), ErrorKind::NotCertified,
          "fundamental units not certified for a1=" + params.a1().get_str() +
              " a2=" + params.a2().get_str());
  return reduce_shape(emb.basis, Precision(emb.units.roots.bits));
}

ShapePoint shape_of_suborder(const OrderParams& params, const SuborderParams& sp,
                             const IntLattice2& l, Precision prec) {
  require(sp.base_order() == params, ErrorKind::PreconditionViolated,
          "suborder parameters refer to a different order");
  const OrderEmbedding emb = embed_order(params, prec);
  require(emb.certified(), ErrorKind::NotCertified,
          "fundamental units not certified for a1=" + params.a1().get_str() +
              " a2=" + params.a2().get_str());
  return shape_of_lattice(emb, l, prec);
}

Real hyperbolic_distance(const Complex& z, const Complex& w) {
  require(z.im > 0L && w.im > 0L, ErrorKind::NotInUpperHalfPlane,
          "hyperbolic distance needs Im > 0");
  // 2 asinh(|z - w| / (2 sqrt(Im z Im w))), the cancellation-free form of
  // acosh(1 + |z - w|^2 / (2 Im z Im w)).
  const Real q = (z - w).abs() / (sqrt(z.im * w.im) * 2L);
  return asinh(q) * 2L;
}

std::pair<AsymptoticShape, ShapePoint> asymptotic_shape(const Real& lambda, Precision prec) {
  const int bits = prec.bits;
  require(lambda > 0L && lambda < 1L, ErrorKind::PreconditionViolated, "need 0 < lambda < 1");
  const Real one(1L, bits);
  AsymptoticShape a;
  a.lambda = lambda;
  a.v1 = {-one - lambda, lambda, one};
  a.v2 = {lambda, -one - lambda, one};
  a.cos_angle = Real(3L, bits) / ((one + lambda + lambda * lambda) * 2L) - one;
  const Frame f = Frame::standard(bits);
  PlaneBasis b{a_coords(a.v1, f, prec), a_coords(a.v2, f, prec)};
  ShapePoint s = reduce_shape(b, prec);
  return {std::move(a), std::move(s)};
}

Real distance_to_arc(const Complex& tau, Precision prec) {
  const int bits = prec.bits;
  const Real pi = Real::pi(bits);
  Real lo = pi / Real(3L, bits), hi = pi * 2L / Real(3L, bits);
  auto f = [&](const Real& theta) {
    Real s(bits), c(bits);
    mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
    return hyperbolic_distance(tau, Complex(c, s));
  };
  const Real invphi = (sqrt(Real(5L, bits)) - 1L) / Real(2L, bits);
  const Real tol = shape_tolerance(prec);
  Real x1 = hi - (hi - lo) * invphi, x2 = lo + (hi - lo) * invphi;
  Real f1 = f(x1), f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - (hi - lo) * invphi;
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + (hi - lo) * invphi;
      f2 = f(x2);
    }
  }
  return min(min(f1, f2), min(f(lo), f(hi)));
}

Real distance_to_arc(const ShapePoint& s, Precision prec) { return distance_to_arc(s.tau, prec); }

}  // namespace unitshapes
