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

// Plane lattices in the trace-zero plane and their shapes: points of the
// upper half plane reduced into the standard fundamental domain of SL(2,Z).

#ifndef UNITSHAPES_SHAPE_SPACE_HPP_
#define UNITSHAPES_SHAPE_SPACE_HPP_

#include <array>
#include <utility>

#include "unitshapes/cubic_core.hpp"
#include "unitshapes/exact_order.hpp"
#include "unitshapes/int_matrix.hpp"
#include "unitshapes/lattice_lab.hpp"

namespace unitshapes {

struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  static Complex from_doubles(double r, double i, int bits);

  Real norm() const;  // |z|^2
  Real abs() const;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& s);
Complex operator-(const Complex& a);

// Orthonormal frame of the plane x + y + z = 0.
struct Frame {
  std::array<Real, 3> u1;
  std::array<Real, 3> u2;

  // u1 = (1, -1, 0)/sqrt 2, u2 = (1, 1, -2)/sqrt 6.
  static Frame standard(int bits);
  // The standard frame rotated by theta.
  static Frame rotated(const Real& theta);
};

// Coordinates in the frame written as one complex number x + iy. Throws
// NotInPlane if the entries do not sum to zero within the working tolerance.
Complex a_coords(const std::array<Real, 3>& v, const Frame& frame, Precision prec);
Complex a_coords(const LogEmbedding& v, Precision prec);

struct PlaneBasis {
  Complex w1;
  Complex w2;
};

// |Im(conj(w1) w2)|
Real covolume(const PlaneBasis& b);

struct ShapePoint {
  Complex tau;
  // (w1', w2') = (w1, w2) W with tau = w2'/w1'; det W = +-1.
  IntMatrix reducer;
  bool boundary_flag = false;
};

// Distances below this are treated as "on the boundary"; also the agreement
// level promised for equivalent bases.
Real shape_tolerance(Precision prec);

// Throws DegenerateBasis for dependent vectors and PrecisionExhausted when
// the reduction does not settle within its step budget.
ShapePoint reduce_shape(const PlaneBasis& b, Precision prec);

// Everything needed to evaluate shapes of many sublattices of one order.
struct OrderEmbedding {
  OrderParams params;
  UnitData units;
  PlaneBasis basis;  // a_coords of psi(b1), psi(b2)
  bool certified() const { return units.report.certified; }
};

OrderEmbedding embed_order(const OrderParams& params, Precision prec);

// Shape of the lattice spanned by B T, where B = (w1 w2) and T = L.hnf().
ShapePoint shape_of_lattice(const OrderEmbedding& emb, const IntLattice2& l, Precision prec);

// NotCertified unless the fundamental-unit certificate holds.
ShapePoint shape_of_order(const OrderParams& params, Precision prec);
ShapePoint shape_of_suborder(const OrderParams& params, const SuborderParams& sp,
                             const IntLattice2& l, Precision prec);

// NotInUpperHalfPlane unless both imaginary parts are positive.
Real hyperbolic_distance(const Complex& z, const Complex& w);

struct AsymptoticShape {
  Real lambda;
  std::array<Real, 3> v1;  // (-1 - lambda, lambda, 1)
  std::array<Real, 3> v2;  // (lambda, -1 - lambda, 1)
  Real cos_angle;          // -1 + 3 / (2 (1 + lambda + lambda^2))
};

std::pair<AsymptoticShape, ShapePoint> asymptotic_shape(const Real& lambda, Precision prec);

// Hyperbolic distance from tau to the arc |z| = 1, |Re z| <= 1/2, by
// golden-section search over the arc angle.
Real distance_to_arc(const Complex& tau, Precision prec);
Real distance_to_arc(const ShapePoint& s, Precision prec);

}  // namespace unitshapes

#endif  // UNITSHAPES_SHAPE_SPACE_HPP_
