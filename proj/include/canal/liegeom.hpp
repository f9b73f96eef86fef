#pragma once

#include "canal/rational.hpp"
#include "canal/unipoly.hpp"

#include <array>

namespace canal {

// Homogeneous coordinates (u : y0 : y1 : y2 : y3 : y4) of a point in the
// ambient P^5 of the Lie quadric -u*y0 + y1^2 + y2^2 + y3^2 - y4^2 = 0.
using LiePoint = std::array<Rational, 6>;

// Point of R^{3,1} with the Lorentz form <v,w> = v1w1 + v2w2 + v3w3 - v4w4.
using Point4 = std::array<Rational, 4>;

// Projective point (y0 : y1 : y2 : y3 : y4) of P^4.
using ProjPoint4 = std::array<Rational, 5>;

struct Sphere {
    std::array<Rational, 3> center;
    Rational radius;  // signed: orientation by sign
};

struct Plane {
    std::array<Rational, 3> normal;  // must satisfy n.n = 1 exactly
    Rational offset;                 // n.x = offset
};

Rational lorentz(const Point4& v, const Point4& w);

// Bilinear form of the Lie quadric:
// [x,z] = (-x1*z2 - x2*z1)/2 + x3*z3 + x4*z4 + x5*z5 - x6*z6
// (1-based indices; x1 = u-coordinate).
Rational lie_product(const LiePoint& x, const LiePoint& z);

// The symmetric matrix of the form: x |-> xC with
// xC = (-x2/2, -x1/2, x3, x4, x5, -x6), so that [x,z] = (xC).z.
LiePoint apply_C(const LiePoint& x);
PolyVec apply_C(const PolyVec& x);

LiePoint sphere_to_lie(const Sphere& s);
// Validates n.n = 1 exactly; throws std::invalid_argument otherwise.
LiePoint plane_to_lie(const Plane& p);

// Chart of the Lie quadric away from y0 = 0: (y1/y0, ..., y4/y0).
// y0 = 0 is the error "point in tangent hyperplane T_q".
Point4 phi(const LiePoint& y);

// Inverse chart: y |-> (<y,y>, 1, y1, y2, y3, y4), a point of the quadric.
LiePoint phi_inverse(const Point4& y);

// Projective inverse chart applied to (y0 : y) in P^4:
// (<y,y> : y0^2 : y0*y1 : y0*y2 : y0*y3 : y0*y4).
LiePoint phi_inverse_proj(const ProjPoint4& y);

// Spheres (points of the quadric) are in oriented contact iff their Lie
// product vanishes; for two proper spheres this is |p1-p2|^2 = (r1-r2)^2.
bool oriented_contact(const Sphere& a, const Sphere& b);

// Sign of the Lorentz self-product of a direction in R^{3,1}.
enum class LineType { Timelike, Lightlike, Spacelike };
LineType line_type(const Point4& direction);

// Isotropic cone polynomial of the pencil through a = (a0 : a1..a4):
// g(a, y) = y0^2 <a,a> - 2 a0 y0 <a,y> + a0^2 <y,y>, vector parts Lorentz.
Rational isotropic_cone_eval(const ProjPoint4& a, const ProjPoint4& y);

}  // namespace canal
