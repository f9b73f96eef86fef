#include "canal/liegeom.hpp"

#include <stdexcept>

namespace canal {

Rational lorentz(const Point4& v, const Point4& w) {
    return v[0] * w[0] + v[1] * w[1] + v[2] * w[2] - v[3] * w[3];
}

Rational lie_product(const LiePoint& x, const LiePoint& z) {
    Rational half(1, 2);
    return half * (-(x[0] * z[1]) - x[1] * z[0]) + x[2] * z[2] + x[3] * z[3] +
           x[4] * z[4] - x[5] * z[5];
}

LiePoint apply_C(const LiePoint& x) {
    Rational half(1, 2);
    return {-half * x[1], -half * x[0], x[2], x[3], x[4], -x[5]};
}

PolyVec apply_C(const PolyVec& x) {
    if (x.size() != 6) throw std::invalid_argument("vector length mismatch");
    Rational half(1, 2);
    PolyVec r(6);
    r[0] = -half * x[1];
    r[1] = -half * x[0];
    r[2] = x[2];
    r[3] = x[3];
    r[4] = x[4];
    r[5] = -x[5];
    return r;
}

LiePoint sphere_to_lie(const Sphere& s) {
    Rational pp = s.center[0] * s.center[0] + s.center[1] * s.center[1] +
                  s.center[2] * s.center[2];
    Rational two(2);
    return {two * (pp - s.radius * s.radius), two, two * s.center[0],
            two * s.center[1], two * s.center[2], two * s.radius};
}

LiePoint plane_to_lie(const Plane& p) {
    Rational nn = p.normal[0] * p.normal[0] + p.normal[1] * p.normal[1] +
                  p.normal[2] * p.normal[2];
    if (nn != Rational(1)) throw std::invalid_argument("plane normal is not a unit vector");
    Rational two(2);
    return {two * p.offset, Rational(0), p.normal[0], p.normal[1], p.normal[2],
            Rational(1)};
}

Point4 phi(const LiePoint& y) {
    if (y[1].is_zero()) throw std::domain_error("point in tangent hyperplane T_q");
    Rational inv = y[1].inv();
    return {y[2] * inv, y[3] * inv, y[4] * inv, y[5] * inv};
}

LiePoint phi_inverse(const Point4& y) {
    return {lorentz(y, y), Rational(1), y[0], y[1], y[2], y[3]};
}

LiePoint phi_inverse_proj(const ProjPoint4& y) {
    Point4 v{y[1], y[2], y[3], y[4]};
    return {lorentz(v, v), y[0] * y[0], y[0] * y[1], y[0] * y[2], y[0] * y[3],
            y[0] * y[4]};
}

bool oriented_contact(const Sphere& a, const Sphere& b) {
    return lie_product(sphere_to_lie(a), sphere_to_lie(b)).is_zero();
}

LineType line_type(const Point4& direction) {
    int s = lorentz(direction, direction).sign();
    if (s > 0) return LineType::Spacelike;
    if (s < 0) return LineType::Timelike;
    return LineType::Lightlike;
}

Rational isotropic_cone_eval(const ProjPoint4& a, const ProjPoint4& y) {
    Point4 av{a[1], a[2], a[3], a[4]};
    Point4 yv{y[1], y[2], y[3], y[4]};
    return y[0] * y[0] * lorentz(av, av) - Rational(2) * a[0] * y[0] * lorentz(av, yv) +
           a[0] * a[0] * lorentz(yv, yv);
}

}  // namespace canal
