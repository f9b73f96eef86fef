#pragma once

#include "canal/liegeom.hpp"
#include "canal/mubasis.hpp"
#include "canal/multipoly.hpp"
#include "canal/unipoly.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

namespace canal {

// Rational spine curve t -> (e1/e0, e2/e0, e3/e0, e4/e0) in R^{3,1}
// (three center coordinates and the radius), stored as the projective
// tuple (e0 : e1 : e2 : e3 : e4) with coprime integer-content-free
// entries, lc(e0) > 0.  n is the maximal entry degree.
struct SpineCurve {
    PolyVec tuple;  // 5 entries
    int n = 0;

    const UniPoly& e(int i) const { return tuple[i]; }
};

// Normalized spine from numerators and denominators of the four
// coordinate functions.  Errors: a zero denominator; a constant spine
// ("point spine").
SpineCurve make_spine(const std::array<UniPoly, 4>& nums,
                      const std::array<UniPoly, 4>& dens);

// Normalize a raw projective tuple.  Constant tuples are allowed here so
// degenerate configurations stay constructible for the geometry layer;
// the equation pipeline rejects them downstream.
SpineCurve spine_from_tuple(const PolyVec& tuple);

// <e, e> = e1^2 + e2^2 + e3^2 - e4^2.
UniPoly spine_norm(const SpineCurve& s);

// Lift to the Lie quadric: (<e,e>, e0^2, e0e1, e0e2, e0e3, e0e4).
PolyVec lift_spine(const SpineCurve& s);

// E = (lift)C and its t-derivative: the pencil of tangent hyperplane
// sections cutting the dual variety.
std::pair<PolyVec, PolyVec> build_E_Eprime(const SpineCurve& s);

// Five-coordinate pencil for the d-offset: y4 = -d*y0 folded into the
// second coordinate.  D' is the t-derivative of D, which is also E'
// under the same substitution.
std::pair<PolyVec, PolyVec> build_D_Dprime(const SpineCurve& s, const Rational& d);

// h1 = u*e0^2 + y0*<e,e> - 2*(e0e1*y1 + e0e2*y2 + e0e3*y3 - e0e4*y4),
// the linear family -2*E.y whose resultant with its derivative carries
// the envelope.
TPoly spine_h1(const SpineCurve& s);

// g1 = <e0*y - y0*e, e0*y - y0*e> = h1 after u -> <y,y>/y0, y_i -> y_i*y0
// cleared; quadratic family of the naive envelope.
TPoly spine_g1(const SpineCurve& s);

struct ImplicitResult {
    MultiPoly equation;                // canonical form
    std::pair<int, int> mu_degrees{0, 0};
    int k = 1;
    int degree = 0;                    // total degree of equation
    std::optional<int> wdeg;           // weighted degree, u-space equations only
};

// Implicit equation of the dual variety V: resultant of the minimal basis
// of <E, E'> dotted with (u, y0, ..., y4).  The equation is the k-th power
// of the irreducible implicit equation, where k is the Pluecker fiber
// degree of (E, E'); no root is extracted.
ImplicitResult dual_variety_equation(const SpineCurve& s, uint64_t seed);

// Same over the offset pencil (D, D') in (u, y0, y1, y2, y3).
ImplicitResult offset_dual_equation(const SpineCurve& s, const Rational& d,
                                    uint64_t seed);

// Implicit equation of the envelope Gamma: u cleared out of the dual
// equation by u -> (y1^2+y2^2+y3^2-y4^2)/y0.  The weighted degree of the
// dual equation must equal the total degree of the result.
ImplicitResult gamma_equation(const SpineCurve& s, uint64_t seed);

// Implicit equation of the canal surface at offset d:
// u -> (y1^2+y2^2+y3^2-d^2*y0^2)/y0 cleared out of the offset dual.
ImplicitResult canal_equation(const SpineCurve& s, const Rational& d,
                              uint64_t seed);

// Raw envelope resultant G = Res_t(g1, g1') at actual degrees, extraneous
// factors included.
MultiPoly naive_envelope(const SpineCurve& s);

// Same with y4 = -d*y0 substituted before eliminating t.
MultiPoly naive_envelope_d(const SpineCurve& s, const Rational& d);

// H = Res_t(h1, h1') at actual degrees.
MultiPoly h_resultant(const SpineCurve& s);

struct GeneralTypeReport {
    PolyVec w;             // w_j = e_j'*e0 - e_j*e0', j = 1..4
    int gamma = 0;         // max deg w_j
    UniPoly w_gcd;         // monic gcd of the w_j
    bool w_coprime = false;
    bool e0_squarefree = false;   // gcd(e0, e0') constant
    bool e0_coprime_norm = false; // gcd(e0, <e,e>) constant
    bool degree_match = false;    // deg e0 == n
    bool k_is_one = false;        // Pluecker fiber degree of (E, E') is 1
    bool general_type = false;
};

GeneralTypeReport general_type_check(const SpineCurve& s, uint64_t seed);

// Degree predictions without running the elimination: deg V = 4n-2 and
// deg Gamma = 6n-4 for general-type spines.  The third value is the
// conjectural deg V + deg w - deg gcd(w); reported, never asserted.
struct PredictedDegrees {
    int dual;
    int gamma;
    int conjectured_gamma;
};

PredictedDegrees predicted_degrees(const SpineCurve& s, const GeneralTypeReport& rep);

// Tangent point of the dual variety cut by the three hyperplanes a1, a2,
// a3 at parameter t0: the signed 5x5 minor vector of the stacked matrix
// (E(t0), E'(t0), a1, a2, a3) with the rational content removed.  Rank
// below 5 is the error "degenerate sample".
LiePoint dual_point_sample(const SpineCurve& s, const Rational& t0,
                           const LiePoint& a1, const LiePoint& a2,
                           const LiePoint& a3);

}  // namespace canal
