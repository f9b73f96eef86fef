#include "canal/pipeline.hpp"

#include "canal/determinant.hpp"

#include <stdexcept>

namespace canal {

namespace {

// Divide by the entry gcd and the rational content, sign so lc(e0) > 0.
PolyVec normalize_tuple(PolyVec v) {
    if (v.size() != 5) throw std::invalid_argument("vector length mismatch");
    if (v[0].is_zero()) throw std::invalid_argument("zero denominator");
    UniPoly g = entries_gcd(v);
    if (g.degree() > 0)
        for (auto& p : v.e)
            if (!p.is_zero()) p = uni_exact_div(p, g);
    Rational content(0);
    for (const auto& p : v.e) content = rat_gcd(content, p.content());
    if (v[0].lc().sign() < 0) content = -content;
    Rational ci = content.inv();
    for (auto& p : v.e) p = ci * p;
    return v;
}

MultiPoly lorentz_square_y() {  // <y, y> on (y1, y2, y3, y4)
    MultiPoly q;
    q += MultiPoly::var(VY1, 2);
    q += MultiPoly::var(VY2, 2);
    q += MultiPoly::var(VY3, 2);
    q -= MultiPoly::var(VY4, 2);
    return q;
}

Rational rational_det(std::vector<std::vector<Rational>> m) {
    const int n = static_cast<int>(m.size());
    Rational det(1);
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (!m[i][k].is_zero()) { p = i; break; }
        if (p < 0) return Rational(0);
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        det *= m[k][k];
        Rational inv = m[k][k].inv();
        for (int i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            Rational f = m[i][k] * inv;
            for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return sign < 0 ? -det : det;
}

}  // namespace

SpineCurve make_spine(const std::array<UniPoly, 4>& nums,
                      const std::array<UniPoly, 4>& dens) {
    for (const auto& d : dens)
        if (d.is_zero()) throw std::invalid_argument("zero denominator");
    UniPoly e0(Rational(1));
    for (const auto& d : dens) e0 = uni_lcm(e0, d);
    PolyVec tuple(5);
    tuple[0] = e0;
    for (int i = 0; i < 4; ++i)
        tuple[i + 1] = nums[i] * uni_exact_div(e0, dens[i]);
    SpineCurve s = spine_from_tuple(tuple);
    if (s.n == 0) throw std::domain_error("point spine");
    return s;
}

SpineCurve spine_from_tuple(const PolyVec& tuple) {
    SpineCurve s;
    s.tuple = normalize_tuple(tuple);
    s.n = s.tuple.degree();
    return s;
}

UniPoly spine_norm(const SpineCurve& s) {
    return s.e(1) * s.e(1) + s.e(2) * s.e(2) + s.e(3) * s.e(3) - s.e(4) * s.e(4);
}

PolyVec lift_spine(const SpineCurve& s) {
    PolyVec v(6);
    v[0] = spine_norm(s);
    v[1] = s.e(0) * s.e(0);
    for (int i = 1; i <= 4; ++i) v[i + 1] = s.e(0) * s.e(i);
    return v;
}

std::pair<PolyVec, PolyVec> build_E_Eprime(const SpineCurve& s) {
    PolyVec E = apply_C(lift_spine(s));
    PolyVec Ep = E.derivative();
    return {std::move(E), std::move(Ep)};
}

std::pair<PolyVec, PolyVec> build_D_Dprime(const SpineCurve& s, const Rational& d) {
    Rational half(1, 2);
    PolyVec D(5);
    D[0] = -half * (s.e(0) * s.e(0));
    D[1] = -half * spine_norm(s) + d * (s.e(0) * s.e(4));
    D[2] = s.e(0) * s.e(1);
    D[3] = s.e(0) * s.e(2);
    D[4] = s.e(0) * s.e(3);
    PolyVec Dp = D.derivative();
    return {std::move(D), std::move(Dp)};
}

TPoly spine_h1(const SpineCurve& s) {
    auto [E, Ep] = build_E_Eprime(s);
    return MultiPoly::constant(Rational(-2)) * dot_with_vars(E, standard_vars(6));
}

TPoly spine_g1(const SpineCurve& s) {
    TPoly g = lorentz_square_y() * TPoly::lift(s.e(0) * s.e(0));
    const Rational sig[4] = {Rational(1), Rational(1), Rational(1), Rational(-1)};
    for (int i = 1; i <= 4; ++i) {
        MultiPoly m = MultiPoly::term(Rational(-2) * sig[i - 1],
                                      Monomial::var(VY0) * Monomial::var(VY0 + i));
        g += m * TPoly::lift(s.e(0) * s.e(i));
    }
    g += MultiPoly::var(VY0, 2) * TPoly::lift(spine_norm(s));
    return g;
}

namespace {

ImplicitResult pencil_equation(const PolyVec& A, const PolyVec& B, uint64_t seed) {
    MuBasis mb = mu_basis(A, B);
    mb.k = plucker_param_degree(A, B, seed);
    ImplicitResult r;
    r.equation = canonical_form(mu_resultant(mb));
    r.mu_degrees = mb.deg_pair;
    r.k = *mb.k;
    r.degree = r.equation.total_degree();
    r.wdeg = weighted_degree(r.equation);
    return r;
}

}  // namespace

ImplicitResult dual_variety_equation(const SpineCurve& s, uint64_t seed) {
    auto [E, Ep] = build_E_Eprime(s);
    return pencil_equation(E, Ep, seed);
}

ImplicitResult offset_dual_equation(const SpineCurve& s, const Rational& d,
                                    uint64_t seed) {
    auto [D, Dp] = build_D_Dprime(s, d);
    return pencil_equation(D, Dp, seed);
}

ImplicitResult gamma_equation(const SpineCurve& s, uint64_t seed) {
    ImplicitResult r = dual_variety_equation(s, seed);
    MultiPoly g = canonical_form(substitute_u(r.equation, USubst::gamma()));
    if (*r.wdeg != g.total_degree())
        throw std::logic_error("weighted degree mismatch after clearing u");
    r.equation = std::move(g);
    r.degree = r.equation.total_degree();
    r.wdeg.reset();
    return r;
}

ImplicitResult canal_equation(const SpineCurve& s, const Rational& d,
                              uint64_t seed) {
    ImplicitResult r = offset_dual_equation(s, d, seed);
    r.equation = canonical_form(substitute_u(r.equation, USubst::offset(d)));
    r.degree = r.equation.total_degree();
    r.wdeg.reset();
    return r;
}

MultiPoly naive_envelope(const SpineCurve& s) {
    TPoly g1 = spine_g1(s);
    if (g1.degree() < 1) throw std::domain_error("point spine");
    TPoly g2 = g1.derivative();
    return sylvester_resultant(g1, g2, g1.degree(), g2.degree());
}

MultiPoly naive_envelope_d(const SpineCurve& s, const Rational& d) {
    auto images = identity_images();
    images[VY4] = Rational(-1) * d * MultiPoly::var(VY0);
    TPoly g1 = spine_g1(s).map_coeffs(images);
    if (g1.degree() < 1) throw std::domain_error("point spine");
    TPoly g2 = g1.derivative();
    return sylvester_resultant(g1, g2, g1.degree(), g2.degree());
}

MultiPoly h_resultant(const SpineCurve& s) {
    TPoly h1 = spine_h1(s);
    if (h1.degree() < 1) throw std::domain_error("point spine");
    TPoly h2 = h1.derivative();
    return sylvester_resultant(h1, h2, h1.degree(), h2.degree());
}

GeneralTypeReport general_type_check(const SpineCurve& s, uint64_t seed) {
    GeneralTypeReport rep;
    rep.w = PolyVec(4);
    const UniPoly& e0 = s.e(0);
    UniPoly e0p = e0.derivative();
    for (int j = 1; j <= 4; ++j)
        rep.w[j - 1] = s.e(j).derivative() * e0 - s.e(j) * e0p;
    if (rep.w.is_zero()) throw std::domain_error("point spine");
    rep.gamma = rep.w.degree();
    rep.w_gcd = entries_gcd(rep.w);
    rep.w_coprime = rep.w_gcd.degree() == 0;
    rep.e0_squarefree =
        e0.degree() == 0 || uni_gcd(e0, e0p).degree() == 0;
    rep.e0_coprime_norm = uni_gcd(e0, spine_norm(s)).degree() == 0;
    rep.degree_match = e0.degree() == s.n;
    auto [E, Ep] = build_E_Eprime(s);
    rep.k_is_one = plucker_param_degree(E, Ep, seed) == 1;
    rep.general_type = rep.w_coprime && rep.e0_squarefree && rep.e0_coprime_norm &&
                       rep.degree_match && rep.k_is_one;
    return rep;
}

PredictedDegrees predicted_degrees(const SpineCurve& s, const GeneralTypeReport& rep) {
    PredictedDegrees p;
    p.dual = 4 * s.n - 2;
    p.gamma = 6 * s.n - 4;
    p.conjectured_gamma = p.dual + rep.gamma - rep.w_gcd.degree();
    return p;
}

LiePoint dual_point_sample(const SpineCurve& s, const Rational& t0,
                           const LiePoint& a1, const LiePoint& a2,
                           const LiePoint& a3) {
    auto [E, Ep] = build_E_Eprime(s);
    std::vector<std::vector<Rational>> rows;
    rows.push_back(E.eval(t0));
    rows.push_back(Ep.eval(t0));
    for (const LiePoint* a : {&a1, &a2, &a3})
        rows.emplace_back(a->begin(), a->end());

    LiePoint c;
    bool all_zero = true;
    for (int drop = 0; drop < 6; ++drop) {
        std::vector<std::vector<Rational>> minor(5, std::vector<Rational>());
        for (int r = 0; r < 5; ++r)
            for (int j = 0; j < 6; ++j)
                if (j != drop) minor[r].push_back(rows[r][j]);
        Rational det = rational_det(std::move(minor));
        if (drop % 2 == 1) det = -det;
        if (!det.is_zero()) all_zero = false;
        c[drop] = det;
    }
    if (all_zero) throw std::domain_error("degenerate sample");
    Rational content(0);
    for (const auto& x : c) content = rat_gcd(content, x);
    Rational ci = content.inv();
    for (auto& x : c) x *= ci;
    return c;
}

}  // namespace canal
