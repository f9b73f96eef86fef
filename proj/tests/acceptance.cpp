// Acceptance gate: one line per criterion, PASS or FAIL, exit 1 on any
// failure.  All comparisons are exact; the two printed monomial counts that
// are checked softly say so in their notes.
//
// argv[1] (or the CANAL_CLI environment variable) locates the command-line
// binary for the determinism criterion.

#define DOCTEST_CONFIG_IMPLEMENT
#include "support.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <string>
#include <sys/wait.h>
#include <utility>
#include <vector>

using namespace ct;
using namespace canal;

namespace {

int failures = 0;
std::vector<std::string> notes;
std::string cli_path;

void note(const std::string& s) { notes.push_back(s); }

bool check(bool cond, const std::string& what) {
    if (!cond) note("failed: " + what);
    return cond;
}

void criterion(int idx, const std::string& label,
               const std::function<bool()>& body) {
    notes.clear();
    bool ok = false;
    std::string err;
    try {
        ok = body();
    } catch (const std::exception& e) {
        err = e.what();
    }
    std::printf("CRITERION %d %s: %s\n", idx, label.c_str(),
                ok ? "PASS" : "FAIL");
    for (const auto& n : notes) std::printf("  note: %s\n", n.c_str());
    if (!err.empty()) std::printf("  error: %s\n", err.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::array<MultiPoly, 6> sphere_chart_images() {
    auto img = identity_images();
    img[VU] = Y1 * Y1 + Y2 * Y2 + Y3 * Y3 - Y4 * Y4;
    img[VY0] = Y0 * Y0;
    img[VY1] = Y0 * Y1;
    img[VY2] = Y0 * Y2;
    img[VY3] = Y0 * Y3;
    img[VY4] = Y0 * Y4;
    return img;
}

std::array<MultiPoly, 6> affine_restriction() {
    auto img = identity_images();
    img[VY0] = C(1);
    return img;
}

TPoly rand_tpoly(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<long> c(-9, 9);
    for (;;) {
        std::vector<MultiPoly> cs;
        for (int i = 0; i <= deg; ++i)
            cs.push_back(C(c(rng)) + C(c(rng)) * Y0 + C(c(rng)) * Y1);
        TPoly f = TPoly::from_coeffs(std::move(cs));
        if (f.degree() == deg) return f;
    }
}

PolyVec rand_vec(std::mt19937_64& rng, int dim, int deg) {
    PolyVec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = rand_poly(rng, deg, false);
    return v;
}

UniPoly umat_det(const std::vector<std::vector<UniPoly>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    UniPoly det;
    for (int j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<UniPoly>> sub(n - 1);
        for (int r = 1; r < n; ++r)
            for (int k = 0; k < n; ++k)
                if (k != j) sub[r - 1].push_back(m[r][k]);
        UniPoly term = m[0][j] * umat_det(sub);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

// Rational unit vectors from Pythagorean triples, for exact tangency setups.
std::array<Rational, 3> rational_unit(std::mt19937_64& rng) {
    static const std::array<std::array<Rational, 3>, 4> units = {{
        {Rational(1), Rational(0), Rational(0)},
        {Rational(3, 5), Rational(4, 5), Rational(0)},
        {Rational(0), Rational(5, 13), Rational(12, 13)},
        {Rational(8, 17), Rational(0), Rational(15, 17)},
    }};
    return units[std::uniform_int_distribution<int>(0, 3)(rng)];
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) cli_path = argv[1];
    else if (const char* env = std::getenv("CANAL_CLI")) cli_path = env;

    criterion(1, "ellipse spine equations", [] {
        bool ok = true;
        SpineCurve s = ellipse_spine();
        auto [E, Ep] = build_E_Eprime(s);
        MuBasis mb = mu_basis(E, Ep);
        ok &= check(mb.deg_pair == std::make_pair(3, 3),
                    "basis degree pair (3,3)");
        ImplicitResult dual = dual_variety_equation(s, 0);
        ok &= check(dual.degree == 6, "dual equation degree 6");
        ok &= check(dual.equation.num_terms() == 26,
                    "dual equation has 26 monomials");
        ImplicitResult gam = gamma_equation(s, 0);
        ok &= check(gam.degree == 8, "envelope degree 8");
        ImplicitResult off = offset_dual_equation(s, Rational(0), 0);
        MultiPoly base =
            C(16) * Y3 * Y3 + C(225) * Y0 * Y0 - C(25) * (Y0 * U);
        ok &= check(same_projective(off.equation, pow(base, 2)),
                    "offset dual equation at d=0");
        ok &= check(off.mu_degrees == std::make_pair(2, 2),
                    "offset basis degree pair (2,2)");
        ok &= check(off.k == 2, "offset fiber degree 2");
        ImplicitResult can = canal_equation(s, Rational(0), 0);
        MultiPoly env = C(25) * Y1 * Y1 + C(25) * Y2 * Y2 + C(9) * Y3 * Y3 -
                        C(225) * Y0 * Y0;
        ok &= check(same_projective(can.equation, pow(env, 2)),
                    "canal equation at d=0");
        return ok;
    });

    criterion(2, "ellipse envelope restriction factors", [] {
        bool ok = true;
        ImplicitResult gam = gamma_equation(ellipse_spine(), 0);
        auto img = affine_restriction();
        img[VY4] = MultiPoly();
        MultiPoly rest = gam.equation.substitute(img);
        MultiPoly s1 = Y1 * Y1 + Y2 * Y2 + Y3 * Y3 + C(8) * Y3 + C(16);
        MultiPoly s2 = Y1 * Y1 + Y2 * Y2 + Y3 * Y3 - C(8) * Y3 + C(16);
        MultiPoly ell =
            C(25) * Y1 * Y1 + C(25) * Y2 * Y2 + C(9) * Y3 * Y3 - C(225);
        auto q1 = exact_divide(rest, s1);
        ok &= check(q1.has_value(), "first point-sphere factor divides");
        if (q1) {
            auto q2 = exact_divide(*q1, s2);
            ok &= check(q2.has_value(), "second point-sphere factor divides");
            if (q2)
                ok &= check(same_projective(*q2, pow(ell, 2)),
                            "residual is the squared ellipsoid");
        }
        return ok;
    });

    criterion(3, "polynomial spine degrees", [] {
        bool ok = true;
        SpineCurve s = poly_spine();
        ImplicitResult dual = dual_variety_equation(s, 0);
        ok &= check(dual.wdeg.has_value() && *dual.wdeg == 5,
                    "weighted degree of the dual equation is 5");
        int m = dual.equation.num_terms();
        if (m == 54)
            note("dual equation has 54 monomials, matching the printed count");
        else
            note("dual equation has " + std::to_string(m) +
                 " monomials; printed count is 54 (soft check, discrepancy "
                 "reported, not failed)");
        ImplicitResult gam = gamma_equation(s, 0);
        ok &= check(gam.degree == 5, "envelope degree 5");
        return ok;
    });

    criterion(4, "spherical spine equations", [] {
        bool ok = true;
        SpineCurve s = viviani_spine();
        auto [E, Ep] = build_E_Eprime(s);
        MuBasis mb = mu_basis(E, Ep);
        ok &= check(mb.deg_pair == std::make_pair(3, 3),
                    "basis degree pair (3,3)");
        PolyVec R1 =
            apply_C(PolyVec{P({}), P({4, 0, 4}), P({4, 0, -4}),
                            P({0, 6, 0, -2}), P({0, 6, 0, 2}), P({4, 0, 4})});
        PolyVec R2 =
            apply_C(PolyVec{P({}), P({0, 4, 0, 4}), P({0, -4, 0, 4}),
                            P({2, 0, -6}), P({2, 0, 6}), P({0, 4, 0, 4})});
        ok &= check(module_membership(R1, mb).has_value(),
                    "first reference generator is in the computed module");
        ok &= check(module_membership(R2, mb).has_value(),
                    "second reference generator is in the computed module");
        ok &= check(module_membership(mb.a, R1, R2).has_value(),
                    "computed generator a is in the reference module");
        ok &= check(module_membership(mb.b, R1, R2).has_value(),
                    "computed generator b is in the reference module");
        ok &= check(same_module(R1, R2, mb.a, mb.b),
                    "reference and computed modules agree");
        ImplicitResult dual = dual_variety_equation(s, 0);
        ok &= check(dual.degree == 6, "dual equation degree 6");
        int m = dual.equation.num_terms();
        if (m == 58)
            note("dual equation has 58 monomials, matching the printed count");
        else
            note("dual equation has " + std::to_string(m) +
                 " monomials; printed count is 58 (soft check, discrepancy "
                 "reported, not failed)");
        ok &= check(dual.wdeg.has_value() && *dual.wdeg == 10,
                    "weighted degree of the dual equation is 10");
        ImplicitResult gam = gamma_equation(s, 0);
        ok &= check(gam.degree == 10, "envelope degree 10");
        return ok;
    });

    criterion(5, "extraneous factors of the torus envelope", [] {
        bool ok = true;
        SpineCurve s = torus_spine();
        auto aff = affine_restriction();
        MultiPoly g0 = naive_envelope_d(s, Rational(0)).substitute(aff);
        ImplicitResult can = canal_equation(s, Rational(0), 0);
        MultiPoly ft = can.equation.substitute(aff);
        MultiPoly circ = Y1 * Y1 + Y2 * Y2;
        MultiPoly extr =
            C(4) * Y1 * Y1 + C(4) * Y2 * Y2 + C(4) * Y3 * Y3 + C(8) * Y1 + C(3);
        auto q1 = exact_divide(g0, pow(circ, 2));
        ok &= check(q1.has_value(), "squared circle factor divides");
        if (q1) {
            auto q2 = exact_divide(*q1, extr);
            ok &= check(q2.has_value(), "sphere-pencil factor divides");
            if (q2)
                ok &= check(same_projective(*q2, ft),
                            "residual is the canal equation");
        }
        MultiPoly ft_ref =
            pow(Y1 * Y1 + Y2 * Y2 + Y3 * Y3 + C(3, 4), 2) - C(4) * circ;
        ok &= check(same_projective(ft, ft_ref),
                    "canal equation closed form");
        return ok;
    });

    criterion(6, "randomized property suite", [] {
        bool ok = true;
        std::mt19937_64 rng(211);

        // envelope resultant commutes with the sphere-chart substitution
        auto chart = sphere_chart_images();
        for (int i = 0; i < 20; ++i) {
            int n = i < 6 ? 1 : (i < 18 ? 2 : 3);
            SpineCurve s = random_spine(rng, n, i % 2 == 0);
            ok &= check(naive_envelope(s) == h_resultant(s).substitute(chart),
                        "substitution identity, instance " + std::to_string(i));
        }

        // resultant is multiplicative in its first argument
        for (int i = 0; i < 20; ++i) {
            TPoly f1 = rand_tpoly(rng, 2), f2 = rand_tpoly(rng, 2);
            TPoly h = rand_tpoly(rng, 3);
            ok &= check(sylvester_resultant(f1 * f2, h, 4, 3) ==
                            sylvester_resultant(f1, h, 2, 3) *
                                sylvester_resultant(f2, h, 2, 3),
                        "product rule, instance " + std::to_string(i));
        }

        // resultant against a remainder: Res(f, qf + r) = lc(f)^(m-deg r) Res(f, r)
        for (int i = 0; i < 20; ++i) {
            TPoly f = rand_tpoly(rng, 2), q = rand_tpoly(rng, 2);
            TPoly r = rand_tpoly(rng, 1);
            TPoly h = q * f + r;
            ok &= check(h.degree() == 4, "remainder setup, instance " +
                                             std::to_string(i));
            ok &= check(sylvester_resultant(f, h, 2, 4) ==
                            pow(f.lc(), 3) * sylvester_resultant(f, r, 2, 1),
                        "reduction rule, instance " + std::to_string(i));
        }

        // diagonalization reconstructs the input with unimodular cofactors
        for (int i = 0; i < 20;) {
            PolyVec A = rand_vec(rng, 4, 2), B = rand_vec(rng, 4, 2);
            SmithDecomposition sd;
            try {
                sd = smith_form(A, B);
            } catch (const std::domain_error&) {
                continue;
            }
            ++i;
            bool rec = true;
            for (int j = 0; j < 4; ++j) {
                rec = rec && A[j] == sd.U[0][0] * sd.V[0][j] +
                                         sd.U[0][1] * sd.q * sd.V[1][j];
                rec = rec && B[j] == sd.U[1][0] * sd.V[0][j] +
                                         sd.U[1][1] * sd.q * sd.V[1][j];
            }
            ok &= check(rec, "reconstruction, instance " + std::to_string(i));
            UniPoly du = sd.U[0][0] * sd.U[1][1] - sd.U[0][1] * sd.U[1][0];
            ok &= check(du.degree() == 0, "left cofactor unimodular");
            ok &= check(umat_det(sd.V).degree() == 0,
                        "right cofactor unimodular");
        }

        // reduced basis certificates and the degree identity
        for (int i = 0; i < 20;) {
            PolyVec A = rand_vec(rng, 5, 3), B = rand_vec(rng, 5, 3);
            MuBasis mb;
            try {
                mb = mu_basis(A, B);
            } catch (const std::domain_error&) {
                continue;
            }
            ++i;
            PolyVec w = wedge(mb.a, mb.b);
            ok &= check(entries_gcd(w).degree() == 0,
                        "output minors coprime, instance " + std::to_string(i));
            auto la = mb.a.leading_vector();
            auto lb = mb.b.leading_vector();
            bool indep = false;
            for (std::size_t r = 0; r < la.size() && !indep; ++r)
                for (std::size_t c = r + 1; c < la.size(); ++c)
                    if (!(la[r] * lb[c] - la[c] * lb[r]).is_zero()) {
                        indep = true;
                        break;
                    }
            ok &= check(indep, "leading vectors independent");
            PolyVec win = wedge(A, B);
            ok &= check(mb.a.degree() + mb.b.degree() ==
                            win.degree() - entries_gcd(win).degree(),
                        "degree identity, instance " + std::to_string(i));

            // membership round trip through the same basis
            UniPoly p = rand_poly(rng, 2, false), q = rand_poly(rng, 2, false);
            PolyVec Cv = p * mb.a + q * mb.b;
            auto memb = module_membership(Cv, mb);
            ok &= check(memb.has_value(), "membership accepts a combination");
            if (memb)
                ok &= check(memb->first == p && memb->second == q,
                            "membership recovers the cofactors");
        }

        // pairing of lifted points doubles the squared point distance
        for (int i = 0; i < 20; ++i) {
            Point4 v, w;
            for (auto& x : v) x = rand_rat(rng);
            for (auto& x : w) x = rand_rat(rng);
            Rational dd = (v[0] - w[0]) * (v[0] - w[0]) +
                          (v[1] - w[1]) * (v[1] - w[1]) +
                          (v[2] - w[2]) * (v[2] - w[2]) -
                          (v[3] - w[3]) * (v[3] - w[3]);
            ok &= check(Rational(-2) * lie_product(phi_inverse(v),
                                                   phi_inverse(w)) == dd,
                        "pairing identity, instance " + std::to_string(i));
        }

        // pairing vanishes exactly at oriented tangency
        for (int i = 0; i < 20; ++i) {
            Sphere s1{{rand_rat(rng), rand_rat(rng), rand_rat(rng)},
                      rand_rat(rng)};
            Sphere s2;
            if (i % 2 == 0) {
                s2.radius = rand_rat(rng);
                auto u = rational_unit(rng);
                for (int j = 0; j < 3; ++j)
                    s2.center[j] = s1.center[j] + (s1.radius - s2.radius) * u[j];
            } else {
                s2 = Sphere{{rand_rat(rng), rand_rat(rng), rand_rat(rng)},
                            rand_rat(rng)};
            }
            Rational d2(0);
            for (int j = 0; j < 3; ++j)
                d2 += (s1.center[j] - s2.center[j]) *
                      (s1.center[j] - s2.center[j]);
            Rational rr = (s1.radius - s2.radius) * (s1.radius - s2.radius);
            ok &= check(oriented_contact(s1, s2) == (d2 == rr),
                        "contact agreement, instance " + std::to_string(i));
        }
        return ok;
    });

    criterion(7, "degree laws on random general spines", [] {
        bool ok = true;
        std::mt19937_64 rng(223);
        int attempts = 0, accepted = 0;
        for (int i = 0; i < 15; ++i) {
            int n = i < 10 ? 2 : 3;
            SpineCurve s = random_general_spine(rng, n, attempts);
            ++accepted;
            ImplicitResult dual = dual_variety_equation(s, 17);
            ok &= check(dual.degree == 4 * n - 2,
                        "dual degree 4n-2, instance " + std::to_string(i));
            ImplicitResult gam = gamma_equation(s, 17);
            ok &= check(gam.degree == 6 * n - 4,
                        "envelope degree 6n-4, instance " + std::to_string(i));
            ok &= check(dual.wdeg.has_value() && *dual.wdeg == gam.degree,
                        "weighted dual degree equals envelope degree");
        }
        note("general-position sampling accepted " + std::to_string(accepted) +
             " of " + std::to_string(attempts) + " draws");
        ok &= check(10 * accepted >= 9 * attempts,
                    "at least 90% generator acceptance");
        return ok;
    });

    criterion(8, "hyperplane samples satisfy the dual equation", [] {
        bool ok = true;
        std::mt19937_64 rng(227);
        std::vector<SpineCurve> spines = {ellipse_spine(),
                                          random_spine(rng, 2, true),
                                          random_spine(rng, 2, false)};
        for (std::size_t si = 0; si < spines.size(); ++si) {
            const SpineCurve& s = spines[si];
            ImplicitResult dual = dual_variety_equation(s, 0);
            int got = 0;
            for (int tries = 0; tries < 200 && got < 20; ++tries) {
                Rational t0 = rand_rat(rng);
                LiePoint a1 = rand_point(rng), a2 = rand_point(rng),
                         a3 = rand_point(rng);
                LiePoint c;
                try {
                    c = dual_point_sample(s, t0, a1, a2, a3);
                } catch (const std::domain_error&) {
                    continue;
                }
                ++got;
                ok &= check(dual.equation.evaluate(c) == Rational(0),
                            "sample on the dual variety, spine " +
                                std::to_string(si));
            }
            ok &= check(got == 20,
                        "20 samples drawn for spine " + std::to_string(si));
        }
        return ok;
    });

    criterion(9, "byte-identical structured output", [] {
        bool ok = check(!cli_path.empty(),
                        "command-line binary path provided (argv[1] or "
                        "CANAL_CLI)");
        if (!ok) return false;
        const char* tmp = std::getenv("TMPDIR");
        std::string dir = tmp ? tmp : "/tmp";
        std::string input = dir + "/canal_acceptance_spine.json";
        {
            std::ofstream f(input);
            f << "{\"numerators\":[[0],[0],[0,8],[3,0,-3]],"
                 "\"denominators\":[[1,0,1],[1,0,1],[1,0,1],[1,0,1]]}\n";
        }
        std::string cmd = "\"" + cli_path + "\" --input \"" + input +
                          "\" --target dual,offset-dual,canal,general-type "
                          "--d 1/2 --format structured --seed 3 2>/dev/null";
        auto run_once = [&cmd]() -> std::pair<int, std::string> {
            FILE* p = popen(cmd.c_str(), "r");
            if (!p) return {-1, ""};
            std::string out;
            char buf[4096];
            std::size_t n;
            while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
            int st = pclose(p);
            return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
        };
        auto [rc1, o1] = run_once();
        auto [rc2, o2] = run_once();
        ok &= check(rc1 == 0 && rc2 == 0, "both runs exit cleanly");
        ok &= check(!o1.empty(), "output produced");
        ok &= check(o1 == o2, "outputs byte-identical");
        std::remove(input.c_str());
        return ok;
    });

    std::printf("%d of 9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
