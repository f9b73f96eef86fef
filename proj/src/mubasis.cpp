#include "canal/mubasis.hpp"

#include "canal/determinant.hpp"

#include <climits>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace canal {

namespace {

const char* kDependentMsg = "quasi-generators are linearly dependent over ℝ[t]";

UniMatrix identity_matrix(int n) {
    UniMatrix m(n, std::vector<UniPoly>(n));
    for (int i = 0; i < n; ++i) m[i][i] = UniPoly(Rational(1));
    return m;
}

// Working state of the elimination.  Row operations on W are mirrored as
// inverse column operations on U, column operations as inverse row
// operations on V, so W_original = U * W * V at every step.
struct SmithState {
    UniMatrix W;  // 2 x d
    UniMatrix U;  // 2 x 2
    UniMatrix V;  // d x d
    int d;

    void row_add(int i, int j, const UniPoly& h) {  // row_i += h * row_j
        for (int c = 0; c < d; ++c) W[i][c] += h * W[j][c];
        for (int r = 0; r < 2; ++r) U[r][j] -= h * U[r][i];
    }
    void row_swap() {
        std::swap(W[0], W[1]);
        for (int r = 0; r < 2; ++r) std::swap(U[r][0], U[r][1]);
    }
    void col_add(int i, int j, const UniPoly& h) {  // col_i += h * col_j
        for (int r = 0; r < 2; ++r) W[r][i] += h * W[r][j];
        for (int c = 0; c < d; ++c) V[j][c] -= h * V[i][c];
    }
    void col_swap(int i, int j) {
        for (int r = 0; r < 2; ++r) std::swap(W[r][i], W[r][j]);
        std::swap(V[i], V[j]);
    }
    void col_scale(int i, const Rational& c) {
        for (int r = 0; r < 2; ++r) W[r][i] = c * W[r][i];
        Rational ci = c.inv();
        for (int k = 0; k < d; ++k) V[i][k] = ci * V[i][k];
    }
};

bool proportional(const std::vector<Rational>& x, const std::vector<Rational>& y) {
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            if (x[i] * y[j] != x[j] * y[i]) return false;
    return true;
}

int first_nonzero(const std::vector<Rational>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
}

}  // namespace

SmithDecomposition smith_form(const PolyVec& A, const PolyVec& B) {
    if (A.size() != B.size() || A.size() < 2)
        throw std::invalid_argument("vector length mismatch");
    const int d = A.size();
    SmithState s{UniMatrix{A.e, B.e}, identity_matrix(2), identity_matrix(d), d};

    // First invariant factor into (0,0).
    for (;;) {
        int bi = -1, bj = -1, bd = INT_MAX;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < d; ++j)
                if (!s.W[i][j].is_zero() && s.W[i][j].degree() < bd) {
                    bi = i; bj = j; bd = s.W[i][j].degree();
                }
        if (bi < 0) throw std::domain_error(kDependentMsg);
        if (bi == 1) s.row_swap();
        if (bj > 0) s.col_swap(0, bj);

        bool clean = true;
        for (int j = 1; j < d; ++j) {
            if (s.W[0][j].is_zero()) continue;
            auto [q, r] = uni_divmod(s.W[0][j], s.W[0][0]);
            s.col_add(j, 0, -q);
            if (!s.W[0][j].is_zero()) clean = false;
        }
        if (!s.W[1][0].is_zero()) {
            auto [q, r] = uni_divmod(s.W[1][0], s.W[0][0]);
            s.row_add(1, 0, -q);
            if (!s.W[1][0].is_zero()) clean = false;
        }
        if (!clean) continue;

        // The pivot must divide everything that remains.
        bool divides_all = true;
        for (int j = 1; j < d && divides_all; ++j) {
            if (s.W[1][j].is_zero()) continue;
            auto [q, r] = uni_divmod(s.W[1][j], s.W[0][0]);
            if (!r.is_zero()) {
                s.row_add(0, 1, UniPoly(Rational(1)));
                divides_all = false;
            }
        }
        if (divides_all) break;
    }

    // Second invariant factor into (1,1).
    for (;;) {
        int bj = -1, bd = INT_MAX;
        for (int j = 1; j < d; ++j)
            if (!s.W[1][j].is_zero() && s.W[1][j].degree() < bd) {
                bj = j; bd = s.W[1][j].degree();
            }
        if (bj < 0) throw std::domain_error(kDependentMsg);
        if (bj != 1) s.col_swap(1, bj);
        bool clean = true;
        for (int j = 2; j < d; ++j) {
            if (s.W[1][j].is_zero()) continue;
            auto [q, r] = uni_divmod(s.W[1][j], s.W[1][1]);
            s.col_add(j, 1, -q);
            if (!s.W[1][j].is_zero()) clean = false;
        }
        if (clean) break;
    }

    if (s.W[0][0].degree() > 0)
        throw std::domain_error("input is p·D form, not reduced");
    s.col_scale(0, s.W[0][0].coeff(0).inv());
    s.col_scale(1, s.W[1][1].lc().inv());
    return {std::move(s.U), s.W[1][1], std::move(s.V)};
}

// Quasi-generation allows rational multiples of either generator, so a
// polynomial content in a row carries no information about the module.
static PolyVec strip_content(PolyVec v) {
    if (v.is_zero()) return v;
    UniPoly g = entries_gcd(v);
    if (g.degree() > 0)
        for (auto& p : v.e)
            if (!p.is_zero()) p = uni_exact_div(p, g);
    return v;
}

MuBasis mu_basis(const PolyVec& A, const PolyVec& B) {
    SmithDecomposition sd = smith_form(strip_content(A), strip_content(B));
    const int d = A.size();
    PolyVec a(d), b(d);
    for (int j = 0; j < d; ++j) {
        a[j] = sd.V[0][j];
        b[j] = sd.V[1][j];
    }

    // Reduce until the leading vectors are independent; the sum of row
    // degrees strictly decreases, so this terminates.
    for (;;) {
        int da = a.degree(), db = b.degree();
        auto lva = a.leading_vector();
        auto lvb = b.leading_vector();
        if (!proportional(lva, lvb)) break;
        if (da > db) {
            int i0 = first_nonzero(lvb);
            Rational c = lva[i0] / lvb[i0];
            a = a - UniPoly::monomial(c, da - db) * b;
        } else {
            int i0 = first_nonzero(lva);
            Rational c = lvb[i0] / lva[i0];
            b = b - UniPoly::monomial(c, db - da) * a;
        }
    }

    MuBasis mb;
    mb.deg_pair = {a.degree(), b.degree()};
    mb.a = std::move(a);
    mb.b = std::move(b);
    mb.plucker_gcd = entries_gcd(wedge(mb.a, mb.b));
    if (mb.plucker_gcd.degree() != 0)
        throw std::logic_error("basis certificate failed: wedge entries share a factor");
    return mb;
}

std::optional<std::pair<UniPoly, UniPoly>> module_membership(
    const PolyVec& C, const PolyVec& a, const PolyVec& b) {
    if (C.size() != a.size() || a.size() != b.size())
        throw std::invalid_argument("vector length mismatch");
    const int da = a.degree(), db = b.degree();
    const auto lva = a.leading_vector();
    const auto lvb = b.leading_vector();
    if (proportional(lva, lvb))
        throw std::invalid_argument("basis leading vectors are dependent");

    const int n = C.size();
    UniPoly h1, h2;
    PolyVec R = C;
    while (!R.is_zero()) {
        int m = R.degree();
        auto lvr = R.leading_vector();
        bool can_a = m >= da, can_b = m >= db;
        Rational alpha(0), beta(0);
        if (can_a && can_b) {
            int i1 = -1, i2 = -1;
            for (int i = 0; i < n && i1 < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (!(lva[i] * lvb[j] - lva[j] * lvb[i]).is_zero()) {
                        i1 = i; i2 = j;
                        break;
                    }
            Rational det = lva[i1] * lvb[i2] - lva[i2] * lvb[i1];
            alpha = (lvr[i1] * lvb[i2] - lvr[i2] * lvb[i1]) / det;
            beta = (lva[i1] * lvr[i2] - lva[i2] * lvr[i1]) / det;
        } else if (can_a) {
            int i0 = first_nonzero(lva);
            alpha = lvr[i0] / lva[i0];
        } else if (can_b) {
            int i0 = first_nonzero(lvb);
            beta = lvr[i0] / lvb[i0];
        } else {
            return std::nullopt;
        }
        for (int i = 0; i < n; ++i)
            if (lvr[i] != alpha * lva[i] + beta * lvb[i]) return std::nullopt;
        if (!alpha.is_zero()) {
            UniPoly ta = UniPoly::monomial(alpha, m - da);
            R = R - ta * a;
            h1 += ta;
        }
        if (!beta.is_zero()) {
            UniPoly tb = UniPoly::monomial(beta, m - db);
            R = R - tb * b;
            h2 += tb;
        }
    }
    return std::make_pair(h1, h2);
}

std::optional<std::pair<UniPoly, UniPoly>> module_membership(
    const PolyVec& C, const MuBasis& basis) {
    return module_membership(C, basis.a, basis.b);
}

int plucker_param_degree(const PolyVec& A, const PolyVec& B, uint64_t seed) {
    PolyVec P = wedge(A, B);
    if (P.is_zero()) throw std::domain_error(kDependentMsg);
    UniPoly g = entries_gcd(P);
    for (auto& p : P.e)
        if (!p.is_zero()) p = uni_exact_div(p, g);
    // Constant direction: a single generic line, traced once.
    if (P.degree() == 0) return 1;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-99, 99), den(1, 9);
    std::set<std::pair<long, long>> used;
    std::map<int, int> votes;
    const int n = P.size();
    for (int attempt = 0; attempt < 10; ++attempt) {
        Rational t0;
        for (;;) {
            t0 = Rational(num(rng), den(rng));
            auto key = std::make_pair(t0.num().get_si(), t0.den().get_si());
            if (used.insert(key).second) break;
        }
        auto v = P.eval(t0);
        if (first_nonzero(v) < 0) continue;
        UniPoly fiber;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                UniPoly m = v[j] * P[i] - v[i] * P[j];
                if (m.is_zero()) continue;
                fiber = fiber.is_zero() ? m.monic() : uni_gcd(fiber, m);
                if (fiber.degree() == 0) break;
            }
            if (!fiber.is_zero() && fiber.degree() == 0) break;
        }
        if (fiber.is_zero()) continue;
        if (++votes[fiber.degree()] == 3) return fiber.degree();
    }
    throw std::runtime_error("degenerate sampling");
}

ModuleDegreeReport degree_report(const PolyVec& A, const PolyVec& B, uint64_t seed) {
    PolyVec P = wedge(A, B);
    if (P.is_zero()) throw std::domain_error(kDependentMsg);
    ModuleDegreeReport rep;
    rep.deg_wedge = P.degree();
    rep.deg_gcd = entries_gcd(P).degree();
    rep.k = plucker_param_degree(A, B, seed);
    MuBasis mb = mu_basis(A, B);
    rep.deg_module = mb.deg_pair.first + mb.deg_pair.second;
    if (rep.deg_module != rep.deg_wedge - rep.deg_gcd)
        throw std::logic_error("module degree does not match wedge degree drop");
    if (rep.deg_module % rep.k != 0)
        throw std::logic_error("fiber degree does not divide module degree");
    rep.deg_hypersurface = rep.deg_module / rep.k;
    return rep;
}

std::vector<int> standard_vars(int d) {
    if (d < 1 || d > 6) throw std::invalid_argument("vector length mismatch");
    std::vector<int> v(d);
    for (int i = 0; i < d; ++i) v[i] = i;
    return v;
}

MultiPoly mu_resultant(const MuBasis& basis, const std::vector<int>& vars) {
    if (basis.deg_pair.first == 0 && basis.deg_pair.second == 0)
        throw std::domain_error("module defines no hypersurface");
    TPoly fa = dot_with_vars(basis.a, vars);
    TPoly fb = dot_with_vars(basis.b, vars);
    return sylvester_resultant(fa, fb, basis.deg_pair.first, basis.deg_pair.second);
}

MultiPoly mu_resultant(const MuBasis& basis) {
    return mu_resultant(basis, standard_vars(basis.a.size()));
}

}  // namespace canal
