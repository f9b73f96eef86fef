#include "canal/determinant.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace canal {

namespace {

void check_square(const MpMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size())
            throw std::invalid_argument("determinant of non-square matrix");
}

}  // namespace

MultiPoly ff_determinant(const MpMatrix& input) {
    check_square(input);
    int n = static_cast<int>(input.size());
    if (n == 0) return MultiPoly::constant(Rational(1));
    MpMatrix m = input;
    int sign = 1;
    MultiPoly prev_pivot = MultiPoly::constant(Rational(1));
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) { p = i; break; }
            if (p < 0) return MultiPoly();
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                if (num.is_zero()) {
                    m[i][j] = MultiPoly();
                    continue;
                }
                auto q = exact_divide(num, prev_pivot);
                if (!q) throw std::logic_error("fraction-free elimination: inexact division");
                m[i][j] = std::move(*q);
            }
            m[i][k] = MultiPoly();
        }
        prev_pivot = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

MultiPoly minor_expansion_determinant(const MpMatrix& input) {
    check_square(input);
    int n = static_cast<int>(input.size());
    if (n == 0) return MultiPoly::constant(Rational(1));
    if (n > 30) throw std::invalid_argument("matrix dimension above expansion cap");

    // level[S] = minor of the first popcount(S) rows on column set S;
    // zero minors are not stored.
    std::unordered_map<uint32_t, MultiPoly> level;
    level.emplace(0u, MultiPoly::constant(Rational(1)));
    for (int r = 0; r < n; ++r) {
        std::unordered_map<uint32_t, MultiPoly> next;
        next.reserve(level.size() * (n - r));
        const bool row_sign = (r % 2) != 0;
        for (const auto& [mask, minor] : level) {
            for (int j = 0; j < n; ++j) {
                uint32_t bit = 1u << j;
                if (mask & bit) continue;
                const MultiPoly& entry = input[r][j];
                if (entry.is_zero()) continue;
                int pos = std::popcount(mask & (bit - 1));
                bool neg = row_sign ^ ((pos % 2) != 0);
                MultiPoly contrib = entry * minor;
                auto [it, inserted] = next.emplace(mask | bit, MultiPoly());
                if (neg) it->second -= contrib;
                else it->second += contrib;
            }
        }
        for (auto it = next.begin(); it != next.end();) {
            if (it->second.is_zero()) it = next.erase(it);
            else ++it;
        }
        level = std::move(next);
        if (level.empty()) return MultiPoly();
    }
    uint32_t full = (n == 30) ? 0x3fffffffu : ((1u << n) - 1u);
    auto it = level.find(full);
    return it == level.end() ? MultiPoly() : it->second;
}

MultiPoly sylvester_resultant(const TPoly& f, const TPoly& g, int df, int dg) {
    if (df < f.degree() || dg < g.degree())
        throw std::invalid_argument("declared degree below actual degree");
    if (df < 0 || dg < 0 || df + dg < 1)
        throw std::invalid_argument("no variable to eliminate");
    int n = df + dg;
    MpMatrix m(n, std::vector<MultiPoly>(n));
    for (int i = 0; i < dg; ++i)
        for (int c = 0; c <= df; ++c)
            m[i][i + c] = f.coeff(df - c);
    for (int j = 0; j < df; ++j)
        for (int c = 0; c <= dg; ++c)
            m[dg + j][j + c] = g.coeff(dg - c);
    return minor_expansion_determinant(m);
}

}  // namespace canal
