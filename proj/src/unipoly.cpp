#include "canal/unipoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace canal {

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::from_coeffs(std::vector<Rational> cs) {
    UniPoly p;
    p.c_ = std::move(cs);
    p.trim();
    return p;
}

UniPoly UniPoly::from_coeffs(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    v.reserve(cs.size());
    for (long x : cs) v.emplace_back(x);
    return from_coeffs(std::move(v));
}

UniPoly UniPoly::var() { return monomial(Rational(1), 1); }

UniPoly UniPoly::monomial(const Rational& c, int k) {
    UniPoly p;
    if (!c.is_zero()) {
        p.c_.assign(k + 1, Rational(0));
        p.c_[k] = c;
    }
    return p;
}

void UniPoly::declare_formal(int d) {
    if (d < degree()) throw std::invalid_argument("formal degree below actual degree");
    formal_degree = d;
}

const Rational& UniPoly::coeff(int k) const {
    static const Rational zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[k];
}

const Rational& UniPoly::lc() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    UniPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
    if (s.is_zero()) return UniPoly();
    UniPoly r(p);
    for (auto& c : r.c_) c *= s;
    return r;
}

UniPoly UniPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    UniPoly r;
    r.c_.assign(c_.size() + k, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

UniPoly UniPoly::derivative() const {
    UniPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    r.trim();
    return r;
}

Rational UniPoly::eval(const Rational& t) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= t;
        acc += c_[i];
    }
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) throw std::domain_error("monic form of zero polynomial");
    return lc().inv() * *this;
}

Rational UniPoly::content() const {
    Rational g(0);
    for (const auto& c : c_) g = rat_gcd(g, c);
    return g;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeff(k);
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = a.is_one() && k > 0;
        if (!unit) os << a.str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    UniPoly q, r(f);
    int dg = g.degree();
    const Rational glc_inv = g.lc().inv();
    while (!r.is_zero() && r.degree() >= dg) {
        int k = r.degree() - dg;
        Rational c = r.lc() * glc_inv;
        q += UniPoly::monomial(c, k);
        r -= UniPoly::monomial(c, k) * g;
    }
    return {q, r};
}

UniPoly uni_exact_div(const UniPoly& f, const UniPoly& g) {
    auto [q, r] = uni_divmod(f, g);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

UniPoly uni_gcd(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd of zero polynomials");
    UniPoly a(f), b(g);
    while (!b.is_zero()) {
        auto [q, r] = uni_divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly uni_lcm(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) return UniPoly();
    return uni_exact_div(f * g, uni_gcd(f, g)).monic();
}

bool PolyVec::is_zero() const {
    for (const auto& p : e)
        if (!p.is_zero()) return false;
    return true;
}

int PolyVec::degree() const {
    int d = -1;
    for (const auto& p : e) d = std::max(d, p.degree());
    return d;
}

PolyVec PolyVec::derivative() const {
    PolyVec r(size());
    for (int i = 0; i < size(); ++i) r.e[i] = e[i].derivative();
    return r;
}

std::vector<Rational> PolyVec::coeff_vector(int k) const {
    std::vector<Rational> v;
    v.reserve(e.size());
    for (const auto& p : e) v.push_back(p.coeff(k));
    return v;
}

std::vector<Rational> PolyVec::leading_vector() const {
    if (is_zero()) throw std::domain_error("leading vector of zero vector");
    return coeff_vector(degree());
}

std::vector<Rational> PolyVec::eval(const Rational& t) const {
    std::vector<Rational> v;
    v.reserve(e.size());
    for (const auto& p : e) v.push_back(p.eval(t));
    return v;
}

PolyVec operator+(const PolyVec& a, const PolyVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    PolyVec r(a.size());
    for (int i = 0; i < a.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

PolyVec operator-(const PolyVec& a, const PolyVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    PolyVec r(a.size());
    for (int i = 0; i < a.size(); ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

PolyVec operator*(const UniPoly& h, const PolyVec& v) {
    PolyVec r(v.size());
    for (int i = 0; i < v.size(); ++i) r.e[i] = h * v.e[i];
    return r;
}

PolyVec wedge(const PolyVec& a, const PolyVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    int d = a.size();
    PolyVec w;
    w.e.reserve(d * (d - 1) / 2);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            w.e.push_back(a[i] * b[j] - a[j] * b[i]);
    return w;
}

UniPoly entries_gcd(const PolyVec& v) {
    UniPoly g;
    for (const auto& p : v.e) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p.monic() : uni_gcd(g, p);
        if (g.degree() == 0) return g;  // already constant 1
    }
    if (g.is_zero()) throw std::domain_error("gcd of zero polynomials");
    return g;
}

}  // namespace canal
