#include "canal/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace canal {

const char* const kVarNames[6] = {"u", "y0", "y1", "y2", "y3", "y4"};

Monomial Monomial::var(int v, int e) {
    if (v < 0 || v > 5) throw std::invalid_argument("variable index out of range");
    if (e < 0 || e > 255) throw std::invalid_argument("exponent out of range");
    Monomial m;
    m.key = (static_cast<uint64_t>(e) << 56) | (static_cast<uint64_t>(e) << (8 * (6 - v)));
    return m;
}

Monomial Monomial::from_exps(const std::array<int, 6>& es) {
    Monomial m;
    int deg = 0;
    for (int v = 0; v < 6; ++v) {
        if (es[v] < 0 || es[v] > 255) throw std::invalid_argument("exponent out of range");
        deg += es[v];
        m.key |= static_cast<uint64_t>(es[v]) << (8 * (6 - v));
    }
    if (deg > 255) throw std::invalid_argument("total degree out of range");
    m.key |= static_cast<uint64_t>(deg) << 56;
    return m;
}

std::array<int, 6> Monomial::exps() const {
    std::array<int, 6> es;
    for (int v = 0; v < 6; ++v) es[v] = exp(v);
    return es;
}

bool Monomial::divides(const Monomial& m) const {
    for (int v = 0; v < 6; ++v)
        if (exp(v) > m.exp(v)) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    if (total_degree() + m.total_degree() > 255)
        throw std::overflow_error("monomial degree overflow");
    Monomial r;
    r.key = key + m.key;
    return r;
}

Monomial Monomial::div(const Monomial& m) const {
    Monomial r;
    r.key = key - m.key;
    return r;
}

MultiPoly MultiPoly::constant(const Rational& c) {
    MultiPoly p;
    if (!c.is_zero()) p.t_.emplace(Monomial::one().key, c);
    return p;
}

MultiPoly MultiPoly::var(int v, int e) {
    MultiPoly p;
    if (e == 0) return constant(Rational(1));
    p.t_.emplace(Monomial::var(v, e).key, Rational(1));
    return p;
}

MultiPoly MultiPoly::term(const Rational& c, const Monomial& m) {
    MultiPoly p;
    if (!c.is_zero()) p.t_.emplace(m.key, c);
    return p;
}

int MultiPoly::total_degree() const {
    if (t_.empty()) return -1;
    return Monomial{t_.begin()->first}.total_degree();
}

Monomial MultiPoly::leading_monomial() const {
    if (t_.empty()) throw std::domain_error("leading monomial of zero polynomial");
    return Monomial{t_.begin()->first};
}

const Rational& MultiPoly::leading_coeff() const {
    if (t_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return t_.begin()->second;
}

const Rational& MultiPoly::coeff(const Monomial& m) const {
    static const Rational zero(0);
    auto it = t_.find(m.key);
    return it == t_.end() ? zero : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(m.key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [k, c] : o.t_) add_term(Monomial{k}, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [k, c] : o.t_) add_term(Monomial{k}, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    // Iterate the smaller factor on the outside: fewer passes over the map.
    const MultiPoly& s = a.num_terms() <= b.num_terms() ? a : b;
    const MultiPoly& l = a.num_terms() <= b.num_terms() ? b : a;
    for (const auto& [ks, cs] : s.t_) {
        for (const auto& [kl, cl] : l.t_) {
            Monomial m = Monomial{ks} * Monomial{kl};
            r.add_term(m, cs * cl);
        }
    }
    return r;
}

MultiPoly operator*(const Rational& s, const MultiPoly& p) {
    MultiPoly r;
    if (s.is_zero()) return r;
    r.t_ = p.t_;
    for (auto& [k, c] : r.t_) c *= s;
    return r;
}

int MultiPoly::max_exp(int v) const {
    int m = 0;
    for (const auto& [k, c] : t_) m = std::max(m, Monomial{k}.exp(v));
    return m;
}

Rational MultiPoly::content() const {
    Rational g(0);
    for (const auto& [k, c] : t_) g = rat_gcd(g, c);
    return g;
}

Rational MultiPoly::evaluate(const std::array<Rational, 6>& x) const {
    // Per-variable power cache keyed by exponent.
    std::array<std::vector<Rational>, 6> powers;
    for (int v = 0; v < 6; ++v) powers[v].push_back(Rational(1));
    auto power = [&](int v, int e) -> const Rational& {
        auto& ps = powers[v];
        while (static_cast<int>(ps.size()) <= e) ps.push_back(ps.back() * x[v]);
        return ps[e];
    };
    Rational acc(0);
    for (const auto& [k, c] : t_) {
        Monomial m{k};
        Rational term(c);
        for (int v = 0; v < 6; ++v) {
            int e = m.exp(v);
            if (e) term *= power(v, e);
        }
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::array<MultiPoly, 6>& images) const {
    std::array<std::vector<MultiPoly>, 6> powers;
    for (int v = 0; v < 6; ++v) powers[v].push_back(MultiPoly::constant(Rational(1)));
    auto power = [&](int v, int e) -> const MultiPoly& {
        auto& ps = powers[v];
        while (static_cast<int>(ps.size()) <= e) ps.push_back(ps.back() * images[v]);
        return ps[e];
    };
    MultiPoly acc;
    for (const auto& [k, c] : t_) {
        Monomial m{k};
        MultiPoly term = MultiPoly::constant(c);
        for (int v = 0; v < 6; ++v) {
            int e = m.exp(v);
            if (e) term *= power(v, e);
        }
        acc += term;
    }
    return acc;
}

std::array<MultiPoly, 6> identity_images() {
    std::array<MultiPoly, 6> im;
    for (int v = 0; v < 6; ++v) im[v] = MultiPoly::var(v);
    return im;
}

MultiPoly MultiPoly::substitute_var(int v, const MultiPoly& image) const {
    auto im = identity_images();
    im[v] = image;
    return substitute(im);
}

std::string MultiPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
        Monomial m{k};
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = m.total_degree() > 0;
        bool unit = a.is_one() && has_vars;
        if (!unit) os << a.str();
        bool star = !unit;
        for (int v = 0; v < 6; ++v) {
            int e = m.exp(v);
            if (!e) continue;
            if (star) os << "*";
            star = true;
            os << kVarNames[v];
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

MultiPoly pow(const MultiPoly& b, unsigned e) {
    MultiPoly r = MultiPoly::constant(Rational(1));
    MultiPoly x = b;
    while (e) {
        if (e & 1u) r *= x;
        x *= x;
        e >>= 1u;
    }
    return r;
}

int weighted_degree(const MultiPoly& f) {
    if (f.is_zero()) throw std::domain_error("weighted degree of zero polynomial");
    int best = 0;
    for (const auto& [k, c] : f.terms()) {
        Monomial m{k};
        int w = 2 * m.exp(VU) + m.exp(VY1) + m.exp(VY2) + m.exp(VY3) + m.exp(VY4);
        best = std::max(best, w);
    }
    return best;
}

MultiPoly canonical_form(const MultiPoly& f) {
    if (f.is_zero()) throw std::domain_error("canonical form of zero polynomial");
    Rational c = f.content();
    if (f.leading_coeff().sign() < 0) c = -c;
    return c.inv() * f;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    MultiPoly q, r(f);
    const Monomial gm = g.leading_monomial();
    const Rational gc_inv = g.leading_coeff().inv();
    while (!r.is_zero()) {
        Monomial rm = r.leading_monomial();
        if (!gm.divides(rm)) return std::nullopt;
        Monomial m = rm.div(gm);
        Rational c = r.leading_coeff() * gc_inv;
        q.add_term(m, c);
        r -= MultiPoly::term(c, m) * g;
    }
    return q;
}

MultiPoly substitute_u(const MultiPoly& f, const USubst& mode) {
    int k = f.max_exp(VU);
    if (k == 0) return f;
    MultiPoly q;
    q += MultiPoly::var(VY1, 2);
    q += MultiPoly::var(VY2, 2);
    q += MultiPoly::var(VY3, 2);
    if (mode.kind == USubst::Gamma) {
        q -= MultiPoly::var(VY4, 2);
    } else if (!mode.d.is_zero()) {
        q -= (mode.d * mode.d) * MultiPoly::var(VY0, 2);
    }
    std::vector<MultiPoly> qpow{MultiPoly::constant(Rational(1))};
    while (static_cast<int>(qpow.size()) <= k) qpow.push_back(qpow.back() * q);

    MultiPoly out;
    for (const auto& [key, c] : f.terms()) {
        Monomial m{key};
        int a = m.exp(VU);
        Monomial rest = m.div(Monomial::var(VU, a));
        Monomial shifted = rest * Monomial::var(VY0, k - a);
        out += MultiPoly::term(c, shifted) * qpow[a];
    }
    // Strip the y0 power the clearing introduced, but never more than k:
    // a y0 factor already present in the input is preserved.
    int j = 255;
    for (const auto& [key, c] : out.terms()) j = std::min(j, Monomial{key}.exp(VY0));
    j = std::min(j, k);
    if (j > 0) {
        MultiPoly stripped;
        for (const auto& [key, c] : out.terms())
            stripped.add_term(Monomial{key}.div(Monomial::var(VY0, j)), c);
        return stripped;
    }
    return out;
}

TPoly::TPoly(MultiPoly c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

TPoly TPoly::from_coeffs(std::vector<MultiPoly> cs) {
    TPoly p;
    p.c_ = std::move(cs);
    p.trim();
    return p;
}

TPoly TPoly::lift(const UniPoly& p) {
    std::vector<MultiPoly> cs;
    cs.reserve(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) cs.push_back(MultiPoly::constant(p.coeff(i)));
    return from_coeffs(std::move(cs));
}

void TPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const MultiPoly& TPoly::coeff(int k) const {
    static const MultiPoly zero;
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[k];
}

const MultiPoly& TPoly::lc() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

TPoly TPoly::operator-() const {
    TPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.resize(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

TPoly operator*(const MultiPoly& s, const TPoly& p) {
    TPoly r;
    if (s.is_zero()) return r;
    r.c_.reserve(p.c_.size());
    for (const auto& c : p.c_) r.c_.push_back(s * c);
    r.trim();
    return r;
}

TPoly TPoly::derivative() const {
    TPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    r.trim();
    return r;
}

TPoly TPoly::map_coeffs(const std::array<MultiPoly, 6>& images) const {
    TPoly r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c.substitute(images));
    r.trim();
    return r;
}

TPoly dot_with_vars(const PolyVec& v, const std::vector<int>& vars) {
    if (v.size() != static_cast<int>(vars.size()))
        throw std::invalid_argument("vector length mismatch");
    std::vector<MultiPoly> cs(std::max(0, v.degree()) + 1);
    for (int i = 0; i < v.size(); ++i) {
        const UniPoly& p = v[i];
        for (int kdeg = 0; kdeg <= p.degree(); ++kdeg) {
            if (p.coeff(kdeg).is_zero()) continue;
            cs[kdeg].add_term(Monomial::var(vars[i]), p.coeff(kdeg));
        }
    }
    return TPoly::from_coeffs(std::move(cs));
}

}  // namespace canal
