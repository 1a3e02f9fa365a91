#include "pathgeo/poly.hpp"

#include <algorithm>
#include <sstream>

namespace pathgeo {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    unsigned long da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    // Same total degree: earlier coordinate with higher exponent wins.
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Poly Poly::constant(std::size_t nvars, Int c) {
    Poly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(nvars, 0), std::move(c));
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw error("Poly::variable: index out of range");
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.terms_.emplace(std::move(m), Int(1));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

Int Poly::constant_value() const {
    if (terms_.empty()) return Int(0);
    return terms_.begin()->second;
}

long Poly::total_degree() const {
    if (terms_.empty()) return -1;
    const Monomial& m = terms_.rbegin()->first;
    long d = 0;
    for (auto e : m) d += e;
    return d;
}

long Poly::degree_in(std::size_t var) const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[var]));
    return terms_.empty() ? -1 : d;
}

void Poly::check_compatible(const Poly& o) const {
    if (nvars_ != o.nvars_) throw error("Poly: mixed variable counts");
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    Poly r(nvars_);
    Monomial m(nvars_, 0);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::pow(unsigned long k) const {
    Poly result = Poly::constant(nvars_, 1);
    Poly base = *this;
    while (k > 0) {
        if (k & 1UL) result = result * base;
        k >>= 1UL;
        if (k > 0) base = base * base;
    }
    return result;
}

Poly Poly::derivative(std::size_t var) const {
    if (var >= nvars_) throw error("Poly::derivative: unknown coordinate index");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial dm = m;
        dm[var] -= 1;
        r.add_term(dm, c * Int(static_cast<unsigned long>(m[var])));
    }
    return r;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
    if (point.size() != nvars_) throw error("Poly::eval: point dimension mismatch");
    Rat total(0);
    for (const auto& [m, c] : terms_) {
        Rat term(c);
        for (std::size_t i = 0; i < nvars_; ++i)
            for (std::uint32_t e = 0; e < m[i]; ++e) term *= point[i];
        total += term;
    }
    total.canonicalize();
    return total;
}

Poly Poly::rename_vars(const std::vector<std::size_t>& perm) const {
    if (perm.size() != nvars_) throw error("Poly::rename_vars: permutation size mismatch");
    Poly r(nvars_);
    Monomial pm(nvars_, 0);
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) pm[perm[i]] = m[i];
        r.add_term(pm, c);
    }
    return r;
}

Int Poly::content() const {
    Int g(0);
    for (const auto& [m, c] : terms_) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

Monomial Poly::min_exponents() const {
    Monomial m(nvars_, 0);
    bool first = true;
    for (const auto& [mon, c] : terms_) {
        if (first) {
            m = mon;
            first = false;
        } else {
            for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], mon[i]);
        }
    }
    return m;
}

void Poly::divide_by_content(const Int& c) {
    if (c == 0 || c == 1) return;
    std::map<Monomial, Int, GrlexLess> out;
    for (const auto& [m, coeff] : terms_) out.emplace(m, int_divexact(coeff, c));
    terms_ = std::move(out);
}

void Poly::divide_by_monomial(const Monomial& m) {
    bool trivial = std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
    if (trivial) return;
    std::map<Monomial, Int, GrlexLess> out;
    for (const auto& [mon, c] : terms_) {
        Monomial q = mon;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (q[i] < m[i]) throw error("Poly::divide_by_monomial: not divisible");
            q[i] -= m[i];
        }
        out.emplace(std::move(q), c);
    }
    terms_ = std::move(out);
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw error("Poly: zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

const Int& Poly::leading_coeff() const {
    if (terms_.empty()) throw error("Poly: zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

int Poly::leading_sign() const {
    if (terms_.empty()) return 0;
    return sgn(terms_.rbegin()->second);
}

std::optional<Poly> Poly::divided_exactly_by(const Poly& d) const {
    check_compatible(d);
    if (d.is_zero()) throw error("Poly: division by zero polynomial");
    Poly q(nvars_);
    Poly r = *this;
    const Monomial& dm = d.leading_monomial();
    const Int& dc = d.leading_coeff();
    while (!r.is_zero()) {
        const Monomial& rm = r.leading_monomial();
        Monomial t(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (rm[i] < dm[i]) return std::nullopt;
            t[i] = rm[i] - dm[i];
        }
        if (!int_divisible(r.leading_coeff(), dc)) return std::nullopt;
        Poly step(nvars_);
        step.terms_.emplace(t, int_divexact(r.leading_coeff(), dc));
        q += step;
        r -= step * d;
    }
    return q;
}

void Poly::set_term(const Monomial& m, Int c) {
    if (m.size() != nvars_) throw error("Poly::set_term: exponent vector size mismatch");
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = std::move(c);
}

void Poly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

// ---------------------------------------------------------------------------
// Multivariate gcd via primitive subresultant PRS in the top active variable.

namespace {

// Dense view of p as a univariate polynomial in variable `v` with Poly coefficients.
std::vector<Poly> to_univariate(const Poly& p, std::size_t v) {
    std::vector<Poly> coeffs(static_cast<std::size_t>(std::max<long>(p.degree_in(v), 0)) + 1,
                             Poly(p.nvars()));
    for (const auto& [m, c] : p.terms()) {
        Monomial base = m;
        std::uint32_t e = base[v];
        base[v] = 0;
        coeffs[e].add_term(base, c);
    }
    while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
    return coeffs;
}

Poly from_univariate(const std::vector<Poly>& coeffs, std::size_t v, std::size_t nvars) {
    Poly r(nvars);
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        for (const auto& [m, c] : coeffs[e].terms()) {
            Monomial mm = m;
            mm[v] += static_cast<std::uint32_t>(e);
            r.add_term(mm, c);
        }
    }
    return r;
}

long udeg(const std::vector<Poly>& u) {
    for (std::size_t i = u.size(); i-- > 0;)
        if (!u[i].is_zero()) return static_cast<long>(i);
    return -1;
}

std::vector<Poly> umul_scalar(const std::vector<Poly>& u, const Poly& s) {
    std::vector<Poly> r(u.size(), Poly(s.nvars()));
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] * s;
    return r;
}

// Pseudo-remainder of a by b in the main variable: prem = lc(b)^(da-db+1) * a mod b.
std::vector<Poly> uprem(std::vector<Poly> a, const std::vector<Poly>& b, std::size_t nvars) {
    long da = udeg(a), db = udeg(b);
    const Poly& lb = b[static_cast<std::size_t>(db)];
    long e = da - db + 1;
    while (true) {
        long dr = udeg(a);
        if (dr < db) break;
        const Poly lr = a[static_cast<std::size_t>(dr)];
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] * lb;
        for (long i = 0; i <= db; ++i) {
            a[static_cast<std::size_t>(dr - db + i)] -= lr * b[static_cast<std::size_t>(i)];
        }
        --e;
    }
    if (e > 0) {
        Poly f = lb.pow(static_cast<unsigned long>(e));
        a = umul_scalar(a, f);
    }
    return a;
}

// Gcd of the coefficient list (recursive over Poly::gcd).
Poly ucontent(const std::vector<Poly>& u, std::size_t nvars) {
    Poly g(nvars);
    for (const auto& c : u) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : Poly::gcd(g, c);
        if (g.is_constant() && g.constant_value() == 1) break;
    }
    return g;
}

std::vector<Poly> udiv_scalar(const std::vector<Poly>& u, const Poly& s) {
    std::vector<Poly> r(u.size(), Poly(s.nvars()));
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        auto q = u[i].divided_exactly_by(s);
        if (!q) throw error("Poly::gcd: inexact content division");
        r[i] = *q;
    }
    return r;
}

Poly sign_normalized(Poly p) {
    if (p.leading_sign() < 0) p = -p;
    return p;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.nvars() != b.nvars()) throw error("Poly::gcd: mixed variable counts");
    if (a.is_zero()) return sign_normalized(b);
    if (b.is_zero()) return sign_normalized(a);
    if (a.is_constant() || b.is_constant()) {
        Int g = int_gcd(a.content(), b.content());
        return Poly::constant(a.nvars(), g);
    }
    // Main variable: highest index occurring in either operand.
    std::size_t v = 0;
    bool found = false;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
            v = i;
            found = true;
            break;
        }
    }
    if (!found) {
        Int g = int_gcd(a.content(), b.content());
        return Poly::constant(a.nvars(), g);
    }

    auto ua = to_univariate(a, v);
    auto ub = to_univariate(b, v);
    Poly ca = ucontent(ua, a.nvars());
    Poly cb = ucontent(ub, a.nvars());
    ua = udiv_scalar(ua, ca);
    ub = udiv_scalar(ub, cb);
    Poly cont = Poly::gcd(ca, cb);

    if (udeg(ua) < udeg(ub)) std::swap(ua, ub);
    // Primitive PRS: take primitive parts at each step.  Slower than the
    // subresultant bookkeeping but robust, and gcd is off the hot path.
    while (udeg(ub) > 0) {
        auto r = uprem(ua, ub, a.nvars());
        if (udeg(r) >= 0) {
            Poly cr = ucontent(r, a.nvars());
            r = udiv_scalar(r, cr);
        }
        ua = std::move(ub);
        ub = std::move(r);
    }
    // Degree-0 nonzero remainder: the primitive parts are coprime in v.
    Poly g = udeg(ub) == 0 ? cont : cont * from_univariate(ua, v, a.nvars());
    return sign_normalized(g);
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Int ac = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        bool any_var = std::any_of(m.begin(), m.end(), [](std::uint32_t e) { return e > 0; });
        if (!any_var || ac != 1) out << ac.get_str();
        bool printed = !any_var || ac != 1;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (printed) out << "*";
            out << (i < names.size() ? names[i] : "v" + std::to_string(i));
            if (m[i] > 1) out << "^" << m[i];
            printed = true;
        }
    }
    return out.str();
}

}  // namespace pathgeo
