#include "pathgeo/ratexpr.hpp"

#include <atomic>

namespace pathgeo {

namespace {
std::atomic<GcdMode> g_gcd_mode{GcdMode::content};
}

void set_gcd_mode(GcdMode m) { g_gcd_mode.store(m); }
GcdMode gcd_mode() { return g_gcd_mode.load(); }

RatExpr::RatExpr(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars()) throw error("RatExpr: mixed variable counts");
    if (den_.is_zero()) throw error("division by zero polynomial");
    canonicalize();
}

RatExpr RatExpr::constant(std::size_t nvars, Int c) {
    return RatExpr(Poly::constant(nvars, std::move(c)), Poly::constant(nvars, 1));
}

RatExpr RatExpr::constant(std::size_t nvars, long num, long den) {
    return RatExpr(Poly::constant(nvars, Int(num)), Poly::constant(nvars, Int(den)));
}

RatExpr RatExpr::variable(std::size_t nvars, std::size_t index) {
    return RatExpr(Poly::variable(nvars, index), Poly::constant(nvars, 1));
}

RatExpr RatExpr::from_poly(Poly p) {
    std::size_t nv = p.nvars();
    return RatExpr(std::move(p), Poly::constant(nv, 1));
}

bool RatExpr::is_one() const {
    return num_.is_constant() && den_.is_constant() && !num_.is_zero() &&
           num_.constant_value() == den_.constant_value();
}

void RatExpr::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.nvars(), 1);
        return;
    }
    // Common monomial factor.
    Monomial mn = num_.min_exponents();
    Monomial md = den_.min_exponents();
    Monomial common(num_.nvars(), 0);
    bool any = false;
    for (std::size_t i = 0; i < common.size(); ++i) {
        common[i] = std::min(mn[i], md[i]);
        any = any || common[i] > 0;
    }
    if (any) {
        num_.divide_by_monomial(common);
        den_.divide_by_monomial(common);
    }
    // Common integer content.
    Int g = int_gcd(num_.content(), den_.content());
    if (g > 1) {
        num_.divide_by_content(g);
        den_.divide_by_content(g);
    }
    if (gcd_mode() == GcdMode::full) {
        Poly pg = Poly::gcd(num_, den_);
        if (!(pg.is_constant() && pg.constant_value() == 1)) {
            num_ = *num_.divided_exactly_by(pg);
            den_ = *den_.divided_exactly_by(pg);
        }
    } else if (!den_.is_constant()) {
        // Cheap reduction: exact-division attempt in both directions.
        if (auto q = num_.divided_exactly_by(den_)) {
            num_ = std::move(*q);
            den_ = Poly::constant(num_.nvars(), 1);
        } else if (!num_.is_constant()) {
            if (auto q2 = den_.divided_exactly_by(num_)) {
                den_ = std::move(*q2);
                num_ = Poly::constant(num_.nvars(), 1);
            }
        }
    }
    if (den_.leading_sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatExpr RatExpr::operator-() const {
    RatExpr r = *this;
    r.num_ = -r.num_;
    return r;
}

RatExpr RatExpr::operator+(const RatExpr& o) const {
    return RatExpr(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatExpr RatExpr::operator-(const RatExpr& o) const {
    return RatExpr(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatExpr RatExpr::operator*(const RatExpr& o) const {
    return RatExpr(num_ * o.num_, den_ * o.den_);
}

RatExpr RatExpr::operator/(const RatExpr& o) const {
    if (o.is_zero()) throw error("division by zero expression");
    return RatExpr(num_ * o.den_, den_ * o.num_);
}

RatExpr RatExpr::pow_int(long k) const {
    if (k == 0) return RatExpr::constant(nvars(), 1);
    if (k < 0) {
        if (is_zero()) throw error("negative power of zero expression");
        return RatExpr(den_, num_).pow_int(-k);
    }
    return RatExpr(num_.pow(static_cast<unsigned long>(k)),
                   den_.pow(static_cast<unsigned long>(k)));
}

RatExpr RatExpr::diff(std::size_t var) const {
    // Quotient rule; canonicalization reduces the den^2.
    return RatExpr(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

Rat RatExpr::eval(const std::vector<Rat>& point) const {
    Rat d = den_.eval(point);
    if (d == 0) throw error("RatExpr::eval: denominator vanishes at point");
    Rat r = num_.eval(point) / d;
    r.canonicalize();
    return r;
}

RatExpr RatExpr::rename_vars(const std::vector<std::size_t>& perm) const {
    return RatExpr(num_.rename_vars(perm), den_.rename_vars(perm));
}

bool RatExpr::equals(const RatExpr& o) const {
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

std::string RatExpr::str(const std::vector<std::string>& names) const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.str(names);
    std::string n = num_.str(names);
    std::string d = den_.str(names);
    return "(" + n + ")/(" + d + ")";
}

long rand_range(std::mt19937_64& rng, long lo, long hi) {
    // Modulo bias is irrelevant at these ranges; determinism across
    // platforms is what matters.
    unsigned long span = static_cast<unsigned long>(hi - lo) + 1UL;
    return lo + static_cast<long>(rng() % span);
}

bool random_zero_test(const RatExpr& e, int trials, long bound, std::mt19937_64& rng) {
    if (trials < 1) throw error("random_zero_test: trials must be >= 1");
    if (bound < 1) throw error("random_zero_test: bound must be >= 1");
    std::vector<Rat> pt(e.nvars());
    for (int t = 0; t < trials; ++t) {
        for (int resample = 0;; ++resample) {
            for (auto& c : pt) {
                Rat v(rand_range(rng, -bound, bound), rand_range(rng, 1, bound));
                v.canonicalize();
                c = v;
            }
            if (e.den().eval(pt) != 0) break;
            if (resample > 1000) throw error("random_zero_test: denominator vanishes persistently");
        }
        if (e.num().eval(pt) != 0) return false;
    }
    return true;
}

}  // namespace pathgeo
