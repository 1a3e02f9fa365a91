#pragma once

// Canonical rational functions: the scalar field for every tensor computation.
//
// Canonical form: num/den with their common integer content and any common
// monomial factor removed, den's graded-lex leading coefficient positive, and
// den == 1 whenever den divides num exactly (cheap reduction that catches the
// cancellations produced by field arithmetic).  With GcdMode::full the full
// polynomial gcd of num and den is removed as well.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pathgeo/poly.hpp"

namespace pathgeo {

enum class GcdMode { content, full };

void set_gcd_mode(GcdMode m);
GcdMode gcd_mode();

class RatExpr {
public:
    RatExpr() = default;
    explicit RatExpr(std::size_t nvars)
        : num_(nvars), den_(Poly::constant(nvars, 1)) {}
    RatExpr(Poly num, Poly den);  // canonicalizes; throws on zero den

    static RatExpr constant(std::size_t nvars, Int c);
    static RatExpr constant(std::size_t nvars, long num, long den);
    static RatExpr variable(std::size_t nvars, std::size_t index);
    static RatExpr from_poly(Poly p);

    std::size_t nvars() const { return num_.nvars(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    RatExpr operator-() const;
    RatExpr operator+(const RatExpr& o) const;
    RatExpr operator-(const RatExpr& o) const;
    RatExpr operator*(const RatExpr& o) const;
    RatExpr operator/(const RatExpr& o) const;  // throws on zero divisor
    RatExpr& operator+=(const RatExpr& o) { return *this = *this + o; }
    RatExpr& operator-=(const RatExpr& o) { return *this = *this - o; }
    RatExpr& operator*=(const RatExpr& o) { return *this = *this * o; }
    RatExpr& operator/=(const RatExpr& o) { return *this = *this / o; }

    RatExpr pow_int(long k) const;  // k < 0 requires a nonzero base
    RatExpr diff(std::size_t var) const;
    Rat eval(const std::vector<Rat>& point) const;  // throws if den vanishes
    RatExpr rename_vars(const std::vector<std::size_t>& perm) const;

    // Structural identity of the stored canonical forms.
    bool structurally_equal(const RatExpr& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    // Value equality via cross-multiplication.
    bool equals(const RatExpr& o) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    void canonicalize();

    Poly num_;
    Poly den_;
};

inline RatExpr operator*(long c, const RatExpr& e) {
    return RatExpr::constant(e.nvars(), Int(c)) * e;
}

// Schwartz-Zippel style probabilistic zero test: evaluates at `trials`
// random rational points with coordinates in [-bound, bound], resampling
// any point where the denominator vanishes.  One-sided: false means
// definitely nonzero.
bool random_zero_test(const RatExpr& e, int trials, long bound, std::mt19937_64& rng);

// Platform-independent uniform integer in [lo, hi].
long rand_range(std::mt19937_64& rng, long lo, long hi);

}  // namespace pathgeo
