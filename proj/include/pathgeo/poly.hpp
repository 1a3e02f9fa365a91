#pragma once

// Sparse multivariate polynomials over arbitrary-precision integers.
// Terms are kept in graded-lexicographic order of the exponent vectors,
// with the declared coordinate order breaking ties.  No zero coefficients
// are ever stored.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pathgeo {

using Int = mpz_class;
using Rat = mpq_class;
using Monomial = std::vector<std::uint32_t>;

class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_divexact(const Int& a, const Int& b) {
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool int_divisible(const Int& a, const Int& b) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
public:
    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, Int c);
    static Poly variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term value (0 if absent); only meaningful with is_constant().
    Int constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    long total_degree() const;  // -1 for the zero polynomial
    long degree_in(std::size_t var) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly pow(unsigned long k) const;
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Poly derivative(std::size_t var) const;
    Rat eval(const std::vector<Rat>& point) const;
    Poly rename_vars(const std::vector<std::size_t>& perm) const;

    // Integer gcd of all coefficients, non-negative; 0 for the zero polynomial.
    Int content() const;
    // Componentwise minimum exponent over all terms (all-zero for the zero polynomial).
    Monomial min_exponents() const;
    void divide_by_content(const Int& c);
    void divide_by_monomial(const Monomial& m);

    const Monomial& leading_monomial() const;
    const Int& leading_coeff() const;
    int leading_sign() const;  // 0 for zero polynomial

    // Quotient if `d` divides this exactly, nullopt otherwise.
    std::optional<Poly> divided_exactly_by(const Poly& d) const;
    // Full multivariate gcd (primitive-PRS); result has positive leading coefficient.
    static Poly gcd(const Poly& a, const Poly& b);

    void set_term(const Monomial& m, Int c);  // inserts/overwrites, drops zeros
    void add_term(const Monomial& m, const Int& c);
    const std::map<Monomial, Int, GrlexLess>& terms() const { return terms_; }

    std::string str(const std::vector<std::string>& names) const;

private:
    void check_compatible(const Poly& o) const;

    std::size_t nvars_ = 0;
    std::map<Monomial, Int, GrlexLess> terms_;
};

}  // namespace pathgeo
