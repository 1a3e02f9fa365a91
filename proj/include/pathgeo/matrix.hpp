#pragma once

// Small dense matrices over the rational-function field.  Inversion and
// determinants go through fraction-free Bareiss elimination on a
// denominator-cleared polynomial matrix to limit intermediate blowup.

#include <optional>
#include <vector>

#include "pathgeo/ratexpr.hpp"

namespace pathgeo {

class singular_matrix : public error {
public:
    explicit singular_matrix(const std::string& msg) : error(msg) {}
};

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, std::size_t nvars)
        : rows_(rows), cols_(cols), a_(rows * cols, RatExpr(nvars)) {}

    static Mat identity(std::size_t n, std::size_t nvars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    RatExpr& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const RatExpr& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    std::vector<RatExpr> apply(const std::vector<RatExpr>& v) const;

    RatExpr det() const;              // fraction-free Bareiss
    Mat inverse() const;              // throws singular_matrix on zero det
    bool is_zero() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<RatExpr> a_;
};

// Exact solution of A x = b over the fraction field (A is m x k, b size m).
// Returns nullopt when the system is inconsistent; underdetermined systems
// get one generic solution with free unknowns set to zero.
std::optional<std::vector<RatExpr>> solve_linear(const Mat& A, const std::vector<RatExpr>& b);

}  // namespace pathgeo
