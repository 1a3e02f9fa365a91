#include "pathgeo/matrix.hpp"

namespace pathgeo {

Mat Mat::identity(std::size_t n, std::size_t nvars) {
    Mat m(n, n, nvars);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatExpr::constant(nvars, 1);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw error("Mat: shape mismatch in product");
    std::size_t nv = a_.empty() ? o.a_.front().nvars() : a_.front().nvars();
    Mat r(rows_, o.cols_, nv);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("Mat: shape mismatch in sum");
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("Mat: shape mismatch in difference");
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

std::vector<RatExpr> Mat::apply(const std::vector<RatExpr>& v) const {
    if (v.size() != cols_) throw error("Mat: vector size mismatch");
    std::size_t nv = a_.front().nvars();
    std::vector<RatExpr> r(rows_, RatExpr(nv));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

bool Mat::is_zero() const {
    for (const auto& e : a_)
        if (!e.is_zero()) return false;
    return true;
}

namespace {

// Clear denominators row by row: A = diag(1/r_i) * B with B polynomial.
struct Cleared {
    std::vector<std::vector<Poly>> B;
    std::vector<Poly> row_factor;
};

Cleared clear_denominators(const Mat& A, std::size_t nvars) {
    Cleared c;
    c.B.assign(A.rows(), std::vector<Poly>(A.cols(), Poly(nvars)));
    c.row_factor.assign(A.rows(), Poly::constant(nvars, 1));
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Poly r = Poly::constant(nvars, 1);
        for (std::size_t j = 0; j < A.cols(); ++j) {
            const Poly& d = A.at(i, j).den();
            if (!(d.is_constant() && d.constant_value() == 1)) r = r * d;
        }
        c.row_factor[i] = r;
        for (std::size_t j = 0; j < A.cols(); ++j) {
            // num * (r / den) is exact by construction of r.
            auto q = r.divided_exactly_by(A.at(i, j).den());
            c.B[i][j] = A.at(i, j).num() * *q;
        }
    }
    return c;
}

Poly divexact_poly(const Poly& a, const Poly& b) {
    auto q = a.divided_exactly_by(b);
    if (!q) throw error("internal: Bareiss division not exact");
    return *q;
}

}  // namespace

RatExpr Mat::det() const {
    if (rows_ != cols_) throw error("Mat::det: not square");
    std::size_t n = rows_;
    if (n == 0) throw error("Mat::det: empty matrix");
    std::size_t nv = a_.front().nvars();
    Cleared c = clear_denominators(*this, nv);
    auto& M = c.B;
    int sign = 1;
    Poly prev = Poly::constant(nv, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && M[p][k].is_zero()) ++p;
            if (p == n) return RatExpr(nv);  // singular
            std::swap(M[k], M[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = divexact_poly(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
            M[i][k] = Poly(nv);
        }
        prev = M[k][k];
    }
    Poly d = M[n - 1][n - 1];
    if (sign < 0) d = -d;
    // det(A) = det(B) / prod(row factors)
    Poly denom = Poly::constant(nv, 1);
    for (const auto& f : c.row_factor) denom = denom * f;
    return RatExpr(d, denom);
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw error("Mat::inverse: not square");
    std::size_t n = rows_;
    std::size_t nv = a_.front().nvars();
    Cleared c = clear_denominators(*this, nv);

    // Montante (full Gauss-Jordan Bareiss) on [B | I]: final left block is
    // diagonal, so B^{-1}[i][j] = R[i][j] / D[i].
    std::vector<std::vector<Poly>> M(n, std::vector<Poly>(2 * n, Poly(nv)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = c.B[i][j];
        M[i][n + i] = Poly::constant(nv, 1);
    }
    Poly prev = Poly::constant(nv, 1);
    for (std::size_t k = 0; k < n; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && M[p][k].is_zero()) ++p;
            if (p == n) throw singular_matrix("matrix is singular (zero determinant)");
            std::swap(M[k], M[p]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                M[i][j] = divexact_poly(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
            }
            M[i][k] = Poly(nv);
        }
        prev = M[k][k];
    }
    Mat inv(n, n, nv);
    for (std::size_t i = 0; i < n; ++i) {
        if (M[i][i].is_zero()) throw singular_matrix("matrix is singular (zero determinant)");
        for (std::size_t j = 0; j < n; ++j) {
            // A^{-1} = B^{-1} diag(row_factor)
            inv.at(i, j) = RatExpr(M[i][n + j] * c.row_factor[j], M[i][i]);
        }
    }
    return inv;
}

std::optional<std::vector<RatExpr>> solve_linear(const Mat& A, const std::vector<RatExpr>& b) {
    if (b.size() != A.rows()) throw error("solve_linear: size mismatch");
    std::size_t m = A.rows(), k = A.cols();
    std::size_t nv = k > 0 ? A.at(0, 0).nvars() : b.front().nvars();
    // Fraction-field Gaussian elimination on [A | b].
    std::vector<std::vector<RatExpr>> M(m, std::vector<RatExpr>(k + 1, RatExpr(nv)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) M[i][j] = A.at(i, j);
        M[i][k] = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < m; ++col) {
        std::size_t p = row;
        while (p < m && M[p][col].is_zero()) ++p;
        if (p == m) continue;
        std::swap(M[row], M[p]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || M[i][col].is_zero()) continue;
            RatExpr f = M[i][col] / M[row][col];
            for (std::size_t j = col; j <= k; ++j) M[i][j] -= f * M[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (!M[i][k].is_zero()) return std::nullopt;  // inconsistent
    std::vector<RatExpr> x(k, RatExpr(nv));
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
        x[pivot_col[r]] = M[r][k] / M[r][pivot_col[r]];
    return x;
}

}  // namespace pathgeo
