#pragma once

// Coordinate charts and the differential-geometry substrate: vector fields,
// one-forms, frames with exact coframes, Lie brackets and the exterior
// derivative.  All tensors are stored in the coordinate frame; adapted-frame
// components are derived on demand through a FrameBasis.

#include <string>
#include <vector>

#include "pathgeo/matrix.hpp"
#include "pathgeo/parse.hpp"
#include "pathgeo/ratexpr.hpp"

namespace pathgeo {

struct Chart {
    std::size_t n = 0;                 // rank of V; dimension is 2n+1
    std::vector<std::string> coords;   // 2n+1 distinct names

    Chart() = default;
    Chart(std::size_t n_, std::vector<std::string> coords_);
    std::size_t dim() const { return 2 * n + 1; }
    std::size_t index_of(const std::string& name) const;  // throws on unknown name
};

struct VectorField {
    std::vector<RatExpr> c;  // components against the coordinate frame

    VectorField() = default;
    explicit VectorField(std::size_t dim, std::size_t nvars)
        : c(dim, RatExpr(nvars)) {}
    std::size_t dim() const { return c.size(); }

    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField operator-() const;
    VectorField scaled(const RatExpr& f) const;
    bool is_zero() const;

    // Directional derivative of a scalar.
    RatExpr apply(const RatExpr& f) const;
};

struct OneForm {
    std::vector<RatExpr> c;  // components against the coordinate coframe

    OneForm() = default;
    explicit OneForm(std::size_t dim, std::size_t nvars)
        : c(dim, RatExpr(nvars)) {}
    std::size_t dim() const { return c.size(); }

    OneForm operator+(const OneForm& o) const;
    OneForm operator-(const OneForm& o) const;
    OneForm scaled(const RatExpr& f) const;
    RatExpr pair(const VectorField& X) const;
    bool is_zero() const;
};

VectorField coordinate_field(std::size_t dim, std::size_t index);
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

// dbeta(X, Y) via the global formula X.beta(Y) - Y.beta(X) - beta([X,Y]).
RatExpr d_exterior(const OneForm& beta, const VectorField& X, const VectorField& Y);

struct FrameBasis {
    std::vector<VectorField> fields;
    Mat coframe;  // row A pairs to the coefficient on fields[A]

    std::size_t dim() const { return fields.size(); }
    // Row A of the coframe as a OneForm.
    OneForm covector(std::size_t A) const;
};

// Exact coframe via Bareiss-based inversion; throws singular_matrix when the
// frame determinant is the zero rational expression.
FrameBasis invert_frame(const std::vector<VectorField>& fields);

// Coefficients c_A with X = sum_A c_A F_A.
std::vector<RatExpr> express_in_frame(const VectorField& X, const FrameBasis& F);

}  // namespace pathgeo
