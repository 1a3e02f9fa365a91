#pragma once

// Path geometries in a chart: the rank-one distribution E spanned by xiE and
// the rank-n involutive distribution V spanned by the etas, with structure
// validation, the quotient Q = TM/H in the basis {q([xiE, eta_a])}, and the
// Levi bracket.  All validity notions are generic: a condition holds when the
// relevant expression is nonzero (resp. zero) as a rational function.

#include <optional>
#include <string>
#include <vector>

#include "pathgeo/chart.hpp"

namespace pathgeo {

struct PathGeometry {
    Chart chart;
    VectorField xiE;                 // frame of E
    std::vector<VectorField> etas;   // frame of V, n fields

    std::size_t n() const { return chart.n; }
    std::size_t dim() const { return chart.dim(); }
    std::size_t nvars() const { return chart.dim(); }

    // Frame (xiE, eta_1..eta_n, [xiE, eta_1]..[xiE, eta_n]) with its coframe.
    // Exists exactly when the geometry is Levi-nondegenerate.
    const FrameBasis& levi_frame() const;
    const std::vector<VectorField>& levi_brackets() const;  // [xiE, eta_a]

private:
    mutable std::optional<FrameBasis> levi_frame_;
    mutable std::vector<VectorField> levi_brackets_;
};

// Coefficients against the basis {q([xiE, eta_a])} of Q.
struct QClass {
    std::vector<RatExpr> coeff;
};

struct ODESystem {
    std::size_t n = 0;
    std::vector<std::string> rhs;  // F^a(x, y^1..y^n, p^1..p^n), expression strings
};

struct ValidationReport {
    bool independent = false;
    bool involutive = false;
    bool levi_nondegenerate = false;
    std::string witness;  // offending pair / expression on failure
    bool ok() const { return independent && involutive && levi_nondegenerate; }
};

// Chart (x, y^a, p^a); xiE = d_x + sum p^a d_{y^a} + sum F^a d_{p^a};
// etas = (d_{p^1}, .., d_{p^n}).
PathGeometry from_ode(const ODESystem& sys);

ValidationReport validate(const PathGeometry& g);

// Coefficients c_a with X - sum_a c_a [xiE, eta_a] in span{xiE, eta_1..eta_n}.
QClass q_project(const PathGeometry& g, const VectorField& X);

// Levi bracket L(xi, eta) = q([xi, eta]) for xi a section of E and eta of V;
// throws when the arguments fail those membership checks (exact).
QClass levi(const PathGeometry& g, const VectorField& xi, const VectorField& eta);

// Exact membership tests used by levi(); exposed for reuse and tests.
std::optional<RatExpr> e_component(const PathGeometry& g, const VectorField& xi);
std::optional<std::vector<RatExpr>> v_components(const PathGeometry& g, const VectorField& eta);

}  // namespace pathgeo
