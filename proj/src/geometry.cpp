#include "pathgeo/geometry.hpp"

#include <algorithm>

namespace pathgeo {

const std::vector<VectorField>& PathGeometry::levi_brackets() const {
    if (levi_brackets_.empty()) {
        levi_brackets_.reserve(n());
        for (const auto& eta : etas) levi_brackets_.push_back(lie_bracket(xiE, eta));
    }
    return levi_brackets_;
}

const FrameBasis& PathGeometry::levi_frame() const {
    if (!levi_frame_) {
        std::vector<VectorField> fields;
        fields.reserve(dim());
        fields.push_back(xiE);
        for (const auto& eta : etas) fields.push_back(eta);
        for (const auto& w : levi_brackets()) fields.push_back(w);
        levi_frame_ = invert_frame(fields);
    }
    return *levi_frame_;
}

PathGeometry from_ode(const ODESystem& sys) {
    if (sys.n == 0) throw error("from_ode: n must be positive");
    if (sys.rhs.size() != sys.n) throw error("from_ode: expected n right-hand sides");
    std::vector<std::string> coords;
    coords.push_back("x");
    if (sys.n == 1) {
        coords.push_back("y");
        coords.push_back("p");
    } else {
        for (std::size_t a = 1; a <= sys.n; ++a) coords.push_back("y" + std::to_string(a));
        for (std::size_t a = 1; a <= sys.n; ++a) coords.push_back("p" + std::to_string(a));
    }
    PathGeometry g;
    g.chart = Chart(sys.n, coords);
    std::size_t d = g.dim();
    g.xiE = VectorField(d, d);
    g.xiE.c[0] = RatExpr::constant(d, 1);
    for (std::size_t a = 0; a < sys.n; ++a) {
        g.xiE.c[1 + a] = RatExpr::variable(d, 1 + sys.n + a);          // p^a d_{y^a}
        g.xiE.c[1 + sys.n + a] = parse_expr(sys.rhs[a], coords);       // F^a d_{p^a}
    }
    for (std::size_t a = 0; a < sys.n; ++a) g.etas.push_back(coordinate_field(d, 1 + sys.n + a));
    return g;
}

namespace {

// Generic rank test: some (n+1)x(n+1) minor of the (dim x (n+1)) component
// matrix is a nonzero rational expression.
bool generically_independent(const PathGeometry& g) {
    std::size_t d = g.dim(), k = g.n() + 1;
    Mat cols(d, k, d);
    for (std::size_t i = 0; i < d; ++i) {
        cols.at(i, 0) = g.xiE.c[i];
        for (std::size_t a = 0; a < g.n(); ++a) cols.at(i, 1 + a) = g.etas[a].c[i];
    }
    std::vector<std::size_t> pick(k);
    // enumerate k-subsets of rows
    for (std::size_t a = 0; a < k; ++a) pick[a] = a;
    while (true) {
        Mat minor(k, k, d);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) minor.at(r, c) = cols.at(pick[r], c);
        if (!minor.det().is_zero()) return true;
        // next subset
        std::size_t i = k;
        while (i-- > 0) {
            if (pick[i] + (k - i) < d) {
                ++pick[i];
                for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
    }
}

}  // namespace

ValidationReport validate(const PathGeometry& g) {
    ValidationReport rep;
    if (g.etas.size() != g.n()) throw error("validate: eta count does not match chart rank");

    rep.independent = generically_independent(g);
    if (!rep.independent) rep.witness = "frame (xiE, etas) has generic rank defect";

    // V involutive: [eta_a, eta_b] solvable in span{eta_1..eta_n}.
    rep.involutive = true;
    std::size_t d = g.dim();
    Mat veta(d, g.n(), d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t a = 0; a < g.n(); ++a) veta.at(i, a) = g.etas[a].c[i];
    for (std::size_t a = 0; a < g.n() && rep.involutive; ++a) {
        for (std::size_t b = a + 1; b < g.n() && rep.involutive; ++b) {
            VectorField br = lie_bracket(g.etas[a], g.etas[b]);
            if (!solve_linear(veta, br.c)) {
                rep.involutive = false;
                rep.witness = "[eta_" + std::to_string(a + 1) + ", eta_" + std::to_string(b + 1) +
                              "] leaves span(V)";
            }
        }
    }

    // Levi nondegeneracy: det(xiE, eta_a, [xiE, eta_a]) != 0.
    Mat full(d, d, d);
    for (std::size_t i = 0; i < d; ++i) {
        full.at(i, 0) = g.xiE.c[i];
        for (std::size_t a = 0; a < g.n(); ++a) {
            full.at(i, 1 + a) = g.etas[a].c[i];
            full.at(i, 1 + g.n() + a) = g.levi_brackets()[a].c[i];
        }
    }
    RatExpr det = full.det();
    rep.levi_nondegenerate = !det.is_zero();
    if (!rep.levi_nondegenerate && rep.witness.empty())
        rep.witness = "Levi frame determinant vanishes identically";
    return rep;
}

QClass q_project(const PathGeometry& g, const VectorField& X) {
    if (X.dim() != g.dim()) throw error("q_project: dimension mismatch");
    auto coeffs = express_in_frame(X, g.levi_frame());
    QClass q;
    q.coeff.assign(coeffs.begin() + 1 + g.n(), coeffs.end());
    return q;
}

std::optional<RatExpr> e_component(const PathGeometry& g, const VectorField& xi) {
    // xi = f * xiE exactly for some rational function f?
    std::size_t d = g.dim();
    Mat A(d, 1, d);
    for (std::size_t i = 0; i < d; ++i) A.at(i, 0) = g.xiE.c[i];
    auto sol = solve_linear(A, xi.c);
    if (!sol) return std::nullopt;
    return (*sol)[0];
}

std::optional<std::vector<RatExpr>> v_components(const PathGeometry& g, const VectorField& eta) {
    std::size_t d = g.dim();
    Mat A(d, g.n(), d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t a = 0; a < g.n(); ++a) A.at(i, a) = g.etas[a].c[i];
    return solve_linear(A, eta.c);
}

QClass levi(const PathGeometry& g, const VectorField& xi, const VectorField& eta) {
    if (!e_component(g, xi)) throw error("levi: first argument is not a section of E");
    if (!v_components(g, eta)) throw error("levi: second argument is not a section of V");
    return q_project(g, lie_bracket(xi, eta));
}

}  // namespace pathgeo
