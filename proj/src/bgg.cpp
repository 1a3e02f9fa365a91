#include "pathgeo/bgg.hpp"

namespace pathgeo {

bool DOutput::is_zero() const {
    for (std::size_t a = 0; a < S.rows(); ++a)
        for (std::size_t b = 0; b < S.cols(); ++b)
            if (!S.at(a, b).is_zero()) return false;
    for (const auto& e : eQ)
        if (!e.is_zero()) return false;
    return true;
}

OneForm L_op(const PathGeometry& g, const HStarSection& a0) {
    const std::size_t n = g.n(), d = g.dim(), nv = g.nvars();
    if (a0.aV.size() != n) throw error("L_op: aV length mismatch");
    const FrameBasis& F = g.levi_frame();

    // Coordinate-coframe extension of a0 with zero Q*-components, then the
    // exact correction beta in Q*: d(beta)(xiE, eta_a) = -beta([xiE, eta_a]).
    OneForm alpha(d, nv);
    for (std::size_t j = 0; j < d; ++j) {
        RatExpr acc = a0.aE * F.coframe.at(0, j);
        for (std::size_t a = 0; a < n; ++a) acc += a0.aV[a] * F.coframe.at(1 + a, j);
        alpha.c[j] = acc;
    }
    for (std::size_t a = 0; a < n; ++a) {
        RatExpr b_a = d_exterior(alpha, g.xiE, g.etas[a]);
        for (std::size_t j = 0; j < d; ++j) alpha.c[j] += b_a * F.coframe.at(1 + n + a, j);
    }
    return alpha;
}

std::vector<RatExpr> VV_component(const PathGeometry& g, const HStarSection& a0) {
    OneForm alpha = L_op(g, a0);
    std::vector<RatExpr> out;
    for (std::size_t a = 0; a < g.n(); ++a)
        for (std::size_t b = a + 1; b < g.n(); ++b)
            out.push_back(d_exterior(alpha, g.etas[a], g.etas[b]));
    return out;
}

DOutput D_op(const PathGeometry& g, const HStarSection& a0) {
    const std::size_t n = g.n(), nv = g.nvars();
    for (const auto& v : a0.aV)
        if (!v.is_zero()) throw error("D_op: section must lie in E* (aV = 0)");
    OneForm alpha = L_op(g, a0);
    DOutput out;
    out.S = Mat(n, n, nv);
    const auto& w = g.levi_brackets();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) out.S.at(a, b) = d_exterior(alpha, g.etas[a], w[b]);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (!out.S.at(a, b).equals(out.S.at(b, a)))
                throw error("D_op: symmetry S_ab = S_ba violated (construction bug)");
    out.eQ.reserve(n);
    for (std::size_t b = 0; b < n; ++b) out.eQ.push_back(d_exterior(alpha, g.xiE, w[b]));
    return out;
}

namespace {

bool two_form_vanishes(const OneForm& alpha, std::size_t d) {
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (!d_exterior(alpha, coordinate_field(d, i), coordinate_field(d, j)).is_zero())
                return false;
    return true;
}

}  // namespace

DistinguishedReport is_distinguished(const PathGeometry& g, const Scale& s) {
    if (s.g.is_zero()) throw error("is_distinguished: scale must be nonzero");
    HStarSection a0;
    a0.aE = RatExpr::constant(g.nvars(), 1) / s.g;
    a0.aV.assign(g.n(), RatExpr(g.nvars()));
    DistinguishedReport rep;
    rep.distinguished = D_op(g, a0).is_zero();
    rep.dL_zero = two_form_vanishes(L_op(g, a0), g.dim());
    return rep;
}

std::optional<Scale> find_distinguished(const PathGeometry& g) {
    const std::size_t n = g.n(), d = g.dim(), nv = g.nvars();
    // ODE-chart criterion: eta_a = d_{p^a} (the last n coordinate fields)
    // and xiE has first component 1.
    for (std::size_t a = 0; a < n; ++a) {
        const VectorField& eta = g.etas[a];
        for (std::size_t i = 0; i < d; ++i) {
            bool unit = (i == 1 + n + a);
            if (!eta.c[i].equals(RatExpr::constant(nv, unit ? 1 : 0))) return std::nullopt;
        }
    }
    if (!g.xiE.c[0].is_one()) return std::nullopt;
    Scale s{RatExpr::constant(nv, 1)};
    if (!is_distinguished(g, s).distinguished)
        throw error("find_distinguished: certification failed on ODE-chart input");
    return s;
}

void check_distinguished_vanishing(const WeylStructure& w, CheckContext& ctx) {
    const std::size_t n = w.n(), d = w.dim();
    DistinguishedReport rep = is_distinguished(w.geometry(), w.scale());
    if (!rep.distinguished)
        throw error("check_distinguished_vanishing: scale is not distinguished");
    TensorComponents T = torsion(w);
    TensorComponents R = curvature(w);

    ctx.check("bgg.distinguished.tau_vq", [&](CheckRun& t) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t C = 0; C < d; ++C)
                    t.zero(tors_at(T, 1 + a, 1 + n + b, C),
                           "tau(eta_" + std::to_string(a + 1) + ",zeta_" + std::to_string(b + 1) + ")");
    });

    ctx.check("bgg.distinguished.curv_h2v", [&](CheckRun& t) {
        for (std::size_t A = 0; A <= n; ++A)
            for (std::size_t B = 0; B <= n; ++B)
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t D = 0; D < d; ++D)
                        t.zero(curv_at(R, A, B, 1 + c, D), "R(H,H)(V)");
    });

    ctx.check("bgg.distinguished.dalpha", [&](CheckRun& t) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                t.zero(d_exterior(w.alpha(), coordinate_field(d, i), coordinate_field(d, j)),
                       "dalpha on coordinate pair");
    });
}

}  // namespace pathgeo
