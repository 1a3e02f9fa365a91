#include "pathgeo/tractor.hpp"

namespace pathgeo {

namespace {

void require_tag(const TractorTriple& t, const WeylStructure& w, const char* who) {
    if (!t.scale_tag.g.equals(w.scale().g))
        throw error(std::string(who) + ": triple is tagged with a different scale");
}

}  // namespace

RatExpr density_derivative(const WeylStructure& w, const DensityConnectionForm& conn,
                           const VectorField& psi, const RatExpr& r) {
    (void)w;
    return psi.apply(r) + conn.gammaL.pair(psi) * r;
}

RatExpr density_derivative(const WeylStructure& w, const VectorField& psi, const RatExpr& r) {
    return psi.apply(r) + w.density_form().pair(psi) * r;
}

OneFormSplit split_one_form(const WeylStructure& w, const OneForm& gamma) {
    OneFormSplit s;
    s.cE = gamma.pair(w.xi0());
    for (std::size_t a = 0; a < w.n(); ++a) {
        s.cV.push_back(gamma.pair(w.eta(a)));
        s.cQ.push_back(gamma.pair(w.zeta(a)));
    }
    return s;
}

TractorTriple change_splitting(const TractorTriple& t, const WeylStructure& w,
                               const RatExpr& gfac) {
    require_tag(t, w, "change_splitting");
    if (gfac.is_zero()) throw error("change_splitting: gfac must be nonzero");
    const std::size_t n = w.n(), nv = w.nvars();
    OneForm df = dlog(gfac, w.dim());
    RatExpr half = RatExpr::constant(nv, 1, 2);

    RatExpr df_nu(nv);
    for (std::size_t a = 0; a < n; ++a) df_nu += t.nu[a] * df.pair(w.eta(a));
    RatExpr df_e = df.pair(w.xi0());

    TractorTriple out;
    out.nu = t.nu;
    out.rho = t.rho - df_nu;
    RatExpr tau_abs = t.tau + half * df_e * t.rho + half * df_e * df_nu;
    for (std::size_t a = 0; a < n; ++a) tau_abs -= t.nu[a] * df.pair(w.zeta(a));
    out.tau = gfac * tau_abs;  // rebase to the new scale's xi0-dual
    out.scale_tag = Scale{w.scale().g * gfac};
    return out;
}

TractorTriple tractor_derivative(const WeylStructure& w, const SchoutenTensor& P, std::size_t A,
                                 const TractorTriple& t) {
    require_tag(t, w, "tractor_derivative");
    const std::size_t n = w.n(), nv = w.nvars();
    const VectorField& psi = w.adapted().fields[A];
    RatExpr gl = w.density_form().pair(psi);

    TractorTriple out;
    out.scale_tag = t.scale_tag;
    // Slotwise covariant derivatives with the induced connections.
    out.nu.assign(n, RatExpr(nv));
    for (std::size_t b = 0; b < n; ++b) {
        RatExpr acc = psi.apply(t.nu[b]) + gl * t.nu[b];
        for (std::size_t a = 0; a < n; ++a) {
            const RatExpr& G = w.Gamma(A, 1 + a, 1 + b);
            if (!G.is_zero()) acc += t.nu[a] * G;
        }
        out.nu[b] = acc;
    }
    out.rho = psi.apply(t.rho) + gl * t.rho;
    out.tau = psi.apply(t.tau) + gl * t.tau;  // xi0-dual is parallel

    RatExpr P_nu(nv), PQ_nu(nv);
    for (std::size_t a = 0; a < n; ++a) {
        if (!t.nu[a].is_zero()) {
            P_nu += t.nu[a] * P.P.at(A, 1 + a);
            PQ_nu += t.nu[a] * P.P.at(A, 1 + n + a);
        }
    }
    out.rho += P_nu;
    out.tau += P.P.at(A, 0) * t.rho - PQ_nu;

    if (A == 0) {
        out.rho += t.tau;  // tau(xi0)
    } else if (A <= n) {
        out.nu[A - 1] += t.rho;  // eta (x) rho
    } else {
        out.nu[A - 1 - n] -= t.tau;  // -tau(zeta) = -eta (x) tau(xi0)
    }
    return out;
}

TractorTriple tractor_derivative_vec(const WeylStructure& w, const SchoutenTensor& P,
                                     const VectorField& X, const TractorTriple& t) {
    const std::size_t n = w.n(), nv = w.nvars();
    auto xc = express_in_frame(X, w.adapted());
    TractorTriple out;
    out.scale_tag = t.scale_tag;
    out.nu.assign(n, RatExpr(nv));
    out.rho = RatExpr(nv);
    out.tau = RatExpr(nv);
    for (std::size_t A = 0; A < w.dim(); ++A) {
        if (xc[A].is_zero()) continue;
        TractorTriple dA = tractor_derivative(w, P, A, t);
        for (std::size_t b = 0; b < n; ++b) out.nu[b] += xc[A] * dA.nu[b];
        out.rho += xc[A] * dA.rho;
        out.tau += xc[A] * dA.tau;
    }
    return out;
}

void check_tractor_invariance(const PathGeometry& g, const Scale& s, const RatExpr& gfac,
                              const std::vector<TractorTriple>& triples, CheckContext& ctx) {
    if (gfac.is_zero()) throw error("check_tractor_invariance: gfac must be nonzero");
    WeylStructure w(g, s);
    WeylStructure wh(g, Scale{s.g * gfac});
    SchoutenTensor P = schouten(w);
    SchoutenTensor Ph = schouten(wh);

    ctx.check("tractor.invariance", [&](CheckRun& t) {
        for (std::size_t k = 0; k < triples.size(); ++k) {
            TractorTriple moved = change_splitting(triples[k], w, gfac);
            for (std::size_t A = 0; A < w.dim(); ++A) {
                const VectorField& psi = w.adapted().fields[A];
                TractorTriple d1 =
                    change_splitting(tractor_derivative(w, P, A, triples[k]), w, gfac);
                TractorTriple d2 = tractor_derivative_vec(wh, Ph, psi, moved);
                std::string where =
                    "triple " + std::to_string(k) + ", direction " + std::to_string(A);
                for (std::size_t b = 0; b < w.n(); ++b)
                    t.zero(d1.nu[b] - d2.nu[b], where + ", nu slot");
                t.zero(d1.rho - d2.rho, where + ", rho slot");
                t.zero(d1.tau - d2.tau, where + ", tau slot");
            }
        }
    });
}

TractorTriple splitting_S_rho(const WeylStructure& w, const SchoutenTensor& P,
                              const DensitySection& rho) {
    (void)P;
    const std::size_t nv = w.nvars();
    TractorTriple t;
    t.scale_tag = w.scale();
    t.nu.assign(w.n(), RatExpr(nv));
    t.rho = rho.coeff;
    t.tau = -density_derivative(w, w.xi0(), rho.coeff);
    return t;
}

RatExpr rel_bgg_D_rho(const WeylStructure& w, const SchoutenTensor& P,
                      const DensitySection& rho) {
    TractorTriple S = splitting_S_rho(w, P, rho);
    TractorTriple d = tractor_derivative(w, P, 0, S);
    // Defining property of the splitting: the result lies in the bottom slot.
    for (const auto& c : d.nu)
        if (!c.is_zero()) throw error("rel_bgg_D_rho: top slot of nabla S(rho) is nonzero");
    if (!d.rho.is_zero()) throw error("rel_bgg_D_rho: middle slot of nabla S(rho) is nonzero");
    return d.tau;
}

NuSplit splitting_S_nu(const WeylStructure& w, const std::vector<RatExpr>& nu) {
    const std::size_t n = w.n(), nv = w.nvars();
    if (nu.size() != n) throw error("splitting_S_nu: component count mismatch");
    RatExpr div(nv);
    for (std::size_t a = 0; a < n; ++a) {
        RatExpr acc = w.eta(a).apply(nu[a]) + w.density_form().pair(w.eta(a)) * nu[a];
        for (std::size_t b = 0; b < n; ++b) {
            const RatExpr& G = w.Gamma(1 + a, 1 + b, 1 + a);
            if (!G.is_zero()) acc += nu[b] * G;
        }
        div += acc;
    }
    NuSplit out;
    out.nu = nu;
    out.rho = -(div / RatExpr::constant(nv, static_cast<long>(n)));
    return out;
}

Mat rel_bgg_D_nu(const WeylStructure& w, const std::vector<RatExpr>& nu) {
    const std::size_t n = w.n(), nv = w.nvars();
    NuSplit S = splitting_S_nu(w, nu);
    Mat D(n, n, nv);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            RatExpr acc = w.eta(a).apply(nu[b]) + w.density_form().pair(w.eta(a)) * nu[b];
            for (std::size_t c = 0; c < n; ++c) {
                const RatExpr& G = w.Gamma(1 + a, 1 + c, 1 + b);
                if (!G.is_zero()) acc += nu[c] * G;
            }
            if (a == b) acc += S.rho;
            D.at(a, b) = acc;
        }
    return D;
}

RatExpr invariant_op_D(const WeylStructure& w, const SchoutenTensor& P,
                       const DensitySection& rho) {
    RatExpr first = density_derivative(w, w.xi0(), rho.coeff);
    RatExpr second = density_derivative(w, w.xi0(), first);
    return second - P.P.at(0, 0) * rho.coeff;
}

void check_invariant_op(const PathGeometry& g, const Scale& s, const RatExpr& gfac,
                        const DensitySection& rho, CheckContext& ctx) {
    if (gfac.is_zero()) throw error("check_invariant_op: gfac must be nonzero");
    WeylStructure w(g, s);
    WeylStructure wh(g, Scale{s.g * gfac});
    SchoutenTensor P = schouten(w);
    SchoutenTensor Ph = schouten(wh);
    ctx.check("invop.residual", [&](CheckRun& t) {
        RatExpr d0 = invariant_op_D(w, P, rho);
        RatExpr d1 = invariant_op_D(wh, Ph, rho);
        // Values on (xi0, xi0) vs (gfac xi0, gfac xi0).
        t.zero(gfac * gfac * d0 - d1, "second-order operator on L");
    });
}

TractorTriple tractor_curvature(const WeylStructure& w, const SchoutenTensor& P, std::size_t A,
                                std::size_t B, const TractorTriple& t) {
    TractorTriple d1 = tractor_derivative(w, P, A, tractor_derivative(w, P, B, t));
    TractorTriple d2 = tractor_derivative(w, P, B, tractor_derivative(w, P, A, t));
    VectorField br = lie_bracket(w.adapted().fields[A], w.adapted().fields[B]);
    TractorTriple d3 = tractor_derivative_vec(w, P, br, t);
    TractorTriple out;
    out.scale_tag = t.scale_tag;
    out.rho = d1.rho - d2.rho - d3.rho;
    out.tau = d1.tau - d2.tau - d3.tau;
    for (std::size_t b = 0; b < w.n(); ++b) out.nu.push_back(d1.nu[b] - d2.nu[b] - d3.nu[b]);
    return out;
}

}  // namespace pathgeo
