#include "pathgeo/runner.hpp"

#include <random>

#include "pathgeo/bgg.hpp"
#include "pathgeo/tractor.hpp"

namespace pathgeo {

namespace {

RatExpr pseudo_random_poly(std::mt19937_64& rng, std::size_t nvars) {
    Poly p(nvars);
    int terms = static_cast<int>(rand_range(rng, 1, 3));
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars, 0);
        for (auto& e : m) e = static_cast<std::uint32_t>(rand_range(rng, 0, 1));
        long c = rand_range(rng, -4, 4);
        p.add_term(m, Int(c == 0 ? 1 : c));
    }
    if (p.is_zero()) p = Poly::constant(nvars, 1);
    return RatExpr::from_poly(p);
}

TractorTriple pseudo_random_triple(std::mt19937_64& rng, const WeylStructure& w) {
    TractorTriple t;
    t.scale_tag = w.scale();
    for (std::size_t a = 0; a < w.n(); ++a) t.nu.push_back(pseudo_random_poly(rng, w.nvars()));
    t.rho = pseudo_random_poly(rng, w.nvars());
    t.tau = pseudo_random_poly(rng, w.nvars());
    return t;
}

void run_bgg_suite(const SpecInputs& in, CheckContext& ctx) {
    const PathGeometry& g = in.geometry;
    const std::size_t n = g.n(), nv = g.nvars();

    HStarSection dual;
    dual.aE = RatExpr::constant(nv, 1) / in.scale.g;
    dual.aV.assign(n, RatExpr(nv));

    ctx.check("bgg.l_defining", [&](CheckRun& t) {
        OneForm alpha = L_op(g, dual);
        t.zero(alpha.pair(g.xiE) - dual.aE, "alpha restricted to E");
        for (std::size_t a = 0; a < n; ++a) {
            t.zero(alpha.pair(g.etas[a]), "alpha restricted to V");
            t.zero(d_exterior(alpha, g.xiE, g.etas[a]), "d(alpha) on E x V");
        }
    });

    ctx.check("bgg.l_linear", [&](CheckRun& t) {
        HStarSection b0;
        b0.aE = RatExpr::variable(nv, 1);
        b0.aV.assign(n, RatExpr(nv));
        for (std::size_t a = 0; a < n; ++a) b0.aV[a] = RatExpr::variable(nv, 0);
        OneForm sum = L_op(g, dual) + L_op(g, b0);
        HStarSection both;
        both.aE = dual.aE + b0.aE;
        both.aV = b0.aV;
        OneForm direct = L_op(g, both);
        t.zero_all((direct - sum).c, "L additivity");
    });

    ctx.check("bgg.vv_estar", [&](CheckRun& t) {
        // dL(a0) on V x V vanishes for sections of E*.
        HStarSection e0;
        e0.aE = RatExpr::variable(nv, 0) + RatExpr::constant(nv, 1);
        e0.aV.assign(n, RatExpr(nv));
        t.zero_all(VV_component(g, e0), "Lambda^2 V* component");
    });

    ctx.check("bgg.d_symmetry", [&](CheckRun& t) {
        DOutput D = D_op(g, dual);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                t.zero(D.S.at(a, b) - D.S.at(b, a), "S symmetry");
    });

    ctx.check("bgg.prop4_implication", [&](CheckRun& t) {
        DistinguishedReport rep = is_distinguished(g, in.scale);
        if (rep.distinguished) t.is_true(rep.dL_zero, "D=0 but dL != 0");
    });
}

void run_distinguished_suite(const SpecInputs& in, CheckContext& ctx) {
    const PathGeometry& g = in.geometry;
    auto found = find_distinguished(g);
    if (!found) {
        ctx.unsupported("bgg.distinguished.scale", "geometry is not in ODE-chart form");
        ctx.skip("bgg.distinguished.tau_vq", "no distinguished scale available");
        ctx.skip("bgg.distinguished.curv_h2v", "no distinguished scale available");
        ctx.skip("bgg.distinguished.dalpha", "no distinguished scale available");
        ctx.skip("schouten.distinguished_vh", "no distinguished scale available");
        return;
    }
    ctx.check("bgg.distinguished.scale", [&](CheckRun& t) {
        t.is_true(is_distinguished(g, *found).distinguished, "returned scale not certified");
    });
    WeylStructure w(g, *found);
    check_distinguished_vanishing(w, ctx);
    check_schouten_distinguished(w, ctx);
}

void run_schouten_suite(const SpecInputs& in, CheckContext& ctx) {
    const PathGeometry& g = in.geometry;
    WeylStructure w(g, in.scale);
    SchoutenTensor P = schouten(w);
    const std::size_t n = g.n();

    ctx.check("schouten.structural", [&](CheckRun& t) {
        for (std::size_t a = 0; a < n; ++a)
            t.zero(P.P.at(0, 1 + a) + 2 * P.P.at(1 + a, 0), "P(xi,eta) + 2 P(eta,xi)");
    });

    ctx.check("schouten.rl_consistency", [&](CheckRun& t) {
        // The difference formula in the mixed block must reproduce R^L.
        DensityConnectionForm conn = density_connection(w);
        for (std::size_t a = 0; a < n; ++a) {
            RatExpr diff = P.P.at(1 + n + a, 0) - P.P.at(0, 1 + n + a);
            t.zero(diff + density_curvature(w, conn, w.zeta(a), w.xi0()), "difference vs R^L");
        }
    });

    check_density_transform(g, in.scale, in.scale_change, ctx);
    check_partial_invariance(g, in.scale, in.scale_change, ctx);
    check_schouten_transform(g, in.scale, in.scale_change, ctx);
}

void run_tractor_suite(const SpecInputs& in, const RunOptions& opt, CheckContext& ctx) {
    const PathGeometry& g = in.geometry;
    const std::size_t n = g.n(), nv = g.nvars();
    WeylStructure w(g, in.scale);
    SchoutenTensor P = schouten(w);
    std::mt19937_64 rng(opt.seed ^ 0x7261637470UL);

    std::vector<TractorTriple> triples;
    for (int k = 0; k < 3; ++k) triples.push_back(pseudo_random_triple(rng, w));

    check_tractor_invariance(g, in.scale, in.scale_change, triples, ctx);

    const RatExpr& gfac = in.scale_change;
    ctx.check("tractor.roundtrip", [&](CheckRun& t) {
        WeylStructure wh(g, Scale{in.scale.g * gfac});
        for (const auto& tr : triples) {
            TractorTriple back =
                change_splitting(change_splitting(tr, w, gfac), wh,
                                 RatExpr::constant(nv, 1) / gfac);
            for (std::size_t b = 0; b < n; ++b) t.zero(back.nu[b] - tr.nu[b], "nu");
            t.zero(back.rho - tr.rho, "rho");
            t.zero(back.tau - tr.tau, "tau");
        }
    });

    ctx.check("tractor.composition", [&](CheckRun& t) {
        RatExpr g2 = RatExpr::constant(nv, 1) + RatExpr::variable(nv, 0);
        WeylStructure wh(g, Scale{in.scale.g * gfac});
        for (const auto& tr : triples) {
            TractorTriple two_steps = change_splitting(change_splitting(tr, w, gfac), wh, g2);
            TractorTriple one_step = change_splitting(tr, w, gfac * g2);
            for (std::size_t b = 0; b < n; ++b) t.zero(two_steps.nu[b] - one_step.nu[b], "nu");
            t.zero(two_steps.rho - one_step.rho, "rho");
            t.zero(two_steps.tau - one_step.tau, "tau");
        }
    });

    ctx.check("tractor.bottom_slot", [&](CheckRun& t) {
        // (0,0,tau) only rebases: the bottom slot is scale-covariant alone.
        TractorTriple tau_only;
        tau_only.scale_tag = w.scale();
        tau_only.nu.assign(n, RatExpr(nv));
        tau_only.rho = RatExpr(nv);
        tau_only.tau = pseudo_random_poly(rng, nv);
        TractorTriple moved = change_splitting(tau_only, w, gfac);
        for (std::size_t b = 0; b < n; ++b) t.zero(moved.nu[b], "nu stays zero");
        t.zero(moved.rho, "rho stays zero");
        t.zero(moved.tau - gfac * tau_only.tau, "tau rebases by gfac");
    });

    ctx.check("tractor.t0_preserved", [&](CheckRun& t) {
        TractorTriple t0;
        t0.scale_tag = w.scale();
        t0.nu.assign(n, RatExpr(nv));
        t0.rho = pseudo_random_poly(rng, nv);
        t0.tau = pseudo_random_poly(rng, nv);
        TractorTriple d = tractor_derivative(w, P, 0, t0);
        for (std::size_t b = 0; b < n; ++b) t.zero(d.nu[b], "nu slot of E-derivative");
    });

    ctx.check("tractor.upper_tau_indep", [&](CheckRun& t) {
        TractorTriple t1 = triples[0];
        TractorTriple t2 = t1;
        t2.tau = t2.tau + pseudo_random_poly(rng, nv);
        for (std::size_t a = 0; a < n; ++a) {
            TractorTriple d1 = tractor_derivative(w, P, 1 + a, t1);
            TractorTriple d2 = tractor_derivative(w, P, 1 + a, t2);
            for (std::size_t b = 0; b < n; ++b) t.zero(d1.nu[b] - d2.nu[b], "nu slot");
            t.zero(d1.rho - d2.rho, "rho slot");
        }
    });

    ctx.check("tractor.leibniz", [&](CheckRun& t) {
        RatExpr f = pseudo_random_poly(rng, nv);
        const TractorTriple& tr = triples[0];
        TractorTriple ft;
        ft.scale_tag = tr.scale_tag;
        for (std::size_t b = 0; b < n; ++b) ft.nu.push_back(f * tr.nu[b]);
        ft.rho = f * tr.rho;
        ft.tau = f * tr.tau;
        for (std::size_t A = 0; A < w.dim(); ++A) {
            TractorTriple lhs = tractor_derivative(w, P, A, ft);
            TractorTriple d = tractor_derivative(w, P, A, tr);
            RatExpr Xf = w.adapted().fields[A].apply(f);
            for (std::size_t b = 0; b < n; ++b)
                t.zero(lhs.nu[b] - (Xf * tr.nu[b] + f * d.nu[b]), "Leibniz nu");
            t.zero(lhs.rho - (Xf * tr.rho + f * d.rho), "Leibniz rho");
            t.zero(lhs.tau - (Xf * tr.tau + f * d.tau), "Leibniz tau");
        }
    });

    DensitySection rho{pseudo_random_poly(rng, nv)};
    WeylStructure wh(g, Scale{in.scale.g * gfac});
    SchoutenTensor Ph = schouten(wh);

    ctx.check("tractor.s_rho.defining", [&](CheckRun& t) {
        TractorTriple S = splitting_S_rho(w, P, rho);
        TractorTriple d = tractor_derivative(w, P, 0, S);
        for (std::size_t b = 0; b < n; ++b) t.zero(d.nu[b], "top slot");
        t.zero(d.rho, "middle slot");
    });

    ctx.check("tractor.s_rho.scale_indep", [&](CheckRun& t) {
        TractorTriple moved = change_splitting(splitting_S_rho(w, P, rho), w, gfac);
        TractorTriple direct = splitting_S_rho(wh, Ph, rho);
        for (std::size_t b = 0; b < n; ++b) t.zero(moved.nu[b] - direct.nu[b], "nu");
        t.zero(moved.rho - direct.rho, "rho");
        t.zero(moved.tau - direct.tau, "tau");
    });

    std::vector<RatExpr> nu_section;
    for (std::size_t a = 0; a < n; ++a) nu_section.push_back(pseudo_random_poly(rng, nv));

    ctx.check("tractor.s_nu.tracefree", [&](CheckRun& t) {
        Mat D = rel_bgg_D_nu(w, nu_section);
        RatExpr trace(nv);
        for (std::size_t a = 0; a < n; ++a) trace += D.at(a, a);
        t.zero(trace, "trace of D(nu)");
    });

    ctx.check("tractor.s_nu.scale_indep", [&](CheckRun& t) {
        NuSplit direct = splitting_S_nu(wh, nu_section);
        NuSplit base = splitting_S_nu(w, nu_section);
        OneForm df = dlog(gfac, w.dim());
        RatExpr df_nu(nv);
        for (std::size_t a = 0; a < n; ++a) df_nu += nu_section[a] * df.pair(w.eta(a));
        t.zero(direct.rho - (base.rho - df_nu), "middle slot transforms by -df(nu)");
    });

    ctx.check("tractor.curvature_info", [&](CheckRun& t) {
        // Expected-from-theory observation, never a failure: report whether
        // the tractor curvature vanishes identically on basis sections.
        bool zero = true;
        TractorTriple basis;
        basis.scale_tag = w.scale();
        basis.nu.assign(n, RatExpr(nv));
        basis.rho = RatExpr::constant(nv, 1);
        basis.tau = RatExpr(nv);
        for (std::size_t A = 0; A < w.dim() && zero; ++A)
            for (std::size_t B = A + 1; B < w.dim() && zero; ++B) {
                TractorTriple R = tractor_curvature(w, P, A, B, basis);
                for (const auto& c : R.nu) zero = zero && c.is_zero();
                zero = zero && R.rho.is_zero() && R.tau.is_zero();
            }
        t.note(zero ? "tractor curvature vanishes identically"
                    : "tractor curvature nonzero (informational)");
    });
}

void run_invariant_op_suite(const SpecInputs& in, CheckContext& ctx) {
    DensitySection rho{RatExpr::variable(in.geometry.nvars(), 0)};
    check_invariant_op(in.geometry, in.scale, in.scale_change, rho, ctx);
}

}  // namespace

Report run_suites(const GeometrySpec& spec, const RunOptions& opt) {
    std::set<std::string> suites = opt.suites.empty() ? spec.suites : opt.suites;
    bool all = suites.count("all") > 0;
    auto wants = [&](const char* s) { return all || suites.count(s) > 0; };

    SpecInputs in = build_inputs(spec);
    ZeroTester tester = opt.randomized ? ZeroTester(opt.trials, opt.bound, opt.seed) : ZeroTester();
    CheckContext ctx(tester, in.geometry.chart.coords);

    ValidationReport val = validate(in.geometry);
    if (wants("validate")) {
        ctx.check("validate.independent",
                  [&](CheckRun& t) { t.is_true(val.independent, val.witness); });
        ctx.check("validate.involutive",
                  [&](CheckRun& t) { t.is_true(val.involutive, val.witness); });
        ctx.check("validate.levi",
                  [&](CheckRun& t) { t.is_true(val.levi_nondegenerate, val.witness); });
    }
    if (!val.ok()) {
        for (const char* s : {"weyl", "bgg", "distinguished", "schouten", "tractor",
                              "invariant-op"})
            if (wants(s)) ctx.skip(std::string(s) + ".suite", "geometry validation failed");
        return ctx.take_report();
    }

    if (wants("weyl")) {
        WeylStructure w(in.geometry, in.scale);
        check_characterization(w, ctx);
        check_tors_curv(w, ctx);
        check_trace_identities(w, ctx);
        check_scale_transform(in.geometry, in.scale, in.scale_change, ctx);
    }
    if (wants("bgg")) run_bgg_suite(in, ctx);
    if (wants("distinguished")) run_distinguished_suite(in, ctx);
    if (wants("schouten")) run_schouten_suite(in, ctx);
    if (wants("tractor")) run_tractor_suite(in, opt, ctx);
    if (wants("invariant-op")) run_invariant_op_suite(in, ctx);
    return ctx.take_report();
}

}  // namespace pathgeo
