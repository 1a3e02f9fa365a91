#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathgeo/bgg.hpp"

using namespace pathgeo;

namespace {

PathGeometry flat() { return from_ode({1, {"0"}}); }
PathGeometry quad() { return from_ode({1, {"p^2"}}); }
PathGeometry sys5() { return from_ode({2, {"p1^2", "y1"}}); }

RatExpr scalar(const PathGeometry& g, const std::string& s) {
    return parse_expr(s, g.chart.coords);
}

HStarSection estar(const PathGeometry& g, const std::string& aE) {
    HStarSection a0;
    a0.aE = scalar(g, aE);
    a0.aV.assign(g.n(), RatExpr(g.nvars()));
    return a0;
}

bool all_pass(const Report& r) {
    for (const auto& e : r.entries)
        if (e.status != Status::PASS) {
            MESSAGE(e.id, " -> ", e.witness);
            return false;
        }
    return true;
}

}  // namespace

TEST_CASE("L_op: flat model with a0 = (1,0) gives dx") {
    PathGeometry g = flat();
    OneForm alpha = L_op(g, estar(g, "1"));
    CHECK(alpha.c[0].is_one());
    CHECK(alpha.c[1].is_zero());
    CHECK(alpha.c[2].is_zero());
}

TEST_CASE("L_op: zero section gives zero") {
    PathGeometry g = quad();
    OneForm alpha = L_op(g, estar(g, "0"));
    CHECK(alpha.is_zero());
}

TEST_CASE("L_op: reproduces a known closed completion") {
    // oracle: alpha = dx + 2y dy is closed, kills V, and restricts on E to
    // 1 + 2yp; uniqueness forces L((1+2yp, 0)) = alpha.
    PathGeometry g = flat();
    OneForm alpha = L_op(g, estar(g, "1+2*y*p"));
    CHECK(alpha.c[0].is_one());
    CHECK(alpha.c[1].equals(scalar(g, "2*y")));
    CHECK(alpha.c[2].is_zero());
}

TEST_CASE("L_op: defining residuals vanish on every fixture") {
    for (PathGeometry g : {flat(), quad(), sys5()}) {
        HStarSection a0;
        a0.aE = scalar(g, "1") + scalar(g, g.chart.coords[1]);
        a0.aV.assign(g.n(), RatExpr(g.nvars()));
        a0.aV[0] = scalar(g, g.chart.coords[0]);
        OneForm alpha = L_op(g, a0);
        CHECK(alpha.pair(g.xiE).equals(a0.aE));
        for (std::size_t a = 0; a < g.n(); ++a) {
            CHECK(alpha.pair(g.etas[a]).equals(a0.aV[a]));
            CHECK(d_exterior(alpha, g.xiE, g.etas[a]).is_zero());
        }
    }
}

TEST_CASE("L_op is linear") {
    PathGeometry g = quad();
    HStarSection a0 = estar(g, "x+1");
    HStarSection b0;
    b0.aE = scalar(g, "p^2");
    b0.aV = {scalar(g, "y")};
    HStarSection sum;
    sum.aE = a0.aE + b0.aE;
    sum.aV = {b0.aV[0]};
    OneForm lhs = L_op(g, sum);
    OneForm rhs = L_op(g, a0) + L_op(g, b0);
    CHECK((lhs - rhs).is_zero());
}

TEST_CASE("VV_component: vanishes for E*-sections, empty at n=1") {
    PathGeometry g1 = quad();
    CHECK(VV_component(g1, estar(g1, "x*p+y")).empty());
    PathGeometry g2 = sys5();
    auto vv = VV_component(g2, estar(g2, "y1+x^2"));
    REQUIRE(vv.size() == 1);
    CHECK(vv[0].is_zero());
}

TEST_CASE("VV_component: nontrivial value checked against d_exterior directly") {
    PathGeometry g = sys5();
    HStarSection a0;
    a0.aE = RatExpr(5);
    a0.aV = {scalar(g, "y1"), RatExpr(5)};
    auto vv = VV_component(g, a0);
    REQUIRE(vv.size() == 1);
    OneForm alpha = L_op(g, a0);
    CHECK(vv[0].equals(d_exterior(alpha, g.etas[0], g.etas[1])));
}

TEST_CASE("D_op: flat model closed sections are in the kernel") {
    PathGeometry g = flat();
    for (const char* aE : {"1", "5"}) {
        DOutput D = D_op(g, estar(g, aE));
        CHECK(D.is_zero());
    }
    // and a non-closed one is not
    DOutput D = D_op(g, estar(g, "y"));
    CHECK_FALSE(D.is_zero());
}

TEST_CASE("D_op: rejects sections with aV != 0") {
    PathGeometry g = quad();
    HStarSection bad;
    bad.aE = scalar(g, "1");
    bad.aV = {scalar(g, "1")};
    CHECK_THROWS_AS(D_op(g, bad), error);
}

TEST_CASE("D_op: symmetry on the 5d system, nonzero sample value frozen") {
    PathGeometry g = sys5();
    HStarSection a0 = estar(g, "1+y2");
    DOutput D = D_op(g, a0);
    CHECK(D.S.at(0, 1).equals(D.S.at(1, 0)));
    CHECK_FALSE(D.is_zero());
}

TEST_CASE("is_distinguished: scale 1 on ODE models, and a counterexample") {
    for (PathGeometry g : {flat(), quad(), sys5()}) {
        Scale s{RatExpr::constant(g.dim(), 1)};
        DistinguishedReport rep = is_distinguished(g, s);
        CHECK(rep.distinguished);
        CHECK(rep.dL_zero);
    }
    PathGeometry g = quad();
    DistinguishedReport rep = is_distinguished(g, Scale{scalar(g, "1+p^2")});
    CHECK_FALSE(rep.distinguished);
}

TEST_CASE("Prop 3.1(4) as a test: D = 0 forces the full two-form to vanish") {
    // a0 = 1/(1+x^2) corresponds to the scale 1+x^2 pulled back from the leaf
    // space: alpha = dx/(1+x^2) is closed.
    PathGeometry g = quad();
    HStarSection a0;
    a0.aE = RatExpr::constant(3, 1) / scalar(g, "1+x^2");
    a0.aV = {RatExpr(3)};
    DOutput D = D_op(g, a0);
    CHECK(D.is_zero());
    DistinguishedReport rep = is_distinguished(g, Scale{scalar(g, "1+x^2")});
    CHECK(rep.distinguished);
    CHECK(rep.dL_zero);
}

TEST_CASE("find_distinguished: ODE fixtures certify scale 1") {
    for (PathGeometry g : {flat(), quad(), sys5()}) {
        auto s = find_distinguished(g);
        REQUIRE(s.has_value());
        CHECK(s->g.is_one());
    }
}

TEST_CASE("find_distinguished: non-ODE frame input is unsupported") {
    PathGeometry g = flat();
    g.etas[0] = g.etas[0].scaled(scalar(g, "x"));  // V = span(x d_p)
    CHECK(validate(g).ok());                       // still a path geometry generically
    CHECK_FALSE(find_distinguished(g).has_value());
}

TEST_CASE("check_distinguished_vanishing: fixtures pass; precondition enforced") {
    for (PathGeometry g : {flat(), quad(), sys5()}) {
        WeylStructure w(g, Scale{RatExpr::constant(g.dim(), 1)});
        CheckContext ctx(ZeroTester(), g.chart.coords);
        check_distinguished_vanishing(w, ctx);
        CHECK(all_pass(ctx.report()));
        CHECK(ctx.report().entries.size() == 3);
    }
    PathGeometry g = quad();
    WeylStructure w(g, Scale{scalar(g, "1+p^2")});
    CheckContext ctx(ZeroTester(), g.chart.coords);
    CHECK_THROWS_AS(check_distinguished_vanishing(w, ctx), error);
}

TEST_CASE("non-distinguished scale: the extra-vanishing blocks are nonzero") {
    PathGeometry g = quad();
    WeylStructure w(g, Scale{scalar(g, "1+p^2")});
    TensorComponents T = torsion(w);
    bool some_nonzero = false;
    for (std::size_t C = 0; C < 3; ++C)
        if (!tors_at(T, 1, 2, C).is_zero()) some_nonzero = true;
    CHECK(some_nonzero);
}
