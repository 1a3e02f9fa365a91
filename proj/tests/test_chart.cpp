#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pathgeo/chart.hpp"

using namespace pathgeo;

namespace {

const std::vector<std::string> kXYP{"x", "y", "p"};

RatExpr P(const std::string& s) { return parse_expr(s, kXYP); }

VectorField field(const std::string& a, const std::string& b, const std::string& c) {
    VectorField v(3, 3);
    v.c[0] = P(a);
    v.c[1] = P(b);
    v.c[2] = P(c);
    return v;
}

VectorField random_field(std::mt19937_64& rng) {
    VectorField v(3, 3);
    for (auto& comp : v.c) {
        Poly p(3);
        int terms = static_cast<int>(rand_range(rng, 0, 3));
        for (int t = 0; t < terms; ++t) {
            Monomial m(3, 0);
            for (auto& e : m) e = static_cast<std::uint32_t>(rand_range(rng, 0, 2));
            p.add_term(m, Int(rand_range(rng, -5, 5)));
        }
        comp = RatExpr::from_poly(p);
    }
    return v;
}

RatExpr random_scalar(std::mt19937_64& rng) {
    Poly p(3);
    for (int t = 0; t < 3; ++t) {
        Monomial m(3, 0);
        for (auto& e : m) e = static_cast<std::uint32_t>(rand_range(rng, 0, 1));
        p.add_term(m, Int(rand_range(rng, -4, 4)));
    }
    if (p.is_zero()) p = Poly::constant(3, 1);
    return RatExpr::from_poly(p);
}

}  // namespace

TEST_CASE("chart: construction rules") {
    CHECK_NOTHROW(Chart(1, {"x", "y", "p"}));
    CHECK_THROWS_AS(Chart(1, {"x", "y"}), error);
    CHECK_THROWS_AS(Chart(1, {"x", "x", "p"}), error);
    CHECK_THROWS_AS(Chart(0, {"x"}), error);
    Chart c(2, {"x", "y1", "y2", "p1", "p2"});
    CHECK(c.dim() == 5);
    CHECK(c.index_of("p2") == 4);
    CHECK_THROWS_AS(c.index_of("q"), error);
}

TEST_CASE("lie_bracket: constant-coefficient examples") {
    VectorField X = field("1", "p", "0");  // d_x + p d_y
    VectorField dp = coordinate_field(3, 2);
    VectorField br = lie_bracket(X, dp);
    CHECK(br.c[0].is_zero());
    CHECK(br.c[1].equals(P("-1")));  // -d_y
    CHECK(br.c[2].is_zero());
    CHECK(lie_bracket(X, X).is_zero());
}

TEST_CASE("lie_bracket: hand-differentiated oracle") {
    // [d_x + p d_y + p^2 d_p, d_p] = -d_y - 2p d_p
    VectorField X = field("1", "p", "p^2");
    VectorField br = lie_bracket(X, coordinate_field(3, 2));
    CHECK(br.c[0].is_zero());
    CHECK(br.c[1].equals(P("-1")));
    CHECK(br.c[2].equals(P("-2*p")));
}

TEST_CASE("lie_bracket: Jacobi identity") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
        VectorField X = random_field(rng), Y = random_field(rng), Z = random_field(rng);
        VectorField jac = lie_bracket(lie_bracket(X, Y), Z) + lie_bracket(lie_bracket(Y, Z), X) +
                          lie_bracket(lie_bracket(Z, X), Y);
        CHECK(jac.is_zero());
    }
}

TEST_CASE("lie_bracket: Leibniz in the second slot") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 60; ++i) {
        VectorField X = random_field(rng), Y = random_field(rng);
        RatExpr f = random_scalar(rng);
        VectorField lhs = lie_bracket(X, Y.scaled(f));
        VectorField rhs = Y.scaled(X.apply(f)) + lie_bracket(X, Y).scaled(f);
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("d_exterior: closed coordinate form") {
    OneForm dx(3, 3);
    dx.c[0] = RatExpr::constant(3, 1);
    std::mt19937_64 rng(41);
    for (int i = 0; i < 30; ++i)
        CHECK(d_exterior(dx, random_field(rng), random_field(rng)).is_zero());
}

TEST_CASE("d_exterior: x dy and antisymmetry") {
    OneForm xdy(3, 3);
    xdy.c[1] = P("x");
    CHECK(d_exterior(xdy, coordinate_field(3, 0), coordinate_field(3, 1)).is_one());
    std::mt19937_64 rng(43);
    for (int i = 0; i < 30; ++i) {
        VectorField X = random_field(rng), Y = random_field(rng);
        OneForm beta(3, 3);
        for (auto& c : beta.c) c = random_scalar(rng);
        CHECK((d_exterior(beta, X, Y) + d_exterior(beta, Y, X)).is_zero());
    }
}

TEST_CASE("invert_frame: exact coframe and recombination") {
    std::vector<VectorField> fields{field("1", "p", "0"), field("0", "0", "1"),
                                    field("0", "-1", "0")};
    FrameBasis F = invert_frame(fields);
    // frame * coframe = identity
    for (std::size_t A = 0; A < 3; ++A)
        for (std::size_t B = 0; B < 3; ++B) {
            RatExpr acc(3);
            for (std::size_t i = 0; i < 3; ++i) acc += F.coframe.at(A, i) * fields[B].c[i];
            CHECK(acc.equals(RatExpr::constant(3, A == B ? 1 : 0)));
        }
    std::mt19937_64 rng(47);
    for (int i = 0; i < 20; ++i) {
        VectorField X = random_field(rng);
        auto coeffs = express_in_frame(X, F);
        VectorField back(3, 3);
        for (std::size_t A = 0; A < 3; ++A) back = back + fields[A].scaled(coeffs[A]);
        CHECK((back - X).is_zero());
    }
}

TEST_CASE("invert_frame: generic singularity detected") {
    std::vector<VectorField> dep{field("1", "0", "0"), field("x", "0", "0"),
                                 field("0", "0", "1")};
    CHECK_THROWS_AS(invert_frame(dep), singular_matrix);
}

TEST_CASE("matrix: Bareiss det and inverse on rational-function entries") {
    // Full gcd reduction keeps the fraction-heavy roundtrip products small.
    set_gcd_mode(GcdMode::full);
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 12; ++trial) {
        Mat A(3, 3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                RatExpr num = random_scalar(rng);
                RatExpr den = random_scalar(rng);
                A.at(i, j) = den.is_zero() || trial % 2 == 0 ? num : num / den;
            }
        RatExpr d = A.det();
        if (d.is_zero()) {
            CHECK_THROWS_AS(A.inverse(), singular_matrix);
            continue;
        }
        Mat inv = A.inverse();
        Mat prod = A * inv;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(prod.at(i, j).equals(RatExpr::constant(3, i == j ? 1 : 0)));
    }
    set_gcd_mode(GcdMode::content);
}

TEST_CASE("solve_linear: consistency detection") {
    Mat A(3, 1, 3);
    A.at(0, 0) = P("1");
    A.at(1, 0) = P("p");
    A.at(2, 0) = P("0");
    std::vector<RatExpr> good{P("x"), P("x*p"), P("0")};
    auto sol = solve_linear(A, good);
    REQUIRE(sol.has_value());
    CHECK((*sol)[0].equals(P("x")));
    std::vector<RatExpr> bad{P("x"), P("1"), P("0")};
    CHECK_FALSE(solve_linear(A, bad).has_value());
}
