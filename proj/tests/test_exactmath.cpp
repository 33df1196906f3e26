#include "doctest.h"

#include "tq/exactmath/binary_form.hpp"
#include "tq/exactmath/multipoly.hpp"
#include "tq/exactmath/plane_solver.hpp"
#include "tq/exactmath/resultant.hpp"
#include "tq/exactmath/roots.hpp"

#include <random>

using namespace tq;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

UniPoly random_unipoly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), coef(-5, 5);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& x : c)
        x = coef(rng);
    if (c.back() == 0)
        c.back() = 1;
    return UniPoly(c);
}

MultiPoly random_multipoly(std::mt19937& rng, const std::vector<std::string>& vars, unsigned max_deg) {
    std::uniform_int_distribution<int> coef(-4, 4), e(0, static_cast<int>(max_deg)), nterms(1, 5);
    MultiPoly p;
    for (int k = nterms(rng); k > 0; --k) {
        MultiPoly t = cst(coef(rng));
        for (const auto& v : vars)
            t *= pow(var(v), static_cast<unsigned>(e(rng)) / static_cast<unsigned>(vars.size()));
        p += t;
    }
    return p;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/7") == q(3, 7));
    CHECK(parse_rational(" -12 ") == q(-12));
    CHECK(parse_rational("6/-4") == q(-3, 2));
    CHECK(to_string(q(6, 4)) == "3/2");
    CHECK(to_string(q(-5)) == "-5");
    CHECK_THROWS_AS(parse_rational("1.5"), NonRational);
    CHECK_THROWS_AS(parse_rational("1/0"), NonRational);
    CHECK_THROWS_AS(parse_rational(""), NonRational);
    Rational r;
    CHECK(rational_sqrt(q(9, 4), r));
    CHECK(r == q(3, 2));
    CHECK_FALSE(rational_sqrt(q(2), r));
    CHECK_FALSE(rational_sqrt(q(-4), r));
}

TEST_CASE("univariate arithmetic") {
    UniPoly x = UniPoly::x();
    UniPoly p = (x - UniPoly::constant(1)) * (x - UniPoly::constant(1)) * (x + UniPoly::constant(2));
    CHECK(squarefree_part(p) == ((x - UniPoly::constant(1)) * (x + UniPoly::constant(2))));
    UniPoly sf = x * x + UniPoly::constant(1);
    CHECK(squarefree_part(sf) == sf);
    CHECK(*p.degree() == 3);
    CHECK_FALSE(UniPoly().degree().has_value());
    CHECK(root_multiplicity(p, 1) == 2);
    CHECK(gcd(p, x - UniPoly::constant(1)) == x - UniPoly::constant(1));
    auto [qq, rr] = divmod(p, x * x);
    CHECK(qq * x * x + rr == p);
    CHECK_THROWS_AS(divmod(p, UniPoly()), ZeroPolynomial);
    ExtendedGcd e = extended_gcd(x * x + UniPoly::constant(1), x + UniPoly::constant(1));
    CHECK(e.g == UniPoly::constant(1));
    CHECK(e.s * (x * x + UniPoly::constant(1)) + e.t * (x + UniPoly::constant(1)) == e.g);
}

TEST_CASE("resultants") {
    Rational a = q(3, 5), b = q(-7, 2);
    CHECK(resultant(UniPoly{-a, 1}, UniPoly{-b, 1}) == a - b);
    CHECK(resultant(UniPoly{0, 0, 1}, UniPoly{1, 1}) == 1);
    CHECK_THROWS_AS(resultant(UniPoly(), UniPoly{1, 1}), ZeroPolynomial);
    // Res(x^2 - 2, x^2 - 3) = prod (r^2 - 3) over r = +-sqrt2 = 1
    CHECK(resultant(UniPoly{-2, 0, 1}, UniPoly{-3, 0, 1}) == 1);
    // parametric: Res_y(y - u, y + u) = -2u
    ParamPoly p{UniPoly{0, -1}, UniPoly{1}}, r{UniPoly{0, 1}, UniPoly{1}};
    CHECK(resultant(p, r) == UniPoly{0, 2});
}

TEST_CASE("univariate discriminants") {
    Rational b = q(3), c = q(-5, 2);
    CHECK(discriminant_univariate(UniPoly{c, b, 1}) == b * b - 4 * c);
    Rational P = q(2, 3), Q = q(-7);
    CHECK(discriminant_univariate(UniPoly{Q, P, 0, 1}) == -4 * P * P * P - 27 * Q * Q);
    CHECK_THROWS_AS(discriminant_univariate(UniPoly{5}), DegreeZero);
    CHECK(discriminant_univariate(UniPoly{0, 0, 1}) == 0);
}

TEST_CASE("multivariate arithmetic") {
    MultiPoly x = var("x"), y = var("y");
    CHECK((x + y) * (x - y) == x * x - y * y);
    MultiPoly p = x * x * y + cst(3);
    CHECK(p + MultiPoly() == p);
    CHECK(p.derivative("x") == cst(2) * x * y);
    CHECK(cst(7).derivative("x").is_zero());
    MultiPoly X2 = var("X2"), X3 = var("X3"), t = var("t");
    CHECK((x * x + X3 * X3).substitute({{"X3", t * X2}}) == x * x + t * t * X2 * X2);
    CHECK(p.total_degree() == 3u);
    CHECK(p.degree_in("y") == 1u);
    CHECK(p.coefficient("x", 2) == y);
    CHECK(p.homogeneous_part(0) == cst(3));
    CHECK(exact_div(x * x - y * y, x + y) == x - y);
    CHECK_THROWS(exact_div(x * x + y, x + y));
    CHECK(p.evaluate_all({{"x", 2}, {"y", q(1, 2)}}) == 5);
    CHECK((x - x).is_zero());
    CHECK(p.to_string() == "x^2*y + 3");
}

TEST_CASE("binary forms and perfect squares") {
    // (s^2 - t^2)^2 = s^4 - 2 s^2 t^2 + t^4
    BinaryForm f = BinaryForm::from_coeffs({1, 0, -2, 0, 1});
    auto r = is_perfect_square(f);
    REQUIRE(r);
    CHECK(r->scalar == 1);
    CHECK((r->root == BinaryForm::from_coeffs({-1, 0, 1}) || r->root == BinaryForm::from_coeffs({1, 0, -1})));
    CHECK_FALSE(is_perfect_square(BinaryForm::from_coeffs({1, 0, 0, 0, 1})));
    // 2*(s t^2 + s^2 t)^2 is a square over Q(sqrt 2)
    BinaryForm g = BinaryForm::from_coeffs({0, 1, 1, 0});
    auto r2 = is_perfect_square(Rational(2) * (g * g));
    REQUIRE(r2);
    CHECK(r2->scalar == 2);
    CHECK(r2->scalar * (r2->root * r2->root) == Rational(2) * (g * g));
    CHECK_FALSE(is_perfect_square(BinaryForm::from_coeffs({0, 1, 0, 0})));
    CHECK(g.s_valuation() == 1);
    CHECK(g.t_valuation() == 1);
    CHECK(g.distinct_roots() == 3);
    CHECK(divides(BinaryForm::from_coeffs({0, 1}), g));
    CHECK(divides(BinaryForm::from_coeffs({1, 0}), g));
    CHECK_FALSE(divides(BinaryForm::from_coeffs({1, 1}), BinaryForm::from_coeffs({1, 2, 0})));
    CHECK(g(2, 3) == 2 * 9 + 4 * 3);
}

TEST_CASE("rational roots") {
    UniPoly p = UniPoly::from_roots({q(2, 3), q(-5), q(0), q(7, 11)}) * UniPoly{1, 0, 1};
    CHECK(rational_roots(p) == std::vector<Rational>{q(-5), q(0), q(7, 11), q(2, 3)});
    CHECK(rational_roots(UniPoly{-2, 0, 1}).empty());
    CHECK(rational_roots(pow(UniPoly{-3, 4}, 3)) == std::vector<Rational>{q(3, 4)});
}

TEST_CASE("zero-dimensional solving") {
    MultiPoly x = var("x"), y = var("y");
    auto pts = solve_affine2({x * x + y * y - cst(5), x * y - cst(2)}, "x", "y");
    CHECK(total_count(pts) == 4);
    std::vector<std::vector<Rational>> found;
    for (const auto& p : pts) {
        REQUIRE(p.is_rational());
        found.push_back(p.rational_coords());
    }
    std::sort(found.begin(), found.end());
    CHECK(found == std::vector<std::vector<Rational>>{{-2, -1}, {-1, -2}, {1, 2}, {2, 1}});

    // Irrational points stay as conjugate sets.
    auto irr = solve_affine2({x * x - cst(2), y - x}, "x", "y");
    CHECK(total_count(irr) == 2);

    // A constraint removes the points where it vanishes.
    auto some = solve_affine2({x * x + y * y - cst(5), x * y - cst(2)}, "x", "y", {x - cst(1)});
    CHECK(total_count(some) == 3);

    // Points sharing an x-coordinate need a shear.
    auto same_x = solve_affine2({x * x - cst(1), y * y - cst(4)}, "x", "y");
    CHECK(total_count(same_x) == 4);

    CHECK_THROWS_AS(solve_affine2({x * y, x * (y - cst(1))}, "x", "y"), PositiveDimensional);
    CHECK(solve_affine2({x, x - cst(1)}, "x", "y").empty());
    CHECK_THROWS_AS(solve_affine2({x * x - cst(1)}, "x", "y"), PositiveDimensional);
}

TEST_CASE("projective plane solving") {
    MultiPoly X = var("X"), Y = var("Y"), Z = var("Z");
    // Three coordinate points plus (1:1:1): xy(x-y), yz(y-z) style conics
    std::vector<MultiPoly> eqs{X * Y - Y * Z, X * Z - Y * Z};
    auto pts = solve_projective2(eqs, {"X", "Y", "Z"});
    CHECK(total_count(pts) == 4);
    auto rest = solve_projective2(eqs, {"X", "Y", "Z"}, {X - Y});
    CHECK(total_count(rest) == 2);
    CHECK_THROWS_AS(solve_projective2({X * Y, X * Z}, {"X", "Y", "Z"}), PositiveDimensional);
}

TEST_CASE("properties on random instances") {
    std::mt19937 rng(20240611);
    const std::vector<std::string> vars{"x", "y", "z"};
    for (int trial = 0; trial < 100; ++trial) {
        MultiPoly p = random_multipoly(rng, vars, 6), r = random_multipoly(rng, vars, 6),
                  s = random_multipoly(rng, vars, 6);
        CHECK((p + r) * s == p * s + r * s);
        // Composition of substitutions.
        MultiPoly bx = random_multipoly(rng, {"y", "z"}, 3), by = random_multipoly(rng, {"z"}, 3);
        MultiPoly once = p.substitute({{"x", bx.substitute({{"y", by}})}, {"y", by}});
        MultiPoly twice = p.substitute({{"x", bx}}).substitute({{"y", by}});
        CHECK(once == twice);
    }
    for (int trial = 0; trial < 100; ++trial) {
        UniPoly a = random_unipoly(rng, 4), b = random_unipoly(rng, 4);
        if (!a.degree() || *a.degree() == 0)
            a = a * UniPoly{1, 1} + UniPoly::x();
        UniPoly qf = squarefree_part(b * UniPoly{3, 0, 1});
        UniPoly g = gcd(a, qf);
        UniPoly aa = exact_div(a, g);
        if (*aa.degree() == 0)
            continue;
        CHECK(squarefree_part(aa * aa * qf) == squarefree_part(aa * qf));
    }
    for (int trial = 0; trial < 100; ++trial) {
        UniPoly a = random_unipoly(rng, 4), b = random_unipoly(rng, 4), c = random_unipoly(rng, 2);
        if (a.is_constant() && b.is_constant())
            continue;
        bool share = trial % 2 == 0;
        if (share) {
            a = a * (c + UniPoly::x());
            b = b * (c + UniPoly::x());
        }
        bool nonconst = !gcd(a, b).is_constant();
        CHECK((resultant(a, b) == 0) == nonconst);
    }
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> deg(0, 6), coef(-6, 6);
        std::vector<Rational> c(deg(rng) + 1);
        for (auto& x : c)
            x = coef(rng);
        if (c.back() == 0)
            c.back() = 1;
        BinaryForm g = BinaryForm::from_coeffs(c);
        if (g.is_zero())
            continue;
        auto r = is_perfect_square(g * g);
        REQUIRE(r);
        CHECK(r->scalar * (r->root * r->root) == g * g);
        CHECK((r->root == g || r->root == Rational(-1) * g));
    }
}
