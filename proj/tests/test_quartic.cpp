#include "doctest.h"

#include "tq/exactmath/roots.hpp"
#include "tq/quartic/fibration.hpp"
#include "tq/quartic/lines.hpp"
#include "tq/quartic/sextic.hpp"

#include <json.hpp>

#include <fstream>
#include <random>
#include <set>

using namespace tq;

namespace {

QuarticCoefficients load_sample(const std::string& file) {
    std::ifstream in(std::string(TQ_DATA_DIR) + "/" + file);
    auto j = nlohmann::json::parse(in);
    std::array<Rational, 12> v;
    for (std::size_t i = 0; i < 12; ++i)
        v[i] = parse_rational(j.at(QuarticCoefficients::names()[i]).get<std::string>());
    return QuarticCoefficients::from_values(v, parse_rational(j.value("delta", std::string("1"))));
}

const TetraQuartic& reference() {
    static const TetraQuartic q = build_quartic(load_sample("reference_sample.json"));
    return q;
}

const TetraQuartic& hessian_type() {
    static const TetraQuartic q = build_quartic(load_sample("hessian_sample.json"));
    return q;
}

UniPoly from_strings(const std::vector<std::string>& c) {
    std::vector<Rational> r;
    for (const auto& s : c)
        r.push_back(parse_rational(s));
    return UniPoly(r);
}

// discriminant with every rational root removed, as a primitive integer polynomial
UniPoly irrational_part(UniPoly d) {
    for (const Rational& r : rational_roots(d))
        while (root_multiplicity(d, r) > 0)
            d = exact_div(d, UniPoly{-r, 1});
    return d.primitive();
}

QuarticCoefficients random_sample(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
    std::array<Rational, 12> v;
    for (auto& x : v) {
        int n = 0;
        while (n == 0)
            n = num(rng);
        x = make_rational(n, den(rng));
    }
    return QuarticCoefficients::from_values(v);
}

ProjectivePoint pt(std::initializer_list<long> c) {
    ProjectivePoint p;
    for (long x : c)
        p.push_back(x);
    return p;
}

}  // namespace

TEST_CASE("construction and genericity") {
    auto ones = build_quartic(QuarticCoefficients::from_values({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(ones.F.term_count() == 13);
    for (auto [i, j] : kEdgePairs)
        CHECK(edge_on_surface(ones, i, j));
    auto g1 = genericity(ones.coeffs);
    CHECK(g1.all_nonzero);
    CHECK_FALSE(g1.cross_ratios_distinct);
    for (const Rational& l : cross_ratios(ones.coeffs))
        CHECK(l == 1);

    const auto& q = reference();
    for (auto [i, j] : kEdgePairs)
        CHECK(edge_on_surface(q, i, j));
    CHECK(genericity(q.coeffs).all());
    // F on X3 = 0 is A X0X1X2
    MultiPoly face = q.F.substitute({{"X3", cst(0)}});
    CHECK(face == q.face_form[3] * var("X0") * var("X1") * var("X2"));
    CHECK(q.F.is_homogeneous());
    CHECK(*q.F.total_degree() == 4);

    auto zero_a0 = q.coeffs;
    zero_a0.a0 = 0;
    auto g0 = genericity(zero_a0);
    CHECK_FALSE(g0.all_nonzero);
    CHECK_FALSE(g0.vertex_nondegenerate[0]);
    CHECK_FALSE(g0.all());
}

TEST_CASE("vertices are nodes exactly when the triple product is nonzero") {
    const auto& q = reference();
    for (int i = 0; i < 4; ++i) {
        ProjectivePoint e(4, 0);
        e[i] = 1;
        auto r = classify_surface_point(q, e);
        CHECK(r.multiplicity == 2);
        CHECK(r.tangent_cone_rank == 3);
        CHECK(r.classification == PointType::Node);
    }
    auto c = q.coeffs;
    c.b3 = 0;
    auto bad = build_quartic(c);
    auto r = classify_surface_point(bad, pt({0, 0, 0, 1}));
    CHECK(r.multiplicity == 2);
    CHECK(r.tangent_cone_rank == 2);
    CHECK(r.classification == PointType::Worse);
    CHECK(classify_surface_point(bad, pt({1, 0, 0, 0})).classification == PointType::Node);

    // a point on the edge L12 away from the vertices is smooth
    CHECK(classify_surface_point(q, pt({1, 1, 0, 0})).classification == PointType::Smooth);
    CHECK_THROWS_AS(classify_surface_point(q, pt({1, 1, 1, 1})), PointNotOnSurface);
}

TEST_CASE("singular locus") {
    auto loc = singular_locus(reference());
    CHECK(loc.count == 4);
    CHECK(loc.over_sextic == 0);
    CHECK(loc.over_base == 3);
    std::vector<ProjectivePoint> vertices = {pt({0, 0, 0, 1}), pt({0, 0, 1, 0}), pt({0, 1, 0, 0}), pt({1, 0, 0, 0})};
    CHECK(loc.rational_points == vertices);
    CHECK(singular_locus_count(reference()) == 4);

    // all residual lines in the plane X0+X1+X2+X3 = 0: six extra nodes on the edges
    CHECK_FALSE(genericity(hessian_type().coeffs).all());
    auto deg = singular_locus(hessian_type());
    CHECK(deg.count == 10);
    CHECK(deg.rational_points.size() == 10);
    CHECK(std::count(deg.rational_points.begin(), deg.rational_points.end(), pt({1, -1, 0, 0})) == 1);
}

TEST_CASE("cross-ratios") {
    const auto& q = reference();
    auto lam = cross_ratios(q.coeffs);
    const auto& c = q.coeffs;
    CHECK(lam[0] == c.a1 * c.b0 / (c.a0 * c.b1));
    CHECK(lam[5] == c.c3 * c.d2 / (c.c2 * c.d3));
    CHECK(cross_ratio_relation(lam));
    CHECK(cross_ratio_relation_symbolic());
    for (std::size_t e = 0; e < 6; ++e)
        CHECK(cross_ratio_oracle(q, kEdgePairs[e].first, kEdgePairs[e].second) == lam[e]);
    // swapping the two residual points inverts the value
    std::array<Rational, 2> p1{Rational(1), Rational(0)}, p2{Rational(0), Rational(1)}, p3{c.b1, -c.b0}, p4{c.a1, -c.a0};
    CHECK(cross_ratio(p1, p2, p4, p3) == 1 / cross_ratio(p1, p2, p3, p4));

    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = build_quartic(random_sample(rng));
        auto l = cross_ratios(s.coeffs);
        CHECK(cross_ratio_relation(l));
        for (std::size_t e = 0; e < 6; ++e)
            CHECK(cross_ratio_oracle(s, kEdgePairs[e].first, kEdgePairs[e].second) == l[e]);
    }
    auto z = q.coeffs;
    z.a0 = 0;
    CHECK_THROWS_AS(cross_ratios(z), DegenerateCoefficient);
}

TEST_CASE("branch sextic") {
    auto sym = symbolic_branch_sextic();
    CHECK(sym.G == closed_form_sextic(coefficient_symbols(), cst(1)));
    CHECK(sym.G - sym.Qc * sym.Qc + Rational(4) * sym.L * var("X0") * var("X1") * var("X2") * sym.P == MultiPoly());

    const auto& q = reference();
    auto s = branch_sextic(q);
    const auto& c = q.coeffs;
    CHECK(s.P == cst(c.b3) * var("X0") * var("X1") + cst(c.c3) * var("X0") * var("X2") +
                     cst(c.d3) * var("X1") * var("X2"));
    for (int i = 0; i < 3; ++i) {
        ProjectivePoint e(3, 0);
        e[i] = 1;
        CHECK(s.P.evaluate_all({{"X0", e[0]}, {"X1", e[1]}, {"X2", e[2]}}) == 0);
        auto r = classify_plane_point(s.G, kPlane, e);
        CHECK(r.classification == PointType::Cusp);
        CHECK(r.multiplicity == 2);
        CHECK(r.tangent_cone_rank == 1);
    }
    // tangent line at (1:0:0) is b0 X1 + c0 X2
    auto r = classify_plane_point(s.G, kPlane, pt({1, 0, 0}));
    CHECK(r.tangent_line == std::vector<Rational>{0, 1, c.c0 / c.b0});
    // a smooth point: G(0, X1, X2) = X1^2 X2^2 (d1X1 + d2X2)^2 has no other
    // simple zeros, so take the intersection with the line X2 = X1 instead
    CHECK_THROWS_AS(classify_plane_point(s.G, kPlane, pt({1, 1, 1})), PointNotOnCurve);

    auto bad = q.coeffs;
    bad.d3 = 0;
    CHECK_THROWS_AS(branch_sextic(build_quartic(bad)), NotANode);
}

TEST_CASE("tritangency") {
    auto s = branch_sextic(reference());
    CHECK(tritangency_check(s.G, tritangent_line(s)));
    CHECK(tritangency_check(s.G, tritangent_conic(s)));
    for (int m = 0; m < 3; ++m) {
        CHECK(tritangency_check(s.G, triangle_edge(m)));
        auto rep = tangency_report(s.G, triangle_edge(m));
        CHECK(rep.tangency_points == 1);
    }
    auto line = tangency_report(s.G, tritangent_line(s));
    CHECK(line.pullback.degree() == 6);
    CHECK(line.root.degree() == 3);
    CHECK(line.tangency_points == 3);
    auto conic = tangency_report(s.G, tritangent_conic(s));
    CHECK(conic.pullback.degree() == 12);
    CHECK(conic.residual.degree() == 6);
    CHECK(conic.tangency_points == 3);
    // a line that is not tangent
    PlaneCurve other{CurveKind::Line, "X0+X1+X2", {1, 1, 1}};
    CHECK_FALSE(tritangency_check(s.G, other));

    for (const auto& chk : tangency_cubic_check(s))
        CHECK_MESSAGE(chk.holds, chk.name);
    CHECK(tangency_cubic_check(s).size() == 11);

    // the hessian-type member loses the tritangent conic
    auto h = branch_sextic(hessian_type());
    CHECK_FALSE(tritangency_check(h.G, tritangent_conic(h)));
}

TEST_CASE("ternary cubic discriminant") {
    // y^2 z - x^3 - t x z^2 - z^3 is singular iff 4 t^3 + 27 = 0
    MultiPoly x = var("x"), y = var("y"), z = var("z"), t = var("t");
    MultiPoly w = y * y * z - x * x * x - t * x * z * z - z * z * z;
    UniPoly d = ternary_cubic_discriminant(w, {"x", "y", "z"}, "t");
    CHECK(d.primitive() == UniPoly({27, 0, 0, 4}));
    CHECK(d.coeff(0) == Rational(-221184) * 27);
    MultiPoly w2 = y * y * z - x * x * x + cst(3) * x * z * z - t * z * z * z;
    CHECK(ternary_cubic_discriminant(w2, {"x", "y", "z"}, "t").primitive() == UniPoly({-4, 0, 1}));
    // the Fermat cubic is smooth, a triangle is not
    MultiPoly fermat = x * x * x + y * y * y + z * z * z;
    CHECK(ternary_cubic_discriminant(fermat, {"x", "y", "z"}, "t") != UniPoly());
    CHECK(ternary_cubic_discriminant(x * y * z, {"x", "y", "z"}, "t") == UniPoly());
}

TEST_CASE("fibrations") {
    const auto& q = reference();
    auto pencils = standard_pencils(q);
    REQUIRE(pencils.size() == 10);

    // frozen irrational parts of the discriminants
    UniPoly l12 = from_strings({"-14127165000", "-807062342700", "-13917424948320", "-64385480491348", "-469304649282856", "-2532933258783947", "-7991805237050645", "-33098602960274608", "-90341569174826527", "-180421297531071616", "-415166875225271037", "-327704405484017623", "-640646249038772303", "242677344881937534", "199866415711636254", "488236857526418", "560496777576736"});
    UniPoly r3 = from_strings({"-68012304073469736696741025", "10507503483764039825763845", "-21585230740650291047828535", "-1950337964327077740629123", "48777223589883333334898", "-1529620934434152222649", "450921677522683583057", "151028881165467889258", "262380118896354123", "-908062448666905097", "-42141431525897671", "-298887494260087", "19365053328546", "486955907365", "4270015717", "139212584", "2517258"});
    CHECK(irrational_part(pencil_discriminant(q, pencils[0])) == l12);
    CHECK(irrational_part(pencil_discriminant(q, pencils[8])) == r3);
    CHECK(pencil_discriminant(q, pencils[0]).valuation() == 4);
    CHECK(*pencil_discriminant(q, pencils[0]).degree() == 20);

    auto reports = fibration_survey_serial(q);
    for (const auto& r : reports) {
        CHECK_MESSAGE(r.consistent, r.pencil);
        CHECK(r.euler_sum == 24);
        CHECK(r.disc_total_order == 24);
        CHECK(r.nodal_fiber_count == 16);
        if (r.pencil[0] == 'L') {
            REQUIRE(r.reducible_fibers.size() == 2);
            CHECK(r.reducible_fibers[0].type == "I4");
            CHECK(r.reducible_fibers[0].parameter == "t=0");
            CHECK(r.reducible_fibers[1].type == "I4");
            CHECK(r.reducible_fibers[1].parameter == "t=inf");
        } else {
            // the face fiber and the plane through the opposite node
            REQUIRE(r.reducible_fibers.size() == 2);
            CHECK(r.reducible_fibers[0].type == "I2");
            CHECK(r.reducible_fibers[0].components == 1);
            CHECK(r.reducible_fibers[0].nodes_in_plane == 1);
            CHECK(r.reducible_fibers[1].type == "I6");
            CHECK(r.reducible_fibers[1].components == 3);
            CHECK(r.reducible_fibers[1].nodes_in_plane == 3);
        }
    }
    auto par = fibration_survey(q, 2);
    REQUIRE(par.size() == reports.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].pencil == reports[i].pencil);
        CHECK(par[i].euler_sum == reports[i].euler_sum);
        CHECK(par[i].nodal_fiber_count == reports[i].nodal_fiber_count);
    }

    for (const auto& r : fibration_survey_serial(hessian_type()))
        CHECK_FALSE(r.consistent);
}

TEST_CASE("lines") {
    const auto& q = reference();
    auto config = configuration_lines(q);
    REQUIRE(config.size() == 10);
    for (const auto& l : config)
        CHECK_MESSAGE(line_on_surface(q.F, l.p, l.q), l.name);
    // R4 is {A = 0, X3 = 0}
    const auto& r4 = config[9];
    CHECK(r4.name == "R4");
    for (const auto* p : {&r4.p, &r4.q}) {
        CHECK((*p)[3] == 0);
        CHECK(q.face_form[3].evaluate_all({{"X0", (*p)[0]}, {"X1", (*p)[1]}, {"X2", (*p)[2]}}) == 0);
    }

    auto lines = enumerate_lines(q, 2);
    CHECK(line_count(lines) == 10);
    std::set<std::string> names;
    for (const auto& l : lines) {
        REQUIRE(l.plucker.has_value());
        names.insert(l.name);
        ProjectivePoint p0, p1;
        for (int m = 0; m < 4; ++m) {
            p0.push_back(l.span[0][m].coeff(0));
            p1.push_back(l.span[1][m].coeff(0));
        }
        CHECK(line_on_surface(q.F, p0, p1));
    }
    CHECK(names == std::set<std::string>{"L12", "L13", "L14", "L23", "L24", "L34", "R1", "R2", "R3", "R4"});
    auto serial = enumerate_lines_serial(q);
    REQUIRE(serial.size() == lines.size());
    for (std::size_t i = 0; i < serial.size(); ++i)
        CHECK(serial[i].plucker == lines[i].plucker);
}
