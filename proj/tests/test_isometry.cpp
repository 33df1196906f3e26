#include "doctest.h"

#include "tq/discform/discform.hpp"
#include "tq/isometry/isometry.hpp"

#include <random>

using namespace tq;

namespace {

const ClassRegistry& reg() {
    static const ClassRegistry r = make_m_registry();
    return r;
}

const FiniteQuadForm& form() {
    static const FiniteQuadForm fq = build_disc_group(make_m_lattice());
    return fq;
}

IntMatrix id11() { return IntMatrix::identity(11); }

UniPoly int_poly(std::vector<long> c) {
    std::vector<Rational> r(c.begin(), c.end());
    return UniPoly(r);
}

}  // namespace

TEST_CASE("printed matrices load as column action") {
    auto p = load_printed_matrices(reg());
    CHECK(p.convention == MatrixConvention::Column);
    CHECK_FALSE(p.suspected_typo);
    CHECK(p.alpha.matrix() == printed_alpha());
    CHECK(p.beta.matrix() == printed_beta());
    CHECK(pow(p.alpha.matrix(), 2) == id11());
    CHECK(pow(p.beta.matrix(), 2) == id11());
    const IntMatrix& g = reg().lattice()->gram();
    CHECK(printed_alpha().transpose() * g * printed_alpha() == g);
    // the e4 column is the image of E4
    CHECK(printed_alpha().column(9) == reg().eval("2R1-E1+E2+E3-E4+2L23+L24+L34-L14").coords());
}

TEST_CASE("image list of the node involution") {
    auto checks = verify_projection_images(printed_alpha(), reg());
    CHECK(checks.size() == 15);
    for (const auto& c : checks)
        CHECK_MESSAGE(c.holds, c.name);
    CHECK_NOTHROW(require_projection_images(checks));
    auto row = verify_projection_images(printed_alpha(), reg(), MatrixConvention::Row);
    CHECK_THROWS_AS(require_projection_images(row), ImageMismatch);
    CHECK(detect_convention(printed_alpha(), reg()) == MatrixConvention::Column);
    CHECK(alpha_from_images(reg()) == printed_alpha());

    IntegerIsometry a(reg().lattice(), printed_alpha());
    CHECK(a.apply(reg().get("L12")) == reg().get("R3"));
    CHECK(a.apply(reg().get("R4")) == reg().eval("H-E4-R4"));
    CHECK(a.apply(a.apply(reg().get("L12"))) == reg().get("L12"));
}

TEST_CASE("isometry check reports the defect") {
    IntMatrix bad = printed_alpha();
    bad(0, 0) = 1;
    try {
        IntegerIsometry x(reg().lattice(), bad);
        FAIL("expected IsometryCheckFailed");
    } catch (const IsometryCheckFailed& e) {
        CHECK(e.defect != 0);
    }
}

TEST_CASE("conjugation by (34) and the printed product") {
    auto p = load_printed_matrices(reg());
    IntegerIsometry t = build_s4_action(transposition(3, 4), reg());
    CHECK(t.compose(p.alpha).compose(t.inverse()).matrix() == printed_beta());
    CHECK(p.alpha.matrix() * p.beta.matrix() == printed_alpha_beta());
    CHECK_FALSE(p.beta.matrix() * p.alpha.matrix() == printed_alpha_beta());
}

TEST_CASE("order decisions") {
    auto p = load_printed_matrices(reg());
    auto ca = decide_order(p.alpha);
    CHECK(ca.finite);
    CHECK(ca.order == 2);
    auto ci = decide_order(IntegerIsometry(reg().lattice(), id11()));
    CHECK(ci.finite);
    CHECK(ci.order == 1);
    CHECK(ci.charpoly == pow(UniPoly{-1, 1}, 11));

    auto cab = decide_order(p.alpha.compose(p.beta));
    CHECK_FALSE(cab.finite);
    CHECK(cab.charpoly == int_poly({-1, 3, 1, -11, 6, 14, -14, -6, 11, -1, -3, 1}));
    CHECK(is_reciprocal(cab.charpoly));
    // (x+1)^4 (x-1)^7: every factor is cyclotomic, the growth is unipotent
    CHECK(cab.cyclotomic == std::vector<std::pair<unsigned, unsigned>>{{1, 7}, {2, 4}});
    CHECK(cab.residual == UniPoly::constant(1));
    CHECK(cab.unipotent_power == 2);
    CHECK(cab.nilpotency_index == 3);
    std::vector<Integer> tr;
    for (int k = 1; k <= 20; ++k)
        tr.push_back(k % 2 ? 3 : 11);
    CHECK(cab.traces == tr);
}

TEST_CASE("cyclotomic machinery") {
    CHECK(cyclotomic_indices(11) ==
          std::vector<unsigned>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 18, 20, 22, 24, 30});
    CHECK(cyclotomic(1) == UniPoly({-1, 1}));
    CHECK(cyclotomic(6) == UniPoly({1, -1, 1}));
    CHECK(cyclotomic(12) == UniPoly({1, 0, -1, 0, 1}));
    for (unsigned n : cyclotomic_indices(11)) {
        UniPoly prod = UniPoly::constant(1);
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0)
                prod = prod * cyclotomic(d);
        CHECK(prod == UniPoly::monomial(1, n) - UniPoly::constant(1));
    }
    CHECK(is_reciprocal(UniPoly({1, -3, 1})));
    CHECK(is_reciprocal(UniPoly({-1, 0, 1})));
    CHECK_FALSE(is_reciprocal(UniPoly({1, 2, 3})));
}

TEST_CASE("S4 action and the mirror") {
    CHECK(build_s4_action({1, 2, 3, 4}, reg()).matrix() == id11());
    auto printed = printed_transposition_actions();
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            IntegerIsometry t = build_s4_action(transposition(i, j), reg());
            CHECK(pow(t.matrix(), 2) == id11());
            std::string key = std::to_string(i) + std::to_string(j);
            CHECK(induced_disc_auto(t.matrix(), form()) == printed.at(key));
        }
    DiscAutomorphism t12 = induced_disc_auto(build_s4_action(transposition(1, 2), reg()).matrix(), form());
    CHECK(t12.apply(DiscElement(1, 0, 0)) == DiscElement(1, 2, 2));

    // R_s(1) for a 4-cycle goes through the registry relations
    IntegerIsometry c = build_s4_action({2, 3, 4, 1}, reg());
    CHECK(c.apply(reg().get("R1")) == reg().get("R2"));
    CHECK(c.apply(reg().get("R2")) == reg().get("R3"));
    CHECK(c.apply(reg().get("H")) == reg().get("H"));

    IntegerIsometry m = build_mirror(reg());
    CHECK(m.apply(reg().get("H")) == reg().get("Hv"));
    CHECK(pow(m.matrix(), 2) == id11());
    for (int i = 1; i <= 4; ++i) {
        CHECK(m.apply(reg().get("R" + std::to_string(i))) == reg().get("E" + std::to_string(i)));
        CHECK(intersect(reg().get("Hv"), reg().get("E" + std::to_string(i))) == 1);
        CHECK(intersect(reg().get("Hv"), reg().get("R" + std::to_string(i))) == 0);
    }
    CHECK(intersect(reg().get("Hv"), reg().get("Hv")) == 4);
    CHECK(induced_disc_auto(m.matrix(), form()) == printed_mirror_action());

    auto p = load_printed_matrices(reg());
    CHECK(induced_disc_auto(p.alpha.matrix(), form()) == printed_covering_involution());
    CHECK(induced_disc_auto(id11(), form()) == DiscAutomorphism::identity());
}

TEST_CASE("induced action is a homomorphism") {
    auto p = load_printed_matrices(reg());
    std::vector<IntMatrix> gens = {p.alpha.matrix(), p.beta.matrix(), build_mirror(reg()).matrix()};
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            gens.push_back(build_s4_action(transposition(i, j), reg()).matrix());
    for (const auto& x : gens)
        for (const auto& y : gens) {
            auto lhs = induced_disc_auto(x * y, form());
            auto rhs = induced_disc_auto(x, form()).compose(induced_disc_auto(y, form()));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("random words in the generators") {
    auto p = load_printed_matrices(reg());
    std::vector<IntegerIsometry> gens = {p.alpha, p.beta, build_mirror(reg())};
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            gens.push_back(build_s4_action(transposition(i, j), reg()));
    const std::size_t finite_gens = gens.size();
    std::mt19937 rng(31);
    const IntMatrix& g = reg().lattice()->gram();
    for (int trial = 0; trial < 100; ++trial) {
        // even trials avoid alpha/beta so that finite orders show up too
        std::size_t lo = trial % 2 ? 0 : 2;
        std::uniform_int_distribution<std::size_t> pick(lo, finite_gens - 1);
        std::uniform_int_distribution<int> len(1, 6);
        IntegerIsometry w(reg().lattice(), id11());
        for (int k = len(rng); k > 0; --k)
            w = w.compose(gens[pick(rng)]);
        CHECK(w.matrix().transpose() * g * w.matrix() == g);
        Integer d = w.det();
        CHECK((d == 1 || d == -1));
        CHECK(w.compose(w.inverse()).is_identity());
        auto cert = decide_order(w);
        CHECK(is_reciprocal(cert.charpoly));
        Integer tr1 = w.matrix().trace();
        CHECK(cert.traces.front() == tr1);
        if (cert.finite) {
            REQUIRE(cert.order <= 24);
            IntMatrix q = id11();
            for (unsigned m = 1; m < cert.order; ++m) {
                q = q * w.matrix();
                CHECK_FALSE(q == id11());
            }
            CHECK(q * w.matrix() == id11());
        }
        // the induced action respects composition with alpha
        auto lhs = induced_disc_auto(w.matrix() * p.alpha.matrix(), form());
        auto rhs = induced_disc_auto(w.matrix(), form()).compose(printed_covering_involution());
        CHECK(lhs == rhs);
    }
}
