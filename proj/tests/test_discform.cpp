#include "doctest.h"

#include "tq/discform/discform.hpp"

#include <algorithm>

using namespace tq;

namespace {

const FiniteQuadForm& form() {
    static const FiniteQuadForm fq = build_disc_group(make_m_lattice());
    return fq;
}

Rational q(long n, long d = 1) { return make_rational(n, d); }

const DiscElement eps1(1, 0, 0), lam23(0, 1, 0), lam24(0, 0, 1);

}  // namespace

TEST_CASE("group structure and generators") {
    const auto& fq = form();
    CHECK(fq.elementary_divisors() == std::vector<Integer>{4, 4, 8});
    CHECK(fq.size() == 128);
    CHECK(fq.dual_basis(6) == eps1);
    CHECK(fq.dual_basis(3) == lam23);
    CHECK(fq.dual_basis(4) == lam24);
    CHECK(eps1.order() == 8);
    CHECK(lam23.order() == 4);
    CHECK(lam24.order() == 4);
    CHECK((8 * eps1).is_zero());
    // Functionals coming from M itself reduce to zero.
    const IntMatrix& g = fq.lattice()->gram();
    for (std::size_t j = 0; j < 11; ++j)
        CHECK(fq.reduce(g.column(j)).is_zero());
}

TEST_CASE("discriminant form values") {
    const auto& fq = form();
    CHECK(fq.q(eps1) == q(3, 8));
    CHECK(fq.q(lam23) == q(3, 2));  // -1/2 mod 2
    CHECK(fq.q(lam24) == q(3, 2));
    CHECK(fq.b(eps1, eps1) == q(3, 8));
    CHECK(fq.b(lam23, lam23) == q(1, 2));
    CHECK(fq.b(eps1, lam23) == q(1, 2));
    CHECK(fq.b(eps1, lam24) == q(1, 2));
    CHECK(fq.b(lam23, lam24) == q(1, 4));
    CHECK(fq.q(DiscElement()) == 0);
    for (int i = 0; i < 128; ++i)
        CHECK(fq.b(DiscElement(), DiscElement::from_index(i)) == 0);
}

TEST_CASE("table identities over the whole group") {
    const auto& fq = form();
    for (int i = 0; i < 128; ++i) {
        DiscElement x = DiscElement::from_index(i);
        CHECK(q(fq.q8(x), 8) == fq.q(x));
        for (long n = 2; n <= 3; ++n) {
            Rational lhs = fq.q(n * x), rhs = n * n * fq.q(x);
            Rational diff = (lhs - rhs) / 2;
            CHECK(diff.get_den() == 1);
        }
        for (int j = 0; j < 128; j += 7) {
            DiscElement y = DiscElement::from_index(j);
            CHECK(q(fq.b8(x, y), 8) == fq.b(x, y));
            Rational pol = (fq.q(x + y) - fq.q(x) - fq.q(y) - 2 * fq.b(x, y)) / 2;
            CHECK(pol.get_den() == 1);
        }
    }
}

TEST_CASE("dual lifts and reduction relations") {
    auto checks = verify_dual_lifts(form());
    CHECK(checks.size() == 11);
    for (const auto& c : checks) {
        INFO(c.name);
        CHECK(c.holds);
    }
    CHECK_NOTHROW(require_lifts(checks));
    CHECK((form().dual_basis(10) - 2 * eps1).is_zero());
}

TEST_CASE("automorphism group equals the generated subgroup") {
    const auto& fq = form();
    auto autos = enumerate_autos_serial(fq);
    CHECK(autos.size() == 96);
    CHECK(std::binary_search(autos.begin(), autos.end(), DiscAutomorphism::identity()));
    CHECK(enumerate_autos(fq) == autos);
    CHECK(enumerate_autos(fq, 2) == autos);

    std::vector<DiscAutomorphism> gens;
    for (const auto& [name, f] : printed_transposition_actions()) {
        INFO(name);
        CHECK(preserves_form(fq, f));
        gens.push_back(f);
    }
    gens.push_back(printed_mirror_action());
    gens.push_back(printed_covering_involution());
    auto group = closure(gens);
    CHECK(group == autos);

    DiscAutomorphism mu = printed_mirror_action(), i = printed_covering_involution();
    CHECK(std::binary_search(autos.begin(), autos.end(), mu));
    for (const auto& g : gens)
        CHECK(i.compose(g) == g.compose(i));

    for (const auto& f : autos)
        for (int a = 0; a < 128; a += 3) {
            DiscElement x = DiscElement::from_index(a);
            CHECK(fq.q(f.apply(x)) == fq.q(x));
            for (int b = 0; b < 128; b += 29) {
                DiscElement y = DiscElement::from_index(b);
                CHECK(fq.b(f.apply(x), f.apply(y)) == fq.b(x, y));
            }
        }
}

TEST_CASE("a map that is not an automorphism is rejected") {
    const auto& fq = form();
    CHECK_FALSE(preserves_form(fq, {{eps1, lam23, lam23}}));
    CHECK_FALSE(preserves_form(fq, {{3 * eps1, lam23, lam24}}));
}

TEST_CASE("induced action of the identity") {
    const auto& fq = form();
    CHECK(induced_disc_auto(IntMatrix::identity(11), fq) == DiscAutomorphism::identity());
    IntMatrix bad = IntMatrix::identity(11);
    bad(0, 1) = 1;
    CHECK_THROWS_AS(induced_disc_auto(bad, fq), NotIsometry);
}

TEST_CASE("degenerate and odd lattices are refused") {
    auto deg = std::make_shared<const GramLattice>("deg", IntMatrix{{0, 0}, {0, 0}},
                                                   std::vector<std::string>{"x", "y"});
    CHECK_THROWS_AS(build_disc_group(deg), DegenerateLattice);
}
