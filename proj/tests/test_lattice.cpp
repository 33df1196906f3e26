#include "doctest.h"

#include "tq/lattice/lattice.hpp"

#include <random>

using namespace tq;

namespace {

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    IntMatrix u = IntMatrix::identity(n);
    for (int step = 0; step < 12; ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j)
            continue;
        u.add_row(i, j, coef(rng));
        if (step % 5 == 0)
            u.swap_rows(i, j);
    }
    return u;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> coef(-6, 6);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = coef(rng);
    return m;
}

}  // namespace

TEST_CASE("lattice M invariants") {
    LatticePtr m = make_m_lattice();
    CHECK(m->rank() == 11);
    CHECK(m->is_even());
    for (std::size_t i = 0; i < 11; ++i)
        CHECK(m->gram()(i, i) == -2);
    CHECK(m->signature() == Inertia{1, 10, 0});
    CHECK(abs(m->determinant()) == 128);
    // Sign agrees with (-1)^(n_minus).
    CHECK(m->determinant() == 128);
}

TEST_CASE("signature and determinant on small forms") {
    CHECK(inertia(IntMatrix{{2}}) == Inertia{1, 0, 0});
    CHECK(inertia(IntMatrix{{-2, 0}, {0, -2}}) == Inertia{0, 2, 0});
    CHECK(inertia(IntMatrix{{0, 1}, {1, 0}}) == Inertia{1, 1, 0});
    CHECK(inertia(IntMatrix{{0, 0}, {0, 0}}) == Inertia{0, 0, 2});
    CHECK(inertia(IntMatrix{{1, 1}, {1, 1}}) == Inertia{1, 0, 1});
    CHECK(determinant(IntMatrix::identity(7)) == 1);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("Smith normal form") {
    SmithForm s = smith_normal_form(make_m_lattice()->gram());
    std::vector<Integer> expected{1, 1, 1, 1, 1, 1, 1, 1, 4, 4, 8};
    CHECK(s.diagonal == expected);
    CHECK(s.U * make_m_lattice()->gram() * s.V == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    CHECK(smith_normal_form(IntMatrix::identity(4)).diagonal == std::vector<Integer>(4, 1));
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 4}}).diagonal == std::vector<Integer>{2, 4});
    CHECK(smith_normal_form(IntMatrix{{4, 0}, {0, 6}}).diagonal == std::vector<Integer>{2, 12});
}

TEST_CASE("class registry and intersection numbers") {
    ClassRegistry reg = make_m_registry();
    auto pr = [&](const char* a, const char* b) { return intersect(reg.get(a), reg.get(b)); };
    CHECK(pr("A", "A") == 20);
    CHECK(pr("H", "H") == 4);
    CHECK(pr("A0", "A0") == 28);
    CHECK(pr("E1", "E1") == -2);
    CHECK(pr("H'", "H'") == 8);
    CHECK(pr("A", "C") == 22);
    CHECK(intersect(reg.get("A") + reg.get("C"), reg.get("L12")) == 2);
    CHECK(intersect(reg.get("A") + reg.get("C"), reg.get("E1")) == 3);

    const std::vector<std::string> curves{"L12", "L13", "L14", "L23", "L24", "L34", "E1",
                                          "E2",  "E3",  "E4",  "R1",  "R2",  "R3",  "R4"};
    for (const auto& c : curves) {
        bool is_line = c[0] == 'L', is_node = c[0] == 'E';
        CHECK(pr("A", c.c_str()) == (is_line ? 2 : 1));
        CHECK(pr("A0", c.c_str()) == (is_line ? 1 : is_node ? 2 : 3));
        CHECK(pr("H", c.c_str()) == (is_node ? 0 : 1));
        CHECK(pr("Hv", c.c_str()) == (c[0] == 'R' ? 0 : 1));
        CHECK(pr(c.c_str(), c.c_str()) == -2);
        if (!is_line)
            CHECK(pr("H'", c.c_str()) == 0);
    }
    CHECK(pr("H'", "L12") == 2);
    CHECK(pr("H'", "L13") == 2);
    CHECK(pr("H'", "L24") == 2);
    CHECK(pr("H'", "L34") == 2);
    CHECK(pr("H'", "L14") == 4);
    CHECK(pr("H'", "L23") == 4);
    CHECK(pr("Hv", "Hv") == 4);

    auto t = intersection_table(reg, {"A", "A0", "H'"});
    CHECK(t[0][1] == t[1][0]);
    CHECK(t[1][2] == t[2][1]);
    CHECK_THROWS_AS(intersection_table(reg, {"A", "Z"}), UnknownName);
    CHECK_THROWS_AS(reg.get("nope"), UnknownName);
}

TEST_CASE("class identities") {
    ClassRegistry reg = make_m_registry();
    auto checks = verify_class_identities(reg);
    CHECK(checks.size() == 12);
    for (const auto& c : checks) {
        INFO(c.name);
        CHECK(c.holds());
    }
    CHECK_NOTHROW(require_identities(checks));
    // A deliberately wrong identity carries its residual.
    std::vector<IdentityCheck> bad{{"H = L12", reg.eval("H-L12")}};
    CHECK_THROWS_AS(require_identities(bad), IdentityFailed);
}

TEST_CASE("Riemann-Roch and adjunction arithmetic") {
    ClassRegistry reg = make_m_registry();
    RiemannRoch a = rr_genus(reg.get("A"));
    CHECK(a.genus == 11);
    CHECK(a.h0 == 12);
    CHECK(a.ambient_dim == 11);
    RiemannRoch c = rr_genus(reg.get("C"));
    CHECK(c.genus == 12);
    CHECK(intersect(reg.get("C"), reg.get("C")) == 22);
    CHECK(a.genus + c.genus + intersect(reg.get("A"), reg.get("C")) - 1 == 44);
    RiemannRoch h = rr_genus(reg.get("H"));
    CHECK(h.genus == 3);
    CHECK(h.h0 == 4);

    ClassRegistry dp = make_del_pezzo_registry();
    CHECK(adjunction_genus(dp.get("B")) == 7);
    CHECK(intersect(dp.get("K"), dp.get("K")) == 6);
    CHECK(adjunction_genus(dp.get("h")) == 0);
    CHECK_THROWS_AS(adjunction_genus(reg.get("A")), NoCanonicalClass);

    auto odd = std::make_shared<const GramLattice>("odd", IntMatrix{{1}}, std::vector<std::string>{"x"});
    CHECK_THROWS_AS(rr_genus(LatticeVector::unit(odd, 0)), OddSquare);
}

TEST_CASE("even sets") {
    ClassRegistry reg = make_m_registry();
    std::vector<LatticeVector> eight;
    for (const char* n : {"E1", "E2", "E3", "E4", "R1", "R2", "R3", "R4"})
        eight.push_back(reg.get(n));
    auto half = even_set_test(eight);
    REQUIRE(half);
    CHECK(Integer(2) * *half == reg.eval("2L23+2L24+2L34-2L12-2L13-2L14-2E1+2E2+2E3+2E4+4R1"));
    CHECK_FALSE(even_set_test({reg.get("E1")}));
    auto twice = even_set_test({reg.get("E1"), reg.get("E1")});
    REQUIRE(twice);
    CHECK(*twice == reg.get("E1"));
}

TEST_CASE("mismatched lattices") {
    ClassRegistry a = make_m_registry(), b = make_m_registry();
    CHECK_THROWS_AS(intersect(a.get("E1"), b.get("E1")), LatticeMismatch);
}

TEST_CASE("json serialization") {
    nlohmann::json j = to_json(make_m_registry());
    CHECK(j["lattice"]["rank"] == "11");
    CHECK(j["lattice"]["gram"][0][0] == "-2");
    CHECK(j["classes"]["H"].size() == 11);
}

TEST_CASE("properties on random instances") {
    std::mt19937 rng(77);
    LatticePtr m = make_m_lattice();
    const IntMatrix& g = m->gram();
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix u = random_unimodular(rng, 11);
        REQUIRE(abs(determinant(u)) == 1);
        IntMatrix g2 = u.transpose() * g * u;
        CHECK(inertia(g2) == Inertia{1, 10, 0});
        CHECK(determinant(g2) == determinant(g));

        IntVector x(11), y(11), z(11);
        for (std::size_t i = 0; i < 11; ++i) {
            x[i] = coef(rng);
            y[i] = coef(rng);
            z[i] = coef(rng);
        }
        LatticeVector a(m, x), b(m, y), c(m, z);
        Integer k = coef(rng);
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(intersect(a + k * b, c) == intersect(a, c) + k * intersect(b, c));

        std::uniform_int_distribution<std::size_t> dim(1, 6);
        IntMatrix r = random_matrix(rng, dim(rng), dim(rng));
        SmithForm s = smith_normal_form(r);
        CHECK(s.U * r * s.V == s.D);
        CHECK(abs(determinant(s.U)) == 1);
        CHECK(abs(determinant(s.V)) == 1);
        for (std::size_t i = 0; i < s.D.rows(); ++i)
            for (std::size_t j = 0; j < s.D.cols(); ++j)
                if (i != j)
                    CHECK(s.D(i, j) == 0);
        for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
            if (s.diagonal[i] == 0)
                CHECK(s.diagonal[i + 1] == 0);
            else
                CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        }
        if (r.is_square() && determinant(r) != 0) {
            Integer prod = 1;
            for (const auto& d : s.diagonal)
                prod *= d;
            CHECK(prod == abs(determinant(r)));
        }
    }
}
