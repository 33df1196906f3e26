#include "tq/cli/claims.hpp"

#include "tq/discform/discform.hpp"
#include "tq/exactmath/binary_form.hpp"
#include "tq/exactmath/plane_solver.hpp"
#include "tq/isometry/isometry.hpp"
#include "tq/quartic/fibration.hpp"
#include "tq/quartic/lines.hpp"
#include "tq/quartic/sextic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace tq {

namespace {

ClaimRecord make_claim(std::string id, std::string topic, int criterion, std::string expected,
                       std::string computed) {
    ClaimRecord r{std::move(id), std::move(topic), criterion, std::move(expected), std::move(computed),
                  ClaimStatus::Fail};
    r.status = r.expected == r.computed ? ClaimStatus::Pass : ClaimStatus::Fail;
    return r;
}

std::string error_text(const std::exception_ptr& e) {
    try {
        std::rethrow_exception(e);
    } catch (const DegenerateCoefficient& x) {
        return std::string("error: DegenerateCoefficient: ") + x.what();
    } catch (const PositiveDimensionalLocus& x) {
        return std::string("error: PositiveDimensionalLocus: ") + x.what();
    } catch (const PositiveDimensional& x) {
        return std::string("error: PositiveDimensional: ") + x.what();
    } catch (const PointNotOnSurface& x) {
        return std::string("error: PointNotOnSurface: ") + x.what();
    } catch (const PointNotOnCurve& x) {
        return std::string("error: PointNotOnCurve: ") + x.what();
    } catch (const NotANode& x) {
        return std::string("error: NotANode: ") + x.what();
    } catch (const ParametrizationFailure& x) {
        return std::string("error: ParametrizationFailure: ") + x.what();
    } catch (const InfiniteFamily& x) {
        return std::string("error: InfiniteFamily: ") + x.what();
    } catch (const UnexpectedFactor& x) {
        return std::string("error: UnexpectedFactor: ") + x.what();
    } catch (const NotIsometry& x) {
        return std::string("error: NotIsometry: ") + x.what();
    } catch (const IsometryCheckFailed& x) {
        return std::string("error: IsometryCheckFailed: ") + x.what();
    } catch (const std::exception& x) {
        return std::string("error: ") + x.what();
    }
}

// Runs fn and turns any exception into a failing claim.
ClaimRecord guarded(std::string id, std::string topic, int criterion, std::string expected,
                    const std::function<std::string()>& fn) {
    std::string computed;
    try {
        computed = fn();
    } catch (...) {
        computed = error_text(std::current_exception());
    }
    return make_claim(std::move(id), std::move(topic), criterion, std::move(expected), std::move(computed));
}

std::string ratio(std::size_t k, std::size_t n) { return std::to_string(k) + "/" + std::to_string(n); }
std::string yes(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

std::string row_string(const std::vector<Integer>& row) {
    std::vector<std::string> s;
    for (const auto& x : row)
        s.push_back(to_string(x));
    return join(s, ",");
}

// "1^8,4,4,8"
std::string divisor_string(const std::vector<Integer>& d) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < d.size();) {
        std::size_t j = i;
        while (j < d.size() && d[j] == d[i])
            ++j;
        if (d[i] == 1 && j - i > 1)
            out.push_back("1^" + std::to_string(j - i));
        else
            for (std::size_t k = i; k < j; ++k)
                out.push_back(to_string(d[k]));
        i = j;
    }
    return join(out, ",");
}

std::string fiber_summary(const FiberReport& r) {
    std::map<std::string, int> types;
    for (const auto& f : r.reducible_fibers)
        ++types[f.type];
    std::vector<std::pair<int, std::string>> ordered;
    for (const auto& [t, n] : types)
        ordered.emplace_back(std::stoi(t.substr(1)), t);
    std::sort(ordered.begin(), ordered.end());
    std::vector<std::string> parts;
    for (const auto& [n, t] : ordered)
        parts.push_back(types[t] > 1 ? std::to_string(types[t]) + "x" + t : t);
    parts.push_back(std::to_string(r.nodal_fiber_count) + " nodal");
    std::string s = join(parts, " + ") + ", euler " + std::to_string(r.euler_sum);
    if (!r.consistent)
        s += ", inconsistent with the discriminant";
    return s;
}

const std::vector<std::string> kCurves{"L12", "L13", "L14", "L23", "L24", "L34", "E1",
                                       "E2",  "E3",  "E4",  "R1",  "R2",  "R3",  "R4"};

}  // namespace

std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Pass:
            return "pass";
        case ClaimStatus::Fail:
            return "fail";
        case ClaimStatus::Unverified:
            return "unverified";
    }
    return "fail";
}

std::vector<ClaimRecord> lattice_claims() {
    std::vector<ClaimRecord> out;
    ClassRegistry reg = make_m_registry();
    LatticePtr m = reg.lattice();
    auto pr = [&](const std::string& a, const std::string& b) { return to_string(intersect(reg.eval(a), reg.eval(b))); };

    out.push_back(make_claim("lattice.even", "lattice", 1, "true", yes(m->is_even())));
    Inertia in = m->signature();
    out.push_back(make_claim("lattice.signature", "lattice", 1, "(1,10)",
                             "(" + std::to_string(in.n_plus) + "," + std::to_string(in.n_minus) + ")"));
    out.push_back(make_claim("lattice.abs-determinant", "lattice", 1, "128", to_string(Integer(abs(m->determinant())))));
    out.push_back(make_claim("lattice.smith-divisors", "lattice", 2, "1^8,4,4,8",
                             divisor_string(smith_normal_form(m->gram()).diagonal)));

    auto ids = verify_class_identities(reg);
    std::size_t held = std::count_if(ids.begin(), ids.end(), [](const IdentityCheck& c) { return c.holds(); });
    out.push_back(make_claim("classes.identities", "classes", 6, ratio(ids.size(), ids.size()), ratio(held, ids.size())));
    out.push_back(make_claim("classes.square-A", "classes", 6, "20", pr("A", "A")));
    out.push_back(make_claim("classes.square-A0", "classes", 6, "28", pr("A0", "A0")));
    out.push_back(make_claim("classes.square-H", "classes", 6, "4", pr("H", "H")));
    out.push_back(make_claim("classes.square-Hprime", "classes", 6, "8", pr("H'", "H'")));
    // rows over L12..L34, E1..E4, R1..R4
    auto row = [&](const std::string& d) {
        std::vector<Integer> r;
        for (const auto& c : kCurves)
            r.push_back(intersect(reg.get(d), reg.get(c)));
        return row_string(r);
    };
    out.push_back(make_claim("classes.row-A", "classes", 6, "2,2,2,2,2,2,1,1,1,1,1,1,1,1", row("A")));
    out.push_back(make_claim("classes.row-A0", "classes", 6, "1,1,1,1,1,1,2,2,2,2,3,3,3,3", row("A0")));
    out.push_back(make_claim("classes.row-Hprime", "classes", 6, "2,2,4,4,2,2,0,0,0,0,0,0,0,0", row("H'")));
    out.push_back(guarded("classes.even-eight", "classes", 6, "half found", [&] {
        std::vector<LatticeVector> eight;
        for (const char* n : {"E1", "E2", "E3", "E4", "R1", "R2", "R3", "R4"})
            eight.push_back(reg.get(n));
        auto half = even_set_test(eight);
        if (!half)
            return std::string("not divisible by 2");
        LatticeVector sum = LatticeVector::zero(m);
        for (const auto& v : eight)
            sum = sum + v;
        return Integer(2) * *half == sum ? std::string("half found") : std::string("half does not double back");
    }));

    RiemannRoch a = rr_genus(reg.get("A"));
    RiemannRoch c = rr_genus(reg.eval("A+L12"));
    out.push_back(make_claim("rr.genus-A", "riemann-roch", 7, "11", to_string(a.genus)));
    out.push_back(make_claim("rr.genus-A-plus-L12", "riemann-roch", 7, "12", to_string(c.genus)));
    out.push_back(make_claim("rr.arithmetic-genus-sum", "riemann-roch", 7, "44",
                             to_string(Integer(a.genus + c.genus + intersect(reg.get("A"), reg.eval("A+L12")) - 1))));
    out.push_back(make_claim("rr.h0-A", "riemann-roch", 7, "12", to_string(a.h0)));
    out.push_back(make_claim("rr.A-dot-A-plus-L12", "riemann-roch", 7, "22", pr("A", "A+L12")));
    out.push_back(make_claim("rr.coprime-witness-L12", "riemann-roch", 7, "2", pr("A+C", "L12")));
    out.push_back(make_claim("rr.coprime-witness-E1", "riemann-roch", 7, "3", pr("A+C", "E1")));

    ClassRegistry dp = make_del_pezzo_registry();
    out.push_back(make_claim("delpezzo.K-square", "del-pezzo", 7, "6", to_string(intersect(dp.get("K"), dp.get("K")))));
    out.push_back(make_claim("delpezzo.genus-6h-2e", "del-pezzo", 7, "7", to_string(adjunction_genus(dp.get("B")))));
    return out;
}

std::vector<ClaimRecord> discform_claims(int threads) {
    std::vector<ClaimRecord> out;
    FiniteQuadForm fq = build_disc_group(make_m_lattice());
    std::vector<std::string> parts;
    auto divs = fq.elementary_divisors();
    for (auto it = divs.rbegin(); it != divs.rend(); ++it)
        parts.push_back("Z/" + to_string(*it));
    out.push_back(make_claim("discform.group", "discriminant-form", 2, "Z/8+Z/4+Z/4", join(parts, "+")));

    const DiscElement eps1(1, 0, 0), lam23(0, 1, 0), lam24(0, 0, 1);
    // q mod 2Z in [0, 2): -1/2 reads 3/2
    out.push_back(make_claim("discform.q-eps1", "discriminant-form", 3, "3/8", to_string(fq.q(eps1))));
    out.push_back(make_claim("discform.q-lambda23", "discriminant-form", 3, "3/2", to_string(fq.q(lam23))));
    out.push_back(make_claim("discform.q-lambda24", "discriminant-form", 3, "3/2", to_string(fq.q(lam24))));
    out.push_back(make_claim("discform.b-eps1-eps1", "discriminant-form", 3, "3/8", to_string(fq.b(eps1, eps1))));
    out.push_back(make_claim("discform.b-eps1-lambda23", "discriminant-form", 3, "1/2", to_string(fq.b(eps1, lam23))));
    out.push_back(make_claim("discform.b-eps1-lambda24", "discriminant-form", 3, "1/2", to_string(fq.b(eps1, lam24))));
    out.push_back(make_claim("discform.b-lambda23-lambda24", "discriminant-form", 3, "1/4", to_string(fq.b(lam23, lam24))));
    auto lifts = verify_dual_lifts(fq);
    std::size_t held = std::count_if(lifts.begin(), lifts.end(), [](const LiftCheck& c) { return c.holds; });
    out.push_back(make_claim("discform.dual-lifts", "discriminant-form", 3, ratio(lifts.size(), lifts.size()),
                             ratio(held, lifts.size())));

    auto autos = enumerate_autos(fq, threads);
    out.push_back(make_claim("discform.automorphism-order", "discriminant-form", 4, "96", std::to_string(autos.size())));
    std::vector<DiscAutomorphism> gens;
    for (const auto& [name, f] : printed_transposition_actions())
        gens.push_back(f);
    gens.push_back(printed_mirror_action());
    gens.push_back(printed_covering_involution());
    auto group = closure(gens);
    out.push_back(make_claim("discform.automorphisms-generated", "discriminant-form", 4, "equal",
                             group == autos ? "equal" : "generated subgroup has " + std::to_string(group.size())));
    return out;
}

std::vector<ClaimRecord> isometry_claims() {
    std::vector<ClaimRecord> out;
    ClassRegistry reg = make_m_registry();
    LatticePtr m = reg.lattice();
    FiniteQuadForm fq = build_disc_group(m);
    const IntMatrix id = IntMatrix::identity(11);

    auto gram_check = [&](const IntMatrix& t) {
        return [&, t] {
            IntegerIsometry iso(m, t);
            return std::string("isometry");
        };
    };
    out.push_back(guarded("isometry.alpha-preserves-gram", "isometry", 5, "isometry", gram_check(printed_alpha())));
    out.push_back(guarded("isometry.beta-preserves-gram", "isometry", 5, "isometry", gram_check(printed_beta())));
    out.push_back(make_claim("isometry.alpha-involution", "isometry", 5, "true", yes(pow(printed_alpha(), 2) == id)));
    out.push_back(make_claim("isometry.beta-involution", "isometry", 5, "true", yes(pow(printed_beta(), 2) == id)));
    auto images = verify_projection_images(printed_alpha(), reg);
    std::size_t held = std::count_if(images.begin(), images.end(), [](const ImageCheck& c) { return c.holds; });
    out.push_back(make_claim("isometry.alpha-images", "isometry", 5, "15/15", ratio(held, images.size())));
    out.push_back(guarded("isometry.beta-conjugate", "isometry", 5, "true", [&] {
        IntegerIsometry t = build_s4_action(transposition(3, 4), reg);
        IntegerIsometry a(m, printed_alpha());
        return yes(t.compose(a).compose(t.inverse()).matrix() == printed_beta());
    }));
    out.push_back(make_claim("isometry.printed-product", "isometry", 5, "true",
                             yes(printed_alpha() * printed_beta() == printed_alpha_beta())));

    out.push_back(guarded("isometry.alpha-beta-order", "isometry", 5, "infinite", [&] {
        auto cert = decide_order(IntegerIsometry(m, printed_alpha() * printed_beta()));
        return cert.finite ? "order " + std::to_string(cert.order) : std::string("infinite");
    }));
    out.push_back(guarded("isometry.alpha-beta-noncyclotomic-factor", "isometry", 5, "present", [&] {
        auto cert = decide_order(IntegerIsometry(m, printed_alpha() * printed_beta()));
        if (cert.residual.degree() && *cert.residual.degree() > 0)
            return std::string("present");
        std::vector<std::string> f;
        for (const auto& [n, e] : cert.cyclotomic)
            f.push_back("Phi" + std::to_string(n) + "^" + std::to_string(e));
        return "absent: charpoly " + join(f, " ") + ", unipotent part of nilpotency index " +
               std::to_string(cert.nilpotency_index);
    }));

    out.push_back(make_claim("isometry.alpha-induces-covering-involution", "isometry", 5, "true",
                             yes(induced_disc_auto(printed_alpha(), fq) == printed_covering_involution())));
    out.push_back(guarded("isometry.mirror-induces-mirror-action", "isometry", 5, "true", [&] {
        return yes(induced_disc_auto(build_mirror(reg).matrix(), fq) == printed_mirror_action());
    }));
    auto printed = printed_transposition_actions();
    std::size_t match = 0;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            if (induced_disc_auto(build_s4_action(transposition(i, j), reg).matrix(), fq) ==
                printed.at(std::to_string(i) + std::to_string(j)))
                ++match;
    out.push_back(make_claim("isometry.transposition-actions", "isometry", 5, "6/6", ratio(match, 6)));
    return out;
}

std::vector<ClaimRecord> quartic_claims(const QuarticCoefficients& c, int threads) {
    std::vector<ClaimRecord> out;
    GenericityFlags g = genericity(c);
    {
        std::vector<std::string> bad;
        if (!g.all_nonzero)
            bad.push_back("zero coefficient");
        for (int i = 0; i < 4; ++i)
            if (!g.vertex_nondegenerate[i])
                bad.push_back("degenerate vertex E" + std::to_string(i + 1));
        if (!g.cross_ratios_distinct)
            bad.push_back("repeated cross-ratio");
        out.push_back(make_claim("quartic.genericity", "quartic", 8, "generic", bad.empty() ? "generic" : join(bad, "; ")));
    }
    TetraQuartic q = build_quartic(c);

    out.push_back(guarded("quartic.vertex-nodes", "quartic", 8, "4/4", [&] {
        std::size_t nodes = 0;
        for (int i = 0; i < 4; ++i) {
            ProjectivePoint e(4, 0);
            e[i] = 1;
            auto r = classify_surface_point(q, e);
            if (r.classification == PointType::Node && r.tangent_cone_rank == 3)
                ++nodes;
        }
        return ratio(nodes, 4);
    }));
    out.push_back(guarded("quartic.singular-count", "quartic", 8, "4",
                          [&] { return std::to_string(singular_locus_count(q)); }));
    out.push_back(guarded("quartic.configuration-lines-on-surface", "quartic", 8, "10/10", [&] {
        auto lines = configuration_lines(q);
        std::size_t on = std::count_if(lines.begin(), lines.end(),
                                       [&](const RationalLine& l) { return line_on_surface(q.F, l.p, l.q); });
        return ratio(on, lines.size());
    }));
    out.push_back(guarded("quartic.line-count", "quartic", 8, "10",
                          [&] { return std::to_string(line_count(enumerate_lines(q, threads))); }));

    out.push_back(guarded("crossratio.oracle-input", "cross-ratio", 9, "6/6", [&] {
        auto lam = cross_ratios(c);
        std::size_t ok = 0;
        for (std::size_t e = 0; e < 6; ++e)
            ok += cross_ratio_oracle(q, kEdgePairs[e].first, kEdgePairs[e].second) == lam[e];
        return ratio(ok, 6);
    }));
    out.push_back(guarded("crossratio.oracle-random", "cross-ratio", 9, "20/20", [&] {
        std::mt19937 rng(2024);
        std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
        std::size_t ok = 0;
        for (int trial = 0; trial < 20; ++trial) {
            std::array<Rational, 12> v;
            for (auto& x : v) {
                int n = 0;
                while (n == 0)
                    n = num(rng);
                x = make_rational(n, den(rng));
            }
            TetraQuartic s = build_quartic(QuarticCoefficients::from_values(v));
            auto lam = cross_ratios(s.coeffs);
            bool all = cross_ratio_relation(lam);
            for (std::size_t e = 0; e < 6; ++e)
                all = all && cross_ratio_oracle(s, kEdgePairs[e].first, kEdgePairs[e].second) == lam[e];
            ok += all;
        }
        return ratio(ok, 20);
    }));
    out.push_back(make_claim("crossratio.product-relation-symbolic", "cross-ratio", 9, "true",
                             yes(cross_ratio_relation_symbolic())));

    out.push_back(make_claim("sextic.closed-form-symbolic", "branch-sextic", 10, "true",
                             yes(symbolic_branch_sextic().G == closed_form_sextic(coefficient_symbols(), cst(1)))));
    std::optional<BranchSextic> s;
    std::string sextic_error;
    try {
        s = branch_sextic(q);
    } catch (...) {
        sextic_error = error_text(std::current_exception());
    }
    auto with_sextic = [&](std::string id, std::string expected, const std::function<std::string()>& fn) {
        if (!s)
            return make_claim(std::move(id), "branch-sextic", 10, std::move(expected), sextic_error);
        return guarded(std::move(id), "branch-sextic", 10, std::move(expected), fn);
    };
    out.push_back(with_sextic("sextic.cusps", "3/3", [&] {
        std::size_t cusps = 0;
        for (int i = 0; i < 3; ++i) {
            ProjectivePoint e(3, 0);
            e[i] = 1;
            cusps += classify_plane_point(s->G, kPlane, e).classification == PointType::Cusp;
        }
        return ratio(cusps, 3);
    }));
    out.push_back(with_sextic("sextic.tritangent-line", "true", [&] { return yes(tritangency_check(s->G, tritangent_line(*s))); }));
    out.push_back(with_sextic("sextic.tritangent-conic", "true", [&] { return yes(tritangency_check(s->G, tritangent_conic(*s))); }));
    out.push_back(with_sextic("sextic.triangle-edges", "3/3", [&] {
        std::size_t ok = 0;
        for (int m = 0; m < 3; ++m)
            ok += tritangency_check(s->G, triangle_edge(m));
        return ratio(ok, 3);
    }));
    out.push_back(with_sextic("sextic.tangency-cubic", "11/11", [&] {
        auto checks = tangency_cubic_check(*s);
        std::size_t ok = std::count_if(checks.begin(), checks.end(), [](const CubicCheck& x) { return x.holds; });
        return ratio(ok, checks.size());
    }));

    std::vector<FiberReport> reports;
    std::string fib_error;
    try {
        reports = fibration_survey(q, threads);
    } catch (...) {
        fib_error = error_text(std::current_exception());
    }
    const auto pencils = standard_pencils(q);
    for (std::size_t i = 0; i < pencils.size(); ++i) {
        bool edge = pencils[i].name[0] == 'L';
        std::string expected = edge ? "2xI4 + 16 nodal, euler 24" : "I6 + 18 nodal, euler 24";
        std::string computed = reports.empty() ? fib_error : fiber_summary(reports[i]);
        out.push_back(make_claim("fibration." + pencils[i].name, "fibration", 11, expected, computed));
    }
    ClaimRecord model{"fibration.six-nodal-model", "fibration", 11, "irreducible remaining singular fibers",
                      "not computed: needs the six-nodal projective model", ClaimStatus::Unverified};
    out.push_back(model);
    return out;
}

std::vector<ClaimRecord> property_claims() {
    std::vector<ClaimRecord> out;
    ClassRegistry reg = make_m_registry();
    LatticePtr m = reg.lattice();
    const IntMatrix& g = m->gram();
    const IntMatrix id = IntMatrix::identity(11);

    {
        auto p = load_printed_matrices(reg);
        std::vector<IntegerIsometry> gens = {p.alpha, p.beta, build_mirror(reg)};
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                gens.push_back(build_s4_action(transposition(i, j), reg));
        std::mt19937 rng(31);
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        std::uniform_int_distribution<int> len(1, 6);
        std::size_t ok = 0;
        for (int trial = 0; trial < 100; ++trial) {
            IntegerIsometry w(m, id);
            for (int k = len(rng); k > 0; --k)
                w = w.compose(gens[pick(rng)]);
            ok += w.matrix().transpose() * g * w.matrix() == g && w.compose(w.inverse()).is_identity();
        }
        out.push_back(make_claim("properties.isometry-words", "properties", 12, "100/100", ratio(ok, 100)));
    }
    {
        std::mt19937 rng(77);
        std::uniform_int_distribution<int> coef(-5, 5);
        FiniteQuadForm fq = build_disc_group(m);
        std::uniform_int_distribution<int> elem(0, 127);
        std::size_t ok = 0;
        for (int trial = 0; trial < 100; ++trial) {
            IntVector x(11), y(11), z(11);
            for (std::size_t i = 0; i < 11; ++i) {
                x[i] = coef(rng);
                y[i] = coef(rng);
                z[i] = coef(rng);
            }
            LatticeVector a(m, x), b(m, y), c(m, z);
            Integer k = coef(rng);
            DiscElement u = DiscElement::from_index(elem(rng)), v = DiscElement::from_index(elem(rng)),
                        w = DiscElement::from_index(elem(rng));
            Rational lin = fq.b(u + v, w) - fq.b(u, w) - fq.b(v, w);
            ok += intersect(a, b) == intersect(b, a) &&
                  intersect(a + k * b, c) == intersect(a, c) + k * intersect(b, c) && lin.get_den() == 1 &&
                  fq.b(u, v) == fq.b(v, u);
        }
        out.push_back(make_claim("properties.bilinearity", "properties", 12, "100/100", ratio(ok, 100)));
    }
    {
        std::mt19937 rng(99);
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        std::uniform_int_distribution<int> coef(-9, 9);
        std::size_t ok = 0;
        for (int trial = 0; trial < 100; ++trial) {
            IntMatrix r(dim(rng), dim(rng));
            for (std::size_t i = 0; i < r.rows(); ++i)
                for (std::size_t j = 0; j < r.cols(); ++j)
                    r(i, j) = coef(rng);
            SmithForm s = smith_normal_form(r);
            bool good = s.U * r * s.V == s.D && abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1;
            for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i)
                good = good && (s.diagonal[i] == 0 ? s.diagonal[i + 1] == 0 : s.diagonal[i + 1] % s.diagonal[i] == 0);
            ok += good;
        }
        out.push_back(make_claim("properties.smith-reconstruction", "properties", 12, "100/100", ratio(ok, 100)));
    }
    {
        std::mt19937 rng(20240611);
        std::uniform_int_distribution<int> deg(0, 6), coef(-6, 6);
        std::size_t ok = 0;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Rational> cs(deg(rng) + 1);
            for (auto& x : cs)
                x = coef(rng);
            if (cs.back() == 0)
                cs.back() = 1;
            BinaryForm f = BinaryForm::from_coeffs(cs);
            auto r = is_perfect_square(f * f);
            ok += r && r->scalar * (r->root * r->root) == f * f && (r->root == f || r->root == Rational(-1) * f);
        }
        out.push_back(make_claim("properties.perfect-square-roundtrip", "properties", 12, "100/100", ratio(ok, 100)));
    }
    return out;
}

std::vector<ClaimRecord> run_report(const RunConfig& cfg) {
    const int threads = resolve_jobs(cfg.parallelism);
    std::vector<ClaimRecord> out;
    auto add = [&](std::vector<ClaimRecord> v) { out.insert(out.end(), v.begin(), v.end()); };
    auto sample = [&] { return cfg.input_path ? parse_input(*cfg.input_path) : reference_sample(); };
    switch (cfg.subcommand) {
        case Subcommand::Lattice:
            add(lattice_claims());
            break;
        case Subcommand::Discform:
            add(discform_claims(threads));
            break;
        case Subcommand::Isometry:
            add(isometry_claims());
            break;
        case Subcommand::Quartic:
            add(quartic_claims(sample(), threads));
            break;
        case Subcommand::Report:
            add(lattice_claims());
            add(discform_claims(threads));
            add(isometry_claims());
            add(quartic_claims(sample(), threads));
            add(property_claims());
            break;
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const ClaimRecord& a, const ClaimRecord& b) { return a.claim_id < b.claim_id; });
    return out;
}

bool all_pass(const std::vector<ClaimRecord>& claims) {
    return std::none_of(claims.begin(), claims.end(), [](const ClaimRecord& c) { return c.status == ClaimStatus::Fail; });
}

std::vector<std::string> manifest_mismatch(const std::vector<ClaimRecord>& claims, const nlohmann::json& manifest,
                                           bool complete) {
    std::set<std::string> listed, computed;
    for (const auto& entry : manifest.at("claims"))
        listed.insert(entry.at("id").get<std::string>());
    for (const auto& c : claims)
        computed.insert(c.claim_id);
    std::vector<std::string> out;
    for (const auto& id : computed)
        if (!listed.count(id))
            out.push_back(id);
    if (complete)
        for (const auto& id : listed)
            if (!computed.count(id))
                out.push_back(id);
    return out;
}

}  // namespace tq
