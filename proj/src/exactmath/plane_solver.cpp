#include "tq/exactmath/plane_solver.hpp"

#include "tq/exactmath/roots.hpp"

#include <stdexcept>

namespace tq {

namespace {

struct NotGeneric {};

const std::string kU = "_u";

// Deterministic small nonzero weights for combining equations.
long weight(std::size_t pair, std::size_t eq, std::size_t side) {
    static const long table[] = {1, 2, -1, 3, 5, -2, 7, -3, 4, 1, -5, 6, 2, -7, 3, 8};
    return table[(pair * 5 + eq * 3 + side * 7) % 16];
}

UniPoly univariate_gcd(const std::vector<UniPoly>& eqs) {
    UniPoly g;
    for (const auto& e : eqs)
        g = gcd(g, e);
    return g;
}

}  // namespace

std::vector<Rational> AlgebraicPoint::rational_coords() const {
    if (!is_rational())
        throw std::logic_error("point is not rational");
    Rational root = -minpoly.coeff(0) / minpoly.leading();
    std::vector<Rational> r;
    for (const auto& c : coords)
        r.push_back(c(root));
    return r;
}

std::size_t total_count(const std::vector<AlgebraicPoint>& pts) {
    std::size_t n = 0;
    for (const auto& p : pts)
        n += p.count();
    return n;
}

std::vector<AlgebraicPoint> solve_univariate(const std::vector<UniPoly>& eqs, const std::vector<UniPoly>& nonzero) {
    UniPoly g = univariate_gcd(eqs);
    if (g.is_zero())
        throw PositiveDimensional("univariate system vanishes identically");
    if (*g.degree() == 0)
        return {};
    UniPoly m = squarefree_part(g);
    for (const auto& c : nonzero) {
        UniPoly h = gcd(m, c % m);
        if (h.is_zero())
            return {};
        m = exact_div(m, h).monic();
        if (*m.degree() == 0)
            return {};
    }
    std::vector<AlgebraicPoint> out;
    for (const Rational& r : rational_roots(m)) {
        out.push_back(AlgebraicPoint{UniPoly{-r, 1}, {UniPoly::constant(r)}});
        m = exact_div(m, UniPoly{-r, 1});
    }
    if (*m.degree() > 0)
        out.push_back(AlgebraicPoint{m, {UniPoly::x()}});
    return out;
}

namespace {

// Rational roots become their own pieces so rational points come out one by one.
template <class Fn>
void for_each_split_rational(const UniPoly& m, Fn&& fn) {
    UniPoly rest = m.monic();
    for (const Rational& r : rational_roots(m)) {
        UniPoly lin{-r, 1};
        for_each_split(lin, fn);
        rest = exact_div(rest, lin);
    }
    if (*rest.degree() > 0)
        for_each_split(rest, fn);
}

std::vector<AlgebraicPoint> attempt_shear(const std::vector<MultiPoly>& eqs, const std::string& x,
                                          const std::string& y, const std::vector<MultiPoly>& nonzero,
                                          long sigma) {
    const MultiPoly shear = var(kU) - Rational(sigma) * var(y);
    std::vector<MultiPoly> sheared;
    std::vector<ParamPoly> in_y;
    bool any_y = false;
    for (const auto& f : eqs) {
        MultiPoly g = f.substitute({{x, shear}});
        in_y.push_back(to_param_poly(g, y, kU));
        any_y = any_y || in_y.back().size() > 1;
        sheared.push_back(std::move(g));
    }
    if (!any_y) {
        std::vector<UniPoly> us;
        for (const auto& p : in_y)
            us.push_back(p.empty() ? UniPoly() : p[0]);
        UniPoly g = univariate_gcd(us);
        if (g.is_zero() || *g.degree() > 0)
            throw PositiveDimensional("equations depend on one linear form only");
        return {};
    }

    UniPoly elim;
    bool have = false;
    const std::size_t pairs = eqs.size() == 2 ? 1 : 3;
    for (std::size_t k = 0; k < pairs; ++k) {
        ParamPoly g1, g2;
        if (eqs.size() == 2) {
            g1 = in_y[0];
            g2 = in_y[1];
        } else {
            MultiPoly c1, c2;
            for (std::size_t i = 0; i < eqs.size(); ++i) {
                c1 += Rational(weight(k, i, 0)) * sheared[i];
                c2 += Rational(weight(k, i, 1)) * sheared[i];
            }
            g1 = to_param_poly(c1, y, kU);
            g2 = to_param_poly(c2, y, kU);
        }
        if (g1.empty() || g2.empty() || (g1.size() == 1 && g2.size() == 1))
            continue;
        UniPoly r = resultant(g1, g2);
        if (r.is_zero())
            continue;
        elim = have ? gcd(elim, r) : r;
        have = true;
    }
    if (!have)
        throw PositiveDimensional("all eliminants vanish identically");
    if (*elim.degree() == 0)
        return {};

    std::vector<AlgebraicPoint> out;
    for_each_split_rational(squarefree_part(elim), [&](const UniPoly& piece) {
        ResidueField k(piece);
        std::map<std::string, UniPoly> at_u{{kU, k.reduce(UniPoly::x())}};
        KPoly g;
        bool first = true;
        for (const auto& f : sheared) {
            KPoly p = eval_to_kpoly(f, y, at_u, k);
            g = first ? k_gcd(p, KPoly{}, k) : k_gcd(g, p, k);
            first = false;
        }
        if (g.empty())
            throw PositiveDimensional("a fiber of the projection is entirely contained in the solution set");
        g = k_squarefree(g, k);
        if (g.size() == 1)
            return;
        if (g.size() > 2)
            throw NotGeneric{};
        UniPoly ys = k.reduce(-g[0]);
        UniPoly xs = k.reduce(UniPoly::x() - Rational(sigma) * ys);
        std::map<std::string, UniPoly> pt{{x, xs}, {y, ys}};
        for (const auto& c : nonzero) {
            UniPoly e = eval_at(c, pt, k);
            if (e.is_zero())
                return;
            UniPoly h = gcd(e, piece);
            if (*h.degree() > 0)
                throw Split(h);
        }
        for (const auto& f : eqs)
            if (!eval_at(f, pt, k).is_zero())
                throw std::logic_error("solver produced a non-solution");
        out.push_back(AlgebraicPoint{piece, {xs, ys}});
    });
    return out;
}

}  // namespace

std::vector<AlgebraicPoint> solve_affine2(const std::vector<MultiPoly>& eqs_in, const std::string& x,
                                          const std::string& y, const std::vector<MultiPoly>& nonzero) {
    std::vector<MultiPoly> eqs;
    for (const auto& f : eqs_in) {
        if (f.is_zero())
            continue;
        if (f.is_constant())
            return {};
        eqs.push_back(f);
    }
    if (eqs.empty())
        throw PositiveDimensional("no nonzero equations");
    static const long shears[] = {0, 1, -1, 2, -2, 3, -3, 5, 7, -11};
    for (long sigma : shears) {
        try {
            return attempt_shear(eqs, x, y, nonzero, sigma);
        } catch (const NotGeneric&) {
        }
    }
    throw std::runtime_error("no shear puts the solution set in generic position");
}

std::vector<AlgebraicPoint> solve_projective2(const std::vector<MultiPoly>& eqs,
                                              const std::array<std::string, 3>& v,
                                              const std::vector<MultiPoly>& nonzero) {
    std::vector<AlgebraicPoint> out;
    auto restrict_all = [](const std::vector<MultiPoly>& ps, const std::map<std::string, Rational>& vals) {
        std::vector<MultiPoly> r;
        for (const auto& p : ps)
            r.push_back(p.evaluate(vals));
        return r;
    };

    // Chart v2 = 1.
    for (auto& p : solve_affine2(restrict_all(eqs, {{v[2], 1}}), v[0], v[1], restrict_all(nonzero, {{v[2], 1}}))) {
        p.coords.push_back(UniPoly::constant(1));
        out.push_back(std::move(p));
    }

    // Line v2 = 0, chart v1 = 1.
    std::vector<UniPoly> ue, un;
    for (const auto& p : restrict_all(eqs, {{v[2], 0}, {v[1], 1}}))
        ue.push_back(to_unipoly(p, v[0]));
    for (const auto& p : restrict_all(nonzero, {{v[2], 0}, {v[1], 1}}))
        un.push_back(to_unipoly(p, v[0]));
    for (auto& p : solve_univariate(ue, un)) {
        p.coords.push_back(UniPoly::constant(1));
        p.coords.push_back(UniPoly());
        out.push_back(std::move(p));
    }

    // The point (1:0:0).
    std::map<std::string, Rational> e0{{v[0], 1}, {v[1], 0}, {v[2], 0}};
    bool on = true;
    for (const auto& p : eqs)
        on = on && p.evaluate_all(e0) == 0;
    for (const auto& p : nonzero)
        on = on && p.evaluate_all(e0) != 0;
    if (on)
        out.push_back(AlgebraicPoint{UniPoly::x(), {UniPoly::constant(1), UniPoly(), UniPoly()}});
    return out;
}

}  // namespace tq
