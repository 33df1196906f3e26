#include "tq/quartic/sextic.hpp"

namespace tq {

const std::array<std::string, 3> kPlane = {"X0", "X1", "X2"};

namespace {
MultiPoly X(int i) { return var(kPlane[i]); }
}  // namespace

MultiPoly closed_form_sextic(const std::array<MultiPoly, 12>& k, const MultiPoly& delta) {
    MultiPoly A = k[0] * X(0) + k[1] * X(1) + k[2] * X(2);
    MultiPoly cubic = X(0) * X(1) * (k[3] * X(0) + k[4] * X(1)) + X(0) * X(2) * (k[6] * X(0) + k[7] * X(2)) +
                      X(1) * X(2) * (k[9] * X(1) + k[10] * X(2)) + delta * X(0) * X(1) * X(2);
    MultiPoly conic = k[5] * X(0) * X(1) + k[8] * X(0) * X(2) + k[11] * X(1) * X(2);
    return cubic * cubic - Rational(4) * A * X(0) * X(1) * X(2) * conic;
}

std::array<MultiPoly, 12> coefficient_symbols() {
    std::array<MultiPoly, 12> k;
    for (std::size_t i = 0; i < 12; ++i)
        k[i] = var(QuarticCoefficients::names()[i]);
    return k;
}

namespace {

BranchSextic split_at_x3(const MultiPoly& F, const MultiPoly& L) {
    auto deg = F.degree_in("X3");
    if (deg && *deg > 2)
        throw NotANode("F has degree above 2 in X3");
    BranchSextic s;
    s.P = F.coefficient("X3", 2);
    s.Qc = F.coefficient("X3", 1);
    s.R = F.coefficient("X3", 0);
    s.G = s.Qc * s.Qc - Rational(4) * s.P * s.R;
    s.L = L;
    return s;
}

}  // namespace

BranchSextic branch_sextic(const TetraQuartic& q) {
    if (classify_surface_point(q, {0, 0, 0, 1}).classification != PointType::Node)
        throw NotANode("E4 is not a node");
    BranchSextic s = split_at_x3(q.F, q.face_form[3]);
    std::array<MultiPoly, 12> k;
    auto v = q.coeffs.values();
    for (std::size_t i = 0; i < 12; ++i)
        k[i] = cst(v[i]);
    if (!(s.G == closed_form_sextic(k, cst(q.coeffs.delta))))
        throw std::logic_error("branch sextic differs from the closed formula");
    return s;
}

BranchSextic symbolic_branch_sextic() { return split_at_x3(symbolic_quartic(), symbolic_face_forms()[3]); }

PlaneCurve tritangent_line(const BranchSextic& s) {
    PlaneCurve c{CurveKind::Line, "L", {}};
    for (int i = 0; i < 3; ++i)
        c.coeffs[i] = s.L.derivative(kPlane[i]).constant_term();
    return c;
}

PlaneCurve tritangent_conic(const BranchSextic& s) {
    auto mixed = [&](int i, int j) { return s.P.derivative(kPlane[i]).derivative(kPlane[j]).constant_term(); };
    return {CurveKind::Conic, "Q", {mixed(0, 1), mixed(0, 2), mixed(1, 2)}};
}

PlaneCurve triangle_edge(int m) { return {CurveKind::Edge, "X" + std::to_string(m) + "=0", {Rational(m), 0, 0}}; }

namespace {

const MultiPoly S = var("_s"), T = var("_t");

std::array<MultiPoly, 3> line_through(const std::array<ProjectivePoint, 2>& ker) {
    std::array<MultiPoly, 3> x;
    for (int i = 0; i < 3; ++i)
        x[i] = cst(ker[0][i]) * S + cst(ker[1][i]) * T;
    return x;
}

BinaryForm form(const MultiPoly& p, unsigned degree) { return BinaryForm::from_multipoly(p, "_s", "_t", degree); }

CurveParam parametrize_line(const std::vector<Rational>& l) {
    CurveParam cp;
    cp.x = line_through(kernel_basis(l));
    cp.degree = 1;
    for (int n = 0; n < 3; ++n) {
        if (l[n] != 0)
            continue;
        for (int i = 0; i < 3; ++i)
            if (i != n && !cp.x[i].is_zero()) {
                cp.cusp_factors.push_back(form(cp.x[i], 1));
                break;
            }
    }
    return cp;
}

}  // namespace

CurveParam parametrize(const PlaneCurve& c) {
    switch (c.kind) {
    case CurveKind::Line:
        if (c.coeffs[0] == 0 && c.coeffs[1] == 0 && c.coeffs[2] == 0)
            throw ParametrizationFailure("zero linear form");
        return parametrize_line({c.coeffs.begin(), c.coeffs.end()});
    case CurveKind::Edge: {
        std::vector<Rational> l(3, 0);
        l.at(static_cast<std::size_t>(c.coeffs[0].get_num().get_si())) = 1;
        return parametrize_line(l);
    }
    case CurveKind::Conic: {
        const auto& p = c.coeffs;  // p01, p02, p12
        if (p[0] == 0 || p[1] == 0 || p[2] == 0)
            throw ParametrizationFailure("conic through the coordinate points is degenerate");
        // X = (Y1Y2, Y0Y2, Y0Y1) with p12 Y0 + p02 Y1 + p01 Y2 = 0
        auto y = line_through(kernel_basis({p[2], p[1], p[0]}));
        CurveParam cp;
        cp.x = {y[1] * y[2], y[0] * y[2], y[0] * y[1]};
        cp.degree = 2;
        for (int n = 0; n < 3; ++n)
            cp.cusp_factors.push_back(form(y[n], 1));
        MultiPoly conic = cst(p[0]) * X(0) * X(1) + cst(p[1]) * X(0) * X(2) + cst(p[2]) * X(1) * X(2);
        if (!conic.substitute({{"X0", cp.x[0]}, {"X1", cp.x[1]}, {"X2", cp.x[2]}}).is_zero())
            throw ParametrizationFailure("parametrization leaves the conic");
        return cp;
    }
    }
    throw ParametrizationFailure("unknown curve kind");
}

namespace {

BinaryForm pull_back(const MultiPoly& f, const CurveParam& cp, unsigned fdeg) {
    MultiPoly pb = f.substitute({{"X0", cp.x[0]}, {"X1", cp.x[1]}, {"X2", cp.x[2]}});
    return form(pb, fdeg * cp.degree);
}

// root of a linear binary form c0 t + c1 s
std::pair<Rational, Rational> linear_root(const BinaryForm& f) { return {-f.coeff(0), f.coeff(1)}; }

}  // namespace

TangencyReport tangency_report(const MultiPoly& G, const PlaneCurve& c) {
    CurveParam cp = parametrize(c);
    TangencyReport rep;
    rep.curve = c.name;
    rep.pullback = pull_back(G, cp, 6);
    if (rep.pullback.is_zero())
        throw ParametrizationFailure("curve is a component of G");
    rep.residual = rep.pullback;
    rep.cusp_factors_divide = true;
    for (const auto& f : cp.cusp_factors) {
        BinaryForm f2 = f * f;
        if (divides(f2, rep.residual))
            rep.residual = exact_div(rep.residual, f2);
        else
            rep.cusp_factors_divide = false;
    }
    auto sq = is_perfect_square(rep.residual);
    rep.square = sq.has_value();
    if (sq) {
        rep.root = sq->root;
        rep.tangency_points = rep.root.distinct_roots();
        rep.root_avoids_cusps = true;
        for (const auto& f : cp.cusp_factors) {
            auto [s0, t0] = linear_root(f);
            if (rep.root(s0, t0) == 0)
                rep.root_avoids_cusps = false;
        }
    }
    return rep;
}

bool tritangency_check(const MultiPoly& G, const PlaneCurve& c) {
    TangencyReport r = tangency_report(G, c);
    unsigned expected = c.kind == CurveKind::Edge ? 1 : 3;
    return r.cusp_factors_divide && r.square && r.root_avoids_cusps && r.tangency_points == expected &&
           r.root.degree() == expected;
}

std::vector<CubicCheck> tangency_cubic_check(const BranchSextic& s) {
    std::vector<CubicCheck> out;
    std::vector<PlaneCurve> curves = {tritangent_line(s), tritangent_conic(s), triangle_edge(0), triangle_edge(1),
                                      triangle_edge(2)};
    for (const auto& c : curves) {
        TangencyReport rep = tangency_report(s.G, c);
        bool ok = rep.square && divides(rep.root, pull_back(s.Qc, parametrize(c), 3));
        out.push_back({"Qc through the tangency points on " + c.name, ok});
    }
    for (int n = 0; n < 3; ++n) {
        ProjectivePoint e(3, 0);
        e[n] = 1;
        std::map<std::string, Rational> at = {{"X0", e[0]}, {"X1", e[1]}, {"X2", e[2]}};
        bool through = s.Qc.evaluate_all(at) == 0;
        std::vector<Rational> grad(3);
        for (int i = 0; i < 3; ++i)
            grad[i] = s.Qc.derivative(kPlane[i]).evaluate_all(at);
        Rational lead = 0;
        for (const auto& g : grad)
            if (g != 0) {
                lead = g;
                break;
            }
        bool same_tangent = false;
        if (lead != 0) {
            for (auto& g : grad)
                g /= lead;
            SingularityReport r = classify_plane_point(s.G, kPlane, e);
            same_tangent = r.classification == PointType::Cusp && r.tangent_line == grad;
        }
        std::string name = n == 0 ? "(1:0:0)" : n == 1 ? "(0:1:0)" : "(0:0:1)";
        out.push_back({"Qc through the cusp " + name, through});
        out.push_back({"Qc tangent to the cusp line at " + name, same_tangent});
    }
    return out;
}

}  // namespace tq
