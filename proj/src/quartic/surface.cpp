#include "tq/quartic/quartic.hpp"

#include "tq/exactmath/residue.hpp"
#include "tq/exactmath/roots.hpp"

#include <algorithm>

namespace tq {

const std::array<std::string, 4> kCoords = {"X0", "X1", "X2", "X3"};
const std::array<std::pair<int, int>, 6> kEdgePairs = {{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

const std::array<const char*, 12>& QuarticCoefficients::names() {
    static const std::array<const char*, 12> n = {"a0", "a1", "a2", "b0", "b1", "b3",
                                                  "c0", "c2", "c3", "d1", "d2", "d3"};
    return n;
}

std::array<Rational, 12> QuarticCoefficients::values() const {
    return {a0, a1, a2, b0, b1, b3, c0, c2, c3, d1, d2, d3};
}

QuarticCoefficients QuarticCoefficients::from_values(const std::array<Rational, 12>& v, const Rational& delta) {
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], v[10], v[11], delta};
}

bool GenericityFlags::all() const {
    return all_nonzero && cross_ratios_distinct &&
           std::all_of(vertex_nondegenerate.begin(), vertex_nondegenerate.end(), [](bool b) { return b; });
}

GenericityFlags genericity(const QuarticCoefficients& c) {
    GenericityFlags g;
    auto v = c.values();
    g.all_nonzero = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    g.vertex_nondegenerate = {c.a0 * c.b0 * c.c0 != 0, c.a1 * c.b1 * c.d1 != 0, c.a2 * c.c2 * c.d2 != 0,
                              c.b3 * c.c3 * c.d3 != 0};
    g.cross_ratios_distinct = false;
    if (g.all_nonzero) {
        auto lam = cross_ratios(c);
        g.cross_ratios_distinct = true;
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i + 1; j < 6; ++j)
                if (lam[i] == lam[j])
                    g.cross_ratios_distinct = false;
    }
    return g;
}

namespace {

MultiPoly X(int i) { return var(kCoords[i]); }

std::array<MultiPoly, 4> face_forms(const std::array<MultiPoly, 12>& k) {
    MultiPoly A = k[0] * X(0) + k[1] * X(1) + k[2] * X(2);
    MultiPoly B = k[3] * X(0) + k[4] * X(1) + k[5] * X(3);
    MultiPoly C = k[6] * X(0) + k[7] * X(2) + k[8] * X(3);
    MultiPoly D = k[9] * X(1) + k[10] * X(2) + k[11] * X(3);
    return {D, C, B, A};
}

MultiPoly assemble(const std::array<MultiPoly, 4>& face, const MultiPoly& delta) {
    const MultiPoly& A = face[3];
    const MultiPoly& B = face[2];
    const MultiPoly& C = face[1];
    const MultiPoly& D = face[0];
    return A * X(0) * X(1) * X(2) + B * X(0) * X(1) * X(3) + C * X(0) * X(2) * X(3) + D * X(1) * X(2) * X(3) +
           delta * X(0) * X(1) * X(2) * X(3);
}

std::array<MultiPoly, 12> symbols() {
    std::array<MultiPoly, 12> k;
    for (std::size_t i = 0; i < 12; ++i)
        k[i] = var(QuarticCoefficients::names()[i]);
    return k;
}

}  // namespace

TetraQuartic build_quartic(const QuarticCoefficients& c) {
    std::array<MultiPoly, 12> k;
    auto v = c.values();
    for (std::size_t i = 0; i < 12; ++i)
        k[i] = cst(v[i]);
    TetraQuartic q;
    q.coeffs = c;
    q.face_form = face_forms(k);
    q.F = assemble(q.face_form, cst(c.delta)).with_vars({kCoords.begin(), kCoords.end()});
    return q;
}

MultiPoly symbolic_quartic() { return assemble(face_forms(symbols()), cst(1)); }
std::array<MultiPoly, 4> symbolic_face_forms() { return face_forms(symbols()); }

bool edge_on_surface(const TetraQuartic& q, int i, int j) {
    std::map<std::string, MultiPoly> zero;
    for (int k = 1; k <= 4; ++k)
        if (k != i && k != j)
            zero[kCoords[k - 1]] = cst(0);
    return q.F.substitute(zero).is_zero();
}

std::string to_string(PointType t) {
    switch (t) {
    case PointType::Smooth: return "smooth";
    case PointType::Node: return "node";
    case PointType::Cusp: return "cusp";
    case PointType::Worse: return "worse";
    }
    return "?";
}

std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0)
                continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

namespace {

unsigned lowest_degree(const MultiPoly& f) {
    unsigned best = ~0u;
    for (const auto& [e, coef] : f.terms()) {
        unsigned d = 0;
        for (unsigned x : e)
            d += x;
        best = std::min(best, d);
    }
    return best;
}

// Local analysis of a hypersurface at p: dehomogenize at the first nonzero
// coordinate and translate p to the origin.
SingularityReport analyze(const MultiPoly& f, const std::vector<std::string>& vars, const ProjectivePoint& p,
                          bool plane_curve) {
    std::size_t k = 0;
    while (k < p.size() && p[k] == 0)
        ++k;
    if (k == p.size())
        throw std::invalid_argument("zero vector is not a projective point");
    std::map<std::string, MultiPoly> sub;
    std::vector<std::string> local;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i == k) {
            sub[vars[i]] = cst(1);
        } else {
            std::string y = "_y" + std::to_string(i);
            local.push_back(y);
            sub[vars[i]] = cst(p[i] / p[k]) + var(y);
        }
    }
    MultiPoly g = f.substitute(sub);
    SingularityReport rep;
    rep.point = p;
    if (g.is_zero()) {
        rep.multiplicity = ~0u;
        rep.classification = PointType::Worse;
        return rep;
    }
    rep.multiplicity = lowest_degree(g);
    if (rep.multiplicity == 0)
        return rep;  // caller rejects
    if (rep.multiplicity == 1) {
        rep.classification = PointType::Smooth;
        return rep;
    }
    const std::size_t n = local.size();
    if (rep.multiplicity > 2) {
        rep.classification = PointType::Worse;
        return rep;
    }
    MultiPoly q2 = g.homogeneous_part(2);
    std::vector<std::vector<Rational>> hess(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            hess[i][j] = q2.derivative(local[i]).derivative(local[j]).constant_term();
    rep.tangent_cone_rank = static_cast<unsigned>(rational_rank(hess));
    if (rep.tangent_cone_rank == n) {
        rep.classification = PointType::Node;
        return rep;
    }
    if (!plane_curve || rep.tangent_cone_rank != 1) {
        rep.classification = PointType::Worse;
        return rep;
    }
    // q2 = c * l^2 with l = h00 u + h01 v (row of the Hessian that is nonzero)
    std::size_t r = hess[0][0] != 0 || hess[0][1] != 0 ? 0 : 1;
    Rational lu = hess[r][0], lv = hess[r][1];
    // a root (u, v) of l; the cubic part avoids l iff it is nonzero there
    Rational ru = -lv, rv = lu;
    MultiPoly q3 = g.homogeneous_part(3);
    Rational val = q3.evaluate_all({{local[0], ru}, {local[1], rv}});
    rep.classification = val != 0 ? PointType::Cusp : PointType::Worse;
    // back to projective coordinates: l(y) with y_i = X_i/X_k - p_i/p_k
    std::vector<Rational> line(3, 0);
    Rational lk = 0;
    std::size_t li = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == k)
            continue;
        Rational c = li == 0 ? lu : lv;
        line[i] = c;
        lk -= c * p[i] / p[k];
        ++li;
    }
    line[k] = lk;
    Rational lead = 0;
    for (const auto& c : line)
        if (c != 0) {
            lead = c;
            break;
        }
    for (auto& c : line)
        c /= lead;
    rep.tangent_line = line;
    return rep;
}

}  // namespace

SingularityReport classify_surface_point(const TetraQuartic& q, const ProjectivePoint& p) {
    if (p.size() != 4)
        throw std::invalid_argument("surface points have four coordinates");
    std::map<std::string, Rational> at;
    for (int i = 0; i < 4; ++i)
        at[kCoords[i]] = p[i];
    if (q.F.evaluate_all(at) != 0)
        throw PointNotOnSurface("point is not on the surface");
    return analyze(q.F, {kCoords.begin(), kCoords.end()}, p, false);
}

SingularityReport classify_plane_point(const MultiPoly& f, const std::array<std::string, 3>& vars,
                                       const ProjectivePoint& p) {
    if (p.size() != 3)
        throw std::invalid_argument("plane points have three coordinates");
    std::map<std::string, Rational> at;
    for (int i = 0; i < 3; ++i)
        at[vars[i]] = p[i];
    if (f.evaluate_all(at) != 0)
        throw PointNotOnCurve("point is not on the curve");
    return analyze(f, {vars.begin(), vars.end()}, p, true);
}

SingularLocus singular_locus(const TetraQuartic& q) {
    const std::array<std::string, 3> plane = {"X0", "X1", "X2"};
    MultiPoly P = q.F.coefficient("X3", 2);
    MultiPoly Qc = q.F.coefficient("X3", 1);
    MultiPoly R = q.F.coefficient("X3", 0);
    MultiPoly G = Qc * Qc - Rational(4) * P * R;

    SingularLocus loc;
    try {
        std::vector<MultiPoly> grad;
        for (const auto& v : plane)
            grad.push_back(G.derivative(v));
        auto over = solve_projective2(grad, plane, {P});
        loc.over_sextic = total_count(over);
        for (const auto& pt : over)
            for_each_split(pt.minpoly, [&](const UniPoly& m) {
                if (*m.degree() != 1)
                    return;
                Rational root = -m.coeff(0) / m.coeff(1);
                std::map<std::string, Rational> at;
                for (int i = 0; i < 3; ++i)
                    at[plane[i]] = pt.coords[i](root);
                Rational x3 = -Qc.evaluate_all(at) / (2 * P.evaluate_all(at));
                loc.rational_points.push_back({at["X0"], at["X1"], at["X2"], x3});
            });

        auto base = solve_projective2({P, Qc, R}, plane);
        std::vector<MultiPoly> partials;
        for (const auto& v : plane)
            partials.push_back(q.F.derivative(v));
        for (const auto& pt : base) {
            for_each_split(pt.minpoly, [&](const UniPoly& m) {
                ResidueField k(m);
                std::map<std::string, UniPoly> at;
                for (int i = 0; i < 3; ++i)
                    at[plane[i]] = k.reduce(pt.coords[i]);
                KPoly g;
                for (const auto& d : partials)
                    g = k_gcd(g, eval_to_kpoly(d, "X3", at, k), k);
                if (!k_degree(g))
                    throw PositiveDimensionalLocus("singular along a line through E4");
                KPoly sf = k_squarefree(g, k);
                std::size_t lifts = *k_degree(sf);
                loc.over_base += lifts * k.degree();
                if (k.degree() == 1) {
                    std::vector<Rational> c;
                    for (const auto& e : sf)
                        c.push_back(e.coeff(0));
                    for (const Rational& x3 : rational_roots(UniPoly(c)))
                        loc.rational_points.push_back({at["X0"].coeff(0), at["X1"].coeff(0), at["X2"].coeff(0), x3});
                }
            });
        }
    } catch (const PositiveDimensional& e) {
        throw PositiveDimensionalLocus(e.what());
    }
    loc.rational_points.push_back({0, 0, 0, 1});
    for (auto& p : loc.rational_points) {
        Rational lead = *std::find_if(p.begin(), p.end(), [](const Rational& x) { return x != 0; });
        for (auto& x : p)
            x /= lead;
    }
    std::sort(loc.rational_points.begin(), loc.rational_points.end());
    loc.rational_points.erase(std::unique(loc.rational_points.begin(), loc.rational_points.end()),
                              loc.rational_points.end());
    loc.count = loc.at_projection_node + loc.over_sextic + loc.over_base;
    return loc;
}

std::size_t singular_locus_count(const TetraQuartic& q) { return singular_locus(q).count; }

std::array<Rational, 6> cross_ratios(const QuarticCoefficients& c) {
    auto ratio = [](const Rational& n, const Rational& d, const char* what) -> Rational {
        if (d == 0)
            throw DegenerateCoefficient(std::string("zero denominator in ") + what);
        return n / d;
    };
    return {ratio(c.a1 * c.b0, c.a0 * c.b1, "lambda12"), ratio(c.a2 * c.c0, c.a0 * c.c2, "lambda13"),
            ratio(c.b3 * c.c0, c.b0 * c.c3, "lambda14"), ratio(c.a2 * c.d1, c.a1 * c.d2, "lambda23"),
            ratio(c.b3 * c.d1, c.b1 * c.d3, "lambda24"), ratio(c.c3 * c.d2, c.c2 * c.d3, "lambda34")};
}

bool cross_ratio_relation(const std::array<Rational, 6>& l) { return l[0] * l[2] * l[3] * l[5] == l[1] * l[4]; }

bool cross_ratio_relation_symbolic() {
    auto s = [](const char* n) { return var(n); };
    // numerators and denominators of the six closed forms
    MultiPoly n12 = s("a1") * s("b0"), d12 = s("a0") * s("b1");
    MultiPoly n13 = s("a2") * s("c0"), d13 = s("a0") * s("c2");
    MultiPoly n14 = s("b3") * s("c0"), d14 = s("b0") * s("c3");
    MultiPoly n23 = s("a2") * s("d1"), d23 = s("a1") * s("d2");
    MultiPoly n24 = s("b3") * s("d1"), d24 = s("b1") * s("d3");
    MultiPoly n34 = s("c3") * s("d2"), d34 = s("c2") * s("d3");
    MultiPoly lhs = n12 * n14 * n23 * n34 * d13 * d24;
    MultiPoly rhs = n13 * n24 * d12 * d14 * d23 * d34;
    return lhs == rhs;
}

Rational cross_ratio(const std::array<Rational, 2>& p1, const std::array<Rational, 2>& p2,
                     const std::array<Rational, 2>& p3, const std::array<Rational, 2>& p4) {
    auto br = [](const std::array<Rational, 2>& x, const std::array<Rational, 2>& y) -> Rational {
        return x[0] * y[1] - x[1] * y[0];
    };
    Rational den = br(p1, p4) * br(p2, p3);
    if (den == 0)
        throw DegenerateCoefficient("coincident points in cross-ratio");
    return br(p1, p3) * br(p2, p4) / den;
}

Rational cross_ratio_oracle(const TetraQuartic& q, int i, int j) {
    std::vector<int> rest;
    for (int k = 1; k <= 4; ++k)
        if (k != i && k != j)
            rest.push_back(k);
    // the residual line R_m meets L_ij where its face form restricted to the
    // edge vanishes; in (X_i : X_j) coordinates
    auto residual_point = [&](int m) -> std::array<Rational, 2> {
        const MultiPoly& f = q.face_form[m - 1];
        Rational fi = f.derivative(kCoords[i - 1]).constant_term();
        Rational fj = f.derivative(kCoords[j - 1]).constant_term();
        if (fi == 0 && fj == 0)
            throw DegenerateCoefficient("residual line contains the edge");
        return {fj, -fi};
    };
    return cross_ratio({Rational(1), Rational(0)}, {Rational(0), Rational(1)}, residual_point(rest[0]), residual_point(rest[1]));
}

std::array<ProjectivePoint, 2> kernel_basis(const std::vector<Rational>& l) {
    std::size_t m = 0;
    while (m < 3 && l[m] == 0)
        ++m;
    if (m == 3)
        throw std::invalid_argument("zero linear form");
    std::array<ProjectivePoint, 2> out;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == m)
            continue;
        ProjectivePoint v(3, 0);
        v[i] = l[m];
        v[m] = -l[i];
        out[idx++] = v;
    }
    return out;
}

std::vector<RationalLine> configuration_lines(const TetraQuartic& q) {
    std::vector<RationalLine> out;
    for (auto [i, j] : kEdgePairs) {
        ProjectivePoint p(4, 0), r(4, 0);
        p[i - 1] = 1;
        r[j - 1] = 1;
        out.push_back({"L" + std::to_string(i) + std::to_string(j), p, r});
    }
    for (int m = 1; m <= 4; ++m) {
        // residual form on the face X_(m-1) = 0 in the other three coordinates
        std::vector<int> idx;
        for (int k = 0; k < 4; ++k)
            if (k != m - 1)
                idx.push_back(k);
        std::vector<Rational> l;
        for (int k : idx)
            l.push_back(q.face_form[m - 1].derivative(kCoords[k]).constant_term());
        auto ker = kernel_basis(l);
        ProjectivePoint p(4, 0), r(4, 0);
        for (int t = 0; t < 3; ++t) {
            p[idx[t]] = ker[0][t];
            r[idx[t]] = ker[1][t];
        }
        out.push_back({"R" + std::to_string(m), p, r});
    }
    return out;
}

bool line_on_surface(const MultiPoly& f, const ProjectivePoint& p, const ProjectivePoint& q) {
    std::map<std::string, MultiPoly> sub;
    for (std::size_t i = 0; i < p.size(); ++i)
        sub[kCoords[i]] = cst(p[i]) * var("_s") + cst(q[i]) * var("_t");
    return f.substitute(sub).is_zero();
}

}  // namespace tq
