#include "tq/quartic/fibration.hpp"

#include "tq/exactmath/roots.hpp"

#include <exception>

#include <omp.h>

namespace tq {

std::vector<Pencil> standard_pencils(const TetraQuartic& q) {
    std::vector<Pencil> out;
    for (auto [i, j] : kEdgePairs) {
        std::vector<int> rest;
        for (int k = 1; k <= 4; ++k)
            if (k != i && k != j)
                rest.push_back(k);
        out.push_back({"L" + std::to_string(i) + std::to_string(j), var(kCoords[rest[0] - 1]),
                       var(kCoords[rest[1] - 1])});
    }
    for (int m = 1; m <= 4; ++m)
        out.push_back({"R" + std::to_string(m), var(kCoords[m - 1]), q.face_form[m - 1]});
    return out;
}

UniPoly ternary_cubic_discriminant(const MultiPoly& cubic, const std::array<std::string, 3>& v,
                                   const std::string& param) {
    std::array<std::array<MultiPoly, 3>, 3> h;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            h[i][j] = cubic.derivative(v[i]).derivative(v[j]);
    MultiPoly hess = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
                     h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
                     h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
    std::vector<MultiPoly> quadrics;
    for (int i = 0; i < 3; ++i)
        quadrics.push_back(cubic.derivative(v[i]));
    for (int i = 0; i < 3; ++i)
        quadrics.push_back(hess.derivative(v[i]));
    static const std::array<std::array<unsigned, 3>, 6> mons = {
        {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};
    Matrix<UniPoly> m(6, std::vector<UniPoly>(6));
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            MultiPoly coef = quadrics[r]
                                 .coefficient(v[0], mons[c][0])
                                 .coefficient(v[1], mons[c][1])
                                 .coefficient(v[2], mons[c][2]);
            m[r][c] = to_unipoly(coef, param);
        }
    return bareiss_determinant(std::move(m));
}

namespace {

const std::string kT = "_t";

struct Chart {
    MultiPoly cubic;  // in the three remaining coordinates and _t
    std::array<std::string, 3> coords;
};

Rational coefficient_of(const MultiPoly& lin, const std::string& x) { return lin.derivative(x).constant_term(); }

// Plane `lhs - t * rhs = 0`, solved for a coordinate occurring in lhs only;
// the plane section is divided by `rhs`, which cuts out the base line there.
Chart make_chart(const MultiPoly& F, const MultiPoly& lhs, const MultiPoly& rhs) {
    int r = -1;
    for (int i = 0; i < 4 && r < 0; ++i)
        if (coefficient_of(lhs, kCoords[i]) != 0 && coefficient_of(rhs, kCoords[i]) == 0)
            r = i;
    if (r < 0)
        throw std::logic_error("pencil chart has no solvable coordinate");
    Rational c = coefficient_of(lhs, kCoords[r]);
    MultiPoly rest = lhs - cst(c) * var(kCoords[r]);
    MultiPoly xr = (var(kT) * rhs - rest) * (1 / c);
    MultiPoly section = F.substitute({{kCoords[r], xr}});
    Chart ch;
    ch.cubic = exact_div(section, rhs);
    int k = 0;
    for (int i = 0; i < 4; ++i)
        if (i != r)
            ch.coords[k++] = kCoords[i];
    return ch;
}

Rational eval_linear(const MultiPoly& lin, const ProjectivePoint& p) {
    std::map<std::string, Rational> at;
    for (int i = 0; i < 4; ++i)
        at[kCoords[i]] = p[i];
    return lin.evaluate_all(at);
}

SingularFiber classify_fiber(const Pencil& pen, const MultiPoly& plane,
                             const MultiPoly& cubic, const std::array<std::string, 3>& coords,
                             const std::vector<RationalLine>& lines, std::string label, unsigned order,
                             bool& nodal_checked) {
    SingularFiber f;
    f.parameter = std::move(label);
    f.disc_order = order;
    unsigned on_plane = 0;
    for (const auto& l : lines)
        if (l.name != pen.name && eval_linear(plane, l.p) == 0 && eval_linear(plane, l.q) == 0)
            ++on_plane;
    f.components = on_plane + (on_plane < 3 ? 1 : 0);
    for (int i = 0; i < 4; ++i) {
        ProjectivePoint e(4, 0);
        e[i] = 1;
        bool on_base = eval_linear(pen.u, e) == 0 && eval_linear(pen.v, e) == 0;
        if (!on_base && eval_linear(plane, e) == 0)
            ++f.nodes_in_plane;
    }
    unsigned n = f.components + f.nodes_in_plane;
    nodal_checked = false;
    if (n >= 2) {
        f.type = order == n ? "I" + std::to_string(n) : "other";
        return f;
    }
    f.type = "other";
    if (order != 1)
        return f;
    std::vector<MultiPoly> grad;
    for (const auto& c : coords)
        grad.push_back(cubic.derivative(c));
    auto sing = solve_projective2(grad, coords);
    if (total_count(sing) == 1 && sing[0].is_rational()) {
        auto rep = classify_plane_point(cubic, coords, sing[0].rational_coords());
        if (rep.classification == PointType::Node) {
            f.type = "nodal";
            nodal_checked = true;
        }
    }
    return f;
}

}  // namespace

UniPoly pencil_discriminant(const TetraQuartic& q, const Pencil& pen) {
    Chart ch = make_chart(q.F, pen.v, pen.u);
    return ternary_cubic_discriminant(ch.cubic, ch.coords, kT);
}

FiberReport fibration_fibers(const TetraQuartic& q, const Pencil& pen) {
    FiberReport rep;
    rep.pencil = pen.name;
    Chart finite = make_chart(q.F, pen.v, pen.u);   // v = t u
    Chart at_inf = make_chart(q.F, pen.u, pen.v);   // u = t v, t = 0 is the plane u = 0
    UniPoly d = ternary_cubic_discriminant(finite.cubic, finite.coords, kT);
    UniPoly d_inf = ternary_cubic_discriminant(at_inf.cubic, at_inf.coords, kT);
    if (d.is_zero() || d_inf.is_zero())
        throw UnexpectedFactor("discriminant of the pencil " + pen.name + " vanishes identically");
    const unsigned inf_order = static_cast<unsigned>(d_inf.valuation());
    rep.disc_total_order = static_cast<unsigned>(*d.degree()) + inf_order;

    const auto lines = configuration_lines(q);
    std::vector<SingularFiber> fibers;
    unsigned checked = 0;
    bool ok = true;
    UniPoly rest = d;
    for (const Rational& r : rational_roots(d)) {
        unsigned m = static_cast<unsigned>(root_multiplicity(d, r));
        for (unsigned k = 0; k < m; ++k)
            rest = exact_div(rest, UniPoly{-r, 1});
        MultiPoly plane = pen.v - cst(r) * pen.u;
        MultiPoly cubic = finite.cubic.evaluate({{kT, r}});
        bool nodal = false;
        fibers.push_back(classify_fiber(pen, plane, cubic, finite.coords, lines, "t=" + tq::to_string(r), m,
                                        nodal));
        checked += nodal;
    }
    if (inf_order > 0) {
        MultiPoly cubic = at_inf.cubic.evaluate({{kT, 0}});
        bool nodal = false;
        fibers.push_back(classify_fiber(pen, pen.u, cubic, at_inf.coords, lines, "t=inf", inf_order, nodal));
        checked += nodal;
    }
    UniPoly sf = squarefree_part(rest);
    const unsigned irrational = static_cast<unsigned>(*sf.degree());
    ok = ok && *sf.degree() == *rest.degree();

    rep.rational_nodal_checked = checked;
    rep.nodal_fiber_count = irrational;
    for (const auto& f : fibers) {
        if (f.type == "nodal") {
            ++rep.nodal_fiber_count;
        } else if (f.type == "other") {
            ok = false;
        } else {
            rep.reducible_fibers.push_back(f);
            rep.euler_sum += f.disc_order;
        }
    }
    rep.euler_sum += rep.nodal_fiber_count;
    rep.consistent = ok && rep.euler_sum == 24 && rep.disc_total_order == 24;
    return rep;
}

std::vector<FiberReport> fibration_survey_serial(const TetraQuartic& q) {
    std::vector<FiberReport> out;
    for (const auto& p : standard_pencils(q))
        out.push_back(fibration_fibers(q, p));
    return out;
}

std::vector<FiberReport> fibration_survey(const TetraQuartic& q, int threads) {
    const auto pencils = standard_pencils(q);
    const int n = static_cast<int>(pencils.size());
    std::vector<FiberReport> out(pencils.size());
    std::vector<std::exception_ptr> errors(pencils.size());
    if (threads <= 0)
        threads = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < n; ++i) {
        try {
            out[i] = fibration_fibers(q, pencils[i]);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

}  // namespace tq
