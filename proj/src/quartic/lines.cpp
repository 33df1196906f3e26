#include "tq/quartic/lines.hpp"

#include "tq/exactmath/residue.hpp"

#include <exception>

#include <omp.h>

namespace tq {

namespace {

const std::array<std::pair<int, int>, 6> kPairs = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

template <class T>
std::array<T, 6> plucker_of(const std::vector<T>& p, const std::vector<T>& q) {
    std::array<T, 6> out;
    for (std::size_t k = 0; k < 6; ++k) {
        auto [m, n] = kPairs[k];
        out[k] = p[m] * q[n] - p[n] * q[m];
    }
    return out;
}

struct Option {
    std::map<std::string, MultiPoly> sub;
    std::vector<MultiPoly> nonzero;
    std::string free_var;
};

// The factor x * y * lin of the extreme coefficient vanishes on three
// disjoint pieces: x = 0; x != 0, y = 0; x, y != 0, lin = 0.
std::vector<Option> branch_options(const MultiPoly& f, const std::string& x, const std::string& y) {
    if (f.is_zero())
        throw InfiniteFamily("extreme coefficient vanishes identically");
    MultiPoly lin = exact_div(f, var(x) * var(y));
    std::vector<Option> out;
    out.push_back({{{x, cst(0)}}, {}, y});
    out.push_back({{{y, cst(0)}}, {var(x)}, x});
    Rational ax = lin.derivative(x).constant_term(), ay = lin.derivative(y).constant_term();
    MultiPoly k = lin.evaluate({{x, 0}, {y, 0}});
    if (ax != 0)
        out.push_back({{{x, (cst(ay) * var(y) + k) * (-1 / ax)}}, {var(x), var(y)}, y});
    else if (ay != 0)
        out.push_back({{{y, (cst(ax) * var(x) + k) * (-1 / ay)}}, {var(x), var(y)}, x});
    return out;
}

Rational value_of(const UniPoly& p) { return p.coeff(0); }

std::vector<SurfaceLine> chart_lines(const TetraQuartic& q, std::size_t chart,
                                     const std::vector<RationalLine>& config) {
    auto [i, j] = kPairs[chart];
    std::vector<int> others;
    for (int k = 0; k < 4; ++k)
        if (k != i && k != j)
            others.push_back(k);
    const MultiPoly a = var("a"), b = var("b"), c = var("c"), d = var("d");
    std::vector<MultiPoly> P(4, cst(0)), Q(4, cst(0));
    P[i] = cst(1);
    Q[j] = cst(1);
    P[others[0]] = a;
    Q[others[0]] = b;
    P[others[1]] = c;
    Q[others[1]] = d;

    std::map<std::string, MultiPoly> along;
    for (int k = 0; k < 4; ++k)
        along[kCoords[k]] = P[k] * var("_u") + Q[k] * var("_v");
    MultiPoly fl = q.F.substitute(along);
    std::array<MultiPoly, 5> f;
    for (unsigned k = 0; k <= 4; ++k)
        f[k] = fl.coefficient("_u", 4 - k).coefficient("_v", k);

    std::vector<MultiPoly> base_eqs = {f[1], f[2], f[3]};
    auto pl = plucker_of(P, Q);
    for (std::size_t e = 0; e < chart; ++e)
        base_eqs.push_back(pl[e]);

    std::vector<SurfaceLine> out;
    for (const auto& o1 : branch_options(f[0], "a", "c")) {
        for (const auto& o2 : branch_options(f[4], "b", "d")) {
            std::map<std::string, MultiPoly> sub = o1.sub;
            sub.insert(o2.sub.begin(), o2.sub.end());
            std::vector<MultiPoly> eqs, nonzero;
            for (const auto& e : base_eqs) {
                MultiPoly s = e.substitute(sub);
                if (!s.is_zero())
                    eqs.push_back(s);
            }
            for (const auto* set : {&o1.nonzero, &o2.nonzero})
                for (const auto& n : *set)
                    nonzero.push_back(n.substitute(sub));
            if (eqs.empty())
                throw InfiniteFamily("every line of a chart branch lies on the surface");
            std::vector<AlgebraicPoint> pts;
            try {
                pts = solve_affine2(eqs, o1.free_var, o2.free_var, nonzero);
            } catch (const PositiveDimensional& e) {
                throw InfiniteFamily(e.what());
            }
            for (const auto& pt : pts) {
                ResidueField k(pt.minpoly);
                std::map<std::string, UniPoly> at = {{o1.free_var, pt.coords[0]}, {o2.free_var, pt.coords[1]}};
                std::map<std::string, UniPoly> abcd;
                for (const char* n : {"a", "b", "c", "d"}) {
                    auto it = sub.find(n);
                    abcd[n] = it == sub.end() ? k.reduce(at.at(n)) : eval_at(it->second, at, k);
                }
                SurfaceLine line;
                line.minpoly = pt.minpoly;
                for (int side = 0; side < 2; ++side) {
                    const auto& src = side == 0 ? P : Q;
                    for (int m = 0; m < 4; ++m)
                        line.span[side].push_back(eval_at(src[m], abcd, k));
                }
                if (pt.is_rational()) {
                    ProjectivePoint p0, p1;
                    for (int m = 0; m < 4; ++m) {
                        p0.push_back(value_of(line.span[0][m]));
                        p1.push_back(value_of(line.span[1][m]));
                    }
                    line.plucker = plucker(p0, p1);
                    for (const auto& cl : config)
                        if (plucker(cl.p, cl.q) == *line.plucker)
                            line.name = cl.name;
                }
                out.push_back(std::move(line));
            }
        }
    }
    return out;
}

}  // namespace

std::array<Rational, 6> plucker(const ProjectivePoint& p, const ProjectivePoint& q) {
    auto pl = plucker_of(p, q);
    Rational lead = 0;
    for (const auto& x : pl)
        if (x != 0) {
            lead = x;
            break;
        }
    if (lead == 0)
        throw std::invalid_argument("points do not span a line");
    for (auto& x : pl)
        x /= lead;
    return pl;
}

std::vector<SurfaceLine> enumerate_lines_serial(const TetraQuartic& q) {
    const auto config = configuration_lines(q);
    std::vector<SurfaceLine> out;
    for (std::size_t chart = 0; chart < 6; ++chart) {
        auto part = chart_lines(q, chart, config);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<SurfaceLine> enumerate_lines(const TetraQuartic& q, int threads) {
    const auto config = configuration_lines(q);
    std::vector<std::vector<SurfaceLine>> parts(6);
    std::vector<std::exception_ptr> errors(6);
    if (threads <= 0)
        threads = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int chart = 0; chart < 6; ++chart) {
        try {
            parts[chart] = chart_lines(q, static_cast<std::size_t>(chart), config);
        } catch (...) {
            errors[chart] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<SurfaceLine> out;
    for (auto& p : parts)
        out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return out;
}

std::size_t line_count(const std::vector<SurfaceLine>& lines) {
    std::size_t n = 0;
    for (const auto& l : lines)
        n += l.count();
    return n;
}

}  // namespace tq
