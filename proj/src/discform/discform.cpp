#include "tq/discform/discform.hpp"

#include <omp.h>

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace tq {

namespace {

int md(long v, int m) {
    long r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

Rational mod_rational(const Rational& x, int m) {
    // x - m * floor(x / m)
    Rational y = x / m;
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
    return x - Rational(f * m);
}

int scaled_int(const Rational& x, int scale, int m) {
    Rational y = x * scale;
    if (y.get_den() != 1)
        throw std::logic_error("discriminant form value with denominator beyond 8");
    Integer r = y.get_num() % m;
    if (r < 0)
        r += m;
    return static_cast<int>(r.get_si());
}

}  // namespace

DiscElement::DiscElement(long a_, long b_, long c_) : a(md(a_, 8)), b(md(b_, 4)), c(md(c_, 4)) {}

DiscElement DiscElement::from_index(int i) { return DiscElement(i / 16, (i / 4) % 4, i % 4); }

int DiscElement::order() const {
    DiscElement x = *this;
    int n = 1;
    while (!x.is_zero()) {
        x = x + *this;
        ++n;
    }
    return n;
}

DiscElement operator+(const DiscElement& x, const DiscElement& y) {
    return DiscElement(x.a + y.a, x.b + y.b, x.c + y.c);
}

DiscElement operator-(const DiscElement& x) { return DiscElement(-x.a, -x.b, -x.c); }

DiscElement operator*(long k, const DiscElement& x) { return DiscElement(k * x.a, k * x.b, k * x.c); }

std::string DiscElement::to_string() const {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

FiniteQuadForm build_disc_group(const LatticePtr& lat, std::array<std::size_t, 3> generators) {
    if (lat->determinant() == 0)
        throw DegenerateLattice("lattice " + lat->name() + " is degenerate");
    if (!lat->is_even())
        throw std::invalid_argument("discriminant form needs an even lattice");
    FiniteQuadForm fq;
    fq.lattice_ = lat;
    fq.ginv_ = rational_inverse(lat->gram());
    SmithForm s = smith_normal_form(lat->gram());
    fq.snf_u_ = s.U;
    for (std::size_t i = 0; i < s.diagonal.size(); ++i)
        if (s.diagonal[i] != 1) {
            fq.torsion_rows_.push_back(i);
            fq.divisors_.push_back(s.diagonal[i]);
        }
    Integer order = 1;
    for (const auto& d : fq.divisors_)
        order *= d;
    if (order != DiscElement::kSize)
        throw std::invalid_argument("discriminant group has order " + order.get_str() + ", expected 128");
    fq.gen_index_ = generators;

    // Identify every element a*g0 + b*g1 + c*g2 by its SNF residues.
    const std::size_t n = lat->rank();
    for (int i = 0; i < DiscElement::kSize; ++i) {
        DiscElement x = DiscElement::from_index(i);
        IntVector w(n);
        w[generators[0]] += x.a;
        w[generators[1]] += x.b;
        w[generators[2]] += x.c;
        IntVector uw = fq.snf_u_ * w;
        std::vector<long> key;
        for (std::size_t k = 0; k < fq.torsion_rows_.size(); ++k) {
            Integer r = uw[fq.torsion_rows_[k]] % fq.divisors_[k];
            if (r < 0)
                r += fq.divisors_[k];
            key.push_back(r.get_si());
        }
        if (!fq.lookup_.emplace(key, x).second)
            throw std::invalid_argument("chosen dual basis vectors do not generate Z/8 + Z/4 + Z/4");
    }

    for (std::size_t i = 0; i < 3; ++i) {
        IntVector wi(n);
        wi[generators[i]] = 1;
        fq.gen_q8_[i] = scaled_int(fq.pair(wi, wi), 8, 16);
        for (std::size_t j = 0; j < 3; ++j) {
            IntVector wj(n);
            wj[generators[j]] = 1;
            fq.gen_b8_[i][j] = scaled_int(fq.pair(wi, wj), 8, 8);
        }
    }
    return fq;
}

Rational FiniteQuadForm::pair(const IntVector& w1, const IntVector& w2) const {
    Rational s = 0;
    for (std::size_t i = 0; i < w1.size(); ++i) {
        if (w1[i] == 0)
            continue;
        for (std::size_t j = 0; j < w2.size(); ++j)
            if (w2[j] != 0)
                s += Rational(w1[i]) * ginv_[i][j] * Rational(w2[j]);
    }
    return s;
}

DiscElement FiniteQuadForm::reduce(const IntVector& w) const {
    if (w.size() != lattice_->rank())
        throw LatticeMismatch("functional has the wrong length");
    IntVector uw = snf_u_ * w;
    std::vector<long> key;
    for (std::size_t k = 0; k < torsion_rows_.size(); ++k) {
        Integer r = uw[torsion_rows_[k]] % divisors_[k];
        if (r < 0)
            r += divisors_[k];
        key.push_back(r.get_si());
    }
    return lookup_.at(key);
}

DiscElement FiniteQuadForm::dual_basis(std::size_t i) const {
    IntVector w(lattice_->rank());
    w.at(i) = 1;
    return reduce(w);
}

IntVector FiniteQuadForm::representative(const DiscElement& x) const {
    IntVector w(lattice_->rank());
    w[gen_index_[0]] += x.a;
    w[gen_index_[1]] += x.b;
    w[gen_index_[2]] += x.c;
    return w;
}

Rational FiniteQuadForm::q(const DiscElement& x) const {
    IntVector w = representative(x);
    return mod_rational(pair(w, w), 2);
}

Rational FiniteQuadForm::b(const DiscElement& x, const DiscElement& y) const {
    return mod_rational(pair(representative(x), representative(y)), 1);
}

int FiniteQuadForm::q8(const DiscElement& x) const {
    const long v[3] = {x.a, x.b, x.c};
    long s = 0;
    for (int i = 0; i < 3; ++i) {
        s += v[i] * v[i] * gen_q8_[i];
        for (int j = i + 1; j < 3; ++j)
            s += 2 * v[i] * v[j] * gen_b8_[i][j];
    }
    return md(s, 16);
}

int FiniteQuadForm::b8(const DiscElement& x, const DiscElement& y) const {
    const long u[3] = {x.a, x.b, x.c}, v[3] = {y.a, y.b, y.c};
    long s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            s += u[i] * v[j] * gen_b8_[i][j];
    return md(s, 8);
}

std::vector<LiftCheck> verify_dual_lifts(const FiniteQuadForm& fq) {
    ClassRegistry reg = make_m_registry();
    const IntMatrix& g = fq.lattice()->gram();
    struct Lift {
        const char* name;
        const char* expr;
        std::size_t dual;
        long multiple;
    };
    static const Lift lifts[] = {
        {"8 eps1", "-13E1+E2+E3+E4+6R1-6L12-6L13-6L14+4L23+4L24+4L34", 6, 8},
        {"4 lambda23", "2E1+2E4+L12+L13+2L14-2L23+L24+L34", 3, 4},
        {"4 lambda24", "2E1+2E3+L12+2L13+L14+L23-2L24+L34", 4, 4},
    };
    std::vector<LiftCheck> out;
    for (const auto& l : lifts) {
        IntVector w = g * reg.eval(l.expr).coords();
        IntVector expected(fq.lattice()->rank());
        expected[l.dual] = l.multiple;
        out.push_back({std::string(l.name) + " = " + l.expr, w == expected});
    }
    struct Relation {
        const char* name;
        std::size_t dual;
        DiscElement value;
    };
    const Relation relations[] = {
        {"lambda12 = -2 eps1 - lambda23 - lambda24", 0, DiscElement(-2, -1, -1)},
        {"lambda13 = 2 eps1 + lambda24", 1, DiscElement(2, 0, 1)},
        {"lambda14 = 2 eps1 + lambda23", 2, DiscElement(2, 1, 0)},
        {"lambda34 = 4 eps1 - lambda23 - lambda24", 5, DiscElement(4, -1, -1)},
        {"eps2 = 3 eps1 + 2 lambda23 + 2 lambda24", 7, DiscElement(3, 2, 2)},
        {"eps3 = 3 eps1 + 2 lambda24", 8, DiscElement(3, 0, 2)},
        {"eps4 = 3 eps1 + 2 lambda23", 9, DiscElement(3, 2, 0)},
        {"rho = 2 eps1", 10, DiscElement(2, 0, 0)},
    };
    for (const auto& r : relations)
        out.push_back({r.name, fq.dual_basis(r.dual) == r.value});
    return out;
}

void require_lifts(const std::vector<LiftCheck>& checks) {
    for (const auto& c : checks)
        if (!c.holds)
            throw LiftMismatch(c.name);
}

DiscAutomorphism DiscAutomorphism::identity() {
    return {{DiscElement(1, 0, 0), DiscElement(0, 1, 0), DiscElement(0, 0, 1)}};
}

DiscElement DiscAutomorphism::apply(const DiscElement& x) const {
    return x.a * images[0] + x.b * images[1] + x.c * images[2];
}

DiscAutomorphism DiscAutomorphism::compose(const DiscAutomorphism& other) const {
    return {{apply(other.images[0]), apply(other.images[1]), apply(other.images[2])}};
}

std::string DiscAutomorphism::to_string() const {
    return "eps1->" + images[0].to_string() + " lambda23->" + images[1].to_string() + " lambda24->" +
           images[2].to_string();
}

bool preserves_form(const FiniteQuadForm& fq, const DiscAutomorphism& f) {
    for (int k = 0; k < 3; ++k)
        if (DiscElement::kOrders[k] % f.images[k].order() != 0)
            return false;
    std::array<bool, DiscElement::kSize> hit{};
    for (int i = 0; i < DiscElement::kSize; ++i) {
        DiscElement x = DiscElement::from_index(i), y = f.apply(x);
        if (hit[y.index()] || fq.q8(x) != fq.q8(y))
            return false;
        hit[y.index()] = true;
    }
    return true;
}

namespace {

struct Candidates {
    std::vector<DiscElement> first, rest;
};

Candidates candidates(const FiniteQuadForm& fq) {
    Candidates c;
    const DiscElement g0(1, 0, 0), g1(0, 1, 0);
    for (int i = 0; i < DiscElement::kSize; ++i) {
        DiscElement x = DiscElement::from_index(i);
        if (x.order() == 8 && fq.q8(x) == fq.q8(g0))
            c.first.push_back(x);
        if (x.order() == 4 && fq.q8(x) == fq.q8(g1))
            c.rest.push_back(x);
    }
    return c;
}

// Completions of a fixed image of eps1.
void search_from(const FiniteQuadForm& fq, const Candidates& c, const DiscElement& e,
                 std::vector<DiscAutomorphism>& out) {
    const DiscElement g0(1, 0, 0), g1(0, 1, 0), g2(0, 0, 1);
    const int b01 = fq.b8(g0, g1), b02 = fq.b8(g0, g2), b12 = fq.b8(g1, g2), b22 = fq.b8(g2, g2);
    for (const auto& l1 : c.rest) {
        if (fq.b8(e, l1) != b01)
            continue;
        for (const auto& l2 : c.rest) {
            if (fq.b8(e, l2) != b02 || fq.b8(l1, l2) != b12 || fq.b8(l2, l2) != b22)
                continue;
            DiscAutomorphism f{{e, l1, l2}};
            if (preserves_form(fq, f))
                out.push_back(f);
        }
    }
}

}  // namespace

std::vector<DiscAutomorphism> enumerate_autos_serial(const FiniteQuadForm& fq) {
    Candidates c = candidates(fq);
    std::vector<DiscAutomorphism> out;
    for (const auto& e : c.first)
        search_from(fq, c, e, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DiscAutomorphism> enumerate_autos(const FiniteQuadForm& fq, int threads) {
    Candidates c = candidates(fq);
    std::vector<std::vector<DiscAutomorphism>> parts(c.first.size());
    const long n = static_cast<long>(c.first.size());
    if (threads <= 0)
        threads = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < n; ++i)
        search_from(fq, c, c.first[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(i)]);
    std::vector<DiscAutomorphism> out;
    for (auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DiscAutomorphism> closure(const std::vector<DiscAutomorphism>& generators) {
    std::set<DiscAutomorphism> seen{DiscAutomorphism::identity()};
    std::deque<DiscAutomorphism> todo{DiscAutomorphism::identity()};
    while (!todo.empty()) {
        DiscAutomorphism f = todo.front();
        todo.pop_front();
        for (const auto& g : generators) {
            DiscAutomorphism h = g.compose(f);
            if (seen.insert(h).second)
                todo.push_back(h);
        }
    }
    return {seen.begin(), seen.end()};
}

DiscAutomorphism induced_disc_auto(const IntMatrix& t, const FiniteQuadForm& fq) {
    const IntMatrix& g = fq.lattice()->gram();
    if (t.rows() != g.rows() || !t.is_square() || !(t.transpose() * g * t == g))
        throw NotIsometry("matrix does not preserve the Gram matrix");
    // Functionals transform by G T G^{-1} = T^{-T}.
    IntMatrix gt = g * t;
    const RatMatrix& gi = fq.gram_inverse();
    const std::size_t n = g.rows();
    DiscAutomorphism f;
    for (int k = 0; k < 3; ++k) {
        std::size_t col = fq.generator_indices()[static_cast<std::size_t>(k)];
        IntVector w(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < n; ++j)
                s += Rational(gt(i, j)) * gi[j][col];
            if (s.get_den() != 1)
                throw NotIsometry("induced dual action is not integral");
            w[i] = s.get_num();
        }
        f.images[static_cast<std::size_t>(k)] = fq.reduce(w);
    }
    return f;
}

std::map<std::string, DiscAutomorphism> printed_transposition_actions() {
    using E = DiscElement;
    return {
        {"12", {{E(1, 2, 2), E(4, 0, 1), E(4, 1, 0)}}},
        {"13", {{E(1, 0, 2), E(0, -1, -1), E(0, 0, 1)}}},
        {"14", {{E(1, 2, 0), E(0, 1, 0), E(0, -1, -1)}}},
        {"23", {{E(1, 0, 0), E(0, 1, 0), E(4, -1, -1)}}},
        {"24", {{E(1, 0, 0), E(4, -1, -1), E(0, 0, 1)}}},
        {"34", {{E(1, 0, 0), E(0, 0, 1), E(0, 1, 0)}}},
    };
}

DiscAutomorphism printed_mirror_action() {
    return {{DiscElement(1, 0, 0), DiscElement(0, -1, 0), DiscElement(0, 0, -1)}};
}

DiscAutomorphism printed_covering_involution() {
    return {{DiscElement(-1, 0, 0), DiscElement(0, -1, 0), DiscElement(0, 0, -1)}};
}

}  // namespace tq
