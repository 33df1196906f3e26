#include "tq/exactmath/binary_form.hpp"

#include <sstream>
#include <stdexcept>

namespace tq {

BinaryForm::BinaryForm(unsigned degree, UniPoly affine) : degree_(degree), affine_(std::move(affine)) {
    if (affine_.degree() && *affine_.degree() > degree_)
        throw std::invalid_argument("binary form coefficients exceed its degree");
}

BinaryForm BinaryForm::from_coeffs(std::vector<Rational> coeffs) {
    if (coeffs.empty())
        throw std::invalid_argument("binary form needs degree+1 coefficients");
    unsigned d = static_cast<unsigned>(coeffs.size() - 1);
    return BinaryForm(d, UniPoly(std::move(coeffs)));
}

BinaryForm BinaryForm::from_multipoly(const MultiPoly& p, const std::string& s, const std::string& t,
                                      unsigned degree) {
    std::vector<Rational> c(degree + 1);
    const auto& vars = p.vars();
    for (const auto& [e, coef] : p.terms()) {
        unsigned ks = 0, kt = 0;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (vars[i] == s)
                ks = e[i];
            else if (vars[i] == t)
                kt = e[i];
            else if (e[i] != 0)
                throw std::invalid_argument("binary form involves " + vars[i]);
        }
        if (ks + kt != degree)
            throw std::invalid_argument("polynomial is not homogeneous of the stated degree");
        c[ks] += coef;
    }
    return BinaryForm(degree, UniPoly(std::move(c)));
}

unsigned BinaryForm::s_valuation() const {
    if (affine_.is_zero())
        throw ZeroPolynomial("valuation of the zero form");
    return static_cast<unsigned>(affine_.valuation());
}

unsigned BinaryForm::t_valuation() const {
    if (affine_.is_zero())
        throw ZeroPolynomial("valuation of the zero form");
    return degree_ - static_cast<unsigned>(*affine_.degree());
}

unsigned BinaryForm::distinct_roots() const {
    if (affine_.is_zero())
        throw ZeroPolynomial("roots of the zero form");
    unsigned n = static_cast<unsigned>(*squarefree_part(affine_).degree());
    return n + (t_valuation() > 0 ? 1 : 0);
}

Rational BinaryForm::operator()(const Rational& s, const Rational& t) const {
    const auto& c = affine_.coeffs();
    std::vector<Rational> tpow(degree_ + 1);
    tpow[0] = 1;
    for (unsigned k = 1; k <= degree_; ++k)
        tpow[k] = tpow[k - 1] * t;
    Rational acc = 0, sp = 1;
    for (unsigned k = 0; k < c.size(); ++k) {
        acc += c[k] * sp * tpow[degree_ - k];
        sp *= s;
    }
    return acc;
}

MultiPoly BinaryForm::to_multipoly(const std::string& s, const std::string& t) const {
    MultiPoly::Terms terms;
    const auto& c = affine_.coeffs();
    for (unsigned k = 0; k < c.size(); ++k)
        if (c[k] != 0)
            terms.emplace(Exponents{k, degree_ - k}, c[k]);
    return MultiPoly({s, t}, std::move(terms));
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    return BinaryForm(a.degree_ + b.degree_, a.affine_ * b.affine_);
}

BinaryForm operator*(const Rational& c, const BinaryForm& a) { return BinaryForm(a.degree_, c * a.affine_); }

bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree_ == b.degree_ && a.affine_ == b.affine_;
}

std::string BinaryForm::to_string(const std::string& s, const std::string& t) const {
    return to_multipoly(s, t).to_string();
}

BinaryForm power_of_s(unsigned k) { return BinaryForm(k, UniPoly::monomial(1, k)); }
BinaryForm power_of_t(unsigned k) { return BinaryForm(k, UniPoly::constant(1)); }

bool divides(const BinaryForm& d, const BinaryForm& f) {
    if (d.is_zero())
        return f.is_zero();
    if (f.is_zero())
        return true;
    if (d.degree() > f.degree())
        return false;
    return d.t_valuation() <= f.t_valuation() && divides(d.affine(), f.affine());
}

BinaryForm exact_div(const BinaryForm& f, const BinaryForm& d) {
    if (!divides(d, f) || d.is_zero())
        throw std::logic_error("binary form division is not exact");
    return BinaryForm(f.degree() - d.degree(), exact_div(f.affine(), d.affine()));
}

std::optional<SquareRoot> is_perfect_square(const BinaryForm& f) {
    if (f.is_zero())
        return SquareRoot{0, BinaryForm(f.degree() / 2, UniPoly())};
    if (f.degree() % 2 != 0)
        return std::nullopt;
    unsigned vs = f.s_valuation(), vt = f.t_valuation();
    if (vs % 2 != 0 || vt % 2 != 0)
        return std::nullopt;
    // Core: monic polynomial in s with nonzero constant term, even degree.
    const auto& c = f.affine().coeffs();
    Rational lc = f.affine().leading();
    std::vector<Rational> core(c.begin() + vs, c.end());
    for (auto& x : core)
        x /= lc;
    const std::size_t n = core.size() - 1, m = n / 2;
    // g monic of degree m with g^2 = core, determined from the top m coefficients.
    std::vector<Rational> g(m + 1);
    g[m] = 1;
    for (std::size_t k = 1; k <= m; ++k) {
        // coefficient of s^(n-k) in g^2 is 2 g[m-k] + sum_{i=1}^{k-1} g[m-i] g[m-k+i]
        Rational acc = core[n - k];
        for (std::size_t i = 1; i < k; ++i)
            acc -= g[m - i] * g[m - k + i];
        g[m - k] = acc / 2;
    }
    UniPoly gp(g);
    if (!(gp * gp == UniPoly(core)))
        return std::nullopt;
    UniPoly root = UniPoly::monomial(1, vs / 2) * gp;
    Rational scalar = lc, sq;
    if (rational_sqrt(lc, sq)) {
        root *= sq;
        scalar = 1;
    }
    return SquareRoot{scalar, BinaryForm(f.degree() / 2, root)};
}

}  // namespace tq
