#include "tq/exactmath/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tq {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots) {
    UniPoly p = constant(1);
    for (const auto& r : roots)
        p *= UniPoly{-r, 1};
    return p;
}

std::optional<std::size_t> UniPoly::degree() const {
    if (c_.empty())
        return std::nullopt;
    return c_.size() - 1;
}

Rational UniPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

const Rational& UniPoly::leading() const {
    if (c_.empty())
        throw ZeroPolynomial("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1)
        return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = c_[k] * static_cast<long>(k);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (c_.empty())
        return {};
    UniPoly r = *this;
    Rational inv = 1 / c_.back();
    for (auto& c : r.c_)
        c *= inv;
    return r;
}

UniPoly UniPoly::primitive() const {
    if (c_.empty())
        return {};
    Integer l = 1;
    for (const auto& c : c_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> ints(c_.size());
    Integer g = 0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        ints[k] = c_[k].get_num() * (l / c_[k].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[k].get_mpz_t());
    }
    if (ints.back() < 0)
        g = -g;
    std::vector<Rational> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k)
        out[k] = Rational(ints[k] / g);
    return UniPoly(std::move(out));
}

UniPoly UniPoly::negate_variable() const {
    UniPoly r = *this;
    for (std::size_t k = 1; k < r.c_.size(); k += 2)
        r.c_[k] = -r.c_[k];
    return r;
}

UniPoly UniPoly::reversed() const {
    std::vector<Rational> v(c_.rbegin(), c_.rend());
    return UniPoly(std::move(v));
}

std::size_t UniPoly::valuation() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0)
        ++k;
    return k;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] += o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] -= o.c_[k];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.c_.empty() || b.c_.empty())
        return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    Rational tmp;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            out[i + j] += tmp;
        }
    }
    return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= s;
    return *this;
}

UniPoly operator-(UniPoly a) {
    for (auto& c : a.c_)
        c = -c;
    return a;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero())
        throw ZeroPolynomial("division by the zero polynomial");
    std::vector<Rational> r = a.coeffs();
    const auto& bc = b.coeffs();
    if (r.size() < bc.size())
        return {UniPoly{}, a};
    std::vector<Rational> q(r.size() - bc.size() + 1);
    Rational inv = 1 / bc.back();
    Rational tmp;
    for (std::size_t k = r.size(); k-- >= bc.size();) {
        if (r[k] == 0)
            continue;
        Rational f = r[k] * inv;
        std::size_t shift = k - (bc.size() - 1);
        q[shift] = f;
        for (std::size_t j = 0; j < bc.size(); ++j) {
            mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), bc[j].get_mpq_t());
            r[shift + j] -= tmp;
        }
        r[k] = 0;
    }
    r.resize(bc.size() - 1);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw std::logic_error("polynomial division is not exact");
    return q;
}

bool divides(const UniPoly& d, const UniPoly& a) { return (a % d).is_zero(); }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a.monic(), y = b.monic();
    while (!y.is_zero()) {
        UniPoly r = (x % y).monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(1), s1;
    UniPoly t0, t1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPoly s = s0 - q * s1;
        UniPoly t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero())
        return {};
    Rational inv = 1 / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly pow(const UniPoly& p, unsigned e) {
    UniPoly result = UniPoly::constant(1), base = p;
    while (e) {
        if (e & 1U)
            result *= base;
        e >>= 1U;
        if (e)
            base *= base;
    }
    return result;
}

UniPoly compose(const UniPoly& p, const UniPoly& q) {
    UniPoly acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= q;
        acc += UniPoly::constant(*it);
    }
    return acc;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero())
        throw ZeroPolynomial("squarefree part of the zero polynomial");
    if (p.is_constant())
        return UniPoly::constant(1);
    return exact_div(p, gcd(p, p.derivative())).monic();
}

std::size_t root_multiplicity(UniPoly p, const Rational& root) {
    if (p.is_zero())
        throw ZeroPolynomial("root multiplicity in the zero polynomial");
    UniPoly lin{-root, 1};
    std::size_t m = 0;
    while (true) {
        auto [q, r] = divmod(p, lin);
        if (!r.is_zero())
            return m;
        p = std::move(q);
        ++m;
    }
}

std::string to_string(const UniPoly& p, const std::string& var) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0)
            continue;
        Rational v = c[k];
        if (!first)
            os << (v < 0 ? " - " : " + ");
        else if (v < 0)
            os << "-";
        Rational a = abs(v);
        if (k == 0 || a != 1)
            os << to_string(a) << (k ? "*" : "");
        if (k >= 1)
            os << var;
        if (k >= 2)
            os << "^" << k;
        first = false;
    }
    return os.str();
}

}  // namespace tq
