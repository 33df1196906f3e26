#include "tq/exactmath/residue.hpp"

#include <stdexcept>

namespace tq {

ResidueField::ResidueField(const UniPoly& modulus) : m_(modulus.monic()) {
    if (!m_.degree() || *m_.degree() == 0)
        throw std::invalid_argument("residue field modulus must have positive degree");
}

UniPoly ResidueField::reduce(const UniPoly& a) const {
    if (a.degree_or_zero() < *m_.degree())
        return a;
    return a % m_;
}

UniPoly ResidueField::inv(const UniPoly& a) const {
    UniPoly r = reduce(a);
    if (r.is_zero())
        throw std::domain_error("inverse of zero in a residue field");
    ExtendedGcd e = extended_gcd(r, m_);
    if (*e.g.degree() > 0)
        throw Split(e.g);
    // s*r + t*m = 1
    return reduce(e.s);
}

KPoly k_reduce(KPoly p, const ResidueField& k) {
    for (auto& c : p)
        c = k.reduce(c);
    return trim(std::move(p));
}

std::optional<std::size_t> k_degree(const KPoly& p) {
    if (p.empty())
        return std::nullopt;
    return p.size() - 1;
}

KPoly k_monic(const KPoly& p, const ResidueField& k) {
    if (p.empty())
        return p;
    UniPoly inv = k.inv(p.back());
    KPoly r(p.size());
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        r[i] = k.mul(p[i], inv);
    r.back() = UniPoly::constant(1);
    return r;
}

KPoly k_rem(const KPoly& a, const KPoly& b, const ResidueField& k) {
    if (b.empty())
        throw ZeroPolynomial("division by the zero polynomial over a residue field");
    KPoly r = k_reduce(a, k);
    const std::size_t db = b.size() - 1;
    UniPoly inv = k.inv(b.back());
    while (!r.empty() && r.size() - 1 >= db) {
        UniPoly q = k.mul(r.back(), inv);
        std::size_t shift = r.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            r[shift + i] = k.reduce(r[shift + i] - q * b[i]);
        r.back() = UniPoly();
        r = trim(std::move(r));
    }
    return r;
}

KPoly k_derivative(const KPoly& p, const ResidueField& k) {
    if (p.size() <= 1)
        return {};
    KPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i)
        d[i - 1] = k.reduce(p[i] * Rational(static_cast<unsigned long>(i)));
    return trim(std::move(d));
}

KPoly k_gcd(const KPoly& a0, const KPoly& b0, const ResidueField& k) {
    KPoly a = k_reduce(a0, k), b = k_reduce(b0, k);
    while (!b.empty()) {
        KPoly r = k_rem(a, b, k);
        a = std::move(b);
        b = std::move(r);
    }
    return k_monic(a, k);
}

KPoly k_squarefree(const KPoly& p0, const ResidueField& k) {
    KPoly p = k_reduce(p0, k);
    if (p.size() <= 1)
        return k_monic(p, k);
    KPoly g = k_gcd(p, k_derivative(p, k), k);
    if (g.size() == 1)
        return k_monic(p, k);
    // Exact division p / g by the monic g.
    KPoly q(p.size() - g.size() + 1);
    KPoly r = p;
    const std::size_t dg = g.size() - 1;
    for (std::size_t s = q.size(); s-- > 0;) {
        UniPoly c = r[s + dg];
        q[s] = c;
        for (std::size_t i = 0; i <= dg; ++i)
            r[s + i] = k.reduce(r[s + i] - c * g[i]);
    }
    return k_monic(trim(std::move(q)), k);
}

namespace {

struct PowerCache {
    const ResidueField& k;
    std::vector<std::vector<UniPoly>> pw;
    const UniPoly& get(std::size_t i, const UniPoly& base, unsigned e) {
        auto& c = pw[i];
        if (c.empty())
            c.push_back(UniPoly::constant(1));
        while (c.size() <= e)
            c.push_back(k.mul(c.back(), base));
        return c[e];
    }
};

}  // namespace

KPoly eval_to_kpoly(const MultiPoly& p, const std::string& free_var,
                    const std::map<std::string, UniPoly>& point, const ResidueField& k) {
    const auto& vars = p.vars();
    std::vector<const UniPoly*> val(vars.size(), nullptr);
    std::size_t free_idx = vars.size();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == free_var) {
            free_idx = i;
            continue;
        }
        auto it = point.find(vars[i]);
        if (it != point.end())
            val[i] = &it->second;
    }
    PowerCache cache{k, std::vector<std::vector<UniPoly>>(vars.size())};
    std::vector<UniPoly> acc;
    for (const auto& [e, c] : p.terms()) {
        UniPoly t = UniPoly::constant(c);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (i == free_idx || e[i] == 0)
                continue;
            if (!val[i])
                throw std::invalid_argument("no value for variable " + vars[i]);
            t = k.mul(t, cache.get(i, *val[i], e[i]));
        }
        std::size_t deg = free_idx < vars.size() ? e[free_idx] : 0;
        if (acc.size() <= deg)
            acc.resize(deg + 1);
        acc[deg] += t;
    }
    return k_reduce(std::move(acc), k);
}

UniPoly eval_at(const MultiPoly& p, const std::map<std::string, UniPoly>& point, const ResidueField& k) {
    KPoly r = eval_to_kpoly(p, std::string(), point, k);
    return r.empty() ? UniPoly() : r[0];
}

}  // namespace tq
