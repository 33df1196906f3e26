#include "tq/exactmath/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace tq {

namespace {

using ZPoly = std::vector<Integer>;  // lowest first

Integer mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0)
        r += m;
    return r;
}

Integer eval_mod(const ZPoly& p, const Integer& x, const Integer& m) {
    Integer acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = mod(acc * x + *it, m);
    return acc;
}

ZPoly derivative(const ZPoly& p) {
    ZPoly d;
    for (std::size_t k = 1; k < p.size(); ++k)
        d.push_back(p[k] * static_cast<unsigned long>(k));
    return d;
}

// Squarefree modulo the small prime q, via gcd(p, p') over F_q.
bool squarefree_mod(const ZPoly& p, unsigned long q) {
    auto reduce = [q](const ZPoly& a) {
        std::vector<long> r;
        for (const auto& c : a) {
            Integer m = mod(c, q);
            r.push_back(m.get_si());
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    };
    auto inv = [q](long a) {
        Integer r;
        Integer aa = a, qq = static_cast<long>(q);
        mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), qq.get_mpz_t());
        return r.get_si();
    };
    std::vector<long> a = reduce(p), b = reduce(derivative(p));
    if (a.size() != p.size())
        return false;  // leading coefficient vanishes mod q
    const long Q = static_cast<long>(q);
    while (!b.empty()) {
        long il = inv(b.back());
        while (a.size() >= b.size()) {
            long f = (a.back() * il) % Q;
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = ((a[shift + i] - f * b[i]) % Q + Q) % Q;
            while (!a.empty() && a.back() == 0)
                a.pop_back();
            if (a.empty())
                break;
        }
        std::swap(a, b);
    }
    return a.size() == 1;
}

// a/b with |a| <= n, 0 < b <= d and a = b*r mod m, if one exists.
bool reconstruct(const Integer& r, const Integer& m, const Integer& n, const Integer& d, Rational& out) {
    Integer r0 = m, r1 = r, t0 = 0, t1 = 1;
    while (r1 > n) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > d)
        return false;
    out = make_rational(r1, t1);
    return true;
}

bool is_prime(unsigned long n) {
    if (n < 2)
        return false;
    for (unsigned long k = 2; k * k <= n; ++k)
        if (n % k == 0)
            return false;
    return true;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p0) {
    if (p0.is_zero())
        throw ZeroPolynomial("roots of the zero polynomial");
    std::vector<Rational> roots;
    UniPoly p = squarefree_part(p0);
    if (p.valuation() > 0) {
        roots.push_back(0);
        p = exact_div(p, UniPoly::x());
    }
    if (*p.degree() == 0)
        return roots;
    UniPoly prim = p.primitive();
    ZPoly z;
    for (const auto& c : prim.coeffs())
        z.push_back(c.get_num());
    const std::size_t deg = z.size() - 1;

    unsigned long q = 3;
    while (!(is_prime(q) && squarefree_mod(z, q) && mod(z[0], q) != 0))
        ++q;
    std::vector<Integer> base;
    for (unsigned long r = 0; r < q; ++r)
        if (eval_mod(z, r, q) == 0)
            base.push_back(r);
    if (base.empty())
        return roots;

    // Numerators divide z[0], denominators divide the leading coefficient.
    Integer num_bound = abs(z[0]), den_bound = abs(z[deg]);
    Integer need = 2 * num_bound * den_bound + 1;
    ZPoly dz = derivative(z);
    for (Integer r : base) {
        Integer m = q;
        while (m <= need) {
            Integer m2 = m * m;
            Integer fr = eval_mod(z, r, m2), dr = eval_mod(dz, r, m2), inv;
            if (!mpz_invert(inv.get_mpz_t(), dr.get_mpz_t(), m2.get_mpz_t()))
                throw std::logic_error("Hensel lifting met a singular root");
            r = mod(r - fr * inv, m2);
            m = m2;
        }
        Rational cand;
        if (reconstruct(r, m, num_bound, den_bound, cand) && p(cand) == 0)
            roots.push_back(cand);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace tq
