#include "tq/exactmath/resultant.hpp"

namespace tq {

Rational resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw ZeroPolynomial("resultant with the zero polynomial");
    return resultant_generic(p.coeffs(), q.coeffs());
}

ParamPoly trim(ParamPoly p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
    return p;
}

UniPoly resultant(const ParamPoly& p, const ParamPoly& q) {
    return resultant_generic(trim(p), trim(q));
}

Rational discriminant_univariate(const UniPoly& p) {
    auto d = p.degree();
    if (!d || *d == 0)
        throw DegreeZero("discriminant needs degree at least 1");
    const std::size_t n = *d;
    if (n == 1)
        return 1;
    Rational r = resultant(p, p.derivative()) / p.leading();
    if ((n * (n - 1) / 2) % 2 == 1)
        r = -r;
    return r;
}

}  // namespace tq
