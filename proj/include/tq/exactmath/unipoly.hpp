#pragma once

#include "tq/exactmath/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tq {

class DegreeZero : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ZeroPolynomial : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has no coefficients and no degree.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, std::size_t k);
    static UniPoly x() { return monomial(1, 1); }
    /// Monic polynomial with the given roots.
    static UniPoly from_roots(const std::vector<Rational>& roots);

    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const;
    /// Degree with the zero polynomial mapped to 0; use only where the
    /// distinction does not matter.
    std::size_t degree_or_zero() const { return c_.empty() ? 0 : c_.size() - 1; }
    bool is_constant() const { return c_.size() <= 1; }

    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const;
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    /// Integer coefficients with content 1 and positive leading coefficient.
    UniPoly primitive() const;
    /// p(x) -> p(-x)
    UniPoly negate_variable() const;
    /// x^deg * p(1/x)
    UniPoly reversed() const;
    /// Exact multiplicity of x as a factor.
    std::size_t valuation() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& s);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    friend UniPoly operator-(UniPoly a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder; throws ZeroPolynomial on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
/// Division that must be exact; throws std::logic_error otherwise.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& d, const UniPoly& a);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct ExtendedGcd {
    UniPoly g;  // monic
    UniPoly s;
    UniPoly t;  // s*a + t*b = g
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

UniPoly pow(const UniPoly& p, unsigned e);
/// p(q(x))
UniPoly compose(const UniPoly& p, const UniPoly& q);

/// p / gcd(p, p'), monic. Degree equals the number of distinct complex roots.
UniPoly squarefree_part(const UniPoly& p);

/// Multiplicity of `root` as a root of p (p nonzero).
std::size_t root_multiplicity(UniPoly p, const Rational& root);

std::string to_string(const UniPoly& p, const std::string& var = "x");

}  // namespace tq
