#pragma once

#include "tq/exactmath/multipoly.hpp"
#include "tq/exactmath/unipoly.hpp"

#include <optional>
#include <string>

namespace tq {

/// Homogeneous polynomial of fixed degree in two variables (s, t).
/// Stored through its dehomogenization f(s, 1); coefficient k belongs to
/// s^k t^(degree-k). The zero form keeps its nominal degree.
class BinaryForm {
public:
    BinaryForm() = default;
    BinaryForm(unsigned degree, UniPoly affine);
    /// coeffs[k] multiplies s^k t^(degree-k).
    static BinaryForm from_coeffs(std::vector<Rational> coeffs);
    /// p must be homogeneous in s and t (and involve nothing else).
    static BinaryForm from_multipoly(const MultiPoly& p, const std::string& s, const std::string& t,
                                     unsigned degree);

    unsigned degree() const { return degree_; }
    const UniPoly& affine() const { return affine_; }
    Rational coeff(unsigned k) const { return affine_.coeff(k); }
    bool is_zero() const { return affine_.is_zero(); }

    /// Multiplicity of the root s = 0, i.e. of the factor s.
    unsigned s_valuation() const;
    /// Multiplicity of the root t = 0 (the point at infinity of the s-chart).
    unsigned t_valuation() const;
    /// Number of distinct roots on P^1 over the algebraic closure.
    unsigned distinct_roots() const;

    Rational operator()(const Rational& s, const Rational& t) const;
    MultiPoly to_multipoly(const std::string& s, const std::string& t) const;

    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const Rational& c, const BinaryForm& a);
    friend bool operator==(const BinaryForm& a, const BinaryForm& b);

    std::string to_string(const std::string& s = "s", const std::string& t = "t") const;

private:
    unsigned degree_ = 0;
    UniPoly affine_;
};

BinaryForm power_of_s(unsigned k);
BinaryForm power_of_t(unsigned k);

bool divides(const BinaryForm& d, const BinaryForm& f);
/// f / d when exact; std::logic_error otherwise.
BinaryForm exact_div(const BinaryForm& f, const BinaryForm& d);

/// f = scalar * root^2. The scalar is f's leading datum; when it is a rational
/// square the root is already rescaled so that scalar = 1.
struct SquareRoot {
    Rational scalar;
    BinaryForm root;
};

/// Formal square root over Q(sqrt(scalar)): the root is found by the
/// coefficient recursion on f / lc and returned with rational coefficients.
std::optional<SquareRoot> is_perfect_square(const BinaryForm& f);

}  // namespace tq
