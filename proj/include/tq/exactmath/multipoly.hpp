#pragma once

#include "tq/exactmath/resultant.hpp"
#include "tq/exactmath/unipoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace tq {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order on exponent vectors of equal length.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q in canonical form: no stored zero
/// coefficients, terms kept in graded lexicographic order.
///
/// Each polynomial carries its own ordered variable list. Binary operations
/// work over the union of both lists (the left operand's order first), so
/// polynomials built independently can be mixed freely.
class MultiPoly {
public:
    using Terms = std::map<Exponents, Rational, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars);
    MultiPoly(std::vector<std::string> vars, Terms terms);

    static MultiPoly constant(const Rational& c);
    static MultiPoly variable(const std::string& name);
    static MultiPoly from_unipoly(const UniPoly& p, const std::string& var);

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; the zero polynomial has none.
    std::optional<unsigned> total_degree() const;
    std::optional<unsigned> degree_in(const std::string& var) const;
    bool depends_on(const std::string& var) const;
    bool is_homogeneous() const;

    /// Same polynomial expressed over a superset of its variables.
    MultiPoly with_vars(const std::vector<std::string>& universe) const;
    /// Drops variables that do not occur.
    MultiPoly compact() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& s);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
    friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    MultiPoly derivative(const std::string& var) const;
    /// Simultaneous substitution; unbound variables pass through.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const;
    MultiPoly evaluate(const std::map<std::string, Rational>& values) const;
    /// Value at a point binding every variable that occurs.
    Rational evaluate_all(const std::map<std::string, Rational>& values) const;

    MultiPoly homogeneous_part(unsigned degree) const;
    /// Coefficient of var^k, as a polynomial in the remaining variables.
    MultiPoly coefficient(const std::string& var, unsigned k) const;

    std::string to_string() const;

private:
    std::size_t index_of(const std::string& var) const;  // npos if absent
    std::vector<std::string> vars_;
    Terms terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned e);

/// Quotient when `divisor` divides p exactly; std::logic_error otherwise.
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& divisor);
/// Division with remainder by a single polynomial (graded lex order).
std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly& p, const MultiPoly& divisor);

/// Requires p to involve no variable other than var.
UniPoly to_unipoly(const MultiPoly& p, const std::string& var);
/// Coefficients of p in `main` (lowest first), each a polynomial in `param`.
/// Requires p to involve only those two variables.
ParamPoly to_param_poly(const MultiPoly& p, const std::string& main, const std::string& param);

/// Convenience: polynomial variables X0..X(n-1) etc.
MultiPoly var(const std::string& name);
MultiPoly cst(const Rational& c);

}  // namespace tq
