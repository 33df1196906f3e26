#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tq {

// mpq_class keeps values in lowest terms with a positive denominator as long
// as every value is built through make_rational() or arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

class NonRational : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise. Never decimal.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Exact square root if r is the square of a rational.
bool rational_sqrt(const Rational& r, Rational& root);

}  // namespace tq
