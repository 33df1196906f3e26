#pragma once

#include "tq/exactmath/multipoly.hpp"
#include "tq/exactmath/residue.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace tq {

class PositiveDimensional : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A set of conjugate solutions: one point for each root s of `minpoly`,
/// with coordinates given as polynomials in s reduced modulo minpoly.
struct AlgebraicPoint {
    UniPoly minpoly;
    std::vector<UniPoly> coords;

    std::size_t count() const { return *minpoly.degree(); }
    bool is_rational() const { return count() == 1; }
    /// Coordinates at the unique root; requires is_rational().
    std::vector<Rational> rational_coords() const;
};

std::size_t total_count(const std::vector<AlgebraicPoint>& pts);

/// Common roots of univariate polynomials avoiding the roots of each
/// polynomial in `nonzero`. All-zero input throws PositiveDimensional.
std::vector<AlgebraicPoint> solve_univariate(const std::vector<UniPoly>& eqs,
                                             const std::vector<UniPoly>& nonzero = {});

/// Isolated common zeros in affine 2-space of polynomials in x and y,
/// excluding points where any `nonzero` polynomial vanishes. Coordinates are
/// returned in the order (x, y).
std::vector<AlgebraicPoint> solve_affine2(const std::vector<MultiPoly>& eqs, const std::string& x,
                                          const std::string& y, const std::vector<MultiPoly>& nonzero = {});

/// Common zeros in the projective plane of homogeneous polynomials in the
/// three named variables, found on the strata {v2 != 0}, {v2 = 0, v1 != 0}
/// and the point (1:0:0). Each point appears exactly once.
std::vector<AlgebraicPoint> solve_projective2(const std::vector<MultiPoly>& eqs,
                                              const std::array<std::string, 3>& vars,
                                              const std::vector<MultiPoly>& nonzero = {});

}  // namespace tq
