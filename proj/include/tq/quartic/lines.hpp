#pragma once

#include "tq/quartic/quartic.hpp"

#include <optional>

namespace tq {

class InfiniteFamily : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Plucker coordinates p01, p02, p03, p12, p13, p23 of the line through p and
/// q, scaled so that the first nonzero entry is 1.
std::array<Rational, 6> plucker(const ProjectivePoint& p, const ProjectivePoint& q);

/// A Galois orbit of lines: one line u P(s) + v Q(s) for each root s of
/// minpoly, with P, Q given by polynomials in s.
struct SurfaceLine {
    UniPoly minpoly;
    std::array<std::vector<UniPoly>, 2> span;
    std::optional<std::array<Rational, 6>> plucker;  // rational lines only
    std::string name;  // configuration name when it matches one, else empty
    std::size_t count() const { return *minpoly.degree(); }
};

/// All lines on the surface. Chart U_ij (i < j) holds the lines with
/// p_ij != 0, written X_i = u, X_j = v, X_k = a u + b v, X_l = c u + d v;
/// earlier charts are excluded by p = 0 equations. Charts run in parallel
/// when threads != 1.
std::vector<SurfaceLine> enumerate_lines(const TetraQuartic& q, int threads = 0);
std::vector<SurfaceLine> enumerate_lines_serial(const TetraQuartic& q);
std::size_t line_count(const std::vector<SurfaceLine>& lines);

}  // namespace tq
