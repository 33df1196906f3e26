#pragma once

#include "tq/exactmath/multipoly.hpp"
#include "tq/exactmath/plane_solver.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace tq {

class PointNotOnSurface : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class PointNotOnCurve : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class DegenerateCoefficient : public std::domain_error {
public:
    using std::domain_error::domain_error;
};
class PositiveDimensionalLocus : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A = a0X0+a1X1+a2X2, B = b0X0+b1X1+b3X3, C = c0X0+c2X2+c3X3,
/// D = d1X1+d2X2+d3X3 and the constant delta.
struct QuarticCoefficients {
    Rational a0, a1, a2, b0, b1, b3, c0, c2, c3, d1, d2, d3;
    Rational delta = 1;

    static const std::array<const char*, 12>& names();
    /// The twelve linear-form coefficients in the order of names().
    std::array<Rational, 12> values() const;
    static QuarticCoefficients from_values(const std::array<Rational, 12>& v, const Rational& delta = 1);
};

struct GenericityFlags {
    bool all_nonzero = false;
    /// Tangent-cone determinants at E1..E4: a0b0c0, a1b1d1, a2c2d2, b3c3d3.
    std::array<bool, 4> vertex_nondegenerate{};
    bool cross_ratios_distinct = false;
    bool all() const;
};
GenericityFlags genericity(const QuarticCoefficients& c);

using ProjectivePoint = std::vector<Rational>;

extern const std::array<std::string, 4> kCoords;  // X0..X3

/// F = A X0X1X2 + B X0X1X3 + C X0X2X3 + D X1X2X3 + delta X0X1X2X3 with the
/// face forms given as polynomials, so that symbolic coefficients work too.
struct TetraQuartic {
    QuarticCoefficients coeffs;
    MultiPoly F;
    /// face_form[m] is the residual form on the face X_m = 0:
    /// D on X0, C on X1, B on X2, A on X3. Its line is R_(m+1).
    std::array<MultiPoly, 4> face_form;
};

TetraQuartic build_quartic(const QuarticCoefficients& c);

/// The same construction over the polynomial ring in the coefficient names
/// a0..d3; delta stays 1.
MultiPoly symbolic_quartic();
std::array<MultiPoly, 4> symbolic_face_forms();

/// Whether F vanishes identically on the edge X_k = X_l = 0, 1 <= i < j <= 4
/// naming the edge through E_i and E_j.
bool edge_on_surface(const TetraQuartic& q, int i, int j);

enum class PointType { Smooth, Node, Cusp, Worse };
std::string to_string(PointType t);

struct SingularityReport {
    ProjectivePoint point;
    unsigned multiplicity = 0;
    unsigned tangent_cone_rank = 0;
    PointType classification = PointType::Smooth;
    /// Plane curves with a rank-1 cone: the tangent line as a projective
    /// linear form, first nonzero coefficient 1.
    std::vector<Rational> tangent_line;
};

SingularityReport classify_surface_point(const TetraQuartic& q, const ProjectivePoint& p);
/// Same analysis for a plane curve f in the three named variables.
SingularityReport classify_plane_point(const MultiPoly& f, const std::array<std::string, 3>& vars,
                                       const ProjectivePoint& p);

struct SingularLocus {
    std::size_t count = 0;
    std::size_t at_projection_node = 1;  // E4 itself
    std::size_t over_sextic = 0;         // over singular points of G with P != 0
    std::size_t over_base = 0;           // lifts over P = Q = R = 0
    std::vector<ProjectivePoint> rational_points;
};

/// Singular points of the surface, found by projecting from E4: away from
/// P = 0 they lie over singular points of the branch sextic, on P = Q = R = 0
/// they are the common roots in X3 of the three remaining partials.
SingularLocus singular_locus(const TetraQuartic& q);
std::size_t singular_locus_count(const TetraQuartic& q);

/// lambda_12, lambda_13, lambda_14, lambda_23, lambda_24, lambda_34.
std::array<Rational, 6> cross_ratios(const QuarticCoefficients& c);
extern const std::array<std::pair<int, int>, 6> kEdgePairs;
/// lambda12 lambda14 lambda23 lambda34 = lambda13 lambda24.
bool cross_ratio_relation(const std::array<Rational, 6>& lam);
/// The same relation checked as a polynomial identity in the coefficients.
bool cross_ratio_relation_symbolic();

/// [p1,p3][p2,p4] / ([p1,p4][p2,p3]) for points of P^1.
Rational cross_ratio(const std::array<Rational, 2>& p1, const std::array<Rational, 2>& p2,
                     const std::array<Rational, 2>& p3, const std::array<Rational, 2>& p4);

/// Cross-ratio on the edge L_ij of (E_i, E_j; R_k point, R_l point), k < l
/// the complementary indices, computed from the collinear points.
Rational cross_ratio_oracle(const TetraQuartic& q, int i, int j);

/// A projective line given by two spanning points.
struct RationalLine {
    std::string name;
    ProjectivePoint p, q;
};
/// The six edges L_ij and the four residual lines R_m.
std::vector<RationalLine> configuration_lines(const TetraQuartic& q);
bool line_on_surface(const MultiPoly& f, const ProjectivePoint& p, const ProjectivePoint& q);

/// Two points spanning the kernel of a nonzero linear form in three variables.
std::array<ProjectivePoint, 2> kernel_basis(const std::vector<Rational>& form);

/// Rank of a rational matrix.
std::size_t rational_rank(std::vector<std::vector<Rational>> m);

}  // namespace tq
