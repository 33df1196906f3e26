#pragma once

#include "tq/exactmath/binary_form.hpp"
#include "tq/quartic/quartic.hpp"

namespace tq {

class NotANode : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class ParametrizationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

extern const std::array<std::string, 3> kPlane;  // X0, X1, X2

/// F = P X3^2 + Qc X3 + R, G = Qc^2 - 4 P R, with L = A the tritangent line.
struct BranchSextic {
    MultiPoly G, P, Qc, R, L;
};

/// Projection from the node E4 = (0:0:0:1). Throws NotANode if E4 is not a
/// node, std::logic_error if G differs from the closed formula.
BranchSextic branch_sextic(const TetraQuartic& q);
/// The closed formula [X0X1(b0X0+b1X1) + X0X2(c0X0+c2X2) + X1X2(d1X1+d2X2)
/// + delta X0X1X2]^2 - 4 A X0X1X2 (b3X0X1 + c3X0X2 + d3X1X2), with the
/// coefficients supplied as polynomials (constants or symbols).
MultiPoly closed_form_sextic(const std::array<MultiPoly, 12>& k, const MultiPoly& delta);
std::array<MultiPoly, 12> coefficient_symbols();
/// G computed from the symbolic quartic (delta = 1).
BranchSextic symbolic_branch_sextic();

enum class CurveKind { Line, Conic, Edge };

/// Line: coeffs of l0X0 + l1X1 + l2X2. Conic: (p01, p02, p12) for
/// p01X0X1 + p02X0X2 + p12X1X2. Edge: the index m of X_m = 0 in coeffs[0].
struct PlaneCurve {
    CurveKind kind;
    std::string name;
    std::array<Rational, 3> coeffs;
};
PlaneCurve tritangent_line(const BranchSextic& s);
PlaneCurve tritangent_conic(const BranchSextic& s);
PlaneCurve triangle_edge(int m);

/// Parametrization X(s, t) of the curve as forms in "_s", "_t", and the
/// linear factors of the parameters mapping to the coordinate points.
struct CurveParam {
    std::array<MultiPoly, 3> x;
    unsigned degree = 1;
    std::vector<BinaryForm> cusp_factors;
};
CurveParam parametrize(const PlaneCurve& c);

struct TangencyReport {
    std::string curve;
    BinaryForm pullback;  // G along the curve
    BinaryForm residual;  // after dividing out the squared cusp factors
    bool cusp_factors_divide = false;
    bool square = false;
    BinaryForm root;  // residual = scalar * root^2
    unsigned tangency_points = 0;  // distinct roots of root
    bool root_avoids_cusps = false;
};

TangencyReport tangency_report(const MultiPoly& G, const PlaneCurve& c);
/// Square pullback with the expected number of distinct tangency points:
/// three for the line and the conic, one for an edge.
bool tritangency_check(const MultiPoly& G, const PlaneCurve& c);

struct CubicCheck {
    std::string name;
    bool holds;
};
/// The cubic Qc = 0 passes through every tangency point of G with L, the
/// conic and the three edges, and through the cusps with the cusp tangents.
std::vector<CubicCheck> tangency_cubic_check(const BranchSextic& s);

}  // namespace tq
