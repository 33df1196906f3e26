#pragma once

#include "tq/quartic/quartic.hpp"

namespace tq {

class UnexpectedFactor : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pencil of planes v = t u through the line u = v = 0 (u, v linear forms
/// in X0..X3); t = infinity is the plane u = 0.
struct Pencil {
    std::string name;
    MultiPoly u, v;
};
/// The six edge pencils L12..L34 (X_l = t X_k for the complementary k < l)
/// and the four residual pencils R1..R4 (face form = t X_m).
std::vector<Pencil> standard_pencils(const TetraQuartic& q);

/// Discriminant of a ternary cubic whose coefficients are polynomials in
/// `param`, as the Sylvester determinant of the three partials and the three
/// partials of the Hessian. Vanishes exactly where the cubic is singular.
UniPoly ternary_cubic_discriminant(const MultiPoly& cubic, const std::array<std::string, 3>& vars,
                                   const std::string& param);

/// Discriminant in t of the residual cubics of the planes v = t u.
UniPoly pencil_discriminant(const TetraQuartic& q, const Pencil& p);

struct SingularFiber {
    std::string parameter;  // "t=p/q" or "t=inf"
    unsigned disc_order = 0;
    unsigned components = 0;  // irreducible components of the residual cubic
    unsigned nodes_in_plane = 0;  // surface nodes in the plane, off the base line
    /// "I<n>" for a cycle of n curves; "nodal" for an irreducible nodal cubic;
    /// "other" when the local data disagree.
    std::string type;
};

struct FiberReport {
    std::string pencil;
    std::vector<SingularFiber> reducible_fibers;
    /// Irreducible singular fibers: the rational ones are checked to be nodal
    /// cubics, the rest are simple roots of the discriminant.
    unsigned nodal_fiber_count = 0;
    unsigned rational_nodal_checked = 0;
    unsigned euler_sum = 0;
    unsigned disc_total_order = 0;  // finite degree plus the order at infinity
    bool consistent = false;
};

FiberReport fibration_fibers(const TetraQuartic& q, const Pencil& p);
std::vector<FiberReport> fibration_survey_serial(const TetraQuartic& q);
/// Same reports, pencils analysed in parallel; threads <= 0 uses the default.
std::vector<FiberReport> fibration_survey(const TetraQuartic& q, int threads = 0);

}  // namespace tq
