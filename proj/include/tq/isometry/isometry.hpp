#pragma once

#include "tq/exactmath/unipoly.hpp"
#include "tq/lattice/lattice.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tq {

class IsometryCheckFailed : public std::runtime_error {
public:
    IsometryCheckFailed(std::size_t row, std::size_t col, Integer defect);
    std::size_t row, col;
    Integer defect;  // entry of M^T G M - G
};

/// Integer matrix T with T^T G T = G, acting on basis coordinates by v -> T v
/// (column j holds the image of the j-th basis vector).
class IntegerIsometry {
public:
    IntegerIsometry(LatticePtr lattice, IntMatrix matrix);

    const LatticePtr& lattice() const { return lattice_; }
    const IntMatrix& matrix() const { return m_; }
    LatticeVector apply(const LatticeVector& v) const;
    IntegerIsometry compose(const IntegerIsometry& other) const;  // this o other
    IntegerIsometry inverse() const;
    Integer det() const { return determinant(m_); }
    bool is_identity() const { return m_ == IntMatrix::identity(m_.rows()); }

private:
    LatticePtr lattice_;
    IntMatrix m_;
};

/// How a printed matrix acts on coordinates.
enum class MatrixConvention { Column, Row };

/// The two printed 11x11 matrices for the projections from the nodes E4 and
/// E3, and their printed product, exactly as printed.
IntMatrix printed_alpha();
IntMatrix printed_beta();
IntMatrix printed_alpha_beta();

class ImageMismatch : public std::runtime_error {
public:
    explicit ImageMismatch(const std::string& name) : std::runtime_error("image mismatch: " + name), name(name) {}
    std::string name;
};

struct ImageCheck {
    std::string name;
    bool holds;
};

/// The fifteen images of the involution from the node E4 (twelve curve swaps,
/// R4, H, E4), checked on coordinates with the given convention.
std::vector<ImageCheck> verify_projection_images(const IntMatrix& alpha, const ClassRegistry& reg,
                                                 MatrixConvention conv = MatrixConvention::Column);

/// Throws ImageMismatch for the first failing check.
void require_projection_images(const std::vector<ImageCheck>& checks);

/// Convention under which every image check passes, if any.
std::optional<MatrixConvention> detect_convention(const IntMatrix& alpha, const ClassRegistry& reg);

/// The matrix determined by the fifteen images alone (column action).
IntMatrix alpha_from_images(const ClassRegistry& reg);

struct PrintedIsometries {
    IntegerIsometry alpha, beta;
    MatrixConvention convention;
    /// Set when the printed entries failed and the image-derived matrix (and
    /// its (34)-conjugate) were used instead.
    bool suspected_typo = false;
};
/// Loads both printed matrices in the detected convention (transposing for row
/// action) and verifies they are isometries.
PrintedIsometries load_printed_matrices(const ClassRegistry& reg);

/// Permutation of {1,2,3,4} given as images of 1..4.
using Perm4 = std::array<int, 4>;
Perm4 transposition(int i, int j);

/// L_ij -> L_s(i)s(j), E_i -> E_s(i), R1 -> R_s(1).
IntegerIsometry build_s4_action(const Perm4& sigma, const ClassRegistry& reg);

/// E_i <-> R_i and L_ij -> L_kl for the complementary pair; must send H to Hv.
IntegerIsometry build_mirror(const ClassRegistry& reg);

struct OrderCertificate {
    bool finite = false;
    unsigned order = 0;  // valid when finite
    UniPoly charpoly;
    std::vector<std::pair<unsigned, unsigned>> cyclotomic;  // (n, multiplicity)
    UniPoly residual;  // non-cyclotomic cofactor, constant 1 when none
    std::vector<Integer> traces;  // trace(T^k), k = 1..20
    /// When every factor is cyclotomic but T^l != I for l the lcm of their
    /// indices: l and the nilpotency index of T^l - I.
    unsigned unipotent_power = 0;
    unsigned nilpotency_index = 0;
};

/// Exact characteristic polynomial det(xI - T).
UniPoly characteristic_polynomial(const IntMatrix& t);
/// Cyclotomic polynomial Phi_n.
UniPoly cyclotomic(unsigned n);
/// All n with Euler phi(n) <= bound.
std::vector<unsigned> cyclotomic_indices(unsigned phi_bound);
/// p(x) = +- x^deg p(1/x).
bool is_reciprocal(const UniPoly& p);

OrderCertificate decide_order(const IntegerIsometry& iso);

}  // namespace tq
