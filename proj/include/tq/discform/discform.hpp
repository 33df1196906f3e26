#pragma once

#include "tq/lattice/lattice.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tq {

class DegenerateLattice : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class LiftMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class NotIsometry : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Element a*eps1 + b*lambda23 + c*lambda24 of Z/8 + Z/4 + Z/4.
struct DiscElement {
    static constexpr std::array<int, 3> kOrders{8, 4, 4};
    static constexpr int kSize = 128;

    int a = 0, b = 0, c = 0;

    DiscElement() = default;
    DiscElement(long a, long b, long c);
    static DiscElement from_index(int i);
    int index() const { return a * 16 + b * 4 + c; }
    bool is_zero() const { return a == 0 && b == 0 && c == 0; }
    int order() const;

    friend DiscElement operator+(const DiscElement& x, const DiscElement& y);
    friend DiscElement operator-(const DiscElement& x);
    friend DiscElement operator-(const DiscElement& x, const DiscElement& y) { return x + (-y); }
    friend DiscElement operator*(long k, const DiscElement& x);
    friend bool operator==(const DiscElement& x, const DiscElement& y) { return x.index() == y.index(); }
    friend bool operator<(const DiscElement& x, const DiscElement& y) { return x.index() < y.index(); }
    std::string to_string() const;
};

/// Finite quadratic form (A_M, q_M, b_M) of an even nondegenerate lattice
/// whose discriminant group is Z/8 + Z/4 + Z/4, generated by the classes of
/// three chosen dual basis vectors.
class FiniteQuadForm {
public:
    static constexpr std::array<const char*, 3> kGeneratorNames{"eps1", "lambda23", "lambda24"};

    /// Class in A_M of a functional w in M* (w_i = value on the i-th basis vector).
    DiscElement reduce(const IntVector& functional) const;
    /// Class of the i-th dual basis vector.
    DiscElement dual_basis(std::size_t i) const;
    /// Functional representative of an element.
    IntVector representative(const DiscElement& x) const;

    /// q in [0, 2) and b in [0, 1).
    Rational q(const DiscElement& x) const;
    Rational b(const DiscElement& x, const DiscElement& y) const;
    /// Values scaled by 8: q8 in [0, 16), b8 in [0, 8).
    int q8(const DiscElement& x) const;
    int b8(const DiscElement& x, const DiscElement& y) const;

    /// Value of a rational pairing of two functionals, unreduced.
    Rational pair(const IntVector& w1, const IntVector& w2) const;

    const LatticePtr& lattice() const { return lattice_; }
    const std::vector<Integer>& elementary_divisors() const { return divisors_; }
    const RatMatrix& gram_inverse() const { return ginv_; }
    std::size_t size() const { return DiscElement::kSize; }
    const std::array<std::size_t, 3>& generator_indices() const { return gen_index_; }

private:
    friend FiniteQuadForm build_disc_group(const LatticePtr& lat, std::array<std::size_t, 3> generators);
    LatticePtr lattice_;
    RatMatrix ginv_;
    IntMatrix snf_u_;
    std::vector<std::size_t> torsion_rows_;
    std::vector<Integer> divisors_;
    std::map<std::vector<long>, DiscElement> lookup_;
    std::array<std::size_t, 3> gen_index_{};
    std::array<int, 3> gen_q8_{};
    std::array<std::array<int, 3>, 3> gen_b8_{};
};

/// Builds A_M = M^* / M with generators the classes of the dual basis
/// vectors at the given indices (default: e1, l23, l24 duals).
FiniteQuadForm build_disc_group(const LatticePtr& lat, std::array<std::size_t, 3> generators = {6, 3, 4});

struct LiftCheck {
    std::string name;
    bool holds;
};

/// The three printed integral lifts (8 eps1, 4 lambda23, 4 lambda24) and the
/// eight reduction relations of the remaining dual basis vectors.
std::vector<LiftCheck> verify_dual_lifts(const FiniteQuadForm& fq);
void require_lifts(const std::vector<LiftCheck>& checks);

/// Group automorphism given by the images of the three generators.
struct DiscAutomorphism {
    std::array<DiscElement, 3> images;

    static DiscAutomorphism identity();
    DiscElement apply(const DiscElement& x) const;
    /// (this o other)(x) = this(other(x))
    DiscAutomorphism compose(const DiscAutomorphism& other) const;
    long key() const { return (images[0].index() * 128L + images[1].index()) * 128L + images[2].index(); }
    friend bool operator==(const DiscAutomorphism& x, const DiscAutomorphism& y) { return x.key() == y.key(); }
    friend bool operator<(const DiscAutomorphism& x, const DiscAutomorphism& y) { return x.key() < y.key(); }
    std::string to_string() const;
};

/// Whether the generator images define a bijective homomorphism preserving q.
bool preserves_form(const FiniteQuadForm& fq, const DiscAutomorphism& f);

/// All q-preserving automorphisms, sorted by key. The parallel variant splits
/// the search over candidate images of eps1.
std::vector<DiscAutomorphism> enumerate_autos_serial(const FiniteQuadForm& fq);
std::vector<DiscAutomorphism> enumerate_autos(const FiniteQuadForm& fq, int threads = 0);

/// Subgroup generated by the given automorphisms, sorted by key.
std::vector<DiscAutomorphism> closure(const std::vector<DiscAutomorphism>& generators);

/// Action on A_M induced by an isometry T of M (column action on basis
/// coordinates): functionals transform by T^{-T}.
DiscAutomorphism induced_disc_auto(const IntMatrix& t, const FiniteQuadForm& fq);

/// The printed actions of the six transpositions, keyed "12", "13", ..., "34",
/// and of the mirror pairing and the covering involution.
std::map<std::string, DiscAutomorphism> printed_transposition_actions();
DiscAutomorphism printed_mirror_action();
DiscAutomorphism printed_covering_involution();

}  // namespace tq
