#pragma once

#include "tq/lattice/int_matrix.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tq {

class LatticeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class UnknownName : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};
class OddSquare : public std::domain_error {
public:
    using std::domain_error::domain_error;
};
class NoCanonicalClass : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Free Z-module with a symmetric integer bilinear form.
class GramLattice {
public:
    GramLattice(std::string name, IntMatrix gram, std::vector<std::string> basis_names,
                std::optional<IntVector> canonical_class = std::nullopt);

    const std::string& name() const { return name_; }
    std::size_t rank() const { return gram_.rows(); }
    const IntMatrix& gram() const { return gram_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    const std::optional<IntVector>& canonical_class() const { return canonical_; }

    bool is_even() const;
    Integer determinant() const;
    Inertia signature() const;
    Integer pair(const IntVector& a, const IntVector& b) const;

private:
    std::string name_;
    IntMatrix gram_;
    std::vector<std::string> basis_names_;
    std::optional<IntVector> canonical_;
};

using LatticePtr = std::shared_ptr<const GramLattice>;

/// Element of a lattice in basis coordinates.
class LatticeVector {
public:
    LatticeVector(LatticePtr lattice, IntVector coords);
    static LatticeVector zero(LatticePtr lattice);
    static LatticeVector unit(LatticePtr lattice, std::size_t i);

    const LatticePtr& lattice() const { return lattice_; }
    const IntVector& coords() const { return coords_; }
    bool is_zero() const;

    friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
    friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
    friend LatticeVector operator-(const LatticeVector& a);
    friend LatticeVector operator*(const Integer& k, const LatticeVector& a);
    friend bool operator==(const LatticeVector& a, const LatticeVector& b);

    std::string to_string() const;

private:
    LatticePtr lattice_;
    IntVector coords_;
};

/// a^T * gram * b; LatticeMismatch across lattices.
Integer intersect(const LatticeVector& a, const LatticeVector& b);

/// Named classes on one lattice, kept in insertion order.
class ClassRegistry {
public:
    explicit ClassRegistry(LatticePtr lattice);

    const LatticePtr& lattice() const { return lattice_; }
    void add(const std::string& name, const LatticeVector& v);
    const LatticeVector& get(const std::string& name) const;
    bool contains(const std::string& name) const { return classes_.count(name) > 0; }
    const std::vector<std::string>& names() const { return order_; }

    /// Integer combination such as {{"R1", 1}, {"E2", 1}, {"E1", -1}}.
    LatticeVector combo(const std::vector<std::pair<std::string, long>>& terms) const;
    /// Parses a signed sum such as "2R1-E1+E2+L34"; names match greedily.
    LatticeVector eval(const std::string& expr) const;

private:
    LatticePtr lattice_;
    std::map<std::string, LatticeVector> classes_;
    std::vector<std::string> order_;
};

/// The rank 11 lattice spanned by the six edges, four nodes and one residual
/// line, in the basis order l12, l13, l14, l23, l24, l34, e1, e2, e3, e4, r1.
LatticePtr make_m_lattice();
/// Basis classes L_ij, E_i, R1 and the derived classes R2..R4, H, A, A0,
/// H' (named "H'"), C, Hv.
ClassRegistry make_m_registry();

/// diag(1,-1,-1,-1) in the basis h, e1, e2, e3 with K = -3h + e1 + e2 + e3.
LatticePtr make_del_pezzo_lattice();
ClassRegistry make_del_pezzo_registry();

struct IdentityCheck {
    std::string name;
    LatticeVector residual;  // zero iff the identity holds
    bool holds() const { return residual.is_zero(); }
};

class IdentityFailed : public std::runtime_error {
public:
    IdentityFailed(const std::string& name, std::string residual)
        : std::runtime_error("identity " + name + " fails, residual " + residual), residual(std::move(residual)) {}
    std::string residual;
};

/// The four expressions of the hyperplane class, the two forms of A0, the
/// three relations for R2..R4 and the even-eight identity, as exact vector
/// identities.
std::vector<IdentityCheck> verify_class_identities(const ClassRegistry& reg);
/// Throws IdentityFailed for the first identity that does not hold.
void require_identities(const std::vector<IdentityCheck>& checks);

/// Pairwise intersection numbers of the named classes.
std::vector<std::vector<Integer>> intersection_table(const ClassRegistry& reg, const std::vector<std::string>& names);

struct RiemannRoch {
    Integer genus, h0, ambient_dim;
};
/// K3 arithmetic: genus 1 + d^2/2, h0 = 2 + d^2/2, ambient dimension h0 - 1.
RiemannRoch rr_genus(const LatticeVector& d);

/// 1 + (d^2 + d.K)/2 on a lattice carrying a canonical class.
Integer adjunction_genus(const LatticeVector& d);

/// x with 2x = sum of the classes, if the sum is divisible by 2.
std::optional<LatticeVector> even_set_test(const std::vector<LatticeVector>& classes);

nlohmann::json to_json(const GramLattice& lat);
nlohmann::json to_json(const ClassRegistry& reg);

}  // namespace tq
