#pragma once

#include "tq/exactmath/multipoly.hpp"
#include "tq/exactmath/resultant.hpp"
#include "tq/exactmath/unipoly.hpp"

#include <exception>
#include <map>
#include <string>
#include <vector>

namespace tq {

/// Thrown when a computation in Q[s]/(m) meets a zero divisor. `factor` is a
/// monic proper divisor of m; the caller continues on factor and m/factor.
struct Split : std::exception {
    explicit Split(UniPoly f) : factor(std::move(f)) {}
    const char* what() const noexcept override { return "modulus splits"; }
    UniPoly factor;
};

/// Q[s]/(m) for a squarefree m, treated as if it were a field. Inverting a
/// zero divisor throws Split instead of failing.
class ResidueField {
public:
    explicit ResidueField(const UniPoly& modulus);

    const UniPoly& modulus() const { return m_; }
    std::size_t degree() const { return *m_.degree(); }

    UniPoly reduce(const UniPoly& a) const;
    UniPoly mul(const UniPoly& a, const UniPoly& b) const { return reduce(a * b); }
    /// Throws std::domain_error when a is zero, Split when a is a zero divisor.
    UniPoly inv(const UniPoly& a) const;

private:
    UniPoly m_;
};

/// Polynomial in one variable over a residue field, coefficients lowest first.
using KPoly = std::vector<UniPoly>;

KPoly k_reduce(KPoly p, const ResidueField& k);
/// Degree of a reduced, trimmed polynomial; the zero polynomial has none.
std::optional<std::size_t> k_degree(const KPoly& p);
KPoly k_monic(const KPoly& p, const ResidueField& k);
KPoly k_rem(const KPoly& a, const KPoly& b, const ResidueField& k);
KPoly k_derivative(const KPoly& p, const ResidueField& k);
/// Monic gcd; may throw Split.
KPoly k_gcd(const KPoly& a, const KPoly& b, const ResidueField& k);
/// Monic p / gcd(p, p'); may throw Split.
KPoly k_squarefree(const KPoly& p, const ResidueField& k);

/// Value of p when each variable in `point` is replaced by a field element.
/// Every variable of p must be bound.
UniPoly eval_at(const MultiPoly& p, const std::map<std::string, UniPoly>& point, const ResidueField& k);
/// Like eval_at but keeps `free_var` as the polynomial variable.
KPoly eval_to_kpoly(const MultiPoly& p, const std::string& free_var,
                    const std::map<std::string, UniPoly>& point, const ResidueField& k);

/// Runs fn on the monic modulus m, and on the two cofactors whenever fn
/// throws Split, until every piece completes. fn must not commit partial
/// results before a Split can be thrown.
template <class Fn>
void for_each_split(const UniPoly& m, Fn&& fn) {
    std::vector<UniPoly> work{m.monic()};
    while (!work.empty()) {
        UniPoly cur = std::move(work.back());
        work.pop_back();
        try {
            fn(cur);
        } catch (const Split& s) {
            UniPoly d = s.factor.monic();
            work.push_back(exact_div(cur, d).monic());
            work.push_back(d);
        }
    }
}

}  // namespace tq
