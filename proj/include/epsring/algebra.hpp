#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epsring/matrix.hpp"

namespace epsring {

/// Outcome of a structural validation; `ok()` is true when no violation was
/// found, otherwise `code` names the broken invariant and `detail` carries a
/// concrete witness.
struct ValidationIssue {
    std::string code;
    std::string detail;
    std::vector<std::size_t> indices;
    bool ok() const { return code.empty(); }
    static ValidationIssue none() { return {}; }
};

/// Finite-dimensional unital associative algebra given by structure
/// constants: table(i,j) holds the coordinates of e_i * e_j.
class StructureAlgebra {
public:
    StructureAlgebra(const FieldSpec& spec, std::size_t dim,
                     std::vector<Vec> table, Vec unit);

    const FieldSpec& field() const { return spec_; }
    std::size_t dim() const { return dim_; }
    const Vec& unit() const { return unit_; }
    const Vec& basis_product(std::size_t i, std::size_t j) const {
        return table_[i * dim_ + j];
    }

    Vec multiply(const Vec& x, const Vec& y) const;
    bool is_idempotent(const Vec& x) const;
    bool is_central(const Vec& x) const;

    // Associativity on all basis triples plus the two-sided unit law.
    ValidationIssue validate() const;

    Subspace center() const;
    Subspace centralizer(const Subspace& t) const;
    // Smallest two-sided ideal containing the generators. One span pass over
    // e_i * g * e_j suffices because the algebra is unital.
    Subspace two_sided_ideal(const std::vector<Vec>& gens) const;
    // Verifies closure (throws ValidationError if not an ideal), then solves
    // for the multiplicative identity of the ideal. nullopt when the ideal
    // is not unital. The zero ideal gets identity 0.
    std::optional<Vec> ideal_identity(const Subspace& ideal) const;
    // Inverse of x relative to an idempotent corner unit u: y with
    // x y = y x = u and y = u y u. Requires x = u x u.
    std::optional<Vec> corner_inverse(const Vec& x, const Vec& corner_unit) const;

    Subspace subspace_product(const Subspace& u, const Subspace& v) const;

    // The algebra spanned by the given coordinate indices (which must be
    // closed under multiplication and contain the unit).
    StructureAlgebra restrict_to_indices(const std::vector<std::size_t>& idx) const;

private:
    FieldSpec spec_;
    std::size_t dim_;
    std::vector<Vec> table_;
    Vec unit_;
};

}  // namespace epsring
