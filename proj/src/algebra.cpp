#include "epsring/algebra.hpp"

namespace epsring {

StructureAlgebra::StructureAlgebra(const FieldSpec& spec, std::size_t dim,
                                   std::vector<Vec> table, Vec unit)
    : spec_(spec), dim_(dim), table_(std::move(table)), unit_(std::move(unit)) {
    if (table_.size() != dim_ * dim_) throw Error("structure table has wrong size");
    for (const auto& v : table_)
        if (v.size() != dim_) throw Error("structure table entry has wrong length");
    if (unit_.size() != dim_) throw Error("unit vector has wrong length");
}

Vec StructureAlgebra::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw Error("element dimension mismatch");
    Vec out = zero_vec(spec_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            add_scaled(out, table_[i * dim_ + j], x[i] * y[j]);
        }
    }
    return out;
}

bool StructureAlgebra::is_idempotent(const Vec& x) const { return multiply(x, x) == x; }

bool StructureAlgebra::is_central(const Vec& x) const {
    for (std::size_t i = 0; i < dim_; ++i) {
        Vec e = unit_vec(spec_, dim_, i);
        if (multiply(x, e) != multiply(e, x)) return false;
    }
    return true;
}

ValidationIssue StructureAlgebra::validate() const {
    if (is_zero_vec(unit_))
        return {"no_unit", "unit vector is zero", {}};
    for (std::size_t i = 0; i < dim_; ++i) {
        Vec e = unit_vec(spec_, dim_, i);
        if (multiply(unit_, e) != e || multiply(e, unit_) != e)
            return {"no_unit", "unit law fails on basis vector " + std::to_string(i), {i}};
    }
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            const Vec& ij = table_[i * dim_ + j];
            for (std::size_t k = 0; k < dim_; ++k) {
                // (e_i e_j) e_k vs e_i (e_j e_k), expanded through the table
                Vec lhs = zero_vec(spec_, dim_);
                for (std::size_t m = 0; m < dim_; ++m)
                    if (!ij[m].is_zero()) add_scaled(lhs, table_[m * dim_ + k], ij[m]);
                const Vec& jk = table_[j * dim_ + k];
                Vec rhs = zero_vec(spec_, dim_);
                for (std::size_t m = 0; m < dim_; ++m)
                    if (!jk[m].is_zero()) add_scaled(rhs, table_[i * dim_ + m], jk[m]);
                if (lhs != rhs)
                    return {"not_associative",
                            "associativity fails at basis triple (" + std::to_string(i) + ", " +
                                std::to_string(j) + ", " + std::to_string(k) + ")",
                            {i, j, k}};
            }
        }
    return ValidationIssue::none();
}

Subspace StructureAlgebra::center() const {
    return centralizer(Subspace::full(spec_, dim_));
}

Subspace StructureAlgebra::centralizer(const Subspace& t) const {
    if (t.ambient_dim() != dim_) throw Error("centralizer: ambient mismatch");
    // rows: for each basis vector v of t and coordinate c, the functional
    // x -> (x v - v x)_c
    Matrix sys(spec_, t.dim() * dim_, dim_);
    std::size_t r = 0;
    for (const auto& v : t.basis()) {
        for (std::size_t j = 0; j < dim_; ++j) {
            Vec ej = unit_vec(spec_, dim_, j);
            Vec comm = sub(multiply(ej, v), multiply(v, ej));
            for (std::size_t c = 0; c < dim_; ++c) sys.at(r + c, j) = comm[c];
        }
        r += dim_;
    }
    return kernel(sys);
}

Subspace StructureAlgebra::two_sided_ideal(const std::vector<Vec>& gens) const {
    std::vector<Vec> spanners;
    for (const auto& g : gens) {
        if (g.size() != dim_) throw Error("generator dimension mismatch");
        for (std::size_t i = 0; i < dim_; ++i) {
            Vec left = multiply(unit_vec(spec_, dim_, i), g);
            for (std::size_t j = 0; j < dim_; ++j)
                spanners.push_back(multiply(left, unit_vec(spec_, dim_, j)));
        }
    }
    return Subspace::span(spec_, dim_, spanners);
}

std::optional<Vec> StructureAlgebra::ideal_identity(const Subspace& ideal) const {
    if (ideal.ambient_dim() != dim_) throw Error("ideal ambient mismatch");
    for (const auto& b : ideal.basis())
        for (std::size_t i = 0; i < dim_; ++i) {
            Vec e = unit_vec(spec_, dim_, i);
            if (!ideal.contains(multiply(e, b)) || !ideal.contains(multiply(b, e)))
                throw ValidationError("subspace is not a two-sided ideal");
        }
    const std::size_t d = ideal.dim();
    if (d == 0) return zero_vec(spec_, dim_);
    // unknown: coordinates of the identity over the ideal basis
    Matrix sys(spec_, 2 * d * dim_, d);
    Vec rhs = zero_vec(spec_, 2 * d * dim_);
    std::size_t r = 0;
    for (const auto& b : ideal.basis()) {
        for (std::size_t a = 0; a < d; ++a) {
            Vec left = multiply(ideal.basis()[a], b);
            Vec right = multiply(b, ideal.basis()[a]);
            for (std::size_t c = 0; c < dim_; ++c) {
                sys.at(r + c, a) = left[c];
                sys.at(r + dim_ + c, a) = right[c];
            }
        }
        for (std::size_t c = 0; c < dim_; ++c) {
            rhs[r + c] = b[c];
            rhs[r + dim_ + c] = b[c];
        }
        r += 2 * dim_;
    }
    auto sol = solve_affine(sys, rhs);
    if (!sol) return std::nullopt;
    if (sol->kernel.dim() != 0)
        throw TheoremViolation("ideal identity is not unique");
    Vec eps = zero_vec(spec_, dim_);
    for (std::size_t a = 0; a < d; ++a) add_scaled(eps, ideal.basis()[a], sol->particular[a]);
    return eps;
}

std::optional<Vec> StructureAlgebra::corner_inverse(const Vec& x, const Vec& corner_unit) const {
    if (!is_idempotent(corner_unit)) throw Error("corner unit is not idempotent");
    if (multiply(multiply(corner_unit, x), corner_unit) != x)
        throw Error("element does not lie in the corner");
    std::vector<Vec> corner_gens;
    for (std::size_t i = 0; i < dim_; ++i)
        corner_gens.push_back(
            multiply(multiply(corner_unit, unit_vec(spec_, dim_, i)), corner_unit));
    Subspace corner = Subspace::span(spec_, dim_, corner_gens);
    const std::size_t d = corner.dim();
    Matrix sys(spec_, 2 * dim_, d);
    for (std::size_t a = 0; a < d; ++a) {
        Vec xy = multiply(x, corner.basis()[a]);
        Vec yx = multiply(corner.basis()[a], x);
        for (std::size_t c = 0; c < dim_; ++c) {
            sys.at(c, a) = xy[c];
            sys.at(dim_ + c, a) = yx[c];
        }
    }
    Vec rhs = corner_unit;
    rhs.insert(rhs.end(), corner_unit.begin(), corner_unit.end());
    auto sol = solve_affine(sys, rhs);
    if (!sol) return std::nullopt;
    Vec y = zero_vec(spec_, dim_);
    for (std::size_t a = 0; a < d; ++a) add_scaled(y, corner.basis()[a], sol->particular[a]);
    return y;
}

Subspace StructureAlgebra::subspace_product(const Subspace& u, const Subspace& v) const {
    std::vector<Vec> prods;
    for (const auto& a : u.basis())
        for (const auto& b : v.basis()) prods.push_back(multiply(a, b));
    return Subspace::span(spec_, dim_, prods);
}

StructureAlgebra StructureAlgebra::restrict_to_indices(const std::vector<std::size_t>& idx) const {
    const std::size_t d = idx.size();
    std::vector<std::size_t> pos(dim_, dim_);
    for (std::size_t k = 0; k < d; ++k) pos[idx[k]] = k;
    auto compress = [&](const Vec& v) {
        Vec out = zero_vec(spec_, d);
        for (std::size_t c = 0; c < dim_; ++c) {
            if (v[c].is_zero()) continue;
            if (pos[c] == dim_)
                throw ValidationError("index set is not closed under multiplication");
            out[pos[c]] = v[c];
        }
        return out;
    };
    std::vector<Vec> table(d * d, zero_vec(spec_, d));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            table[a * d + b] = compress(basis_product(idx[a], idx[b]));
    return StructureAlgebra(spec_, d, std::move(table), compress(unit_));
}

}  // namespace epsring
