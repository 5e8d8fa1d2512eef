#pragma once

#include "epsring/partial_action.hpp"

namespace epsring {

/// Incremental structure-table builder for hand-defined algebras.
struct AlgebraBuilder {
    FieldSpec spec;
    std::size_t dim;
    std::vector<Vec> table;
    Vec unit;

    AlgebraBuilder(const FieldSpec& s, std::size_t d)
        : spec(s), dim(d), table(d * d, zero_vec(s, d)), unit(zero_vec(s, d)) {}

    void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
        table[i * dim + j][k] += c;
    }
    void add(std::size_t i, std::size_t j, std::size_t k, long long c) {
        add(i, j, k, Scalar(spec, c));
    }
    StructureAlgebra build() { return StructureAlgebra(spec, dim, std::move(table), std::move(unit)); }
};

// The block-pattern ring with corners restricted to an ideal of F x F; it is
// epsilon-strongly Z_2-graded but neither strong nor a partial crossed
// product, yet separable over its degree-zero part.
GradedRing dade_modified(const FieldSpec& field);
// The full 3x3 matrix ring over F x F with the checkerboard Z_2-grading:
// strongly graded but not a crossed product.
GradedRing dade_original(const FieldSpec& field);

/// Strict Morita context over a field: algebras A and B, bimodules M and N
/// with explicit basis actions, and the two pairing maps.
struct MoritaContext {
    StructureAlgebra a;
    StructureAlgebra b;
    std::size_t dim_m = 0;
    std::size_t dim_n = 0;
    std::vector<Matrix> m_left;   // indexed by A basis
    std::vector<Matrix> m_right;  // indexed by B basis
    std::vector<Matrix> n_left;   // indexed by B basis
    std::vector<Matrix> n_right;  // indexed by A basis
    std::vector<std::vector<Vec>> phi;  // M x N -> A coordinates
    std::vector<std::vector<Vec>> psi;  // N x M -> B coordinates
};

// Throws ValidationError naming the broken context axiom.
void validate_context(const MoritaContext& ctx);

MoritaContext trivial_context(const FieldSpec& field);
// columns/rows context: A = M_r(k), B = k, phi = outer product, psi = inner
MoritaContext column_row_context(const FieldSpec& field, std::size_t r);

// The Z-graded Morita ring [[A, M], [N, B]] with support {-1, 0, 1}.
GradedRing morita_ring(const MoritaContext& ctx);

// Morita ring of the canonical context (T_e, T_e, T_g, T_{g^-1}) of a ring
// with surjective component pairings at g (e.g. strongly graded).
GradedRing morita_from_strong(const GradedRing& t, const GroupElt& g);

GradedRing group_algebra(const GradingGroup& g, const FieldSpec& field);
// basis {1, u} with u^2 = lambda, deg u = 1 over Z_2
GradedRing twisted_z2_group_algebra(const FieldSpec& field, const Scalar& lambda);
// full matrix ring M_r with deg(e_ij) = t_i t_j^-1 for row labels t
GradedRing matrix_pattern_ring(const FieldSpec& field, const GradingGroup& g,
                               const std::vector<GroupElt>& row_labels);
GradedRing trivially_graded(StructureAlgebra alg, GradingGroup group);

// negatives for the classification suite
// k[t]/(t^nil) with deg t = 1 over the integers
GradedRing truncated_polynomial_ring(const FieldSpec& field, std::size_t nil);
// upper-triangular 2x2 matrices with the checkerboard degrees
GradedRing upper_triangular_z2(const FieldSpec& field);

// partial actions
// Z_2 on k x k with D_1 the first factor, identity alpha, trivial twists
TwistedPartialAction kxk_z2_action(const FieldSpec& field);
// restriction of a global permutation action to the corner cut by e:
// 1_g = e * beta_g(e), alpha_g = beta_g, w trivial
TwistedPartialAction restriction_action(const FieldSpec& field, const GradingGroup& g,
                                        const std::vector<std::vector<int>>& perms,
                                        const std::vector<int>& idem);
// Z_2 partial action on k^m with twisted square: alpha_1 an involution of
// the corner, w_{1,1} a corner unit constant on its orbits
TwistedPartialAction twisted_z2_partial_action(const FieldSpec& field, std::size_t m,
                                               const std::vector<int>& corner,
                                               const std::vector<int>& involution,
                                               const std::vector<long long>& weights);

}  // namespace epsring
