#pragma once

#include <variant>

#include "epsring/graded.hpp"

namespace epsring {

/// Separability certificate: a central witness c with tr(c) = 1 and the
/// element pairs of the induced separability element x = sum_i a_i (x) b_i.
struct SeparabilityCertificate {
    Vec witness_c;
    std::vector<std::pair<Vec, Vec>> element_pairs;
    bool checked = false;  // tensor-quotient verification performed
    bool m_of_x_is_one = false;
    bool x_central = false;
};

/// Exact infeasibility evidence: a functional vanishing on the trace image
/// but equal to 1 on the ring unit.
struct NotSeparable {
    Vec infeasibility_functional;
};

using SeparabilityOutcome = std::variant<SeparabilityCertificate, NotSeparable>;

// Decides separability of S over its principal component by solving
// tr(c) = 1 over the center; the trace is linear in c, so this is one exact
// linear solve. When a tensor model is supplied the certificate is verified
// in S (x)_R S.
SeparabilityOutcome decide_separability(const GradedRing& s, const EpsilonData& eps,
                                        const TensorOverBase* tensor = nullptr);

// Builds and verifies the certificate for a caller-supplied witness.
SeparabilityCertificate certificate_from_witness(const GradedRing& s, const EpsilonData& eps,
                                                 const Vec& c, const TensorOverBase* tensor);

struct OracleResult {
    bool separable = false;
    std::optional<Vec> x_quotient;
};

// Ground-truth oracle: solve m(x) = 1 and s x = x s directly in the tensor
// quotient. Works for any ring extension, graded or not.
OracleResult oracle_separability(const StructureAlgebra& s, const Subspace& r_basis,
                                 const TensorOverBase* prebuilt = nullptr);

struct FrobeniusSystem {
    std::vector<std::pair<Vec, Vec>> pairs;  // (x_j, y_j)
    bool identities_verified = false;
    bool finite_group = false;  // hypothesis of the underlying theorem
};

// Frobenius system (E, x_j, y_j) with E the projection onto the principal
// component and pairs taken from the component-identity decompositions.
// For finite grading groups a verification failure is an internal bug; for
// integer gradings with finite support the outcome is reported instead.
FrobeniusSystem frobenius_system(const GradedRing& s, const EpsilonData& eps);

// Kadison-style criterion: is there d in C_S(R) with sum_j x_j d y_j = 1?
bool kadison_separable(const GradedRing& s, const FrobeniusSystem& fs);

struct TraceOneReport {
    Vec trace_of_one;
    bool invertible = false;
    std::optional<bool> implies_separable_checked;
};

// Invertibility of tr(1) in R; when invertible, separability must follow and
// that implication is checked.
TraceOneReport trace_of_one_invertible(const GradedRing& s, const EpsilonData& eps);

}  // namespace epsring
