#pragma once

#include <map>

#include "epsring/graded.hpp"

namespace epsring {

/// Unital twisted partial action of a group on a base ring: ideals D_g cut
/// by central idempotents 1_g, corner isomorphisms alpha_g, and twist
/// elements w_{g,h}. Maps are stored on full base coordinates; semantically
/// only their restriction to the relevant corner matters, so every check
/// masks by the corner idempotent first.
struct TwistedPartialAction {
    StructureAlgebra base;
    GradingGroup group;
    std::vector<GroupElt> support;  // must contain the identity
    std::map<GroupElt, Vec> idempotent;
    std::map<GroupElt, Matrix> alpha;
    std::map<std::pair<GroupElt, GroupElt>, Vec> twist;

    bool in_support(const GroupElt& g) const;
    Vec one(const GroupElt& g) const;       // 1_g, zero outside the support
    Vec twist_at(const GroupElt& g, const GroupElt& h) const;  // 0 when absent
    // alpha_g(v 1_{g^-1})
    Vec apply_alpha(const GroupElt& g, const Vec& v) const;
    Subspace domain(const GroupElt& g) const;  // D_g = R 1_g
};

struct ActionViolation {
    std::string axiom;  // "structure" or "P1".."P5"
    std::string detail;
};

std::vector<ActionViolation> validate_action(const TwistedPartialAction& a);

/// A partial crossed product together with its degree labelling: basis index
/// k corresponds to d delta_g with d in D_g.
struct CrossedProduct {
    GradedRing ring;
    std::vector<std::pair<GroupElt, Vec>> basis_labels;
    std::map<GroupElt, std::vector<Vec>> d_basis;  // RREF basis of D_g
    std::map<GroupElt, std::size_t> block_offset;
    std::map<GroupElt, Vec> corner_one;  // 1_g in base coordinates

    // d delta_g as a ring element
    Vec embed(const GroupElt& g, const Vec& d) const;
    // canonical section 1_g delta_g
    Vec canonical_section(const GroupElt& g) const { return embed(g, corner_one.at(g)); }
};

// Builds the crossed product; throws ActionAxiomError when validation fails
// and TheoremViolation if the construction breaks a guaranteed property.
CrossedProduct crossed_product(const TwistedPartialAction& a);

// Unique t in S_{g^-1} with elem t = eps_g and t elem = eps_{g^-1}.
std::optional<Vec> epsilon_inverse(const GradedRing& s, const EpsilonData& eps,
                                   const GroupElt& g, const Vec& elem);

enum class SearchOutcome { Found, ProvenAbsent, Inconclusive, BudgetExceeded };

struct EpsilonInvertibleSearch {
    SearchOutcome outcome = SearchOutcome::Inconclusive;
    Vec element;
    Vec inverse;
    std::uint64_t tried = 0;
};

// Prime fields enumerate the component exhaustively (scaling-invariant, so
// projective representatives plus zero suffice) and NotFound is a proof;
// over the rationals only structured and seeded probes run, so a miss is
// inconclusive.
EpsilonInvertibleSearch find_epsilon_invertible(const GradedRing& s, const EpsilonData& eps,
                                                const GroupElt& g, std::uint64_t budget = 1u << 20,
                                                std::uint64_t seed = 1);

// Reads off the twisted partial action underlying an epsilon-crossed
// product from a choice of epsilon-invertible sections (s_e is forced to 1).
TwistedPartialAction extract_action(const GradedRing& s, const EpsilonData& eps,
                                    const std::map<GroupElt, Vec>& sections);

// map is a square matrix sending basis coordinates of s1 to elements of s2
bool graded_iso_check(const GradedRing& s1, const GradedRing& s2, const Matrix& map);

// sum over the support of alpha_g(r 1_{g^-1}); requires r central in the base
Vec trace_alpha(const TwistedPartialAction& a, const Vec& r);

}  // namespace epsring
