#pragma once

#include <optional>

#include "epsring/gallery.hpp"

namespace epsring {

/// One corpus entry: a ring guaranteed epsilon-strong by construction,
/// together with its source crossed-product data when it came from one.
struct CorpusInstance {
    std::string name;
    GradedRing ring;
    std::optional<CrossedProduct> crossed;
    std::optional<TwistedPartialAction> source_action;
};

// Deterministic per seed; produces at least min_count instances drawn from
// group algebras, twisted group algebras, matrix-pattern gradings, partial
// crossed products, Morita rings, and trivial gradings over GF(2), GF(3),
// GF(5) and the rationals.
std::vector<CorpusInstance> make_corpus(std::uint64_t seed, std::size_t min_count);

// Validated gradings that are not epsilon-strong, for the classification
// equivalence suite.
std::vector<CorpusInstance> negative_instances();

struct ViolationSeed {
    TwistedPartialAction action;
    TwistedPartialAction clean_base;  // the untampered source, which validates
    std::string axiom;                // "P1".."P5"
};

// A single-axiom tampering of an otherwise valid action. The returned action
// fails validation with the named axiom among the reported tags and with no
// structural violations.
ViolationSeed seeded_axiom_violation(std::uint64_t seed, int which);

}  // namespace epsring
