#pragma once

#include "epsring/corpus.hpp"
#include "epsring/separability.hpp"

namespace epsring {

struct LawFailure {
    std::string instance;
    std::string law;
    std::string detail;
};

struct SuiteCounters {
    std::size_t instances = 0;
    std::size_t checks = 0;
    std::size_t negatives_not_symmetric = 0;
    std::size_t negatives_non_unital = 0;
    std::vector<LawFailure> failures;
    bool ok() const { return failures.empty(); }
    void merge(const SuiteCounters& o) {
        instances += o.instances;
        checks += o.checks;
        negatives_not_symmetric += o.negatives_not_symmetric;
        negatives_non_unital += o.negatives_non_unital;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
};

// separability decision vs the direct tensor-quotient oracle; instances with
// dimension above dim_cap skip the oracle side
SuiteCounters suite_oracle_agreement(const std::vector<CorpusInstance>& corpus,
                                     std::size_t dim_cap = 12);

// the four classification characterizations must agree everywhere, strong
// gradings must have all component identities equal to 1, and the negatives
// must classify as not epsilon-strong through all four verdicts
SuiteCounters suite_classification(const std::vector<CorpusInstance>& corpus,
                                   const std::vector<CorpusInstance>& negatives);

// gamma-calculus laws: decomposition independence, composition, the
// structure of the restriction to the center, and the trace bimodule laws
SuiteCounters suite_gamma_laws(const std::vector<CorpusInstance>& corpus);

// Frobenius identities and agreement of the Kadison criterion with the
// trace-based decision
SuiteCounters suite_frobenius_kadison(const std::vector<CorpusInstance>& corpus);

// crossed-product instances: extract the action back with the canonical
// sections, rebuild, check the graded isomorphism, and compare both traces
SuiteCounters suite_roundtrip(const std::vector<CorpusInstance>& corpus);

// right non-degeneracy and the simple <=> graded-simple equivalence on
// prime-field instances whose principal component is maximal commutative
SuiteCounters suite_simplicity(const std::vector<CorpusInstance>& corpus, std::uint64_t budget);

}  // namespace epsring
