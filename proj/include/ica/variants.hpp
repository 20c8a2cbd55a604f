#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ica/alpha.hpp"
#include "ica/corpus.hpp"

namespace ica {

// The three agreement measures over a coded corpus:
//   Binary          - did the coders apply domain D at all (labels {1,0})
//   CuWithinDomain  - which code of domain D was chosen (labels = D's codes)
//   CuAcrossDomains - which domains were applied, code-blind (multivalued)
enum class MeasureVariant { Binary, CuWithinDomain, CuAcrossDomains };

struct MeasureKind {
    MeasureVariant variant;
    std::string domain;  // required for Binary and CuWithinDomain

    static MeasureKind binary(std::string domain_id) {
        return {MeasureVariant::Binary, std::move(domain_id)};
    }
    static MeasureKind cu(std::string domain_id) {
        return {MeasureVariant::CuWithinDomain, std::move(domain_id)};
    }
    static MeasureKind cu_across() { return {MeasureVariant::CuAcrossDomains, {}}; }
};

enum class Weighting { Uniform, Length };
enum class Scope { Whole, Coded };

// Every quotation gets a non-empty evaluation: {1} if the coder applied any
// code of the domain, {0} otherwise (uncoded matter included).
EvaluationSet binary_projection(const Corpus& corpus, const std::string& domain,
                                const std::vector<std::string>& coders);

// Labels are the domain's codes; uncoded-for-this-domain turns into the
// empty evaluation, and singly voted quotations drop out downstream.
// Throws MutualExclusiveness when a coder applied two codes of the domain
// to one quotation.
EvaluationSet cu_projection(const Corpus& corpus, const std::string& domain,
                            const std::vector<std::string>& coders);

// Labels are the domain ids; an evaluation is the set of domains the coder
// applied, whatever the code. The only projection that can be multivalued.
EvaluationSet domain_projection(const Corpus& corpus,
                                const std::vector<std::string>& coders);

// Projection composed with the universal coefficient under the discrete
// metric. Scope::Whole keeps every quotation as an item; Scope::Coded keeps
// quotations coded by at least one selected coder in any domain.
// An empty coder list selects all coders of the corpus.
AlphaResult variant_alpha(const Corpus& corpus, const MeasureKind& measure,
                          const std::vector<std::string>& coders = {},
                          Weighting weighting = Weighting::Uniform,
                          Scope scope = Scope::Whole);

}  // namespace ica
